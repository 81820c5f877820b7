//! Command-line frontend: parse inputs, dispatch computations, emit tables
//! or JSON, and run the verification sweeps.
//!
//! Exit codes: 0 on success, 1 when a criterion evaluates to false (the
//! witness is printed), 2 on usage or parse errors.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hibilab::analysis::{
    boolean_band_betti, check_equal, check_linear, empty_case, recognize_cm_bipartite,
    theorem_unmixed, CriterionReport, SegmentSearch, Witness,
};
use hibilab::betti::{graded_betti_oracle_in, BettiTable, ORACLE_GENERATOR_CAP};
use hibilab::bits::{ElemSet, Mask};
use hibilab::corpus::{
    sweep_duality, sweep_empty, sweep_equal, sweep_linear, sweep_resolutions,
    sweep_segment_round_trip, sweep_semimodular_characterization,
};
use hibilab::homology::Field;
use hibilab::io::{
    ideal_cap, irreducible_name, parse_bipartite, parse_complex, parse_ideal, parse_lattice,
    parse_poset, parse_segment, render_complex, render_ideal, render_poset,
};
use hibilab::lattice::Lattice;
use hibilab::monomial::{hibi_ideal, MonomialIdeal};
use hibilab::resolution::{hibi_resolution, ResolutionComplex};
use hibilab::simplicial::dual_star;

#[derive(Parser)]
#[command(
    name = "hibilab",
    version,
    about = "Hibi ideals of lattice segments: resolutions, Betti numbers, duality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where a lattice comes from: an explicit order or J(P) of a poset file.
#[derive(Args)]
struct LatticeSource {
    /// Lattice file (`lattice n` + covers, or `lattice-from-poset <path>`)
    #[arg(long, value_name = "FILE", conflicts_with = "lattice_from_poset")]
    lattice: Option<PathBuf>,
    /// Poset file; the lattice is J(P)
    #[arg(long, value_name = "FILE", alias = "poset")]
    lattice_from_poset: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List all poset ideals of a poset
    Ideals {
        #[arg(long, value_name = "FILE")]
        poset: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The join-irreducible poset P and the canonical labels ℓ(p)
    Birkhoff {
        #[command(flatten)]
        source: LatticeSource,
        #[arg(long)]
        json: bool,
    },
    /// Generators of the Hibi ideal of a segment
    Hibi {
        #[command(flatten)]
        source: LatticeSource,
        /// `all`, element indices, or label sets like `{a,c}`
        #[arg(long, value_name = "SPEC", default_value = "all")]
        segment: String,
        #[arg(long)]
        json: bool,
    },
    /// Betti table of an ideal (oracle) or of a lattice segment (resolution)
    Betti {
        /// Ideal file in `vars`/monomials format; stdin when omitted
        #[arg(long, value_name = "FILE")]
        ideal: Option<PathBuf>,
        #[command(flatten)]
        source: LatticeSource,
        #[arg(long, value_name = "SPEC")]
        segment: Option<String>,
        /// Compute through the explicit resolution (requires a lattice segment)
        #[arg(long)]
        use_resolution: bool,
        /// Dump the resolution's terms and differentials as JSON
        #[arg(long)]
        emit_complex: bool,
        /// Oracle over GF(2) instead of the rationals
        #[arg(long)]
        char2: bool,
        /// Re-derive the table through the independent oracle and compare
        #[arg(long)]
        debug_crosscheck: bool,
        #[arg(long)]
        json: bool,
    },
    /// Alexander dual of an ideal (I*) or of a complex (Δ^∨)
    Dual {
        #[arg(long, value_name = "FILE", conflicts_with = "complex")]
        ideal: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        complex: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Minimal vertex covers of a complex
    Covers {
        #[arg(long, value_name = "FILE")]
        complex: PathBuf,
        /// Ignore the facet-count cap
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Does H_{I∩J} = H_I ∩ H_J? Exit 1 with witnesses when not
    CheckEqual {
        #[command(flatten)]
        source: LatticeSource,
        #[command(flatten)]
        pair: PairSpec,
        #[arg(long)]
        debug_crosscheck: bool,
        #[arg(long)]
        json: bool,
    },
    /// Does H_I ∩ H_J have a linear resolution? Exit 1 with witnesses when not
    CheckLinear {
        #[command(flatten)]
        source: LatticeSource,
        #[command(flatten)]
        pair: PairSpec,
        #[arg(long)]
        debug_crosscheck: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generators of H_I ∩ H_J for a disjoint covering split
    EmptySplit {
        #[command(flatten)]
        source: LatticeSource,
        /// The ideal part; the coideal is its complement
        #[arg(long, value_name = "SPEC")]
        ideal_elems: String,
        #[arg(long)]
        debug_crosscheck: bool,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form Betti table of H_{B_r ∖ {0̂,1̂}}
    BandBetti {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        json: bool,
    },
    /// Recognize a Cohen–Macaulay bipartite graph; exit 1 when unrecognizable
    ClassifyGraph {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Find the lattice segment presenting an unmixed complex; exit 1 when refuted
    SegmentOfComplex {
        #[arg(long, value_name = "FILE")]
        complex: PathBuf,
        #[arg(long)]
        debug_crosscheck: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the exhaustive verification sweeps; exit 1 on any mismatch
    Sweep {
        /// Largest ground-poset size for the lattice corpus
        #[arg(long, default_value_t = 4)]
        max_p: usize,
        /// Number of random complexes for the duality suite
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0x9d1b_f015)]
        seed: u64,
    },
}

#[derive(Args)]
struct PairSpec {
    /// Rank band i j: the pair I = {rank ≤ j}, J = {rank ≥ i}
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    band: Option<Vec<usize>>,
    /// Explicit ideal spec (indices, labels, or `all`)
    #[arg(
        long,
        value_name = "SPEC",
        conflicts_with = "band",
        requires = "coideal_elems"
    )]
    ideal_elems: Option<String>,
    /// Explicit coideal spec
    #[arg(long, value_name = "SPEC", conflicts_with = "band")]
    coideal_elems: Option<String>,
}

/// Errors that map to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, like other unix filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, UsageError> {
    std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))
}

fn load_lattice(source: &LatticeSource) -> Result<Lattice, UsageError> {
    if let Some(path) = &source.lattice {
        let text = read_file(path)?;
        Ok(parse_lattice(&text, path.parent())?)
    } else if let Some(path) = &source.lattice_from_poset {
        let poset = parse_poset(&read_file(path)?)?;
        Ok(Lattice::birkhoff_of(&poset, ideal_cap())?)
    } else {
        Err(UsageError(
            "a lattice source is required (--lattice or --lattice-from-poset)".into(),
        ))
    }
}

fn label_string(lattice: &Lattice, element: usize) -> String {
    let names: Vec<String> = lattice
        .label(element)
        .iter()
        .map(irreducible_name)
        .collect();
    format!("{{{}}}", names.join(","))
}

fn resolve_pair(lattice: &Lattice, pair: &PairSpec) -> Result<(ElemSet, ElemSet), UsageError> {
    if let Some(band) = &pair.band {
        let (i, j) = (band[0], band[1]);
        let band = lattice.rank_band(i, j)?;
        Ok((band.ideal, band.coideal))
    } else if let (Some(i), Some(j)) = (&pair.ideal_elems, &pair.coideal_elems) {
        Ok((parse_segment(lattice, i)?, parse_segment(lattice, j)?))
    } else {
        Err(UsageError(
            "either --band i j or --ideal-elems/--coideal-elems is required".into(),
        ))
    }
}

fn print_betti_table(coarse: &std::collections::BTreeMap<(usize, usize), u64>, json: bool) {
    if json {
        let records: Vec<_> = coarse
            .iter()
            .map(|(&(i, j), &beta)| json!({"i": i, "j": j, "beta": beta}))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "table": records })).unwrap()
        );
    } else {
        println!("{:>4} {:>4} {:>8}", "i", "j", "beta");
        for (&(i, j), &beta) in coarse {
            println!("{i:>4} {j:>4} {beta:>8}");
        }
    }
}

fn report_lines(lattice: &Lattice, report: &CriterionReport, json: bool) -> bool {
    if json {
        let witnesses: Vec<_> = report
            .witnesses
            .iter()
            .map(|w| match w {
                Witness::CoverPair { lower, upper } => json!({
                    "kind": "cover", "lower": lower, "upper": upper,
                    "lower_label": label_string(lattice, *lower),
                    "upper_label": label_string(lattice, *upper),
                }),
                Witness::MeetViolation {
                    element,
                    meet_of_lower,
                } => json!({
                    "kind": "meet", "element": element, "meet_of_lower": meet_of_lower,
                    "element_label": label_string(lattice, *element),
                }),
                Witness::JoinViolation {
                    element,
                    join_of_upper,
                } => json!({
                    "kind": "join", "element": element, "join_of_upper": join_of_upper,
                    "element_label": label_string(lattice, *element),
                }),
            })
            .collect();
        let out = json!({
            "criterion": report.theorem,
            "verdict": report.verdict,
            "witnesses": witnesses,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "{}: {}",
            report.theorem,
            if report.verdict { "holds" } else { "fails" }
        );
        for w in &report.witnesses {
            match w {
                Witness::CoverPair { lower, upper } => println!(
                    "  witness: cover {} ⋖ {} with {} outside the ideal and {} outside the coideal",
                    label_string(lattice, *lower),
                    label_string(lattice, *upper),
                    label_string(lattice, *upper),
                    label_string(lattice, *lower),
                ),
                Witness::MeetViolation { element, meet_of_lower } => println!(
                    "  witness: element {} outside the ideal, meet of lower neighbors {} outside the coideal",
                    label_string(lattice, *element),
                    label_string(lattice, *meet_of_lower),
                ),
                Witness::JoinViolation { element, join_of_upper } => println!(
                    "  witness: element {} outside the coideal, join of upper neighbors {} outside the ideal",
                    label_string(lattice, *element),
                    label_string(lattice, *join_of_upper),
                ),
            }
        }
    }
    report.verdict
}

fn emit_complex_json(lattice: &Lattice, resolution: &ResolutionComplex) {
    let var_name = |v: usize| -> String {
        let p = lattice.p_len();
        if v < p {
            format!("x_{}", irreducible_name(v))
        } else {
            format!("y_{}", irreducible_name(v - p))
        }
    };
    let mdeg_string = |m: Mask| -> String { m.iter().map(var_name).collect::<Vec<_>>().join("*") };
    let levels: Vec<_> = resolution
        .levels()
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|s| {
                    json!({
                        "element": s.element,
                        "attached": s.attached.iter().collect::<Vec<_>>(),
                        "multidegree": mdeg_string(s.multidegree),
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let differentials: Vec<_> = resolution
        .differentials()
        .iter()
        .map(|entries| {
            entries
                .iter()
                .map(|e| {
                    json!({
                        "row": e.row,
                        "col": e.col,
                        "sign": e.sign,
                        "variable": var_name(e.variable),
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let out = json!({
        "order": resolution.linear_extension().iter().map(|&x| irreducible_name(x)).collect::<Vec<_>>(),
        "levels": levels,
        "differentials": differentials,
    });
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
}

fn run(command: Command) -> Result<bool, UsageError> {
    match command {
        Command::Ideals { poset, json } => {
            let p = parse_poset(&read_file(&poset)?)?;
            let ideals = p.ideals(ideal_cap())?;
            if json {
                let list: Vec<Vec<usize>> = ideals.iter().map(|m| m.iter().collect()).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"ideals": list})).unwrap()
                );
            } else {
                for m in &ideals {
                    let names: Vec<String> = m.iter().map(irreducible_name).collect();
                    println!("{{{}}}", names.join(","));
                }
            }
            Ok(true)
        }
        Command::Birkhoff { source, json } => {
            let lattice = load_lattice(&source)?;
            let (p, labels) = lattice.birkhoff();
            if json {
                let out = json!({
                    "irreducibles": p.len(),
                    "covers": p.covers().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                    "labels": labels.iter().map(|m| m.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                print!("{}", render_poset(p));
                for e in 0..lattice.len() {
                    println!("element {e}: label {}", label_string(&lattice, e));
                }
            }
            Ok(true)
        }
        Command::Hibi {
            source,
            segment,
            json,
        } => {
            let lattice = load_lattice(&source)?;
            let members = parse_segment(&lattice, &segment)?;
            if !lattice.is_segment(&members) {
                return Err(UsageError("the selected subset is not a segment".into()));
            }
            let ideal = hibi_ideal(&lattice, &members);
            if json {
                let gens: Vec<String> = ideal
                    .gens()
                    .iter()
                    .map(|&g| ideal.vars().monomial_string(g))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "vars": ideal.vars().names(),
                        "generators": gens,
                    }))
                    .unwrap()
                );
            } else {
                print!("{}", render_ideal(&ideal));
            }
            Ok(true)
        }
        Command::Betti {
            ideal,
            source,
            segment,
            use_resolution,
            emit_complex,
            char2,
            debug_crosscheck,
            json,
        } => {
            let field = if char2 {
                Field::Char2
            } else {
                Field::Rationals
            };
            let lattice_input = source.lattice.is_some() || source.lattice_from_poset.is_some();
            if (use_resolution || emit_complex) && !lattice_input {
                return Err(UsageError(
                    "--use-resolution/--emit-complex need a lattice segment input".into(),
                ));
            }
            let table: BettiTable = if lattice_input {
                let lattice = load_lattice(&source)?;
                let members = parse_segment(&lattice, segment.as_deref().unwrap_or("all"))?;
                let h = hibi_ideal(&lattice, &members);
                if use_resolution || emit_complex {
                    let resolution = hibi_resolution(&lattice, &members)?;
                    if emit_complex {
                        emit_complex_json(&lattice, &resolution);
                    }
                    let table = resolution.betti()?;
                    if debug_crosscheck {
                        let oracle = graded_betti_oracle_in(&h, field, ORACLE_GENERATOR_CAP)?;
                        if oracle != table {
                            return Err(UsageError(
                                "resolution and oracle disagree; this is a bug".into(),
                            ));
                        }
                    }
                    table
                } else {
                    graded_betti_oracle_in(&h, field, ORACLE_GENERATOR_CAP)?
                }
            } else {
                let text = match &ideal {
                    Some(path) => read_file(path)?,
                    None => {
                        let mut buf = String::new();
                        std::io::stdin().read_to_string(&mut buf).map_err(|e| {
                            UsageError(format!("cannot read ideal from stdin: {e}"))
                        })?;
                        buf
                    }
                };
                let parsed = parse_ideal(&text)?;
                graded_betti_oracle_in(&parsed, field, ORACLE_GENERATOR_CAP)?
            };
            print_betti_table(&table.coarse(), json);
            Ok(true)
        }
        Command::Dual {
            ideal,
            complex,
            json,
        } => {
            if let Some(path) = ideal {
                let parsed = parse_ideal(&read_file(&path)?)?;
                let star = dual_star(&parsed)?;
                // keep the caller's variable names
                let named = MonomialIdeal::new(parsed.vars().clone(), star.gens());
                if json {
                    let gens: Vec<String> = named
                        .gens()
                        .iter()
                        .map(|&g| named.vars().monomial_string(g))
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "vars": named.vars().names(),
                            "generators": gens,
                        }))
                        .unwrap()
                    );
                } else {
                    print!("{}", render_ideal(&named));
                }
                Ok(true)
            } else if let Some(path) = complex {
                let parsed = parse_complex(&read_file(&path)?)?;
                let dual = parsed.alexander_dual();
                if json {
                    let facets: Vec<Vec<usize>> = dual
                        .facets()
                        .iter()
                        .map(|f| f.iter().map(|v| v + 1).collect())
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({"facets": facets})).unwrap()
                    );
                } else {
                    print!("{}", render_complex(&dual));
                }
                Ok(true)
            } else {
                Err(UsageError("either --ideal or --complex is required".into()))
            }
        }
        Command::Covers {
            complex,
            force,
            json,
        } => {
            let parsed = parse_complex(&read_file(&complex)?)?;
            let covers = if force {
                parsed.minimal_vertex_covers_unchecked()
            } else {
                parsed.minimal_vertex_covers()?
            };
            if json {
                let list: Vec<Vec<usize>> = covers
                    .iter()
                    .map(|c| c.iter().map(|v| v + 1).collect())
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"covers": list})).unwrap()
                );
            } else {
                for c in &covers {
                    let verts: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
                    println!("{}", verts.join(" "));
                }
            }
            Ok(true)
        }
        Command::CheckEqual {
            source,
            pair,
            debug_crosscheck,
            json,
        } => {
            let lattice = load_lattice(&source)?;
            let (ideal, coideal) = resolve_pair(&lattice, &pair)?;
            let report = check_equal(&lattice, &ideal, &coideal, debug_crosscheck)?;
            Ok(report_lines(&lattice, &report, json))
        }
        Command::CheckLinear {
            source,
            pair,
            debug_crosscheck,
            json,
        } => {
            let lattice = load_lattice(&source)?;
            let (ideal, coideal) = resolve_pair(&lattice, &pair)?;
            let report = check_linear(&lattice, &ideal, &coideal, debug_crosscheck)?;
            Ok(report_lines(&lattice, &report, json))
        }
        Command::EmptySplit {
            source,
            ideal_elems,
            debug_crosscheck,
            json,
        } => {
            let lattice = load_lattice(&source)?;
            let ideal = parse_segment(&lattice, &ideal_elems)?;
            let coideal = {
                let mut c = lattice.all_elements();
                for e in ideal.iter() {
                    c.remove(e);
                }
                c
            };
            let split = empty_case(&lattice, &ideal, &coideal, debug_crosscheck)?;
            if json {
                let gens: Vec<String> = split
                    .ideal
                    .gens()
                    .iter()
                    .map(|&g| split.ideal.vars().monomial_string(g))
                    .collect();
                let cert: Vec<_> = split
                    .certificate
                    .iter()
                    .map(|&(p, q)| json!({"upper": p, "lower": q}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "vars": split.ideal.vars().names(),
                        "generators": gens,
                        "certificate": cert,
                    }))
                    .unwrap()
                );
            } else {
                print!("{}", render_ideal(&split.ideal));
                for &(p, q) in &split.certificate {
                    println!(
                        "# from cover {} ⋖ {}",
                        label_string(&lattice, q),
                        label_string(&lattice, p)
                    );
                }
            }
            Ok(true)
        }
        Command::BandBetti { rank, json } => {
            let table = boolean_band_betti(rank)?;
            print_betti_table(&table, json);
            Ok(true)
        }
        Command::ClassifyGraph { graph, json } => {
            let parsed = parse_bipartite(&read_file(&graph)?)?;
            match recognize_cm_bipartite(&parsed)? {
                Some(labeling) => {
                    if json {
                        let covers: Vec<_> = labeling
                            .poset
                            .covers()
                            .iter()
                            .map(|&(a, b)| json!([a + 1, b + 1]))
                            .collect();
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "cohen_macaulay": true,
                                "matching": labeling.matching.iter().map(|&j| j + 1).collect::<Vec<_>>(),
                                "poset_covers": covers,
                            }))
                            .unwrap()
                        );
                    } else {
                        println!("Cohen–Macaulay bipartite: yes");
                        for (i, &j) in labeling.matching.iter().enumerate() {
                            println!("  x{} pairs with y{}", i + 1, j + 1);
                        }
                        for &(a, b) in labeling.poset.covers() {
                            println!("  order: x{} < x{}", a + 1, b + 1);
                        }
                    }
                    Ok(true)
                }
                None => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({"cohen_macaulay": false}))
                                .unwrap()
                        );
                    } else {
                        println!("Cohen–Macaulay bipartite: no (no admissible labeling)");
                    }
                    Ok(false)
                }
            }
        }
        Command::SegmentOfComplex {
            complex,
            debug_crosscheck,
            json,
        } => {
            let parsed = parse_complex(&read_file(&complex)?)?;
            match theorem_unmixed(&parsed, debug_crosscheck)? {
                SegmentSearch::Found(w) => {
                    let labels: Vec<String> = w
                        .segment_labels
                        .iter()
                        .map(|m| {
                            let names: Vec<String> = m.iter().map(irreducible_name).collect();
                            format!("{{{}}}", names.join(","))
                        })
                        .collect();
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "segment": labels,
                                "lattice_size": w.lattice.len(),
                                "matching": w.labeling.matching.iter().map(|&j| j + 1).collect::<Vec<_>>(),
                            }))
                            .unwrap()
                        );
                    } else {
                        println!("segment of a {}-element lattice:", w.lattice.len());
                        for l in &labels {
                            println!("  {l}");
                        }
                    }
                    Ok(true)
                }
                SegmentSearch::Refuted(r) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "segment": serde_json::Value::Null,
                                "refutation": format!("{r:?}"),
                            }))
                            .unwrap()
                        );
                    } else {
                        println!("no segment presentation: {r:?}");
                    }
                    Ok(false)
                }
            }
        }
        Command::Sweep {
            max_p,
            samples,
            seed,
        } => {
            let reports = [
                sweep_equal(max_p),
                sweep_linear(max_p),
                sweep_empty(max_p),
                sweep_resolutions(max_p),
                sweep_segment_round_trip(max_p),
                sweep_duality(samples, seed),
                sweep_semimodular_characterization(max_p),
            ];
            let mut all_ok = true;
            for r in &reports {
                println!("{r}");
                all_ok &= r.passed();
            }
            Ok(all_ok)
        }
    }
}
