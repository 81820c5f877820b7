//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime (visible under `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hibilab::analysis::{boolean_band_betti, complex_of_segment, theorem_unmixed, SegmentSearch};
use hibilab::betti::{graded_betti_oracle, has_linear_resolution};
use hibilab::bits::{ElemSet, Mask};
use hibilab::corpus::{
    corpus_lattices, sweep_duality, sweep_empty, sweep_equal, sweep_linear, sweep_resolutions,
    sweep_segment_round_trip,
};
use hibilab::lattice::{Lattice, DEFAULT_IDEAL_CAP};
use hibilab::monomial::{has_linear_quotients, hibi_ideal, LinearQuotients};
use hibilab::poset::Poset;
use hibilab::resolution::{
    default_order, hibi_resolution, hibi_resolution_with_order, iso_pi, iso_pi_with_order,
};

fn conclude(number: usize, label: &str, started: Instant, budget: Duration, pass: bool) {
    let elapsed = started.elapsed();
    println!(
        "criterion {number:2}: {} — {label} ({elapsed:.2?})",
        if pass { "PASS" } else { "FAIL" },
    );
    assert!(pass, "criterion {number} failed: {label}");
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its budget: {elapsed:.2?} > {budget:.2?}"
    );
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn punctured(l: &Lattice) -> ElemSet {
    let mut s = l.all_elements();
    s.remove(l.bottom());
    s.remove(l.top());
    s
}

#[test]
fn criterion_01_boolean_betti_numbers() {
    let started = Instant::now();
    let mut pass = true;
    for r in 2..=4usize {
        let lattice = Lattice::boolean(r).unwrap();
        let resolution = hibi_resolution(&lattice, &lattice.all_elements()).unwrap();
        let table = resolution.betti().unwrap();
        let coarse = table.coarse();
        let expect: BTreeMap<(usize, usize), u64> = (0..=r)
            .map(|i| ((i, r + i), binom(r, i) << (r - i)))
            .collect();
        pass &= coarse == expect;
        let oracle = graded_betti_oracle(&hibi_ideal(&lattice, &lattice.all_elements())).unwrap();
        pass &= oracle == table;
    }
    conclude(
        1,
        "Boolean lattice Betti numbers, resolution and oracle",
        started,
        Duration::from_secs(5),
        pass,
    );
}

#[test]
fn criterion_02_punctured_boolean_closed_form() {
    let started = Instant::now();
    let mut pass = true;
    for r in 2..=4usize {
        let lattice = Lattice::boolean(r).unwrap();
        let ideal = hibi_ideal(&lattice, &punctured(&lattice));
        let oracle = graded_betti_oracle(&ideal).unwrap();
        let closed_form = boolean_band_betti(r).unwrap();
        pass &= oracle.coarse() == closed_form;
        pass &= closed_form.get(&(r - 1, 2 * r)) == Some(&1);
    }
    conclude(
        2,
        "punctured Boolean closed-form Betti table",
        started,
        Duration::from_secs(10),
        pass,
    );
}

#[test]
fn criterion_03_figure_segments() {
    let started = Instant::now();
    let figure_poset = Poset::new(4, &[(1, 3), (2, 3)]).unwrap();
    let figure = Lattice::birkhoff_of(&figure_poset, DEFAULT_IDEAL_CAP).unwrap();
    let h_s = hibi_ideal(&figure, &punctured(&figure));
    let b3 = Lattice::boolean(3).unwrap();
    let h_s_prime = hibi_ideal(&b3, &punctured(&b3));

    let mut pass = h_s.gens().len() == 8 && h_s.generated_in_degree() == Some(4);
    pass &= h_s_prime.gens().len() == 6 && h_s_prime.generated_in_degree() == Some(3);
    pass &= has_linear_resolution(&h_s).unwrap();
    pass &= !has_linear_resolution(&h_s_prime).unwrap();
    pass &= matches!(
        has_linear_quotients(&h_s).unwrap(),
        LinearQuotients::Found(_)
    );
    pass &= has_linear_quotients(&h_s_prime).unwrap() == LinearQuotients::NotFound;
    conclude(
        3,
        "figure segments: linear vs non-linear",
        started,
        Duration::from_secs(5),
        pass,
    );
}

#[test]
fn criterion_04_equality_criterion_biconditional() {
    let started = Instant::now();
    let report = sweep_equal(4);
    println!("  {report}");
    conclude(
        4,
        "equality criterion over the poset corpus",
        started,
        Duration::from_secs(60),
        report.passed(),
    );
}

#[test]
fn criterion_05_linearity_criterion_equivalence() {
    let started = Instant::now();
    let report = sweep_linear(4);
    println!("  {report}");
    conclude(
        5,
        "linearity criterion over the poset corpus",
        started,
        Duration::from_secs(120),
        report.passed(),
    );
}

#[test]
fn criterion_06_disjoint_split_certificates() {
    let started = Instant::now();
    let report = sweep_empty(4);
    println!("  {report}");
    conclude(
        6,
        "disjoint split certificates over the corpus",
        started,
        Duration::from_secs(60),
        report.passed(),
    );
}

#[test]
fn criterion_07_resolution_validity() {
    let started = Instant::now();
    let report = sweep_resolutions(4);
    println!("  {report}");
    conclude(
        7,
        "resolution validity over every corpus poset ideal",
        started,
        Duration::from_secs(120),
        report.passed(),
    );
}

#[test]
fn criterion_08_comparison_isomorphism() {
    let started = Instant::now();
    let mut pass = true;

    let mut targets = vec![Lattice::boolean(2).unwrap(), Lattice::boolean(3).unwrap()];
    targets.extend(
        corpus_lattices(4)
            .into_iter()
            .filter(|l| !l.is_boolean())
            .take(5),
    );
    assert_eq!(targets.len(), 7);
    for lattice in &targets {
        // iso_pi verifies the degreewise bijection and the chain-map
        // equation internally
        let (standard, dual, _) = iso_pi(lattice).unwrap();
        pass &= standard.ranks() == dual.ranks();
    }

    // a different linear extension flips signs but not ranks or verdicts
    let figure_poset = Poset::new(4, &[(1, 3), (2, 3)]).unwrap();
    let figure = Lattice::birkhoff_of(&figure_poset, DEFAULT_IDEAL_CAP).unwrap();
    let mut alt = default_order(&figure);
    alt.swap(0, 1); // 0 and 1 are incomparable in the figure poset
    let all = figure.all_elements();
    let a = hibi_resolution(&figure, &all).unwrap();
    let b = hibi_resolution_with_order(&figure, &all, &alt).unwrap();
    pass &= a.ranks() == b.ranks();
    pass &= a.betti().unwrap() == b.betti().unwrap();
    pass &= a.is_minimal() && b.is_minimal();
    let ideal = hibi_ideal(&figure, &all);
    pass &= a.exactness_check(&ideal).unwrap() && b.exactness_check(&ideal).unwrap();
    pass &= a.differentials() != b.differentials();
    let _ = iso_pi_with_order(&figure, &alt).unwrap();

    conclude(
        8,
        "comparison isomorphism and sign independence",
        started,
        Duration::from_secs(10),
        pass,
    );
}

#[test]
fn criterion_09_duality_property_suite() {
    let started = Instant::now();
    let report = sweep_duality(200, 0x9d1b_f015);
    println!("  {report}");
    conclude(
        9,
        "duality suite on 200 random complexes",
        started,
        Duration::from_secs(120),
        report.passed(),
    );
}

#[test]
fn criterion_10_segment_round_trip() {
    let started = Instant::now();
    let report = sweep_segment_round_trip(4);
    println!("  {report}");
    let mut pass = report.passed();

    // the two figure segments are recovered from their dual ideals
    let figure_poset = Poset::new(4, &[(1, 3), (2, 3)]).unwrap();
    let figure = Lattice::birkhoff_of(&figure_poset, DEFAULT_IDEAL_CAP).unwrap();
    let b3 = Lattice::boolean(3).unwrap();
    for lattice in [&figure, &b3] {
        let segment = punctured(lattice);
        let complex = complex_of_segment(lattice, &segment).unwrap();
        match theorem_unmixed(&complex, true).unwrap() {
            SegmentSearch::Found(w) => {
                let mut got = w.segment_labels.clone();
                got.sort_unstable();
                let mut want: Vec<Mask> = segment.iter().map(|s| lattice.label(s)).collect();
                want.sort_unstable();
                pass &= got == want;
            }
            SegmentSearch::Refuted(_) => pass = false,
        }
    }
    conclude(
        10,
        "segment round trip over the corpus and the figures",
        started,
        Duration::from_secs(120),
        pass,
    );
}
