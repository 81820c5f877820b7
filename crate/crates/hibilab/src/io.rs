//! Text formats for posets, lattices, complexes, graphs, segments and
//! monomial ideals.
//!
//! Formats (blank lines and `#` comments are allowed everywhere):
//!
//! - poset: `poset n`, then one cover per line as `a < b` (0-based).
//! - lattice: `lattice n` plus cover lines (an explicit element order), or
//!   `lattice-from-poset <path>` to build J(P) from a poset file.
//! - complex: `complex n`, then one facet per line as 1-based vertex lists;
//!   `{}` denotes the empty facet (irrelevant complex); no facet lines at
//!   all is the void complex.
//! - bipartite graph: `bipartite n`, then edges `i j` (1-based) joining x_i
//!   to y_j.
//! - ideal: `vars a b c ...`, then one monomial per line, either `*`-joined
//!   (`a*v*w`) or compact (`avw`) when all variable names are single
//!   characters; `1` is the unit monomial.
//! - segment spec (argument, not a file): `all`, a list of element indices,
//!   or label sets like `{a,c}` over the default names a, b, c, … of P.

use std::path::Path;

use crate::analysis::BipartiteGraph;
use crate::bits::{ElemSet, Mask};
use crate::lattice::{Lattice, DEFAULT_IDEAL_CAP};
use crate::monomial::{MonomialIdeal, VarSet};
use crate::poset::Poset;
use crate::simplicial::SimplicialComplex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Parse {
        line,
        message: message.into(),
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_poset(text: &str) -> Result<Poset, IoError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return fail(0, "empty input, expected `poset n`");
    };
    let n = match header.strip_prefix("poset") {
        Some(rest) => rest.trim().parse::<usize>().map_err(|_| IoError::Parse {
            line,
            message: "expected `poset n`".into(),
        })?,
        None => return fail(line, "expected `poset n`"),
    };
    let mut covers = Vec::new();
    for (line, text) in lines {
        let parts: Vec<&str> = text.split('<').map(str::trim).collect();
        if parts.len() != 2 {
            return fail(line, format!("expected `a < b`, got `{text}`"));
        }
        let a = parts[0].parse::<usize>().map_err(|_| IoError::Parse {
            line,
            message: format!("bad element `{}`", parts[0]),
        })?;
        let b = parts[1].parse::<usize>().map_err(|_| IoError::Parse {
            line,
            message: format!("bad element `{}`", parts[1]),
        })?;
        covers.push((a, b));
    }
    Poset::new(n, &covers).map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn render_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.len());
    for &(a, b) in p.covers() {
        out.push_str(&format!("{a} < {b}\n"));
    }
    out
}

/// Parses a lattice file; `base` resolves a `lattice-from-poset` reference.
pub fn parse_lattice(text: &str, base: Option<&Path>) -> Result<Lattice, IoError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return fail(
            0,
            "empty input, expected `lattice n` or `lattice-from-poset <path>`",
        );
    };
    if let Some(path) = header.strip_prefix("lattice-from-poset") {
        let path = path.trim();
        let resolved = match base {
            Some(dir) => dir.join(path),
            None => Path::new(path).to_path_buf(),
        };
        let poset_text = std::fs::read_to_string(&resolved).map_err(|e| {
            IoError::Invalid(format!(
                "cannot read poset file {}: {e}",
                resolved.display()
            ))
        })?;
        let poset = parse_poset(&poset_text)?;
        return Lattice::birkhoff_of(&poset, ideal_cap())
            .map_err(|e| IoError::Invalid(e.to_string()));
    }
    let n = match header.strip_prefix("lattice") {
        Some(rest) => rest.trim().parse::<usize>().map_err(|_| IoError::Parse {
            line,
            message: "expected `lattice n`".into(),
        })?,
        None => return fail(line, "expected `lattice n` or `lattice-from-poset <path>`"),
    };
    let mut covers = Vec::new();
    for (line, text) in lines {
        let parts: Vec<&str> = text.split('<').map(str::trim).collect();
        if parts.len() != 2 {
            return fail(line, format!("expected `a < b`, got `{text}`"));
        }
        let a = parts[0].parse::<usize>().map_err(|_| IoError::Parse {
            line,
            message: format!("bad element `{}`", parts[0]),
        })?;
        let b = parts[1].parse::<usize>().map_err(|_| IoError::Parse {
            line,
            message: format!("bad element `{}`", parts[1]),
        })?;
        covers.push((a, b));
    }
    let order = Poset::new(n, &covers).map_err(|e| IoError::Invalid(e.to_string()))?;
    Lattice::from_poset_order(&order).map_err(|e| IoError::Invalid(e.to_string()))
}

/// The enumeration cap, overridable through HIBILAB_CAP.
pub fn ideal_cap() -> usize {
    std::env::var("HIBILAB_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_IDEAL_CAP)
}

/// Default display names for join-irreducibles: a, b, c, …
pub fn irreducible_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("p{i}")
    }
}

/// Parses a segment spec against a lattice: `all`, element indices, or
/// label sets `{a,c}` over the default irreducible names.
pub fn parse_segment(lattice: &Lattice, spec: &str) -> Result<ElemSet, IoError> {
    let spec = spec.trim();
    let mut members = ElemSet::new(lattice.len());
    if spec == "all" {
        return Ok(lattice.all_elements());
    }
    let names: Vec<String> = (0..lattice.p_len()).map(irreducible_name).collect();
    let mut rest = spec;
    while !rest.is_empty() {
        rest = rest.trim_start_matches([' ', ',']);
        if rest.is_empty() {
            break;
        }
        if let Some(close) = rest.starts_with('{').then(|| rest.find('}')).flatten() {
            let inner = &rest[1..close];
            let mut label = Mask::EMPTY;
            for part in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                match names.iter().position(|n| n == part) {
                    Some(i) => label.insert(i),
                    None => {
                        return Err(IoError::Invalid(format!(
                            "unknown irreducible `{part}` in `{spec}`"
                        )))
                    }
                }
            }
            match lattice.element_by_label(label) {
                Some(e) => members.insert(e),
                None => {
                    return Err(IoError::Invalid(format!(
                        "no lattice element has label {{{inner}}}"
                    )))
                }
            }
            rest = &rest[close + 1..];
        } else {
            let token: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
            if token.is_empty() {
                return Err(IoError::Invalid(format!("bad segment token near `{rest}`")));
            }
            let idx: usize = token.parse().unwrap();
            if idx >= lattice.len() {
                return Err(IoError::Invalid(format!("element {idx} out of range")));
            }
            members.insert(idx);
            rest = &rest[token.len()..];
        }
    }
    Ok(members)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, IoError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return fail(0, "empty input, expected `complex n`");
    };
    let n = match header.strip_prefix("complex") {
        Some(rest) => rest.trim().parse::<usize>().map_err(|_| IoError::Parse {
            line,
            message: "expected `complex n`".into(),
        })?,
        None => return fail(line, "expected `complex n`"),
    };
    let mut facets = Vec::new();
    let mut any = false;
    for (line, text) in lines {
        any = true;
        if text == "{}" {
            facets.push(Mask::EMPTY);
            continue;
        }
        let mut facet = Mask::EMPTY;
        for tok in text.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| IoError::Parse {
                line,
                message: format!("bad vertex `{tok}`"),
            })?;
            if v == 0 || v > n {
                return fail(line, format!("vertex {v} out of range 1..={n}"));
            }
            facet.insert(v - 1);
        }
        facets.push(facet);
    }
    if !any {
        return Ok(SimplicialComplex::void(n));
    }
    SimplicialComplex::from_facets(n, &facets).map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn render_complex(c: &SimplicialComplex) -> String {
    let mut out = format!("complex {}\n", c.vertex_count());
    for &f in c.facets() {
        if f.is_empty() {
            out.push_str("{}\n");
        } else {
            let verts: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&verts.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, IoError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return fail(0, "empty input, expected `bipartite n`");
    };
    let n = match header.strip_prefix("bipartite") {
        Some(rest) => rest.trim().parse::<usize>().map_err(|_| IoError::Parse {
            line,
            message: "expected `bipartite n`".into(),
        })?,
        None => return fail(line, "expected `bipartite n`"),
    };
    let mut edges = Vec::new();
    for (line, text) in lines {
        let parts: Vec<&str> = text.split_whitespace().collect();
        if parts.len() != 2 {
            return fail(line, format!("expected `i j`, got `{text}`"));
        }
        let i: usize = parts[0].parse().map_err(|_| IoError::Parse {
            line,
            message: format!("bad vertex `{}`", parts[0]),
        })?;
        let j: usize = parts[1].parse().map_err(|_| IoError::Parse {
            line,
            message: format!("bad vertex `{}`", parts[1]),
        })?;
        if i == 0 || i > n || j == 0 || j > n {
            return fail(line, format!("edge ({i},{j}) out of range 1..={n}"));
        }
        edges.push((i - 1, j - 1));
    }
    BipartiteGraph::new(n, &edges).map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, IoError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return fail(0, "empty input, expected `vars ...`");
    };
    let names: Vec<String> = match header.strip_prefix("vars") {
        Some(rest) => rest.split_whitespace().map(String::from).collect(),
        None => return fail(line, "expected `vars name1 name2 ...`"),
    };
    if names.is_empty() {
        return fail(line, "at least one variable required");
    }
    if names.len() > 64 {
        return fail(line, "at most 64 variables supported");
    }
    let compact = names.iter().all(|n| n.chars().count() == 1);
    let vars = VarSet::plain(names.clone());
    let mut gens = Vec::new();
    for (line, text) in lines {
        if text == "1" {
            gens.push(Mask::EMPTY);
            continue;
        }
        let mut m = Mask::EMPTY;
        if text.contains('*') {
            for part in text.split('*').map(str::trim) {
                match names.iter().position(|n| n == part) {
                    Some(i) => m.insert(i),
                    None => return fail(line, format!("unknown variable `{part}`")),
                }
            }
        } else if compact {
            for ch in text.chars().filter(|c| !c.is_whitespace()) {
                match names.iter().position(|n| n == &ch.to_string()) {
                    Some(i) => m.insert(i),
                    None => return fail(line, format!("unknown variable `{ch}`")),
                }
            }
        } else {
            match names.iter().position(|n| n == text) {
                Some(i) => m.insert(i),
                None => {
                    return fail(
                        line,
                        format!("expected `*`-separated monomial, got `{text}`"),
                    )
                }
            }
        }
        gens.push(m);
    }
    Ok(MonomialIdeal::new(vars, &gens))
}

pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars {}\n", ideal.vars().names().join(" "));
    for &g in ideal.gens() {
        out.push_str(&ideal.vars().monomial_string(g));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::hibi_ideal;

    #[test]
    fn poset_round_trip_and_errors() {
        let text = "poset 4\n1 < 3\n2 < 3\n# a comment\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.covers(), &[(1, 3), (2, 3)]);
        assert_eq!(parse_poset(&render_poset(&p)).unwrap(), p);

        // a shortcut edge is rejected naming the witness
        let bad = "poset 3\n0 < 1\n1 < 2\n0 < 2\n";
        let err = parse_poset(bad).unwrap_err();
        assert!(err.to_string().contains("0 < 1 < 2"), "{err}");

        assert!(matches!(
            parse_poset("posit 3\n"),
            Err(IoError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_poset("poset 3\n0 1\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn lattice_and_segment_parsing() {
        let text = "lattice 4\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n";
        let l = parse_lattice(text, None).unwrap();
        assert_eq!(l.len(), 4);
        assert!(l.is_distributive());

        let all = parse_segment(&l, "all").unwrap();
        assert_eq!(all.len(), 4);
        let some = parse_segment(&l, "1 2").unwrap();
        assert_eq!(some.len(), 2);
        // labels over default names a, b for the two irreducibles
        let by_label = parse_segment(&l, "{a} {a,b}").unwrap();
        assert_eq!(by_label.len(), 2);
        assert!(parse_segment(&l, "{z}").is_err());
        assert!(parse_segment(&l, "9").is_err());
    }

    #[test]
    fn complex_round_trip_with_degenerate_cases() {
        let text = "complex 4\n1 2 3\n3 4\n";
        let c = parse_complex(text).unwrap();
        assert_eq!(c.facets().len(), 2);
        assert_eq!(parse_complex(&render_complex(&c)).unwrap(), c);

        let irrelevant = parse_complex("complex 3\n{}\n").unwrap();
        assert_eq!(irrelevant, SimplicialComplex::irrelevant(3));
        let void = parse_complex("complex 3\n").unwrap();
        assert!(void.is_void());
        assert_eq!(parse_complex(&render_complex(&void)).unwrap(), void);
        assert!(parse_complex("complex 2\n5\n").is_err());
    }

    #[test]
    fn bipartite_parsing() {
        let g = parse_bipartite("bipartite 2\n1 1\n2 2\n1 2\n").unwrap();
        assert_eq!(g.n, 2);
        assert_eq!(g.edges, vec![(0, 0), (0, 1), (1, 1)]);
        assert!(parse_bipartite("bipartite 2\n3 1\n").is_err());
    }

    #[test]
    fn ideal_round_trip_both_spellings() {
        let compact = "vars a b u v\nau\nbv\n";
        let i = parse_ideal(compact).unwrap();
        assert_eq!(i.gens().len(), 2);
        assert_eq!(parse_ideal(&render_ideal(&i)).unwrap(), i);

        let starred = "vars x1 x2 y1 y2\nx1*y1\nx2*y2\n";
        let j = parse_ideal(starred).unwrap();
        assert_eq!(parse_ideal(&render_ideal(&j)).unwrap(), j);

        // a rendered Hibi ideal parses back identically
        let b2 = Lattice::boolean(2).unwrap();
        let h = hibi_ideal(&b2, &b2.all_elements());
        assert_eq!(parse_ideal(&render_ideal(&h)).unwrap().gens(), h.gens());
    }
}
