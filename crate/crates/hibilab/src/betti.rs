//! Graded Betti numbers of squarefree monomial ideals.
//!
//! [`graded_betti_oracle`] is the independent oracle used to check every
//! resolution-based computation in this crate: it evaluates Hochster's
//! restriction formula β_{i,W}(I_Δ) = dim H̃_{|W|−i−2}(Δ|_W) per squarefree
//! multidegree with exact arithmetic, and never touches the resolution
//! machinery. [`taylor_strand_betti`] computes the same numbers a third way,
//! as homology of lcm-preserving strands of the Taylor complex; it is kept
//! for cross-validation on small inputs (the strand at the top multidegree
//! grows like 2^{#generators}, so it is capped well below the oracle cap).
//!
//! Indexing convention: i = 0 at the generators, so β_0 counts minimal
//! generators and a d-linear ideal has β_{i,j} = 0 unless j = i + d.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::bits::Mask;
use crate::homology::{is_cone, reduced_betti, Field};
use crate::linalg::{rank_gf2, rank_rational};
use crate::monomial::{MonomialError, MonomialIdeal};

/// Default generator cap for the oracle.
pub const ORACLE_GENERATOR_CAP: usize = 20;
/// Support cap: the oracle enumerates 2^{support} restrictions.
pub const ORACLE_SUPPORT_CAP: usize = 22;
/// Exhaustive cap for the Taylor-strand route (2^g subsets).
pub const TAYLOR_GENERATOR_CAP: usize = 12;

/// A finitely supported table β_{i,m}, keyed by homological index and
/// squarefree multidegree, with a coarse (i, total degree) view.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Mask), u64>,
}

impl BettiTable {
    pub fn new() -> BettiTable {
        BettiTable::default()
    }

    pub fn add(&mut self, i: usize, multidegree: Mask, count: u64) {
        if count > 0 {
            *self.entries.entry((i, multidegree)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, multidegree: Mask) -> u64 {
        self.entries.get(&(i, multidegree)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Mask, u64)> + '_ {
        self.entries.iter().map(|(&(i, m), &c)| (i, m, c))
    }

    /// Coarse table: (homological index, total degree) → β.
    pub fn coarse(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (&(i, m), &c) in &self.entries {
            *out.entry((i, m.len())).or_insert(0) += c;
        }
        out
    }

    pub fn coarse_get(&self, i: usize, j: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ii, m), _)| ii == i && m.len() == j)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Total Betti number b_i.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ii, _), _)| ii == i)
            .map(|(_, &c)| c)
            .sum()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Whether every entry sits on the d-linear strand.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, m)| m.len() == i + d)
    }
}

/// Multigraded Betti numbers over the rationals, by Hochster's formula.
pub fn graded_betti_oracle(ideal: &MonomialIdeal) -> Result<BettiTable, MonomialError> {
    graded_betti_oracle_in(ideal, Field::Rationals, ORACLE_GENERATOR_CAP)
}

/// Multigraded Betti numbers over a chosen field, with an explicit
/// generator cap.
///
/// For every subset W of the generator support, the faces of the restricted
/// Stanley–Reisner complex Δ|_W (subsets of W containing no generator) are
/// enumerated and β_{i,W} = dim H̃_{|W|−i−2}(Δ|_W). Multidegrees outside the
/// support of lcm(G(I)) carry no Betti numbers, so the sweep is complete.
pub fn graded_betti_oracle_in(
    ideal: &MonomialIdeal,
    field: Field,
    gen_cap: usize,
) -> Result<BettiTable, MonomialError> {
    let gens = ideal.gens();
    let mut table = BettiTable::new();
    if gens.is_empty() {
        return Ok(table);
    }
    if ideal.is_unit() {
        return Err(MonomialError::UnitGenerator);
    }
    if gens.len() > gen_cap {
        return Err(MonomialError::TooManyGenerators {
            got: gens.len(),
            cap: gen_cap,
        });
    }
    let support = ideal.support();
    if support.len() > ORACLE_SUPPORT_CAP {
        return Err(MonomialError::SupportTooLarge {
            got: support.len(),
            cap: ORACLE_SUPPORT_CAP,
        });
    }

    let mut faces: Vec<Mask> = Vec::new();
    for w in support.subsets() {
        faces.clear();
        for f in w.subsets() {
            if !gens.iter().any(|&g| g.is_subset(f)) {
                faces.push(f);
            }
        }
        // Δ|_W containing W itself is a full simplex; cones are acyclic too
        if faces.contains(&w) || is_cone(&faces, w) {
            continue;
        }
        let homology = reduced_betti(&faces, field);
        for (idx, &h) in homology.iter().enumerate() {
            // idx reports H̃_{idx-1}; match it to H̃_{|W|-i-2}
            if h > 0 {
                let i = w.len() - 1 - idx;
                table.add(i, w, h as u64);
            }
        }
    }
    Ok(table)
}

/// Betti numbers via lcm-preserving strands of the Taylor complex.
///
/// For each multidegree m, the strand has one basis element per generator
/// subset F with lcm(F) = m, graded by |F|, and the boundary keeps exactly
/// the faces F∖{f} with the same lcm; β_{i,m} is the homology at |F| = i+1.
pub fn taylor_strand_betti(
    ideal: &MonomialIdeal,
    field: Field,
) -> Result<BettiTable, MonomialError> {
    let gens = ideal.gens();
    let mut table = BettiTable::new();
    if gens.is_empty() {
        return Ok(table);
    }
    if ideal.is_unit() {
        return Err(MonomialError::UnitGenerator);
    }
    let g = gens.len();
    if g > TAYLOR_GENERATOR_CAP {
        return Err(MonomialError::TooManyGenerators {
            got: g,
            cap: TAYLOR_GENERATOR_CAP,
        });
    }

    let total = 1usize << g;
    let mut lcms = vec![Mask::EMPTY; total];
    #[allow(clippy::needless_range_loop)]
    for s in 1..total {
        let low = s.trailing_zeros() as usize;
        lcms[s] = lcms[s & (s - 1)].union(gens[low]);
    }
    let mut strands: HashMap<Mask, Vec<usize>> = HashMap::new();
    for (s, &lcm) in lcms.iter().enumerate().skip(1) {
        strands.entry(lcm).or_default().push(s);
    }

    let rank_in = |rows: usize, cols: usize, entries: &[(usize, usize, i64)]| match field {
        Field::Rationals => rank_rational(rows, cols, entries),
        Field::Char2 => rank_gf2(rows, cols, entries),
    };

    let mut multidegrees: Vec<Mask> = strands.keys().copied().collect();
    multidegrees.sort_unstable();
    for m in multidegrees {
        let subsets = &strands[&m];
        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); g + 1];
        for &s in subsets {
            levels[s.count_ones() as usize].push(s);
        }
        let index: Vec<HashMap<usize, usize>> = levels
            .iter()
            .map(|lv| lv.iter().enumerate().map(|(i, &s)| (s, i)).collect())
            .collect();
        let boundary_rank = |j: usize| -> usize {
            if j == 0 || j > g || levels[j].is_empty() {
                return 0;
            }
            let mut entries = Vec::new();
            for (col, &s) in levels[j].iter().enumerate() {
                let mut pos = 0;
                for f in 0..g {
                    if s >> f & 1 == 1 {
                        let sub = s & !(1 << f);
                        if lcms[sub] == m {
                            let row = index[j - 1][&sub];
                            entries.push((row, col, if pos % 2 == 0 { 1 } else { -1 }));
                        }
                        pos += 1;
                    }
                }
            }
            rank_in(levels[j - 1].len(), levels[j].len(), &entries)
        };
        let ranks: Vec<usize> = (0..=g + 1).map(boundary_rank).collect();
        for j in 1..=g {
            let h = levels[j].len() - ranks[j] - ranks[j + 1];
            if h > 0 {
                table.add(j - 1, m, h as u64);
            }
        }
    }
    Ok(table)
}

/// Whether the ideal has a linear resolution: equigenerated in some degree d
/// with all Betti numbers on the d-strand. The zero ideal counts as linear.
pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool, MonomialError> {
    has_linear_resolution_in(ideal, Field::Rationals, ORACLE_GENERATOR_CAP)
}

pub fn has_linear_resolution_in(
    ideal: &MonomialIdeal,
    field: Field,
    gen_cap: usize,
) -> Result<bool, MonomialError> {
    if ideal.is_zero() {
        return Ok(true);
    }
    if ideal.is_unit() {
        return Err(MonomialError::UnitGenerator);
    }
    let Some(d) = ideal.generated_in_degree() else {
        return Ok(false);
    };
    let table = graded_betti_oracle_in(ideal, field, gen_cap)?;
    Ok(table.is_linear(d))
}
