//! The explicit multigraded free resolution of the Hibi ideal of a
//! meet-closed subset of a distributive lattice, its dual built from upper
//! neighbors, the comparison isomorphism between the two, Betti extraction,
//! and a strand-by-strand exactness verifier.
//!
//! Basis symbols are b(p;S) with p a lattice element and S a set of lower
//! neighbors of p inside the resolved subset; the multidegree of b(p;S) is
//! lcm(u_p, {u_q}_{q∈S}) and the differential sends b(p;S) to
//! `Σ_{q∈S} (−1)^{λ(p∖q; p∖S)} (y_{p∖q}·b(p;S∖{q}) − x_{p∖q}·b(q; q∧(S∖{q})))`,
//! where p∖q is the unique join-irreducible in ℓ(p)∖ℓ(q) and λ counts
//! smaller labels under a fixed linear extension of P.
//!
//! The differential is well defined only when every induced cover of the
//! subset is a cover of the ambient lattice (so that ℓ(p)∖ℓ(q) is a single
//! label); the constructor validates this along with meet-closedness and
//! refuses otherwise, naming the offending pair. On the accepted domain the
//! resolution is always minimal: ℓ(∧S) = ℓ(p) ∖ {labels of S} makes the
//! meet strictly monotone in S, so condition (∧S > ∧N(p) for proper S)
//! cannot fail. ∂∘∂ = 0 and entry homogeneity are verified on construction.

use std::collections::HashMap;

use crate::betti::BettiTable;
use crate::bits::{ElemSet, Mask};
use crate::lattice::Lattice;
use crate::linalg::rank_rational;
use crate::monomial::{hibi_generator, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolutionError {
    #[error("the lattice must be distributive")]
    NotDistributive,
    #[error("subset is not meet-closed: {a} ∧ {b} is outside")]
    NotMeetClosed { a: usize, b: usize },
    #[error("induced cover {lower} ⋖ {upper} is not an ambient cover; the differential formula does not apply")]
    UnsupportedCover { lower: usize, upper: usize },
    #[error("{got} exceeds the cap of {cap}")]
    TooLarge { got: usize, cap: usize },
    #[error("the order given is not a linear extension of P")]
    BadOrder,
    #[error("resolution is not minimal; Betti numbers require the oracle")]
    NotMinimal,
    #[error("ideal lives over a different ground set")]
    GroundSetMismatch,
}

/// Whether basis symbols attach lower neighbors (the standard resolution) or
/// upper neighbors (the dual one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborKind {
    Lower,
    Upper,
}

/// One basis symbol b(p;S) with its multidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisSymbol {
    pub element: usize,
    /// The attached neighbor set, as a mask over lattice element ids.
    pub attached: Mask,
    /// Multidegree over the 2|P| variables.
    pub multidegree: Mask,
}

/// A differential entry: ±variable from a column of F_i to a row of F_{i-1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub variable: usize,
}

/// A multigraded complex of free modules with signed variable entries.
#[derive(Debug, Clone)]
pub struct ResolutionComplex {
    kind: NeighborKind,
    p_len: usize,
    /// The linear extension of P fixing the λ signs.
    order: Vec<usize>,
    /// Labels of every lattice element (by element id).
    labels: Vec<Mask>,
    members: Vec<usize>,
    /// Attached-neighbor list per member (lower or upper, by kind).
    neighbor_sets: HashMap<usize, Vec<usize>>,
    levels: Vec<Vec<BasisSymbol>>,
    /// diffs[i] maps F_i → F_{i-1}; diffs[0] is empty.
    diffs: Vec<Vec<Entry>>,
}

const SYMBOL_CAP: usize = 1 << 20;
const STRAND_VAR_CAP: usize = 20;

/// Default linear extension of P: by height in P, then by index.
pub fn default_order(lattice: &Lattice) -> Vec<usize> {
    let p = lattice.irreducibles();
    let mut height = vec![0usize; p.len()];
    // covers are topologically ordered by construction of the closure
    let mut order: Vec<usize> = (0..p.len()).collect();
    loop {
        let mut changed = false;
        for &(a, b) in p.covers() {
            if height[b] < height[a] + 1 {
                height[b] = height[a] + 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    order.sort_by_key(|&x| (height[x], x));
    order
}

fn order_positions(lattice: &Lattice, order: &[usize]) -> Result<Vec<u32>, ResolutionError> {
    let p = lattice.irreducibles();
    if order.len() != p.len() {
        return Err(ResolutionError::BadOrder);
    }
    let mut pos = vec![u32::MAX; p.len()];
    for (i, &x) in order.iter().enumerate() {
        if x >= p.len() || pos[x] != u32::MAX {
            return Err(ResolutionError::BadOrder);
        }
        pos[x] = i as u32;
    }
    for &(a, b) in p.covers() {
        if pos[a] > pos[b] {
            return Err(ResolutionError::BadOrder);
        }
    }
    Ok(pos)
}

/// The resolution of H over the subset, with the default linear extension.
pub fn hibi_resolution(
    lattice: &Lattice,
    members: &ElemSet,
) -> Result<ResolutionComplex, ResolutionError> {
    hibi_resolution_with_order(lattice, members, &default_order(lattice))
}

/// The resolution with a caller-chosen linear extension of P (signs change
/// with the extension; ranks and verdicts do not).
pub fn hibi_resolution_with_order(
    lattice: &Lattice,
    members: &ElemSet,
    order: &[usize],
) -> Result<ResolutionComplex, ResolutionError> {
    build(lattice, members, order, NeighborKind::Lower)
}

/// The dual resolution of the full lattice: basis b̃(r;T) with T ⊆ M(r),
/// resolving the Hibi ideal of the dual lattice.
pub fn dual_resolution(lattice: &Lattice) -> Result<ResolutionComplex, ResolutionError> {
    dual_resolution_with_order(lattice, &default_order(lattice))
}

pub fn dual_resolution_with_order(
    lattice: &Lattice,
    order: &[usize],
) -> Result<ResolutionComplex, ResolutionError> {
    build(lattice, &lattice.all_elements(), order, NeighborKind::Upper)
}

fn build(
    lattice: &Lattice,
    members: &ElemSet,
    order: &[usize],
    kind: NeighborKind,
) -> Result<ResolutionComplex, ResolutionError> {
    if !lattice.is_distributive() {
        return Err(ResolutionError::NotDistributive);
    }
    let n = lattice.len();
    if n > 64 {
        return Err(ResolutionError::TooLarge { got: n, cap: 64 });
    }
    let order_pos = order_positions(lattice, order)?;
    let p_len = lattice.p_len();
    let member_list: Vec<usize> = members.iter().collect();

    // meet-closed (resp. join-closed for the dual)
    for (ai, &a) in member_list.iter().enumerate() {
        for &b in &member_list[ai + 1..] {
            let m = match kind {
                NeighborKind::Lower => lattice.meet(a, b),
                NeighborKind::Upper => lattice.join(a, b),
            };
            if !members.contains(m) {
                return Err(ResolutionError::NotMeetClosed { a, b });
            }
        }
    }

    // induced covers inside the subset, and the ambient-cover condition
    let mut neighbor_sets: HashMap<usize, Vec<usize>> = HashMap::new();
    for &p in &member_list {
        let mut closest: Vec<usize> = Vec::new();
        for &q in &member_list {
            if q == p {
                continue;
            }
            let related = match kind {
                NeighborKind::Lower => lattice.leq(q, p),
                NeighborKind::Upper => lattice.leq(p, q),
            };
            if !related {
                continue;
            }
            let strictly_between = member_list.iter().any(|&z| {
                z != p
                    && z != q
                    && match kind {
                        NeighborKind::Lower => lattice.leq(q, z) && lattice.leq(z, p),
                        NeighborKind::Upper => lattice.leq(p, z) && lattice.leq(z, q),
                    }
            });
            if !strictly_between {
                closest.push(q);
            }
        }
        for &q in &closest {
            let diff = match kind {
                NeighborKind::Lower => lattice.label(p).minus(lattice.label(q)),
                NeighborKind::Upper => lattice.label(q).minus(lattice.label(p)),
            };
            if diff.len() != 1 {
                let (lower, upper) = match kind {
                    NeighborKind::Lower => (q, p),
                    NeighborKind::Upper => (p, q),
                };
                return Err(ResolutionError::UnsupportedCover { lower, upper });
            }
        }
        closest.sort_unstable();
        neighbor_sets.insert(p, closest);
    }

    let symbol_count: usize = member_list
        .iter()
        .map(|p| 1usize << neighbor_sets[p].len())
        .sum();
    if symbol_count > SYMBOL_CAP {
        return Err(ResolutionError::TooLarge {
            got: symbol_count,
            cap: SYMBOL_CAP,
        });
    }

    // the monomial attached to an element: u_p, or its involution for the dual
    let gen_of = |p: usize| -> Mask {
        let u = hibi_generator(lattice, p);
        match kind {
            NeighborKind::Lower => u,
            NeighborKind::Upper => {
                let xs = u.intersection(Mask::full(p_len));
                let ys = u.minus(Mask::full(p_len));
                Mask(ys.0 >> p_len | xs.0 << p_len)
            }
        }
    };
    // label of the cover edge between p and its neighbor q
    let edge_label = |p: usize, q: usize| -> usize {
        let diff = match kind {
            NeighborKind::Lower => lattice.label(p).minus(lattice.label(q)),
            NeighborKind::Upper => lattice.label(q).minus(lattice.label(p)),
        };
        diff.min_elem().expect("validated single-label cover")
    };

    let max_level = member_list
        .iter()
        .map(|p| neighbor_sets[p].len())
        .max()
        .unwrap_or(0);
    let mut levels: Vec<Vec<BasisSymbol>> = vec![Vec::new(); max_level + 1];
    for &p in &member_list {
        let nbrs = &neighbor_sets[&p];
        let nbr_mask = Mask::from_iter(nbrs.iter().copied());
        for attached in nbr_mask.subsets() {
            let mut multidegree = gen_of(p);
            for q in attached.iter() {
                multidegree = multidegree.union(gen_of(q));
            }
            levels[attached.len()].push(BasisSymbol {
                element: p,
                attached,
                multidegree,
            });
        }
    }
    for level in &mut levels {
        level.sort_unstable_by_key(|s| (s.element, s.attached.0));
    }
    let index: Vec<HashMap<(usize, u64), usize>> = levels
        .iter()
        .map(|lv| {
            lv.iter()
                .enumerate()
                .map(|(i, s)| ((s.element, s.attached.0), i))
                .collect()
        })
        .collect();

    let mut diffs: Vec<Vec<Entry>> = vec![Vec::new(); levels.len()];
    for i in 1..levels.len() {
        let mut entries = Vec::new();
        for (col, sym) in levels[i].iter().enumerate() {
            let p = sym.element;
            for q in sym.attached.iter() {
                let lab_q = edge_label(p, q);
                let lambda = sym
                    .attached
                    .iter()
                    .filter(|&s| order_pos[edge_label(p, s)] < order_pos[lab_q])
                    .count();
                let sign = if lambda % 2 == 0 { 1i8 } else { -1i8 };

                // first term: drop q; the multidegree loses y_{p∖q} in both
                // the standard and the dual differential
                let kept = sym.attached.without(q);
                let row = index[i - 1][&(p, kept.0)];
                entries.push(Entry {
                    row,
                    col,
                    sign,
                    variable: p_len + lab_q,
                });

                // second term: descend to q, attaching the meets (joins) of
                // the remaining neighbors with q
                let mut target = Mask::EMPTY;
                for s in sym.attached.iter() {
                    if s != q {
                        let t = match kind {
                            NeighborKind::Lower => lattice.meet(q, s),
                            NeighborKind::Upper => lattice.join(q, s),
                        };
                        target.insert(t);
                    }
                }
                assert_eq!(
                    target.len(),
                    sym.attached.len() - 1,
                    "neighbor meets must stay distinct"
                );
                let target_nbrs = Mask::from_iter(neighbor_sets[&q].iter().copied());
                assert!(
                    target.is_subset(target_nbrs),
                    "meets of neighbors must be neighbors on the supported domain",
                );
                let row2 = index[i - 1][&(q, target.0)];
                entries.push(Entry {
                    row: row2,
                    col,
                    sign: -sign,
                    variable: lab_q,
                });
            }
        }
        diffs[i] = entries;
    }

    let complex = ResolutionComplex {
        kind,
        p_len,
        order: order.to_vec(),
        labels: lattice.labels().to_vec(),
        members: member_list,
        neighbor_sets,
        levels,
        diffs,
    };
    complex.verify_homogeneous();
    complex.verify_square_zero();
    Ok(complex)
}

impl ResolutionComplex {
    pub fn kind(&self) -> NeighborKind {
        self.kind
    }

    pub fn var_count(&self) -> usize {
        2 * self.p_len
    }

    /// The linear extension of P used for the λ signs.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    pub fn levels(&self) -> &[Vec<BasisSymbol>] {
        &self.levels
    }

    pub fn level_rank(&self, i: usize) -> usize {
        self.levels.get(i).map_or(0, |l| l.len())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    pub fn differentials(&self) -> &[Vec<Entry>] {
        &self.diffs
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Every entry must satisfy multidegree(source) = multidegree(target) · variable.
    fn verify_homogeneous(&self) {
        for i in 1..self.levels.len() {
            for e in &self.diffs[i] {
                let src = self.levels[i][e.col].multidegree;
                let tgt = self.levels[i - 1][e.row].multidegree;
                assert!(
                    !tgt.contains(e.variable) && tgt.with(e.variable) == src,
                    "inhomogeneous differential entry",
                );
            }
        }
    }

    /// Composes consecutive differentials symbolically and checks for zero.
    fn verify_square_zero(&self) {
        for i in 2..self.levels.len() {
            let mut acc: HashMap<(usize, usize, u64), i64> = HashMap::new();
            // group the lower differential by column for fast lookup
            let mut by_col: HashMap<usize, Vec<&Entry>> = HashMap::new();
            for e in &self.diffs[i - 1] {
                by_col.entry(e.col).or_default().push(e);
            }
            for hi in &self.diffs[i] {
                if let Some(lows) = by_col.get(&hi.row) {
                    for lo in lows {
                        let monomial = Mask::EMPTY.with(hi.variable).with(lo.variable);
                        let key = (lo.row, hi.col, monomial.0);
                        *acc.entry(key).or_insert(0) += (hi.sign as i64) * (lo.sign as i64);
                    }
                }
            }
            assert!(acc.values().all(|&c| c == 0), "∂∘∂ ≠ 0 at level {i}");
        }
    }

    /// Minimality criterion: for every p and proper subset S of its attached
    /// neighbors, the meet (join) over S differs from the meet (join) over
    /// all neighbors. Cross-checked against a scan for unit entries, which a
    /// minimal multigraded differential cannot contain.
    pub fn is_minimal(&self) -> bool {
        let by_criterion = self.members.iter().all(|&p| {
            let nbrs = &self.neighbor_sets[&p];
            if nbrs.len() < 2 {
                return true;
            }
            let fold = |set: &[usize]| -> Mask {
                // meets intersect labels; joins union them
                set.iter()
                    .map(|&q| self.labels[q])
                    .fold(self.labels[p], |a, b| match self.kind {
                        NeighborKind::Lower => a.intersection(b),
                        NeighborKind::Upper => a.union(b),
                    })
            };
            let all = fold(nbrs);
            // proper nonempty subsets suffice: dropping one element already
            // witnesses any failure by monotonicity
            (0..nbrs.len()).all(|skip| {
                let rest: Vec<usize> = nbrs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &q)| q)
                    .collect();
                fold(&rest) != all
            })
        });
        // unit-entry scan: a non-minimal multigraded differential shows a
        // unit entry, i.e. equal source and target multidegrees
        let by_entries = (1..self.levels.len()).all(|i| {
            self.diffs[i]
                .iter()
                .all(|e| self.levels[i][e.col].multidegree != self.levels[i - 1][e.row].multidegree)
        });
        debug_assert_eq!(by_criterion, by_entries, "minimality checks disagree");
        by_criterion && by_entries
    }

    /// Betti numbers read off the minimal resolution: one per basis symbol.
    pub fn betti(&self) -> Result<BettiTable, ResolutionError> {
        if !self.is_minimal() {
            return Err(ResolutionError::NotMinimal);
        }
        let mut table = BettiTable::new();
        for (i, level) in self.levels.iter().enumerate() {
            for sym in level {
                table.add(i, sym.multidegree, 1);
            }
        }
        Ok(table)
    }

    /// Strand of the differential F_i → F_{i-1} at squarefree multidegree w.
    fn strand_rank(&self, i: usize, w: Mask) -> usize {
        if i == 0 || i >= self.levels.len() {
            return 0;
        }
        let include: Vec<Option<usize>> = {
            let mut next = 0usize;
            self.levels[i]
                .iter()
                .map(|s| {
                    if s.multidegree.is_subset(w) {
                        let k = next;
                        next += 1;
                        Some(k)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let include_rows: Vec<Option<usize>> = {
            let mut next = 0usize;
            self.levels[i - 1]
                .iter()
                .map(|s| {
                    if s.multidegree.is_subset(w) {
                        let k = next;
                        next += 1;
                        Some(k)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let cols = include.iter().flatten().count();
        let rows = include_rows.iter().flatten().count();
        let mut entries = Vec::new();
        for e in &self.diffs[i] {
            if let Some(c) = include[e.col] {
                let r = include_rows[e.row].expect("target multidegree divides source's");
                entries.push((r, c, e.sign as i64));
            }
        }
        rank_rational(rows, cols, &entries)
    }

    /// Per-multidegree exactness against the ideal the complex resolves:
    /// homology vanishes in positive indices and the cokernel of F_1 → F_0
    /// matches the ideal degreewise.
    pub fn exactness_check(&self, ideal: &MonomialIdeal) -> Result<bool, ResolutionError> {
        if ideal.vars().len() != self.var_count() {
            return Err(ResolutionError::GroundSetMismatch);
        }
        let support = self
            .levels
            .iter()
            .flatten()
            .fold(ideal.support(), |acc, s| acc.union(s.multidegree));
        if support.len() > STRAND_VAR_CAP {
            return Err(ResolutionError::TooLarge {
                got: support.len(),
                cap: STRAND_VAR_CAP,
            });
        }
        for w in support.subsets() {
            let dims: Vec<usize> = (0..self.levels.len())
                .map(|i| {
                    self.levels[i]
                        .iter()
                        .filter(|s| s.multidegree.is_subset(w))
                        .count()
                })
                .collect();
            let ranks: Vec<usize> = (0..=self.levels.len())
                .map(|i| self.strand_rank(i, w))
                .collect();
            for i in 1..self.levels.len() {
                if dims[i] != ranks[i] + ranks[i + 1] {
                    return Ok(false);
                }
            }
            let coker = dims[0] - ranks[1];
            let expected = usize::from(ideal.contains(w));
            if coker != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }

    #[cfg(test)]
    pub(crate) fn corrupt_first_sign(&mut self) {
        for d in self.diffs.iter_mut() {
            if let Some(e) = d.first_mut() {
                e.sign = -e.sign;
                return;
            }
        }
    }
}

/// The chain isomorphism between the involuted dual resolution and the
/// standard one: σ(b̃(r;T)) ↦ (−1)^{|T|} · b(∨T; lower neighbors of ∨T in [r, ∨T]).
#[derive(Debug, Clone)]
pub struct ChainIso {
    /// Per level, per dual-basis index: (index in the standard basis, sign).
    pub maps: Vec<Vec<(usize, i8)>>,
}

/// Builds both resolutions of the full lattice with a shared linear
/// extension and returns the comparison isomorphism, after verifying that it
/// is a degreewise bijection and commutes with the differentials.
pub fn iso_pi(
    lattice: &Lattice,
) -> Result<(ResolutionComplex, ResolutionComplex, ChainIso), ResolutionError> {
    iso_pi_with_order(lattice, &default_order(lattice))
}

pub fn iso_pi_with_order(
    lattice: &Lattice,
    order: &[usize],
) -> Result<(ResolutionComplex, ResolutionComplex, ChainIso), ResolutionError> {
    let standard = hibi_resolution_with_order(lattice, &lattice.all_elements(), order)?;
    let dual = dual_resolution_with_order(lattice, order)?;
    let p_len = lattice.p_len();

    let mut maps: Vec<Vec<(usize, i8)>> = Vec::with_capacity(dual.levels.len());
    for (i, level) in dual.levels.iter().enumerate() {
        if standard.level_rank(i) != level.len() {
            return Err(ResolutionError::NotDistributive);
        }
        let std_index: HashMap<(usize, u64), usize> = standard.levels[i]
            .iter()
            .enumerate()
            .map(|(k, s)| ((s.element, s.attached.0), k))
            .collect();
        let mut level_map = Vec::with_capacity(level.len());
        let sign = if i % 2 == 0 { 1i8 } else { -1i8 };
        for sym in level {
            let r = sym.element;
            // r^T = join of T (r itself when T is empty)
            let join_label = sym
                .attached
                .iter()
                .fold(lattice.label(r), |acc, t| acc.union(lattice.label(t)));
            let top = lattice.element_by_label(join_label).expect("joins exist");
            // T_r = lower neighbors of r^T inside [r, r^T]
            let mut t_r = Mask::EMPTY;
            for d in join_label.minus(lattice.label(r)).iter() {
                let q = lattice
                    .element_by_label(join_label.without(d))
                    .expect("distributive interval is Boolean");
                t_r.insert(q);
            }
            let target = std_index[&(top, t_r.0)];
            level_map.push((target, sign));
        }
        // degreewise bijection
        let mut seen = vec![false; level.len()];
        for &(t, _) in &level_map {
            assert!(!seen[t], "comparison map must be injective");
            seen[t] = true;
        }
        maps.push(level_map);
    }

    // chain-map equation: π_{i-1} ∘ σ(∂̃_i) = ∂_i ∘ π_i
    let sigma = |v: usize| if v < p_len { v + p_len } else { v - p_len };
    for i in 1..dual.levels.len() {
        let mut lhs: HashMap<(usize, usize, usize), i64> = HashMap::new();
        for e in &dual.diffs[i] {
            let (row_target, row_sign) = maps[i - 1][e.row];
            let key = (row_target, e.col, sigma(e.variable));
            *lhs.entry(key).or_insert(0) += (e.sign as i64) * (row_sign as i64);
        }
        let mut rhs: HashMap<(usize, usize, usize), i64> = HashMap::new();
        for (col, &(col_target, col_sign)) in maps[i].iter().enumerate() {
            for e in standard.diffs[i].iter().filter(|e| e.col == col_target) {
                let key = (e.row, col, e.variable);
                *rhs.entry(key).or_insert(0) += (e.sign as i64) * (col_sign as i64);
            }
        }
        lhs.retain(|_, v| *v != 0);
        rhs.retain(|_, v| *v != 0);
        if lhs != rhs {
            panic!("comparison map fails the chain-map equation at level {i}");
        }
    }

    Ok((standard, dual, ChainIso { maps }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::graded_betti_oracle;
    use crate::lattice::test_fixtures::figure_lattice;
    use crate::lattice::{element_order, Lattice, DEFAULT_IDEAL_CAP};
    use crate::monomial::hibi_ideal;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn single_element_resolution() {
        let b2 = Lattice::boolean(2).unwrap();
        let one = ElemSet::from_iter(4, [b2.top()]);
        let r = hibi_resolution(&b2, &one).unwrap();
        assert_eq!(r.ranks(), vec![1]);
        assert!(r.is_minimal());
        let ideal = hibi_ideal(&b2, &one);
        assert!(r.exactness_check(&ideal).unwrap());
    }

    #[test]
    fn boolean_full_resolution_ranks() {
        for r in 2..=4usize {
            let b = Lattice::boolean(r).unwrap();
            let all = b.all_elements();
            let res = hibi_resolution(&b, &all).unwrap();
            let expect: Vec<usize> = (0..=r).map(|i| binom(r, i) << (r - i)).collect();
            assert_eq!(res.ranks(), expect);
            assert!(res.is_minimal());
        }
    }

    #[test]
    fn boolean_ideal_resolution_ranks() {
        // I = B_3 ∖ {1̂}: ranks C(3,i)·2^(3-i) − C(3,i)
        let b3 = Lattice::boolean(3).unwrap();
        let mut i = b3.all_elements();
        i.remove(b3.top());
        let res = hibi_resolution(&b3, &i).unwrap();
        assert_eq!(res.ranks(), vec![7, 9, 3]);
        assert!(res.is_minimal());
        let ideal = hibi_ideal(&b3, &i);
        assert!(res.exactness_check(&ideal).unwrap());
        assert_eq!(res.betti().unwrap(), graded_betti_oracle(&ideal).unwrap());
    }

    #[test]
    fn resolution_matches_oracle_on_figure_ideals() {
        let l = figure_lattice();
        let order = element_order(&l).unwrap();
        for ideal_mask in order.ideals(DEFAULT_IDEAL_CAP).unwrap() {
            let members = ElemSet::from_iter(l.len(), ideal_mask.iter());
            let res = hibi_resolution(&l, &members).unwrap();
            assert!(res.is_minimal());
            let ideal = hibi_ideal(&l, &members);
            assert!(res.exactness_check(&ideal).unwrap());
            assert_eq!(res.betti().unwrap(), graded_betti_oracle(&ideal).unwrap());
        }
    }

    #[test]
    fn meet_closed_but_not_ideal_subsets() {
        let b3 = Lattice::boolean(3).unwrap();
        // {0̂, a, b, 1̂}: meet-closed, covers a ⋖ 1̂ and b ⋖ 1̂ are not ambient
        let a = b3.element_by_label(Mask::singleton(0)).unwrap();
        let b = b3.element_by_label(Mask::singleton(1)).unwrap();
        let sub = ElemSet::from_iter(8, [b3.bottom(), a, b, b3.top()]);
        assert!(matches!(
            hibi_resolution(&b3, &sub),
            Err(ResolutionError::UnsupportedCover { .. })
        ));

        // a meet-open subset is rejected with the offending pair
        let ab = b3.element_by_label(Mask::from_iter([0, 1])).unwrap();
        let ac = b3.element_by_label(Mask::from_iter([0, 2])).unwrap();
        let open = ElemSet::from_iter(8, [ab, ac, b3.top()]);
        assert!(matches!(
            hibi_resolution(&b3, &open),
            Err(ResolutionError::NotMeetClosed { .. })
        ));

        // the principal filter above an atom: meet-closed with ambient covers
        let filter = ElemSet::from_iter(8, (0..8).filter(|&p| b3.leq(a, p)));
        let res = hibi_resolution(&b3, &filter).unwrap();
        assert!(res.is_minimal());
        let ideal = hibi_ideal(&b3, &filter);
        assert!(res.exactness_check(&ideal).unwrap());
    }

    #[test]
    fn exhaustive_meet_closed_subsets_of_b3() {
        // every meet-closed subset either has all induced covers ambient
        // (then the construction succeeds, is minimal by both checks, and is
        // exact) or is refused; minimality violations exist combinatorially
        // but only on refused inputs
        let b3 = Lattice::boolean(3).unwrap();
        let mut constructed = 0;
        let mut refused = 0;
        let mut criterion_violations_on_refused = 0;
        for bits in 1u64..256 {
            let members = ElemSet::from_iter(8, (0..8).filter(|&i| bits >> i & 1 == 1));
            let list: Vec<usize> = members.iter().collect();
            let closed = list
                .iter()
                .all(|&x| list.iter().all(|&y| members.contains(b3.meet(x, y))));
            if !closed {
                continue;
            }
            match hibi_resolution(&b3, &members) {
                Ok(res) => {
                    constructed += 1;
                    assert!(res.is_minimal());
                    let ideal = hibi_ideal(&b3, &members);
                    assert!(res.exactness_check(&ideal).unwrap());
                    assert_eq!(res.betti().unwrap(), graded_betti_oracle(&ideal).unwrap());
                }
                Err(ResolutionError::UnsupportedCover { .. }) => {
                    refused += 1;
                    // evaluate criterion (2)(b) combinatorially on the
                    // induced covers
                    let violates = list.iter().any(|&p| {
                        let nbrs: Vec<usize> = list
                            .iter()
                            .copied()
                            .filter(|&q| {
                                q != p
                                    && b3.leq(q, p)
                                    && !list
                                        .iter()
                                        .any(|&z| z != p && z != q && b3.leq(q, z) && b3.leq(z, p))
                            })
                            .collect();
                        if nbrs.len() < 2 {
                            return false;
                        }
                        let meet_all = nbrs.iter().fold(p, |acc, &q| b3.meet(acc, q));
                        (0..nbrs.len()).any(|skip| {
                            let rest = nbrs.iter().enumerate().filter(|&(k, _)| k != skip);
                            let m = rest.fold(p, |acc, (_, &q)| b3.meet(acc, q));
                            m == meet_all
                        })
                    });
                    if violates {
                        criterion_violations_on_refused += 1;
                    }
                }
                Err(other) => panic!("unexpected error {other:?}"),
            }
        }
        assert!(
            constructed > 50,
            "plenty of subsets construct ({constructed})"
        );
        assert!(refused > 0);
        // the minimality criterion does fail somewhere, e.g. on {0̂,a,b,c,1̂}
        assert!(criterion_violations_on_refused > 0);
    }

    #[test]
    fn corrupted_sign_fails_exactness() {
        let b2 = Lattice::boolean(2).unwrap();
        let all = b2.all_elements();
        let mut res = hibi_resolution(&b2, &all).unwrap();
        let ideal = hibi_ideal(&b2, &all);
        assert!(res.exactness_check(&ideal).unwrap());
        res.corrupt_first_sign();
        assert!(!res.exactness_check(&ideal).unwrap());
    }

    #[test]
    fn dual_resolution_of_boolean_is_self_symmetric() {
        let b3 = Lattice::boolean(3).unwrap();
        let dual = dual_resolution(&b3).unwrap();
        assert_eq!(dual.ranks(), vec![8, 12, 6, 1]);
        // multidegrees of b̃(r;T) are lcms of the dual generators
        let dual_lattice = b3.dual().unwrap();
        let dual_ideal = hibi_ideal(&dual_lattice, &dual_lattice.all_elements());
        assert!(dual.exactness_check(&dual_ideal).unwrap());
    }

    #[test]
    fn chain_dual_resolution() {
        // chain of rank 1: two generators, one syzygy
        let c2 = Lattice::birkhoff_of(&crate::poset::Poset::chain(1), 64).unwrap();
        let dual = dual_resolution(&c2).unwrap();
        assert_eq!(dual.ranks(), vec![2, 1]);
    }

    #[test]
    fn iso_on_b2_b3_and_figure() {
        for l in [
            Lattice::boolean(2).unwrap(),
            Lattice::boolean(3).unwrap(),
            figure_lattice(),
        ] {
            let (standard, dual, iso) = iso_pi(&l).unwrap();
            assert_eq!(standard.ranks(), dual.ranks());
            // explicit spot check: T = ∅ maps with sign +1 to b(r;∅)
            for (k, sym) in dual.levels()[0].iter().enumerate() {
                let (target, sign) = iso.maps[0][k];
                assert_eq!(sign, 1);
                assert_eq!(standard.levels()[0][target].element, sym.element);
            }
        }
    }

    #[test]
    fn iso_bottom_maps_to_top() {
        // B_2: r = 0̂, T = M(0̂) maps to b(1̂; N(1̂)) with sign (+1)
        let b2 = Lattice::boolean(2).unwrap();
        let (standard, dual, iso) = iso_pi(&b2).unwrap();
        let (k, _) = dual.levels()[2]
            .iter()
            .enumerate()
            .find(|(_, s)| s.element == b2.bottom())
            .unwrap();
        let (target, sign) = iso.maps[2][k];
        assert_eq!(sign, 1);
        let image = standard.levels()[2][target];
        assert_eq!(image.element, b2.top());
        assert_eq!(image.attached.len(), 2);
    }

    #[test]
    fn sign_independence_under_linear_extension_change() {
        let l = figure_lattice();
        let default = default_order(&l);
        let mut other = default.clone();
        other.reverse();
        // reversing is rarely a linear extension; build one by swapping two
        // incomparable irreducibles instead
        let p = l.irreducibles();
        let mut alt = default.clone();
        let mut swapped = false;
        for i in 0..alt.len() {
            for j in i + 1..alt.len() {
                if !p.leq(alt[i], alt[j]) && !p.leq(alt[j], alt[i]) {
                    alt.swap(i, j);
                    swapped = true;
                    break;
                }
            }
            if swapped {
                break;
            }
        }
        assert!(swapped);
        let all = l.all_elements();
        let a = hibi_resolution(&l, &all).unwrap();
        let b = hibi_resolution_with_order(&l, &all, &alt).unwrap();
        assert_eq!(a.ranks(), b.ranks());
        assert_eq!(a.betti().unwrap(), b.betti().unwrap());
        let ideal = hibi_ideal(&l, &all);
        assert!(a.exactness_check(&ideal).unwrap());
        assert!(b.exactness_check(&ideal).unwrap());
        // differentials genuinely differ in signs
        let differs = a
            .differentials()
            .iter()
            .zip(b.differentials())
            .any(|(x, y)| x != y);
        assert!(differs);
        // the isomorphism works with the alternate extension too
        let _ = iso_pi_with_order(&l, &alt).unwrap();
    }

    #[test]
    fn lcm_collapse_law_and_uniqueness() {
        // for each (p,S): with r = ∧S and T the upper neighbors of r in
        // [r,p]: |T| = |S|, ∨T = p, and the multidegrees agree; moreover the
        // (r,T) with a given multidegree is unique
        for l in [Lattice::boolean(3).unwrap(), figure_lattice()] {
            let all = l.all_elements();
            let res = hibi_resolution(&l, &all).unwrap();
            let dual = dual_resolution(&l).unwrap();
            for (i, level) in res.levels().iter().enumerate() {
                if i == 0 {
                    continue;
                }
                for sym in level {
                    let p = sym.element;
                    let meet = sym.attached.iter().fold(p, |acc, q| l.meet(acc, q));
                    // upper neighbors of meet inside [meet, p]
                    let t: Vec<usize> = l
                        .upper_neighbors(meet)
                        .into_iter()
                        .filter(|&u| l.leq(u, p))
                        .collect();
                    assert_eq!(t.len(), sym.attached.len());
                    let join = t.iter().fold(meet, |acc, &u| l.join(acc, u));
                    assert_eq!(join, p);
                    let mdeg_dual = t.iter().fold(hibi_generator(&l, meet), |acc, &u| {
                        acc.union(hibi_generator(&l, u))
                    });
                    assert_eq!(mdeg_dual, sym.multidegree);
                }
            }
            // uniqueness: multidegree determines (r,T) across the dual basis
            let mut seen: HashMap<Mask, (usize, Mask)> = HashMap::new();
            for level in dual.levels() {
                for sym in level {
                    // translate the dual multidegree through the involution
                    let p_len = l.p_len();
                    let xs = sym.multidegree.intersection(Mask::full(p_len));
                    let ys = sym.multidegree.minus(Mask::full(p_len));
                    let true_mdeg = Mask(ys.0 >> p_len | xs.0 << p_len);
                    let clash = seen.insert(true_mdeg, (sym.element, sym.attached));
                    assert!(clash.is_none(), "multidegree repeats in the dual basis");
                }
            }
        }
    }

    #[test]
    fn dual_coideal_subcomplex_maps_injectively() {
        // basis elements b̃(r;T) with r in a coideal map to distinct
        // ±b(∨T; T_r): restriction of the comparison map stays injective
        let l = figure_lattice();
        let (_, dual, iso) = iso_pi(&l).unwrap();
        let mut coideal = ElemSet::new(l.len());
        for p in 0..l.len() {
            if l.rank_of(p).unwrap() >= 2 {
                coideal.insert(p);
            }
        }
        for (i, level) in dual.levels().iter().enumerate() {
            let mut images = std::collections::HashSet::new();
            for (k, sym) in level.iter().enumerate() {
                if coideal.contains(sym.element) {
                    assert!(images.insert(iso.maps[i][k].0));
                }
            }
        }
    }
}
