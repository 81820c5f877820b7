//! Finite lattices on top of posets: joins and meets, distributivity, the
//! Birkhoff transform, the canonical labeling ℓ, duality, Boolean lattices,
//! rank bands, and segments.
//!
//! Elements are re-indexed so that the label ℓ(p) — the set of
//! join-irreducibles below p — is the primary identity of an element; all
//! monomial code downstream consumes labels only. For distributive lattices
//! joins and meets are label unions and intersections; explicit tables are
//! kept for small lattices (and are the only route for non-distributive
//! ones, which never exceed the table cap since they come from explicit
//! posets).

use std::collections::{HashMap, HashSet};

use crate::bits::{ElemSet, Mask};
use crate::poset::{Poset, PosetError};

/// Lattices with explicit tables are kept below this size; larger lattices
/// must be distributive and work through labels.
const TABLE_CAP: usize = 4096;

/// Default cap on poset-ideal enumeration (number of lattice elements).
pub const DEFAULT_IDEAL_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("poset error: {0}")]
    Poset(#[from] PosetError),
    #[error("no unique minimum element")]
    NoBottom,
    #[error("no unique maximum element")]
    NoTop,
    #[error("elements {a} and {b} have no {kind}")]
    NotALattice {
        a: usize,
        b: usize,
        kind: &'static str,
    },
    #[error("operation requires a distributive lattice")]
    NotDistributive,
    #[error("operation requires a graded lattice")]
    NotGraded,
    #[error("size {0} exceeds the supported cap {1}")]
    TooLarge(usize, usize),
    #[error("rank band {i}..={j} out of range for rank {rank}")]
    BadRange { i: usize, j: usize, rank: usize },
    #[error("subset is not a segment")]
    NotASegment,
}

#[derive(Clone)]
struct Tables {
    join: Vec<u32>,
    meet: Vec<u32>,
}

/// A finite lattice.
#[derive(Clone)]
pub struct Lattice {
    n: usize,
    labels: Vec<Mask>,
    by_label: HashMap<Mask, u32>,
    irreducibles: Poset,
    tables: Option<Tables>,
    covers_dn: Option<Vec<Vec<u32>>>,
    covers_up: Option<Vec<Vec<u32>>>,
    rank: Option<Vec<u32>>,
    distributive: bool,
    bottom: usize,
    top: usize,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Lattice(n={}, |P|={}, distributive={})",
            self.n,
            self.p_len(),
            self.distributive
        )
    }
}

impl Lattice {
    /// Builds the lattice structure of an explicitly given element order.
    ///
    /// Fails with the offending pair when some join or meet does not exist.
    pub fn from_poset_order(order: &Poset) -> Result<Lattice, LatticeError> {
        let n = order.len();
        if n == 0 {
            return Err(LatticeError::NoBottom);
        }
        let bottoms: Vec<usize> = (0..n)
            .filter(|&v| order.lower_neighbors(v).is_empty())
            .collect();
        let tops: Vec<usize> = (0..n)
            .filter(|&v| order.upper_neighbors(v).is_empty())
            .collect();
        if bottoms.len() != 1 {
            return Err(LatticeError::NoBottom);
        }
        if tops.len() != 1 {
            return Err(LatticeError::NoTop);
        }

        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let ub = order.up_set(a).intersection(order.up_set(b));
                let j = unique_extremum(order, ub, true).ok_or(LatticeError::NotALattice {
                    a,
                    b,
                    kind: "join",
                })?;
                let lb = order.down_set(a).intersection(order.down_set(b));
                let m = unique_extremum(order, lb, false).ok_or(LatticeError::NotALattice {
                    a,
                    b,
                    kind: "meet",
                })?;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
            }
        }

        let irr_mask = order.join_irreducibles();
        let (irreducibles, irr_back) = order.induced(irr_mask);
        let irr_index: HashMap<usize, usize> = irr_back
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let labels: Vec<Mask> = (0..n)
            .map(|p| {
                Mask::from_iter(
                    irr_mask
                        .intersection(order.down_set(p))
                        .iter()
                        .map(|q| irr_index[&q]),
                )
            })
            .collect();

        // Lemma "better": ℓ is an order embedding and turns meets into
        // intersections; holds in any finite lattice, verified outright.
        for s in 0..n {
            for t in 0..n {
                assert_eq!(order.leq(s, t), labels[s].is_subset(labels[t]));
                assert_eq!(
                    labels[meet[s * n + t] as usize],
                    labels[s].intersection(labels[t])
                );
            }
        }

        let mut by_label = HashMap::new();
        for (p, &l) in labels.iter().enumerate() {
            let clash = by_label.insert(l, p as u32);
            assert!(clash.is_none(), "canonical labels must be injective");
        }

        let ideal_count = irreducibles.count_ideals(n + 1);
        let distributive = ideal_count == n;
        if cfg!(debug_assertions) {
            // cross-check against the distributive law itself
            let law = (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| {
                        let bc = meet[b * n + c] as usize;
                        let left = join[a * n + bc] as usize;
                        let ab = join[a * n + b] as usize;
                        let ac = join[a * n + c] as usize;
                        left == meet[ab * n + ac] as usize
                    })
                })
            });
            assert_eq!(distributive, law, "two distributivity routes disagree");
        }

        let covers_dn = (0..n)
            .map(|v| order.lower_neighbors(v).iter().map(|x| x as u32).collect())
            .collect();
        let covers_up = (0..n)
            .map(|v| order.upper_neighbors(v).iter().map(|x| x as u32).collect())
            .collect();

        Ok(Lattice {
            n,
            labels,
            by_label,
            irreducibles,
            tables: Some(Tables { join, meet }),
            covers_dn: Some(covers_dn),
            covers_up: Some(covers_up),
            rank: order.rank_function(),
            distributive,
            bottom: bottoms[0],
            top: tops[0],
        })
    }

    /// The distributive lattice J(P) of all poset ideals of `p`, ordered by
    /// inclusion. Elements are sorted by (cardinality, bit pattern); the
    /// element with label `I` is the ideal `I` itself.
    pub fn birkhoff_of(p: &Poset, cap: usize) -> Result<Lattice, LatticeError> {
        let ideals = p.ideals(cap)?;
        let n = ideals.len();
        let by_label: HashMap<Mask, u32> = ideals
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();

        let (tables, covers_dn, covers_up) = if n <= TABLE_CAP {
            let mut join = vec![0u32; n * n];
            let mut meet = vec![0u32; n * n];
            for a in 0..n {
                for b in a..n {
                    let j = by_label[&ideals[a].union(ideals[b])];
                    let m = by_label[&ideals[a].intersection(ideals[b])];
                    join[a * n + b] = j;
                    join[b * n + a] = j;
                    meet[a * n + b] = m;
                    meet[b * n + a] = m;
                }
            }
            let mut dn: Vec<Vec<u32>> = vec![Vec::new(); n];
            let mut up: Vec<Vec<u32>> = vec![Vec::new(); n];
            for (i, &ideal) in ideals.iter().enumerate() {
                for x in 0..p.len() {
                    if !ideal.contains(x) && p.lower_neighbors(x).is_subset(ideal) {
                        let bigger = by_label[&ideal.with(x)] as usize;
                        up[i].push(bigger as u32);
                        dn[bigger].push(i as u32);
                    }
                }
            }
            for v in dn.iter_mut().chain(up.iter_mut()) {
                v.sort_unstable();
            }
            (Some(Tables { join, meet }), Some(dn), Some(up))
        } else {
            (None, None, None)
        };

        let rank = Some(ideals.iter().map(|m| m.len() as u32).collect());
        Ok(Lattice {
            n,
            labels: ideals,
            by_label,
            irreducibles: p.clone(),
            tables,
            covers_dn,
            covers_up,
            rank,
            distributive: true,
            bottom: 0,
            top: n - 1,
        })
    }

    /// The Boolean lattice of rank `r` (all subsets of an `r`-antichain).
    pub fn boolean(r: usize) -> Result<Lattice, LatticeError> {
        if r > 20 {
            return Err(LatticeError::TooLarge(r, 20));
        }
        Lattice::birkhoff_of(&Poset::antichain(r), 1 << 20)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Ground poset P of join-irreducibles, in its own indexing.
    pub fn irreducibles(&self) -> &Poset {
        &self.irreducibles
    }

    pub fn p_len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn label(&self, p: usize) -> Mask {
        self.labels[p]
    }

    pub fn labels(&self) -> &[Mask] {
        &self.labels
    }

    pub fn element_by_label(&self, label: Mask) -> Option<usize> {
        self.by_label.get(&label).map(|&i| i as usize)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive
    }

    /// Degree of an element: |ℓ(p)|.
    pub fn degree(&self, p: usize) -> usize {
        self.labels[p].len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.labels[a].is_subset(self.labels[b])
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.tables {
            return t.join[a * self.n + b] as usize;
        }
        debug_assert!(self.distributive);
        self.by_label[&self.labels[a].union(self.labels[b])] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.tables {
            return t.meet[a * self.n + b] as usize;
        }
        debug_assert!(self.distributive);
        self.by_label[&self.labels[a].intersection(self.labels[b])] as usize
    }

    /// Lower neighbors N(p), sorted.
    pub fn lower_neighbors(&self, p: usize) -> Vec<usize> {
        if let Some(dn) = &self.covers_dn {
            return dn[p].iter().map(|&x| x as usize).collect();
        }
        // label route: remove one maximal element of the ideal ℓ(p)
        let l = self.labels[p];
        let mut out: Vec<usize> = self
            .irreducibles
            .maximal_in(l)
            .iter()
            .map(|x| self.by_label[&l.without(x)] as usize)
            .collect();
        out.sort_unstable();
        out
    }

    /// Upper neighbors M(p), sorted.
    pub fn upper_neighbors(&self, p: usize) -> Vec<usize> {
        if let Some(up) = &self.covers_up {
            return up[p].iter().map(|&x| x as usize).collect();
        }
        let l = self.labels[p];
        let mut out = Vec::new();
        for x in 0..self.p_len() {
            if !l.contains(x) && self.irreducibles.lower_neighbors(x).is_subset(l) {
                out.push(self.by_label[&l.with(x)] as usize);
            }
        }
        out.sort_unstable();
        out
    }

    /// All covers (lower, upper), sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.n {
            for q in self.lower_neighbors(p) {
                out.push((q, p));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn rank_of(&self, p: usize) -> Option<usize> {
        self.rank.as_ref().map(|r| r[p] as usize)
    }

    pub fn is_graded(&self) -> bool {
        self.rank.is_some()
    }

    pub fn rank(&self) -> Option<usize> {
        self.rank.as_ref().map(|r| r[self.top] as usize)
    }

    /// Upper semimodularity via the cover condition: whenever a and b both
    /// cover a∧b, their join covers both. When the lattice is graded the
    /// rank inequality is evaluated as well and must agree.
    pub fn is_upper_semimodular(&self) -> bool {
        if self.distributive {
            return true;
        }
        let cover = |lo: usize, hi: usize| self.lower_neighbors(hi).contains(&lo);
        let by_covers = (0..self.n).all(|a| {
            (a + 1..self.n).all(|b| {
                let m = self.meet(a, b);
                if m != a && m != b && cover(m, a) && cover(m, b) {
                    let j = self.join(a, b);
                    cover(a, j) && cover(b, j)
                } else {
                    true
                }
            })
        });
        if let Some(rank) = &self.rank {
            let by_rank = (0..self.n).all(|a| {
                (0..self.n)
                    .all(|b| rank[a] + rank[b] >= rank[self.meet(a, b)] + rank[self.join(a, b)])
            });
            debug_assert_eq!(by_covers, by_rank, "semimodularity conditions disagree");
        }
        by_covers
    }

    /// The Birkhoff transform: the join-irreducible subposet P together with
    /// the canonical labels ℓ(p) = {q ∈ P : q ≤ p}.
    pub fn birkhoff(&self) -> (&Poset, &[Mask]) {
        (&self.irreducibles, &self.labels)
    }

    /// The dual lattice: same elements, reversed order, labels complemented
    /// over the dual of P.
    pub fn dual(&self) -> Result<Lattice, LatticeError> {
        if !self.distributive {
            return Err(LatticeError::NotDistributive);
        }
        let pn = self.p_len();
        let labels: Vec<Mask> = self.labels.iter().map(|l| l.complement_in(pn)).collect();
        let by_label: HashMap<Mask, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();
        let rank = self.rank.as_ref().map(|r| {
            let top = r[self.top];
            r.iter().map(|&x| top - x).collect()
        });
        Ok(Lattice {
            n: self.n,
            labels,
            by_label,
            irreducibles: self.irreducibles.dual(),
            tables: self.tables.as_ref().map(|t| Tables {
                join: t.meet.clone(),
                meet: t.join.clone(),
            }),
            covers_dn: self.covers_up.clone(),
            covers_up: self.covers_dn.clone(),
            rank,
            distributive: true,
            bottom: self.top,
            top: self.bottom,
        })
    }

    /// The dual lattice together with the isomorphism onto J(P̃) promised by
    /// the duality lemma: element q of the dual maps to the ideal P∖ℓ(q).
    pub fn dual_with_iso(&self, cap: usize) -> Result<(Lattice, Vec<usize>), LatticeError> {
        let dual = self.dual()?;
        let jp = Lattice::birkhoff_of(dual.irreducibles(), cap)?;
        let iso = (0..dual.len())
            .map(|q| {
                jp.element_by_label(dual.label(q))
                    .expect("dual labels are ideals of P̃")
            })
            .collect();
        Ok((jp, iso))
    }

    /// Whether the subset is closed under intervals.
    pub fn is_segment(&self, members: &ElemSet) -> bool {
        assert_eq!(members.universe_len(), self.n);
        for r in 0..self.n {
            if members.contains(r) {
                continue;
            }
            let below = members.iter().any(|p| self.leq(p, r));
            if !below {
                continue;
            }
            let above = members.iter().any(|q| self.leq(r, q));
            if above {
                return false;
            }
        }
        true
    }

    /// The minimal poset ideal I = ↓S and coideal J = ↑S with S = I ∩ J.
    pub fn segment_hull(&self, members: &ElemSet) -> Result<(ElemSet, ElemSet), LatticeError> {
        if !self.is_segment(members) {
            return Err(LatticeError::NotASegment);
        }
        let mut down = ElemSet::new(self.n);
        let mut up = ElemSet::new(self.n);
        for r in 0..self.n {
            if members.iter().any(|p| self.leq(r, p)) {
                down.insert(r);
            }
            if members.iter().any(|p| self.leq(p, r)) {
                up.insert(r);
            }
        }
        debug_assert_eq!(down.intersection(&up), members.clone());
        Ok((down, up))
    }

    /// Whether a subset is a poset ideal of the lattice's element order.
    pub fn is_element_ideal(&self, members: &ElemSet) -> bool {
        assert_eq!(members.universe_len(), self.n);
        members
            .iter()
            .all(|p| (0..self.n).all(|q| !self.leq(q, p) || members.contains(q)))
    }

    pub fn is_element_coideal(&self, members: &ElemSet) -> bool {
        assert_eq!(members.universe_len(), self.n);
        members
            .iter()
            .all(|p| (0..self.n).all(|q| !self.leq(p, q) || members.contains(q)))
    }

    /// The rank band L_{i,j} = {p : i ≤ rank p ≤ j}, with the witness pair
    /// I = {rank ≤ j}, J = {rank ≥ i}.
    pub fn rank_band(&self, i: usize, j: usize) -> Result<RankBand, LatticeError> {
        let rank = self.rank.as_ref().ok_or(LatticeError::NotGraded)?;
        let r = rank[self.top] as usize;
        if i > j || j > r {
            return Err(LatticeError::BadRange { i, j, rank: r });
        }
        let mut members = ElemSet::new(self.n);
        let mut ideal = ElemSet::new(self.n);
        let mut coideal = ElemSet::new(self.n);
        for (p, &rank_p) in rank.iter().enumerate() {
            let rp = rank_p as usize;
            if rp <= j {
                ideal.insert(p);
            }
            if rp >= i {
                coideal.insert(p);
            }
            if i <= rp && rp <= j {
                members.insert(p);
            }
        }
        Ok(RankBand {
            members,
            ideal,
            coideal,
        })
    }

    /// All elements as a subset.
    pub fn all_elements(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    /// Whether L is a Boolean lattice (P an antichain).
    pub fn is_boolean(&self) -> bool {
        self.distributive && self.irreducibles.covers().is_empty()
    }

    /// The planarity surrogate used by the band corollary: every element
    /// has at most two lower neighbors.
    pub fn at_most_two_lower_neighbors(&self) -> bool {
        (0..self.n).all(|p| self.lower_neighbors(p).len() <= 2)
    }

    /// Elements of the interval [a, b] in the element order.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&c| self.leq(a, c) && self.leq(c, b))
            .collect()
    }
}

/// A rank band together with its witness (ideal, coideal) pair.
#[derive(Debug, Clone)]
pub struct RankBand {
    pub members: ElemSet,
    pub ideal: ElemSet,
    pub coideal: ElemSet,
}

fn unique_extremum(order: &Poset, candidates: Mask, least: bool) -> Option<usize> {
    let picked = if least {
        order.minimal_in(candidates)
    } else {
        order.maximal_in(candidates)
    };
    if picked.len() == 1 {
        picked.min_elem()
    } else {
        None
    }
}

/// Enumerate the distinct segments of a lattice as intersections of element
/// ideals with element coideals (including the empty segment). Intended for
/// desk-scale sweeps; refuses lattices beyond the cap.
pub fn enumerate_segments(lattice: &Lattice, cap: usize) -> Result<Vec<ElemSet>, LatticeError> {
    let n = lattice.len();
    if n > 64 {
        return Err(LatticeError::TooLarge(n, 64));
    }
    // ideals of the element order, via the same BFS as poset ideals
    let order = element_order(lattice)?;
    let ideals = order.ideals(cap)?;
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out: Vec<ElemSet> = Vec::new();
    for &i in &ideals {
        for &jc in &ideals {
            // coideal = complement of an ideal
            let j = jc.complement_in(n);
            let s = i.intersection(j);
            let set = ElemSet::from_iter(n, s.iter());
            let key: Vec<u64> = set.iter().map(|x| x as u64).collect();
            if seen.insert(key) {
                out.push(set);
            }
        }
    }
    out.sort_unstable_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
    Ok(out)
}

/// The element order of a lattice as a plain poset (n ≤ 64).
pub fn element_order(lattice: &Lattice) -> Result<Poset, LatticeError> {
    let n = lattice.len();
    if n > 64 {
        return Err(LatticeError::TooLarge(n, 64));
    }
    let mut covers = Vec::new();
    for p in 0..n {
        for q in lattice.lower_neighbors(p) {
            covers.push((q, p));
        }
    }
    Ok(Poset::new(n, &covers)?)
}
