//! Finite posets: cover relations, reachability, ideals and coideals, rank
//! structure, duality, irreducible elements.
//!
//! Elements are dense integers `0..n` with `n ≤ 64`; display names live in an
//! optional side table kept by the I/O layer. All values are immutable after
//! construction and every operation is a pure function.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bits::Mask;

/// Errors from poset construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("poset supports at most 64 elements, got {0}")]
    TooManyElements(usize),
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("cover relation contains a cycle")]
    CycleDetected,
    #[error("edge {lower} < {upper} is not a cover: {lower} < {via} < {upper}")]
    NotHasse {
        lower: usize,
        upper: usize,
        via: usize,
    },
    #[error("{a} and {b} are not comparable")]
    NotComparable { a: usize, b: usize },
    #[error("subset is not a poset {0}")]
    NotAnIdeal(&'static str),
    #[error("ideal enumeration would exceed the cap of {cap}")]
    TooManyIdeals { cap: usize },
}

/// Whether a subset is tested as a downward-closed ideal or an upward-closed
/// coideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    Ideal,
    Coideal,
}

/// A finite poset given by its Hasse diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    lower: Vec<Mask>,
    upper: Vec<Mask>,
    /// `up_set[a]` = all b with a ≤ b (reflexive).
    up_set: Vec<Mask>,
    /// `down_set[a]` = all b with b ≤ a (reflexive).
    down_set: Vec<Mask>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers)
    }
}

impl Poset {
    /// Builds a poset from cover pairs `(a, b)` meaning `b` covers `a`.
    ///
    /// Rejects cycles and edges that are not covers (an implied shortcut is
    /// reported through [`PosetError::NotHasse`]).
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Poset, PosetError> {
        if n > 64 {
            return Err(PosetError::TooManyElements(n));
        }
        let mut lower = vec![Mask::EMPTY; n];
        let mut upper = vec![Mask::EMPTY; n];
        let mut cover_list: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in covers {
            if a >= n {
                return Err(PosetError::ElementOutOfRange(a));
            }
            if b >= n {
                return Err(PosetError::ElementOutOfRange(b));
            }
            if a == b {
                return Err(PosetError::CycleDetected);
            }
            if !upper[a].contains(b) {
                upper[a].insert(b);
                lower[b].insert(a);
                cover_list.push((a, b));
            }
        }
        cover_list.sort_unstable();

        // Kahn topological order; a leftover element means a cycle.
        let mut indeg: Vec<usize> = (0..n).map(|v| lower[v].len()).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            topo.push(v);
            for w in upper[v].iter() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if topo.len() != n {
            return Err(PosetError::CycleDetected);
        }

        let mut up_set = vec![Mask::EMPTY; n];
        for &v in topo.iter().rev() {
            let mut acc = Mask::singleton(v);
            for w in upper[v].iter() {
                acc = acc.union(up_set[w]);
            }
            up_set[v] = acc;
        }
        let mut down_set = vec![Mask::EMPTY; n];
        for &v in topo.iter() {
            let mut acc = Mask::singleton(v);
            for w in lower[v].iter() {
                acc = acc.union(down_set[w]);
            }
            down_set[v] = acc;
        }

        // Hasse condition: no cover may be implied by a longer chain.
        for &(a, b) in &cover_list {
            for c in upper[a].iter() {
                if c != b && up_set[c].contains(b) {
                    return Err(PosetError::NotHasse {
                        lower: a,
                        upper: b,
                        via: c,
                    });
                }
            }
        }

        Ok(Poset {
            n,
            covers: cover_list,
            lower,
            upper,
            up_set,
            down_set,
        })
    }

    /// Builds a poset from an arbitrary strict-order relation, deriving the
    /// Hasse diagram itself. `less` pairs are `(a, b)` with `a < b`.
    pub fn from_relation(n: usize, less: &[(usize, usize)]) -> Result<Poset, PosetError> {
        if n > 64 {
            return Err(PosetError::TooManyElements(n));
        }
        let mut lt = vec![Mask::EMPTY; n];
        for &(a, b) in less {
            if a >= n {
                return Err(PosetError::ElementOutOfRange(a));
            }
            if b >= n {
                return Err(PosetError::ElementOutOfRange(b));
            }
            lt[a].insert(b);
        }
        // transitive closure, then keep only covers
        loop {
            let mut changed = false;
            #[allow(clippy::needless_range_loop)]
            for a in 0..n {
                let mut acc = lt[a];
                for b in acc.iter() {
                    acc = acc.union(lt[b]);
                }
                if acc != lt[a] {
                    lt[a] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for (a, &row) in lt.iter().enumerate() {
            if row.contains(a) {
                return Err(PosetError::CycleDetected);
            }
        }
        let mut covers = Vec::new();
        for a in 0..n {
            for b in lt[a].iter() {
                let between = lt[a].iter().any(|c| c != b && lt[c].contains(b));
                if !between {
                    covers.push((a, b));
                }
            }
        }
        Poset::new(n, &covers)
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(n, &covers).expect("chain is a valid poset")
    }

    /// The antichain on `n` elements.
    pub fn antichain(n: usize) -> Poset {
        Poset::new(n, &[]).expect("antichain is a valid poset")
    }

    /// The Boolean poset of all subsets of `{0..r}` ordered by inclusion,
    /// with element `i` standing for the subset with bit pattern `i`.
    pub fn boolean(r: usize) -> Poset {
        assert!(r <= 6, "boolean poset as a Poset is capped at 2^6 elements");
        let n = 1usize << r;
        let mut covers = Vec::new();
        for s in 0..n {
            for b in 0..r {
                if s >> b & 1 == 0 {
                    covers.push((s, s | 1 << b));
                }
            }
        }
        Poset::new(n, &covers).expect("boolean poset is valid")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up_set[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn up_set(&self, a: usize) -> Mask {
        self.up_set[a]
    }

    pub fn down_set(&self, a: usize) -> Mask {
        self.down_set[a]
    }

    /// The interval `[a, b] = {c : a ≤ c ≤ b}`.
    pub fn interval(&self, a: usize, b: usize) -> Result<Mask, PosetError> {
        if !self.leq(a, b) {
            return Err(PosetError::NotComparable { a, b });
        }
        Ok(self.up_set[a].intersection(self.down_set[b]))
    }

    /// Lower and upper neighbors (covers into and out of `a`).
    pub fn neighbors(&self, a: usize) -> (Mask, Mask) {
        (self.lower[a], self.upper[a])
    }

    pub fn lower_neighbors(&self, a: usize) -> Mask {
        self.lower[a]
    }

    pub fn upper_neighbors(&self, a: usize) -> Mask {
        self.upper[a]
    }

    /// Elements with exactly one lower neighbor.
    pub fn join_irreducibles(&self) -> Mask {
        Mask::from_iter((0..self.n).filter(|&v| self.lower[v].len() == 1))
    }

    /// Elements with exactly one upper neighbor.
    pub fn meet_irreducibles(&self) -> Mask {
        Mask::from_iter((0..self.n).filter(|&v| self.upper[v].len() == 1))
    }

    /// The subposet induced on `members`, together with the map from new
    /// indices back to elements of `self`.
    pub fn induced(&self, members: Mask) -> (Poset, Vec<usize>) {
        let back: Vec<usize> = members.iter().collect();
        let idx: HashMap<usize, usize> = back
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let mut less = Vec::new();
        for (new_a, &a) in back.iter().enumerate() {
            for b in self.up_set[a].intersection(members).iter() {
                if b != a {
                    less.push((new_a, idx[&b]));
                }
            }
        }
        let sub = Poset::from_relation(back.len(), &less).expect("induced order is valid");
        (sub, back)
    }

    /// Rank function when all maximal chains have equal length, else `None`.
    pub fn rank_function(&self) -> Option<Vec<u32>> {
        if self.n == 0 {
            return Some(Vec::new());
        }
        let mut rank = vec![u32::MAX; self.n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for (v, low) in self.lower.iter().enumerate() {
            if low.is_empty() {
                rank[v] = 0;
                queue.push_back(v);
            }
        }
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for w in self.upper[v].iter() {
                let want = rank[v] + 1;
                if rank[w] == u32::MAX {
                    // only settle w once all lower covers are ranked consistently
                    let ok = self.lower[w]
                        .iter()
                        .all(|u| rank[u] != u32::MAX && rank[u] + 1 == want);
                    if ok {
                        rank[w] = want;
                        queue.push_back(w);
                    }
                } else if rank[w] != want {
                    return None;
                }
            }
        }
        if seen != self.n || rank.contains(&u32::MAX) {
            return None;
        }
        let top: HashSet<u32> = (0..self.n)
            .filter(|&v| self.upper[v].is_empty())
            .map(|v| rank[v])
            .collect();
        if top.len() > 1 {
            return None;
        }
        Some(rank)
    }

    /// Same elements, reversed covers.
    pub fn dual(&self) -> Poset {
        let covers: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::new(self.n, &covers).expect("dual of a poset is a poset")
    }

    pub fn is_ideal(&self, s: Mask) -> bool {
        s.iter().all(|v| self.down_set[v].is_subset(s))
    }

    pub fn is_coideal(&self, s: Mask) -> bool {
        s.iter().all(|v| self.up_set[v].is_subset(s))
    }

    /// Downward closure of `s`.
    pub fn down_closure(&self, s: Mask) -> Mask {
        s.iter()
            .fold(Mask::EMPTY, |acc, v| acc.union(self.down_set[v]))
    }

    /// Upward closure of `s`.
    pub fn up_closure(&self, s: Mask) -> Mask {
        s.iter()
            .fold(Mask::EMPTY, |acc, v| acc.union(self.up_set[v]))
    }

    pub fn maximal_in(&self, s: Mask) -> Mask {
        Mask::from_iter(
            s.iter()
                .filter(|&v| self.up_set[v].intersection(s) == Mask::singleton(v)),
        )
    }

    pub fn minimal_in(&self, s: Mask) -> Mask {
        Mask::from_iter(
            s.iter()
                .filter(|&v| self.down_set[v].intersection(s) == Mask::singleton(v)),
        )
    }

    /// Generators of an ideal (its maximal elements) or coideal (minimal).
    pub fn ideal_generators(&self, s: Mask, mode: ClosureMode) -> Result<Mask, PosetError> {
        match mode {
            ClosureMode::Ideal => {
                if !self.is_ideal(s) {
                    return Err(PosetError::NotAnIdeal("ideal"));
                }
                Ok(self.maximal_in(s))
            }
            ClosureMode::Coideal => {
                if !self.is_coideal(s) {
                    return Err(PosetError::NotAnIdeal("coideal"));
                }
                Ok(self.minimal_in(s))
            }
        }
    }

    /// All poset ideals, sorted by cardinality then bit pattern.
    ///
    /// Enumerates by breadth-first search over the ideal lattice, adding one
    /// available element at a time; refuses past `cap` ideals.
    pub fn ideals(&self, cap: usize) -> Result<Vec<Mask>, PosetError> {
        let mut seen: HashSet<Mask> = HashSet::new();
        let mut queue: VecDeque<Mask> = VecDeque::new();
        seen.insert(Mask::EMPTY);
        queue.push_back(Mask::EMPTY);
        while let Some(ideal) = queue.pop_front() {
            for v in 0..self.n {
                if !ideal.contains(v) && self.lower[v].is_subset(ideal) {
                    let next = ideal.with(v);
                    if seen.insert(next) {
                        if seen.len() > cap {
                            return Err(PosetError::TooManyIdeals { cap });
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut out: Vec<Mask> = seen.into_iter().collect();
        out.sort_unstable_by_key(|m| (m.len(), m.0));
        Ok(out)
    }

    /// Number of poset ideals, computed by the antichain recursion
    /// `N(P) = N(P ∖ ↑x) + N(P ∖ ↓x)`, saturating at `cap`.
    ///
    /// Independent of [`Poset::ideals`]; used as a cross-check and by the
    /// distributivity test, which only needs counts up to `|L| + 1`.
    pub fn count_ideals(&self, cap: usize) -> usize {
        fn go(p: &Poset, avail: Mask, cap: usize, memo: &mut HashMap<Mask, usize>) -> usize {
            if avail.is_empty() {
                return 1;
            }
            if let Some(&c) = memo.get(&avail) {
                return c;
            }
            let x = avail.min_elem().unwrap();
            let without = go(p, avail.minus(p.up_set[x]), cap, memo);
            let with = go(p, avail.minus(p.down_set[x]), cap, memo);
            let total = without.saturating_add(with).min(cap);
            memo.insert(avail, total);
            total
        }
        go(self, Mask::full(self.n), cap, &mut HashMap::new())
    }

    /// Canonical key for isomorphism testing: the lexicographically least
    /// strict-order bit matrix over relabelings. Permutations are restricted
    /// by a degree/height invariant to prune the search; adequate for the
    /// sizes used here (n ≤ 10).
    pub fn canonical_key(&self) -> (usize, u128) {
        assert!(self.n <= 10, "canonical form implemented for n ≤ 10");
        let invariant: Vec<(usize, usize, usize, usize)> = (0..self.n)
            .map(|v| {
                (
                    self.down_set[v].len(),
                    self.up_set[v].len(),
                    self.lower[v].len(),
                    self.upper[v].len(),
                )
            })
            .collect();
        // positions are filled in a fixed invariant order; a candidate must
        // carry the invariant expected at its position
        let mut slot_inv: Vec<(usize, usize, usize, usize)> = invariant.clone();
        slot_inv.sort_unstable();

        let n = self.n;
        let mut best = u128::MAX;
        let mut perm: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];

        fn search(
            p: &Poset,
            slot_inv: &[(usize, usize, usize, usize)],
            invariant: &[(usize, usize, usize, usize)],
            perm: &mut Vec<usize>,
            used: &mut [bool],
            best: &mut u128,
        ) {
            let n = p.n;
            if perm.len() == n {
                let mut key = 0u128;
                for (na, &a) in perm.iter().enumerate() {
                    for (nb, &b) in perm.iter().enumerate() {
                        if a != b && p.leq(a, b) {
                            key |= 1u128 << (na * n + nb);
                        }
                    }
                }
                if key < *best {
                    *best = key;
                }
                return;
            }
            let slot = perm.len();
            for v in 0..n {
                if !used[v] && invariant[v] == slot_inv[slot] {
                    used[v] = true;
                    perm.push(v);
                    search(p, slot_inv, invariant, perm, used, best);
                    perm.pop();
                    used[v] = false;
                }
            }
        }
        search(self, &slot_inv, &invariant, &mut perm, &mut used, &mut best);
        (self.n, best)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.n == other.n && self.canonical_key() == other.canonical_key()
    }
}
