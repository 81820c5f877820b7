//! Bit-set types backing all combinatorial data.
//!
//! [`Mask`] is a `u64`-backed subset of a ground set with at most 64 elements;
//! it represents poset subsets, ℓ-labels, squarefree monomials, simplicial
//! faces and generator index sets. [`ElemSet`] is a growable bit set used for
//! subsets of lattice element sets, which may exceed 64 elements.

/// A subset of `{0, .., 63}` stored as one machine word.
///
/// Ordering is by the raw word, which coincides with lexicographic order on
/// the reversed characteristic vector; everything downstream only relies on it
/// being a fixed total order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mask(pub u64);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Mask {
        assert!(n <= 64, "ground set capped at 64 elements");
        if n == 64 {
            Mask(!0)
        } else {
            Mask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Mask {
        debug_assert!(i < 64);
        Mask(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < 64);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < 64);
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Mask {
        let mut m = self;
        m.insert(i);
        m
    }

    pub fn without(self, i: usize) -> Mask {
        let mut m = self;
        m.remove(i);
        m
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn intersection(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn minus(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    pub fn complement_in(self, n: usize) -> Mask {
        Mask::full(n).minus(self)
    }

    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Mask) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// All subsets of `self`, in increasing raw-word order (∅ first, `self` last).
    pub fn subsets(self) -> Submasks {
        Submasks {
            of: self.0,
            cur: 0,
            done: false,
        }
    }
}

impl FromIterator<usize> for Mask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Mask {
        let mut m = Mask::EMPTY;
        for i in iter {
            m.insert(i);
        }
        m
    }
}

impl std::fmt::Debug for Mask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the elements of a [`Mask`], ascending.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Iterator over all submasks of a mask.
pub struct Submasks {
    of: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Submasks {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        if self.done {
            return None;
        }
        let out = Mask(self.cur);
        if self.cur == self.of {
            self.done = true;
        } else {
            // standard submask step: next subset in raw-word order
            self.cur = (self.cur.wrapping_sub(self.of)) & self.of;
        }
        Some(out)
    }
}

/// A subset of `{0, .., n-1}` for arbitrary `n`, used for lattice element sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemSet {
    n: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn new(n: usize) -> ElemSet {
        ElemSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> ElemSet {
        let mut s = ElemSet::new(n);
        for w in &mut s.words {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> ElemSet {
        let mut s = ElemSet::new(n);
        for i in iter {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let r = self.n % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    pub fn universe_len(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.n);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.n);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        assert_eq!(self.n, other.n);
        ElemSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        assert_eq!(self.n, other.n);
        ElemSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn minus(&self, other: &ElemSet) -> ElemSet {
        assert_eq!(self.n, other.n);
        ElemSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn complement(&self) -> ElemSet {
        let mut s = ElemSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| BitIter(w).map(move |i| k * 64 + i))
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
