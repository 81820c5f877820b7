//! Squarefree monomial algebra over a declared variable set: Hibi ideals of
//! lattice subsets, ideal arithmetic, and the linear-quotients search.
//!
//! A squarefree monomial is a [`Mask`] over the variable indices. For Hibi
//! ideals the variable set is the 2|P| variables {x_p, y_p}: x_p has index p
//! and y_p has index |P| + p, so that u_q = x_{ℓ(q)} · y_{P∖ℓ(q)} is the
//! label mask joined with the shifted complement mask.

use std::collections::HashSet;
use std::sync::Arc;

use crate::bits::{ElemSet, Mask};
use crate::lattice::Lattice;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonomialError {
    #[error("ideals live over different ground sets")]
    GroundSetMismatch,
    #[error("generators are not all of the same degree")]
    NotEquigenerated,
    #[error("{got} generators exceed the cap of {cap}")]
    TooManyGenerators { got: usize, cap: usize },
    #[error("support of {got} variables exceeds the cap of {cap}")]
    SupportTooLarge { got: usize, cap: usize },
    #[error("the unit monomial generates the whole ring")]
    UnitGenerator,
}

/// A named variable ground set, optionally split into x/y pairs over P.
#[derive(Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
    /// `Some(p)` when variables 0..p are x_0..x_{p-1} and p..2p are y_0..y_{p-1}.
    xy_split: Option<usize>,
}

impl std::fmt::Debug for VarSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VarSet({})", self.names.join(","))
    }
}

impl VarSet {
    /// Plain variables with the given names.
    pub fn plain(names: Vec<String>) -> VarSet {
        assert!(names.len() <= 64);
        VarSet {
            names: Arc::new(names),
            xy_split: None,
        }
    }

    /// Variables named `x1..xn` (1-based), the usual vertex variables.
    pub fn numbered(n: usize) -> VarSet {
        VarSet::plain((1..=n).map(|i| format!("x{i}")).collect())
    }

    /// The 2p Hibi variables `x1..xp, y1..yp`.
    pub fn hibi(p: usize) -> VarSet {
        assert!(2 * p <= 64);
        let names = (1..=p)
            .map(|i| format!("x{i}"))
            .chain((1..=p).map(|i| format!("y{i}")))
            .collect();
        VarSet {
            names: Arc::new(names),
            xy_split: Some(p),
        }
    }

    /// Hibi variables with custom names, x-variables first.
    pub fn hibi_named(x_names: Vec<String>, y_names: Vec<String>) -> VarSet {
        assert_eq!(x_names.len(), y_names.len());
        let p = x_names.len();
        assert!(2 * p <= 64);
        let names = x_names.into_iter().chain(y_names).collect();
        VarSet {
            names: Arc::new(names),
            xy_split: Some(p),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn xy_split(&self) -> Option<usize> {
        self.xy_split
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Renders a monomial; single-character names concatenate compactly.
    pub fn monomial_string(&self, m: Mask) -> String {
        if m.is_empty() {
            return "1".to_string();
        }
        let compact = self.names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = m.iter().map(|i| self.name(i)).collect();
        if compact {
            parts.concat()
        } else {
            parts.join("*")
        }
    }

    /// Swaps the x- and y-halves of a monomial.
    pub fn involution(&self, m: Mask) -> Mask {
        let p = self.xy_split.expect("involution needs an x/y split");
        let xs = m.intersection(Mask::full(p));
        let ys = m.minus(Mask::full(p));
        Mask(ys.0 >> p | xs.0 << p)
    }
}

pub fn lcm(u: Mask, v: Mask) -> Mask {
    u.union(v)
}

pub fn gcd(u: Mask, v: Mask) -> Mask {
    u.intersection(v)
}

pub fn divides(u: Mask, v: Mask) -> bool {
    u.is_subset(v)
}

pub fn degree(u: Mask) -> usize {
    u.len()
}

/// Prunes a generator list to the minimal (divisibility-antichain) set,
/// sorted canonically.
pub fn minimalize(gens: &[Mask]) -> Vec<Mask> {
    let mut uniq: Vec<Mask> = gens.to_vec();
    uniq.sort_unstable_by_key(|m| (m.len(), m.0));
    uniq.dedup();
    let mut out: Vec<Mask> = Vec::new();
    for &g in &uniq {
        if !out.iter().any(|&m| m.is_subset(g)) {
            out.push(g);
        }
    }
    out.sort_unstable_by_key(|m| (m.len(), m.0));
    out
}

/// A squarefree monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: VarSet,
    gens: Vec<Mask>,
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.gens
                .iter()
                .map(|&g| self.vars.monomial_string(g))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

impl MonomialIdeal {
    pub fn new(vars: VarSet, gens: &[Mask]) -> MonomialIdeal {
        MonomialIdeal {
            vars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(vars: VarSet) -> MonomialIdeal {
        MonomialIdeal {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn gens(&self) -> &[Mask] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&Mask::EMPTY)
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.gens.iter().any(|&g| g.is_subset(m))
    }

    /// Common degree of the generators, when they are equigenerated.
    pub fn generated_in_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.len();
        self.gens.iter().all(|g| g.len() == d).then_some(d)
    }

    /// Union of the generator supports.
    pub fn support(&self) -> Mask {
        self.gens.iter().fold(Mask::EMPTY, |acc, &g| acc.union(g))
    }

    fn check_same_ground(&self, other: &MonomialIdeal) -> Result<(), MonomialError> {
        if self.vars != other.vars {
            return Err(MonomialError::GroundSetMismatch);
        }
        Ok(())
    }

    /// Intersection, by pairwise lcm and pruning.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, MonomialError> {
        self.check_same_ground(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &a in &self.gens {
            for &b in &other.gens {
                gens.push(lcm(a, b));
            }
        }
        Ok(MonomialIdeal::new(self.vars.clone(), &gens))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, MonomialError> {
        self.check_same_ground(other)?;
        let gens: Vec<Mask> = self.gens.iter().chain(&other.gens).copied().collect();
        Ok(MonomialIdeal::new(self.vars.clone(), &gens))
    }

    /// Image under the x ↔ y involution.
    pub fn involution(&self) -> MonomialIdeal {
        let gens: Vec<Mask> = self.gens.iter().map(|&g| self.vars.involution(g)).collect();
        MonomialIdeal::new(self.vars.clone(), &gens)
    }
}

/// The Hibi generator u_q = x_{ℓ(q)} · y_{P∖ℓ(q)}.
pub fn hibi_generator(lattice: &Lattice, q: usize) -> Mask {
    let p = lattice.p_len();
    let l = lattice.label(q);
    let ys = l.complement_in(p);
    Mask(l.0 | ys.0 << p)
}

/// The Hibi ideal H_S = (u_q : q ∈ S) of a lattice subset.
///
/// The empty subset yields the zero ideal, which callers can detect with
/// [`MonomialIdeal::is_zero`].
pub fn hibi_ideal(lattice: &Lattice, members: &ElemSet) -> MonomialIdeal {
    hibi_ideal_named(lattice, members, VarSet::hibi(lattice.p_len()))
}

/// Hibi ideal over a caller-provided x/y variable set.
pub fn hibi_ideal_named(lattice: &Lattice, members: &ElemSet, vars: VarSet) -> MonomialIdeal {
    assert_eq!(vars.xy_split(), Some(lattice.p_len()));
    let gens: Vec<Mask> = members.iter().map(|q| hibi_generator(lattice, q)).collect();
    MonomialIdeal::new(vars, &gens)
}

/// Outcome of the linear-quotients search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearQuotients {
    /// An admissible order of generator indices.
    Found(Vec<usize>),
    /// Exhaustive search proved no admissible order exists.
    NotFound,
    /// The generator count exceeds the exhaustive cap and the heuristic
    /// search found nothing.
    Unknown,
}

/// Generator count up to which a failed search is a proof of absence.
pub const LINEAR_QUOTIENTS_EXHAUSTIVE_CAP: usize = 12;

/// Searches for an order witnessing linear quotients.
///
/// Only equigenerated ideals are accepted. Depth-first over orderings with
/// the colon-variable test as pruning; visited dead prefixes are memoized as
/// sets, so the search is exponential in the generator count but never
/// revisits a prefix set.
pub fn has_linear_quotients(ideal: &MonomialIdeal) -> Result<LinearQuotients, MonomialError> {
    let gens = ideal.gens();
    if gens.len() <= 1 {
        return Ok(LinearQuotients::Found((0..gens.len()).collect()));
    }
    if ideal.generated_in_degree().is_none() {
        return Err(MonomialError::NotEquigenerated);
    }
    let g = gens.len();
    assert!(g <= 64);

    // can `cand` extend the prefix set? for every j in the set some k in the
    // set must have u_k / gcd(u_k, u_cand) a single variable dividing u_j
    let admissible = |set: Mask, cand: usize| -> bool {
        let mut colon_vars = Mask::EMPTY;
        for k in set.iter() {
            let diff = gens[k].minus(gens[cand]);
            if diff.len() == 1 {
                colon_vars = colon_vars.union(diff);
            }
        }
        set.iter().all(|j| gens[j].intersects(colon_vars))
    };

    let mut dead: HashSet<Mask> = HashSet::new();
    let mut order: Vec<usize> = Vec::with_capacity(g);
    let mut budget: u64 = if g <= LINEAR_QUOTIENTS_EXHAUSTIVE_CAP {
        u64::MAX
    } else {
        2_000_000
    };

    fn dfs(
        g: usize,
        admissible: &dyn Fn(Mask, usize) -> bool,
        set: Mask,
        order: &mut Vec<usize>,
        dead: &mut HashSet<Mask>,
        budget: &mut u64,
    ) -> bool {
        if order.len() == g {
            return true;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        for cand in 0..g {
            if set.contains(cand) {
                continue;
            }
            if set.is_empty() || admissible(set, cand) {
                let next = set.with(cand);
                if dead.contains(&next) {
                    continue;
                }
                order.push(cand);
                if dfs(g, admissible, next, order, dead, budget) {
                    return true;
                }
                order.pop();
                dead.insert(next);
            }
        }
        false
    }

    let found = dfs(
        g,
        &admissible,
        Mask::EMPTY,
        &mut order,
        &mut dead,
        &mut budget,
    );
    if found {
        Ok(LinearQuotients::Found(order))
    } else if g <= LINEAR_QUOTIENTS_EXHAUSTIVE_CAP {
        Ok(LinearQuotients::NotFound)
    } else {
        Ok(LinearQuotients::Unknown)
    }
}

/// Checks a specific generator order for the linear-quotient condition.
pub fn is_linear_quotient_order(ideal: &MonomialIdeal, order: &[usize]) -> bool {
    let gens = ideal.gens();
    if order.len() != gens.len() {
        return false;
    }
    for i in 1..order.len() {
        let cand = order[i];
        for &j in &order[..i] {
            let ok = order[..i].iter().any(|&k| {
                let diff = gens[k].minus(gens[cand]);
                diff.len() == 1 && diff.is_subset(gens[j])
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::test_fixtures::figure_lattice;
    use crate::lattice::DEFAULT_IDEAL_CAP;

    fn b(r: usize) -> Lattice {
        Lattice::boolean(r).unwrap()
    }

    #[test]
    fn hibi_generator_on_b3() {
        let b3 = b(3);
        // the element {1} of B_3 is the atom with label {0}
        let atom = b3.element_by_label(Mask::singleton(0)).unwrap();
        let u = hibi_generator(&b3, atom);
        let vars = VarSet::hibi(3);
        assert_eq!(vars.monomial_string(u), "x1*y2*y3");
        assert_eq!(degree(u), 3);
    }

    #[test]
    fn figure_segment_generators_match_published_lists() {
        let l = figure_lattice();
        let vars = VarSet::hibi_named(
            ["a", "b", "c", "d"].map(String::from).to_vec(),
            ["u", "v", "w", "x"].map(String::from).to_vec(),
        );
        let mut s = ElemSet::full(10);
        s.remove(l.bottom());
        s.remove(l.top());
        let h = hibi_ideal_named(&l, &s, vars.clone());
        let got: HashSet<String> = h.gens().iter().map(|&g| vars.monomial_string(g)).collect();
        let want: HashSet<String> = [
            "avwx", "buwx", "cuvx", "abwx", "acvx", "bcux", "abcx", "bcdu",
        ]
        .map(String::from)
        .into();
        assert_eq!(got, want);
        assert!(h.gens().iter().all(|g| g.len() == 4));

        let b3 = b(3);
        let vars3 = VarSet::hibi_named(
            ["a", "b", "c"].map(String::from).to_vec(),
            ["u", "v", "w"].map(String::from).to_vec(),
        );
        let mut s2 = ElemSet::full(8);
        s2.remove(b3.bottom());
        s2.remove(b3.top());
        let h2 = hibi_ideal_named(&b3, &s2, vars3.clone());
        let got2: HashSet<String> = h2
            .gens()
            .iter()
            .map(|&g| vars3.monomial_string(g))
            .collect();
        let want2: HashSet<String> = ["avw", "buw", "cuv", "abw", "acv", "bcu"]
            .map(String::from)
            .into();
        assert_eq!(got2, want2);
    }

    #[test]
    fn empty_segment_yields_flagged_zero_ideal() {
        let b2 = b(2);
        let h = hibi_ideal(&b2, &ElemSet::new(4));
        assert!(h.is_zero());
        assert!(!h.is_unit());
    }

    #[test]
    fn lcm_gcd_divides() {
        let u = Mask::from_iter([0, 3]);
        let v = Mask::from_iter([1, 3]);
        assert_eq!(lcm(u, u), u);
        assert_eq!(gcd(u, u), u);
        assert_eq!(lcm(u, v), Mask::from_iter([0, 1, 3]));
        assert_eq!(gcd(u, v), Mask::singleton(3));
        assert!(divides(gcd(u, v), u));
        assert!(!divides(u, v));
    }

    #[test]
    fn lcm_collapse_lemma_instance_on_b3() {
        // lcm over (p = 1̂, S = N(1̂)) equals lcm over (r = 0̂, T = M(0̂))
        let b3 = b(3);
        let top = b3.top();
        let bottom = b3.bottom();
        let left = b3
            .lower_neighbors(top)
            .into_iter()
            .fold(hibi_generator(&b3, top), |acc, q| {
                lcm(acc, hibi_generator(&b3, q))
            });
        let right = b3
            .upper_neighbors(bottom)
            .into_iter()
            .fold(hibi_generator(&b3, bottom), |acc, s| {
                lcm(acc, hibi_generator(&b3, s))
            });
        assert_eq!(left, right);
        assert_eq!(left, Mask::full(6));
    }

    #[test]
    fn intersect_and_sum() {
        let b3 = b(3);
        let all = ElemSet::full(8);
        let h = hibi_ideal(&b3, &all);
        assert_eq!(h.intersect(&h).unwrap(), h);

        // H_I ∩ H_J = H_{I∩J} for I = B_3∖{1̂}, J = B_3∖{0̂}
        let mut i = ElemSet::full(8);
        i.remove(b3.top());
        let mut j = ElemSet::full(8);
        j.remove(b3.bottom());
        let hi = hibi_ideal(&b3, &i);
        let hj = hibi_ideal(&b3, &j);
        let hij = hibi_ideal(&b3, &i.intersection(&j));
        assert_eq!(hi.intersect(&hj).unwrap(), hij);

        // B_2 with I = {0̂}, J = {1̂}: single generator of degree 4 = 2r
        let b2 = b(2);
        let hi0 = hibi_ideal(&b2, &ElemSet::from_iter(4, [b2.bottom()]));
        let hj1 = hibi_ideal(&b2, &ElemSet::from_iter(4, [b2.top()]));
        let inter = hi0.intersect(&hj1).unwrap();
        assert_eq!(inter.gens(), &[Mask::full(4)]);
        assert_eq!(inter.gens()[0].len(), 4);

        let other = MonomialIdeal::new(VarSet::numbered(3), &[Mask::singleton(0)]);
        assert_eq!(hi0.intersect(&other), Err(MonomialError::GroundSetMismatch));
    }

    #[test]
    fn minimalization_prunes_multiples() {
        let gens = [
            Mask::from_iter([0, 1]),
            Mask::from_iter([0, 1, 2]),
            Mask::from_iter([2]),
            Mask::from_iter([2, 3]),
        ];
        assert_eq!(
            minimalize(&gens),
            vec![Mask::singleton(2), Mask::from_iter([0, 1])]
        );
    }

    #[test]
    fn linear_quotients_of_small_hibi_ideals() {
        // single generator: trivially yes
        let single = MonomialIdeal::new(VarSet::numbered(3), &[Mask::from_iter([0, 1])]);
        assert_eq!(
            has_linear_quotients(&single).unwrap(),
            LinearQuotients::Found(vec![0])
        );

        // H_{B_2}: linear quotients exist (distributive lattice)
        let b2 = b(2);
        let h = hibi_ideal(&b2, &ElemSet::full(4));
        match has_linear_quotients(&h).unwrap() {
            LinearQuotients::Found(order) => assert!(is_linear_quotient_order(&h, &order)),
            other => panic!("expected an order, got {other:?}"),
        }

        // mixed degrees are rejected
        let mixed = MonomialIdeal::new(
            VarSet::numbered(3),
            &[Mask::singleton(0), Mask::from_iter([1, 2])],
        );
        assert_eq!(
            has_linear_quotients(&mixed),
            Err(MonomialError::NotEquigenerated)
        );
    }

    #[test]
    fn figure_prime_segment_has_no_linear_quotients() {
        let b3 = b(3);
        let mut s = ElemSet::full(8);
        s.remove(b3.bottom());
        s.remove(b3.top());
        let h = hibi_ideal(&b3, &s);
        assert_eq!(h.gens().len(), 6);
        assert_eq!(has_linear_quotients(&h).unwrap(), LinearQuotients::NotFound);
    }

    #[test]
    fn involution_swaps_duals() {
        // σ maps H_{L̃} to H_L
        let l = figure_lattice();
        let h = hibi_ideal(&l, &ElemSet::full(10));
        let dual = l.dual().unwrap();
        let h_dual = hibi_ideal(&dual, &ElemSet::full(10));
        assert_eq!(h_dual.involution(), h);
    }

    #[test]
    fn hibi_over_every_small_lattice_is_equigenerated() {
        for p in [
            crate::poset::Poset::antichain(3),
            crate::poset::Poset::chain(4),
            crate::poset::Poset::new(4, &[(1, 3), (2, 3)]).unwrap(),
        ] {
            let l = Lattice::birkhoff_of(&p, DEFAULT_IDEAL_CAP).unwrap();
            let h = hibi_ideal(&l, &ElemSet::full(l.len()));
            assert_eq!(h.generated_in_degree(), Some(p.len()));
            assert_eq!(h.gens().len(), l.len());
        }
    }
}
