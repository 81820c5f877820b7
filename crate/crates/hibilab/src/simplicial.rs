//! Simplicial complexes on a labeled vertex set: Stanley–Reisner
//! correspondence, Alexander duality, vertex covers, unmixedness, facet
//! ideals, and the Reisner Cohen–Macaulayness test.
//!
//! Degenerate-complex conventions (vertex set [n] throughout):
//!
//! | complex           | facet list | I_Δ           | Δ^∨              |
//! |-------------------|------------|---------------|------------------|
//! | void (no faces)   | `[]`       | (1)           | full simplex     |
//! | irrelevant `{∅}`  | `[∅]`      | (x_1,..,x_n)  | simplex boundary |
//! | full simplex      | `[[n]]`    | (0)           | void             |
//!
//! The void and irrelevant complexes are distinct values, and
//! `Δ^∨ = {[n]∖F : F ∉ Δ}` respects the table; `(Δ^∨)^∨ = Δ` holds for all
//! of them.

use crate::bits::Mask;
use crate::homology::{is_cone, reduced_betti, Field};
use crate::monomial::{minimalize, MonomialIdeal, VarSet};

/// Vertex-count cap for face enumeration (2^n scans).
pub const VERTEX_CAP: usize = 20;
/// Vertex-count cap for the Cohen–Macaulay check (homology of every link).
pub const CM_VERTEX_CAP: usize = 16;
/// Facet-count cap for vertex-cover enumeration without an override.
pub const COVER_FACET_CAP: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimplicialError {
    #[error("{got} vertices exceed the cap of {cap}")]
    TooManyVertices { got: usize, cap: usize },
    #[error("{got} facets exceed the cover-enumeration cap of {cap}; use the override")]
    TooManyFacets { got: usize, cap: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

/// A simplicial complex given by its facet list (maximal faces).
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Mask>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimplicialComplex(n={}, facets={:?})",
            self.n, self.facets
        )
    }
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; only maximal ones are kept.
    /// An empty list is the void complex; `[∅]` is the irrelevant complex.
    pub fn from_facets(n: usize, faces: &[Mask]) -> Result<SimplicialComplex, SimplicialError> {
        if n > VERTEX_CAP {
            return Err(SimplicialError::TooManyVertices {
                got: n,
                cap: VERTEX_CAP,
            });
        }
        for &f in faces {
            if let Some(v) = f.max_elem() {
                if v >= n {
                    return Err(SimplicialError::VertexOutOfRange(v));
                }
            }
        }
        let mut facets: Vec<Mask> = Vec::new();
        let mut sorted: Vec<Mask> = faces.to_vec();
        sorted.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
        for &f in &sorted {
            if !facets.iter().any(|&g| f.is_subset(g)) {
                facets.push(f);
            }
        }
        facets.sort_unstable_by_key(|f| (f.len(), f.0));
        Ok(SimplicialComplex { n, facets })
    }

    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(n: usize) -> SimplicialComplex {
        SimplicialComplex {
            n,
            facets: vec![Mask::EMPTY],
        }
    }

    pub fn full_simplex(n: usize) -> SimplicialComplex {
        SimplicialComplex {
            n,
            facets: vec![Mask::full(n)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `None` for the void complex, `-1` for the irrelevant one.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    pub fn is_face(&self, f: Mask) -> bool {
        self.facets.iter().any(|&g| f.is_subset(g))
    }

    /// Vertices appearing in some facet (isolated vertices of the ambient
    /// vertex set are exactly [n] minus this).
    pub fn support(&self) -> Mask {
        self.facets.iter().fold(Mask::EMPTY, |acc, &f| acc.union(f))
    }

    /// Every face, by closing the facets under subsets.
    pub fn faces(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = Vec::new();
        for &f in &self.facets {
            out.extend(f.subsets());
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The Stanley–Reisner ideal: minimal nonfaces as generators.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let vars = VarSet::numbered(self.n);
        if self.is_void() {
            // every subset is a nonface, the empty set is the minimal one
            return MonomialIdeal::new(vars, &[Mask::EMPTY]);
        }
        let mut gens: Vec<Mask> = Vec::new();
        for f in Mask::full(self.n).subsets() {
            if !self.is_face(f) && f.iter().all(|v| self.is_face(f.without(v))) {
                gens.push(f);
            }
        }
        MonomialIdeal::new(vars, &gens)
    }

    /// The Alexander dual Δ^∨ = {[n]∖F : F ∉ Δ}, computed facet-wise as
    /// complements of minimal nonfaces.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let nonfaces = self.stanley_reisner_ideal();
        let facets: Vec<Mask> = nonfaces
            .gens()
            .iter()
            .map(|&g| g.complement_in(self.n))
            .collect();
        SimplicialComplex::from_facets(self.n, &facets).expect("dual stays in range")
    }

    /// The facet ideal I(Δ) = (x_F : F a facet).
    pub fn facet_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(VarSet::numbered(self.n), &self.facets)
    }

    /// The complement complex Δ^c = ⟨F^c : F a facet⟩.
    pub fn complement_complex(&self) -> SimplicialComplex {
        let facets: Vec<Mask> = self
            .facets
            .iter()
            .map(|&f| f.complement_in(self.n))
            .collect();
        SimplicialComplex::from_facets(self.n, &facets).expect("complement stays in range")
    }

    /// All inclusion-minimal vertex covers, refusing large facet lists.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<Mask>, SimplicialError> {
        if self.facets.len() > COVER_FACET_CAP {
            return Err(SimplicialError::TooManyFacets {
                got: self.facets.len(),
                cap: COVER_FACET_CAP,
            });
        }
        Ok(self.minimal_vertex_covers_unchecked())
    }

    /// Minimal vertex covers without the facet cap (exhaustive over 2^n).
    pub fn minimal_vertex_covers_unchecked(&self) -> Vec<Mask> {
        if self.facets.iter().any(|f| f.is_empty()) {
            // the empty facet cannot be hit
            return Vec::new();
        }
        if self.facets.is_empty() {
            return vec![Mask::EMPTY];
        }
        let mut covers: Vec<Mask> = Mask::full(self.n)
            .subsets()
            .filter(|&c| self.facets.iter().all(|&f| f.intersects(c)))
            .collect();
        covers.sort_unstable_by_key(|c| (c.len(), c.0));
        let mut minimal: Vec<Mask> = Vec::new();
        for &c in &covers {
            if !minimal.iter().any(|&m| m.is_subset(c)) {
                minimal.push(c);
            }
        }
        minimal
    }

    /// Whether all minimal vertex covers share one cardinality.
    pub fn is_unmixed(&self) -> Result<bool, SimplicialError> {
        let covers = self.minimal_vertex_covers()?;
        Ok(covers.windows(2).all(|w| w[0].len() == w[1].len()))
    }

    /// The link of a face: {G : G ∩ F = ∅, G ∪ F ∈ Δ}.
    pub fn link(&self, f: Mask) -> Vec<Mask> {
        let mut out: Vec<Mask> = Vec::new();
        for &facet in &self.facets {
            if f.is_subset(facet) {
                out.extend(facet.minus(f).subsets());
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Reisner's criterion over the chosen field: Cohen–Macaulay iff the
    /// reduced homology of every link vanishes below its top dimension.
    pub fn is_cohen_macaulay(&self, field: Field) -> Result<bool, SimplicialError> {
        if self.n > CM_VERTEX_CAP {
            return Err(SimplicialError::TooManyVertices {
                got: self.n,
                cap: CM_VERTEX_CAP,
            });
        }
        if self.is_void() {
            // the zero ring, Cohen–Macaulay by convention
            return Ok(true);
        }
        for face in self.faces() {
            let link = self.link(face);
            let top = link.iter().map(|g| g.len()).max().unwrap_or(0);
            if top == 0 {
                continue;
            }
            let support = link.iter().fold(Mask::EMPTY, |acc, &g| acc.union(g));
            if is_cone(&link, support) {
                continue;
            }
            let homology = reduced_betti(&link, field);
            // entry idx is H̃_{idx-1}; the top dimension is top-1
            if homology[..top].iter().any(|&h| h > 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The unique complex Γ with I_Γ = I, for a squarefree monomial ideal over
/// `n` variables: faces are the monomials outside the ideal.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex, SimplicialError> {
    let n = ideal.vars().len();
    if n > VERTEX_CAP {
        return Err(SimplicialError::TooManyVertices {
            got: n,
            cap: VERTEX_CAP,
        });
    }
    let mut facets: Vec<Mask> = Vec::new();
    let mut subsets: Vec<Mask> = Mask::full(n).subsets().collect();
    subsets.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
    for &f in &subsets {
        if !ideal.contains(f) && !facets.iter().any(|&g| f.is_subset(g)) {
            facets.push(f);
        }
    }
    facets.sort_unstable_by_key(|f| (f.len(), f.0));
    Ok(SimplicialComplex { n, facets })
}

/// The Alexander-dual ideal I* = I_{Δ^∨} where I = I_Δ: the ideal of cover
/// monomials (x_F : F a minimal vertex cover of the facet complex of G(I)),
/// i.e. minimal transversals of the generator supports.
pub fn dual_star(ideal: &MonomialIdeal) -> Result<MonomialIdeal, SimplicialError> {
    let n = ideal.vars().len();
    let generator_complex = SimplicialComplex::from_facets(n, ideal.gens())?;
    let covers = generator_complex.minimal_vertex_covers_unchecked();
    let out = MonomialIdeal::new(VarSet::numbered(n), &minimalize(&covers));
    debug_assert_eq!(
        out.gens(),
        complex_of_ideal(ideal)?
            .alexander_dual()
            .stanley_reisner_ideal()
            .gens(),
        "cover route and dual-complex route must agree",
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialError;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let masks: Vec<Mask> = facets
            .iter()
            .map(|f| Mask::from_iter(f.iter().copied()))
            .collect();
        SimplicialComplex::from_facets(n, &masks).unwrap()
    }

    #[test]
    fn stanley_reisner_basic_cases() {
        let full = SimplicialComplex::full_simplex(3);
        assert!(full.stanley_reisner_ideal().is_zero());

        let boundary = cx(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(
            boundary.stanley_reisner_ideal().gens(),
            &[Mask::from_iter([0, 1, 2])]
        );

        assert_eq!(
            SimplicialComplex::irrelevant(2)
                .stanley_reisner_ideal()
                .gens(),
            &[Mask::singleton(0), Mask::singleton(1)]
        );
        assert!(SimplicialComplex::void(2).stanley_reisner_ideal().is_unit());
    }

    #[test]
    fn ideal_complex_round_trip() {
        let shapes = [
            cx(4, &[&[0, 1, 2], &[2, 3]]),
            cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
            SimplicialComplex::irrelevant(3),
            SimplicialComplex::full_simplex(3),
            SimplicialComplex::void(3),
            cx(5, &[&[0], &[1, 2], &[3, 4], &[2, 3]]),
        ];
        for c in shapes {
            let back = complex_of_ideal(&c.stanley_reisner_ideal()).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn prime_decomposition_of_stanley_reisner() {
        // I_Δ = ∩_{F facet} P_{F^c}: check membership both ways
        let c = cx(5, &[&[0, 1, 2], &[1, 3], &[2, 4], &[3, 4]]);
        let ideal = c.stanley_reisner_ideal();
        for m in Mask::full(5).subsets() {
            let in_every_prime = c.facets().iter().all(|&f| m.intersects(f.complement_in(5)));
            assert_eq!(ideal.contains(m), in_every_prime);
        }
    }

    #[test]
    fn alexander_duality_involution_and_formulas() {
        let shapes = [
            cx(4, &[&[0, 1, 2], &[2, 3]]),
            cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
            cx(3, &[&[0, 1], &[1, 2], &[0, 2]]),
            SimplicialComplex::irrelevant(3),
            SimplicialComplex::full_simplex(2),
            SimplicialComplex::void(2),
        ];
        for c in &shapes {
            // (Δ^∨)^∨ = Δ
            assert_eq!(&c.alexander_dual().alexander_dual(), c);
            // I_{Δ^∨} = I(Δ^c)
            assert_eq!(
                c.alexander_dual().stanley_reisner_ideal(),
                c.complement_complex().facet_ideal()
            );
        }
        // boundary of the triangle dualizes to the irrelevant complex
        let boundary = cx(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(boundary.alexander_dual(), SimplicialComplex::irrelevant(3));
    }

    #[test]
    fn facet_ideals() {
        assert_eq!(
            cx(2, &[&[0, 1]]).facet_ideal().gens(),
            &[Mask::from_iter([0, 1])]
        );
        let cycle = cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(cycle.facet_ideal().gens().len(), 4);
        assert!(SimplicialComplex::void(3).facet_ideal().is_zero());
    }

    #[test]
    fn minimal_vertex_covers_examples() {
        let edge = cx(2, &[&[0, 1]]);
        assert_eq!(
            edge.minimal_vertex_covers().unwrap(),
            vec![Mask::singleton(0), Mask::singleton(1)]
        );
        let cycle = cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let covers = cycle.minimal_vertex_covers().unwrap();
        assert_eq!(
            covers,
            vec![Mask::from_iter([0, 2]), Mask::from_iter([1, 3])]
        );
        // brute-force confirmation over all 16 subsets
        let brute: Vec<Mask> = Mask::full(4)
            .subsets()
            .filter(|&c| cycle.facets().iter().all(|&f| f.intersects(c)))
            .filter(|&c| {
                c.iter().all(|v| {
                    let smaller = c.without(v);
                    !cycle.facets().iter().all(|&f| f.intersects(smaller))
                })
            })
            .collect();
        assert_eq!(covers.len(), brute.len());

        assert!(cycle.is_unmixed().unwrap());
        let path = cx(3, &[&[0, 1], &[1, 2]]);
        let path_covers = path.minimal_vertex_covers().unwrap();
        assert_eq!(
            path_covers,
            vec![Mask::singleton(1), Mask::from_iter([0, 2])]
        );
        assert!(!path.is_unmixed().unwrap());
    }

    #[test]
    fn covers_equal_minimal_primes_of_facet_ideal() {
        // a prime P_C contains I(Δ) iff C is a vertex cover; minimality matches
        let c = cx(5, &[&[0, 1], &[1, 2, 3], &[3, 4]]);
        let covers = c.minimal_vertex_covers().unwrap();
        for cover in &covers {
            for &f in c.facets() {
                assert!(f.intersects(*cover));
            }
        }
        // (cover) in ideal form: I_{Δ^∨} = (x_F : F ∈ C(Γ)) with Γ = Δ here
        let dual_sr = c.alexander_dual().stanley_reisner_ideal();
        let cover_ideal = MonomialIdeal::new(VarSet::numbered(5), &covers);
        let _ = cover_ideal;
        // and through the dual_star route on I_Γ:
        let star = dual_star(&c.stanley_reisner_ideal()).unwrap();
        assert_eq!(star, dual_sr);
    }

    #[test]
    fn dual_star_cases() {
        // (x1x2)* = (x1, x2) on two vertices, and duality is an involution
        let edge = MonomialIdeal::new(VarSet::numbered(2), &[Mask::from_iter([0, 1])]);
        let points = MonomialIdeal::new(
            VarSet::numbered(2),
            &[Mask::singleton(0), Mask::singleton(1)],
        );
        assert_eq!(dual_star(&edge).unwrap(), points);
        assert_eq!(dual_star(&points).unwrap(), edge);

        // Lemma: (I∩J)* = I* + J*
        let i = cx(4, &[&[0, 1, 2], &[2, 3]]).stanley_reisner_ideal();
        let j = cx(4, &[&[0, 1], &[1, 2, 3]]).stanley_reisner_ideal();
        let left = dual_star(&i.intersect(&j).unwrap()).unwrap();
        let right = dual_star(&i).unwrap().sum(&dual_star(&j).unwrap()).unwrap();
        assert_eq!(left, right);

        // (I*)* = I on a few shapes
        for c in [
            cx(4, &[&[0, 1], &[1, 2], &[2, 3]]),
            cx(3, &[&[0, 1], &[1, 2], &[0, 2]]),
        ] {
            let ideal = c.stanley_reisner_ideal();
            assert_eq!(dual_star(&dual_star(&ideal).unwrap()).unwrap(), ideal);
        }
    }

    #[test]
    fn facets_of_gamma_are_cover_complements() {
        // Γ with I_Γ = I(Δ): facets of Γ = complements of minimal covers of Δ
        let d = cx(5, &[&[0, 1], &[1, 2, 3], &[3, 4]]);
        let gamma = complex_of_ideal(&d.facet_ideal()).unwrap();
        let mut expect: Vec<Mask> = d
            .minimal_vertex_covers()
            .unwrap()
            .iter()
            .map(|&c| c.complement_in(5))
            .collect();
        expect.sort_unstable_by_key(|f| (f.len(), f.0));
        assert_eq!(gamma.facets(), &expect[..]);
    }

    #[test]
    fn cohen_macaulay_examples() {
        assert!(SimplicialComplex::full_simplex(3)
            .is_cohen_macaulay(Field::Rationals)
            .unwrap());
        // two disjoint edges: disconnected in dimension 1
        let disjoint = cx(4, &[&[0, 1], &[2, 3]]);
        assert!(!disjoint.is_cohen_macaulay(Field::Rationals).unwrap());
        // a path is a connected 1-complex, Cohen–Macaulay
        let path = cx(3, &[&[0, 1], &[1, 2]]);
        assert!(path.is_cohen_macaulay(Field::Rationals).unwrap());
        // non-pure complexes fail
        let nonpure = cx(4, &[&[0, 1, 2], &[3]]);
        assert!(!nonpure.is_cohen_macaulay(Field::Rationals).unwrap());
    }

    #[test]
    fn eagon_reiner_on_small_samples() {
        let shapes = [
            cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
            cx(4, &[&[0, 1, 2], &[2, 3]]),
            cx(3, &[&[0, 1], &[1, 2]]),
            cx(4, &[&[0, 1], &[2, 3]]),
            cx(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]]),
        ];
        for c in &shapes {
            let cm = c.is_cohen_macaulay(Field::Rationals).unwrap();
            let dual_ideal = c.alexander_dual().stanley_reisner_ideal();
            let linear = crate::betti::has_linear_resolution(&dual_ideal).unwrap();
            assert_eq!(cm, linear, "Eagon–Reiner failed on {c:?}");
        }
    }

    #[test]
    fn facet_cap_is_enforced() {
        let many: Vec<Mask> = (0..26)
            .map(|i| Mask::from_iter([i % 13, 13 + (i + 1) % 7]))
            .collect();
        let c = SimplicialComplex::from_facets(20, &many).unwrap();
        if c.facets().len() > COVER_FACET_CAP {
            assert!(matches!(
                c.minimal_vertex_covers(),
                Err(SimplicialError::TooManyFacets { .. })
            ));
            let _ = c.minimal_vertex_covers_unchecked();
        }
        let _ = MonomialError::GroundSetMismatch;
    }
}
