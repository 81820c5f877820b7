//! Reduced simplicial homology via boundary-matrix ranks.

use std::collections::HashMap;

use crate::bits::Mask;
use crate::linalg::{rank_gf2, rank_rational};

/// Coefficient field for homology and Betti computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Char2,
}

fn rank_in(field: Field, rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> usize {
    match field {
        Field::Rationals => rank_rational(rows, cols, entries),
        Field::Char2 => rank_gf2(rows, cols, entries),
    }
}

/// Reduced Betti numbers of a complex given by its full face list (closed
/// under subsets, containing the empty face unless void).
///
/// The result is indexed with an offset of one: entry `k` is
/// dim H̃_{k-1}, so entry 0 reports H̃_{-1} (nonzero exactly for the
/// irrelevant complex `{∅}`). The void complex reports all zeros.
pub fn reduced_betti(faces: &[Mask], field: Field) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let max_size = faces.iter().map(|f| f.len()).max().unwrap();
    // levels[s] = faces of cardinality s (dimension s-1)
    let mut levels: Vec<Vec<Mask>> = vec![Vec::new(); max_size + 1];
    for &f in faces {
        levels[f.len()].push(f);
    }
    for level in &mut levels {
        level.sort_unstable();
        level.dedup();
    }
    debug_assert!(
        !levels[0].is_empty(),
        "nonvoid complex must contain the empty face"
    );

    let index: Vec<HashMap<Mask, usize>> = levels
        .iter()
        .map(|lv| lv.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    // boundary ∂_s : C_s → C_{s-1} (cardinality grading)
    let rank_of_boundary = |s: usize| -> usize {
        if s == 0 || s > max_size || levels[s].is_empty() {
            return 0;
        }
        let mut entries = Vec::new();
        for (col, &f) in levels[s].iter().enumerate() {
            for (pos, v) in f.iter().enumerate() {
                let sub = f.without(v);
                let row = index[s - 1][&sub];
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                entries.push((row, col, sign));
            }
        }
        rank_in(field, levels[s - 1].len(), levels[s].len(), &entries)
    };

    let ranks: Vec<usize> = (0..=max_size + 1).map(rank_of_boundary).collect();
    (0..=max_size)
        .map(|s| levels[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// dim H̃_k for a single k (with the same conventions as [`reduced_betti`]).
pub fn reduced_betti_in_dim(faces: &[Mask], k: isize, field: Field) -> usize {
    if k < -1 {
        return 0;
    }
    let table = reduced_betti(faces, field);
    let idx = (k + 1) as usize;
    table.get(idx).copied().unwrap_or(0)
}

/// Whether every reduced homology group vanishes.
pub fn is_acyclic(faces: &[Mask], field: Field) -> bool {
    reduced_betti(faces, field).iter().all(|&b| b == 0)
}

/// A cone with apex v (every face stays a face when v is added) is acyclic;
/// cheap sufficient condition used to skip rank computations.
pub fn is_cone(faces: &[Mask], vertices: Mask) -> bool {
    if faces.is_empty() {
        return false;
    }
    'apex: for v in vertices.iter() {
        for &f in faces {
            if !f.contains(v) {
                let coned = f.with(v);
                if !faces.contains(&coned) {
                    continue 'apex;
                }
            }
        }
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closure(generators: &[Mask]) -> Vec<Mask> {
        let mut faces: Vec<Mask> = Vec::new();
        for &g in generators {
            for sub in g.subsets() {
                faces.push(sub);
            }
        }
        faces.sort_unstable();
        faces.dedup();
        faces
    }

    #[test]
    fn homology_of_standard_shapes() {
        // irrelevant complex {∅}: only H̃_{-1} = 1
        assert_eq!(reduced_betti(&[Mask::EMPTY], Field::Rationals), vec![1]);
        // a point is acyclic
        let point = closure(&[Mask::singleton(0)]);
        assert!(is_acyclic(&point, Field::Rationals));
        // two points: H̃_0 = 1
        let two = closure(&[Mask::singleton(0), Mask::singleton(1)]);
        assert_eq!(reduced_betti(&two, Field::Rationals), vec![0, 1]);
        // circle (boundary of a triangle): H̃_1 = 1
        let circle = closure(&[
            Mask::from_iter([0, 1]),
            Mask::from_iter([1, 2]),
            Mask::from_iter([0, 2]),
        ]);
        assert_eq!(reduced_betti(&circle, Field::Rationals), vec![0, 0, 1]);
        // filled triangle: acyclic
        let disk = closure(&[Mask::from_iter([0, 1, 2])]);
        assert!(is_acyclic(&disk, Field::Rationals));
        // 2-sphere (boundary of tetrahedron): H̃_2 = 1
        let top = Mask::from_iter([0, 1, 2, 3]);
        let sphere: Vec<Mask> = closure(&[top]).into_iter().filter(|&f| f != top).collect();
        assert_eq!(reduced_betti(&sphere, Field::Rationals), vec![0, 0, 0, 1]);
        // void complex
        assert_eq!(reduced_betti(&[], Field::Rationals), Vec::<usize>::new());
    }

    #[test]
    fn projective_plane_detects_characteristic() {
        // minimal 6-vertex triangulation of RP^2 (antipodal icosahedron)
        let rp2: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 4, 5],
            [2, 3, 5],
            [1, 3, 5],
            [1, 3, 4],
        ];
        let faces = closure(
            &rp2.iter()
                .map(|t| Mask::from_iter(t.iter().copied()))
                .collect::<Vec<_>>(),
        );
        let over_q = reduced_betti(&faces, Field::Rationals);
        let over_f2 = reduced_betti(&faces, Field::Char2);
        assert_eq!(over_q, vec![0, 0, 0, 0]);
        assert_eq!(over_f2, vec![0, 0, 1, 1]);
    }

    #[test]
    fn cone_detection() {
        let disk = closure(&[Mask::from_iter([0, 1, 2])]);
        assert!(is_cone(&disk, Mask::full(3)));
        let two = closure(&[Mask::singleton(0), Mask::singleton(1)]);
        assert!(!is_cone(&two, Mask::full(2)));
    }
}
