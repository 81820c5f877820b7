//! Exact rank computation for the small integer matrices arising from
//! boundary maps and resolution strands.
//!
//! Ranks are taken over the rationals via fraction-free Bareiss elimination.
//! A checked `i128` pass handles essentially every matrix that occurs here;
//! on overflow the computation restarts with arbitrary-precision integers.
//! A GF(2) rank is provided for the characteristic-2 mode.

use num_bigint::BigInt;

/// Rank over ℚ of the matrix given as (row, col, value) triplets.
///
/// Duplicate positions are summed. Positions outside `rows × cols` panic.
pub fn rank_rational(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> usize {
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut dense = vec![0i128; rows * cols];
    for &(r, c, v) in entries {
        assert!(r < rows && c < cols);
        dense[r * cols + c] += v as i128;
    }
    match bareiss_i128(&mut dense.clone(), rows, cols) {
        Some(rank) => rank,
        None => bareiss_bigint(&dense, rows, cols),
    }
}

/// Fraction-free elimination with full pivoting; `None` on i128 overflow.
fn bareiss_i128(a: &mut [i128], rows: usize, cols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut rank = 0;
    let steps = rows.min(cols);
    for k in 0..steps {
        // any nonzero entry in the trailing block works as pivot
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if a[i * cols + j] != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        if pi != k {
            for j in 0..cols {
                a.swap(pi * cols + j, k * cols + j);
            }
        }
        if pj != k {
            for i in 0..rows {
                a.swap(i * cols + pj, i * cols + k);
            }
        }
        rank = k + 1;
        let akk = a[k * cols + k];
        for i in (k + 1)..rows {
            let aik = a[i * cols + k];
            for j in (k + 1)..cols {
                let num = akk
                    .checked_mul(a[i * cols + j])?
                    .checked_sub(aik.checked_mul(a[k * cols + j])?)?;
                // exact by the Sylvester identity
                a[i * cols + j] = num / prev;
            }
            a[i * cols + k] = 0;
        }
        prev = akk;
    }
    Some(rank)
}

fn bareiss_bigint(init: &[i128], rows: usize, cols: usize) -> usize {
    let mut a: Vec<BigInt> = init.iter().map(|&v| BigInt::from(v)).collect();
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if a[i * cols + j] != zero {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        if pi != k {
            for j in 0..cols {
                a.swap(pi * cols + j, k * cols + j);
            }
        }
        if pj != k {
            for i in 0..rows {
                a.swap(i * cols + pj, i * cols + k);
            }
        }
        rank = k + 1;
        let akk = a[k * cols + k].clone();
        for i in (k + 1)..rows {
            let aik = a[i * cols + k].clone();
            for j in (k + 1)..cols {
                let num = &akk * &a[i * cols + j] - &aik * &a[k * cols + j];
                a[i * cols + j] = num / &prev;
            }
            a[i * cols + k] = zero.clone();
        }
        prev = akk;
    }
    rank
}

/// Rank over GF(2) of the matrix given as (row, col, value) triplets.
pub fn rank_gf2(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> usize {
    if rows == 0 || cols == 0 {
        return 0;
    }
    let width = cols.div_ceil(64);
    let mut mat = vec![0u64; rows * width];
    for &(r, c, v) in entries {
        assert!(r < rows && c < cols);
        if v % 2 != 0 {
            mat[r * width + c / 64] ^= 1u64 << (c % 64);
        }
    }
    let mut rank = 0;
    for c in 0..cols {
        let (w, b) = (c / 64, c % 64);
        let mut pivot = None;
        for r in rank..rows {
            if mat[r * width + w] >> b & 1 == 1 {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        for j in 0..width {
            mat.swap(p * width + j, rank * width + j);
        }
        for r in 0..rows {
            if r != rank && mat[r * width + w] >> b & 1 == 1 {
                for j in 0..width {
                    mat[r * width + j] ^= mat[rank * width + j];
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_singular() {
        let id: Vec<(usize, usize, i64)> = (0..4).map(|i| (i, i, 1)).collect();
        assert_eq!(rank_rational(4, 4, &id), 4);
        // two proportional rows
        let sing = vec![(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)];
        assert_eq!(rank_rational(2, 2, &sing), 1);
        assert_eq!(rank_rational(3, 5, &[]), 0);
    }

    #[test]
    fn rank_char_dependence() {
        // boundary of the 2-torus-like matrix [[2]] has rank 1 over Q, 0 over GF(2)
        let m = vec![(0, 0, 2)];
        assert_eq!(rank_rational(1, 1, &m), 1);
        assert_eq!(rank_gf2(1, 1, &m), 0);
    }

    #[test]
    fn bigint_path_agrees_on_dense_pm1() {
        // an 8x8 ±1 matrix exercises both paths identically
        let mut entries = Vec::new();
        for i in 0..8usize {
            for j in 0..8usize {
                let v = if (i * 31 + j * 17) % 3 == 0 { 1 } else { -1 };
                entries.push((i, j, v));
            }
        }
        let mut dense = vec![0i128; 64];
        for &(r, c, v) in &entries {
            dense[r * 8 + c] = v as i128;
        }
        let fast = bareiss_i128(&mut dense.clone(), 8, 8).unwrap();
        let slow = bareiss_bigint(&dense, 8, 8);
        assert_eq!(fast, slow);
    }
}
