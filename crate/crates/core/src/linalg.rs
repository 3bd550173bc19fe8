//! Division-free determinants over an arbitrary commutative ring.
//!
//! Minors are built row by row over column subsets (`n·2ⁿ` products), which is
//! cheaper than cofactor recursion for the 6×6 coconic determinant and yields
//! all maximal minors of a 5×6 system in a single pass.

use crate::scalar::Ring;

/// Minors of the first `rows.len()` rows, indexed by column bitmask.
/// Only masks with popcount equal to `rows.len()` are populated.
fn leading_minors<R: Ring>(rows: &[&[R]], ncols: usize) -> Vec<Option<R>> {
    let mut cur: Vec<Option<R>> = vec![None; 1 << ncols];
    cur[0] = Some(R::one());
    for (r, row) in rows.iter().enumerate() {
        let mut next: Vec<Option<R>> = vec![None; 1 << ncols];
        for mask in 0usize..(1 << ncols) {
            if mask.count_ones() as usize != r + 1 {
                continue;
            }
            let mut acc: Option<R> = None;
            let mut pos = 0usize;
            for c in 0..ncols {
                if mask & (1 << c) == 0 {
                    continue;
                }
                if let Some(sub) = &cur[mask & !(1 << c)] {
                    if !row[c].is_zero() {
                        let term = row[c].clone() * sub;
                        let negate = (r + pos) % 2 == 1;
                        acc = Some(match (acc, negate) {
                            (None, false) => term,
                            (None, true) => -term,
                            (Some(a), false) => a + term,
                            (Some(a), true) => a - term,
                        });
                    }
                }
                pos += 1;
            }
            next[mask] = Some(acc.unwrap_or_else(R::zero));
        }
        cur = next;
    }
    cur
}

/// Determinant of a square matrix given by rows.
pub fn det<R: Ring>(rows: &[&[R]]) -> R {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    if n == 0 {
        return R::one();
    }
    let minors = leading_minors(rows, n);
    minors[(1 << n) - 1].clone().unwrap_or_else(R::zero)
}

/// For an `(n-1) × n` matrix `A`, returns `c` with
/// `det([A; v]) = Σ_k v_k c_k` for every row vector `v`.
pub fn cofactor_row<R: Ring>(rows: &[&[R]]) -> Vec<R> {
    let n = rows.len() + 1;
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let minors = leading_minors(rows, n);
    let full = (1usize << n) - 1;
    (0..n)
        .map(|k| {
            let m = minors[full & !(1 << k)].clone().unwrap_or_else(R::zero);
            if (n - 1 + k) % 2 == 1 {
                -m
            } else {
                m
            }
        })
        .collect()
}

pub fn det3<R: Ring>(a: &[R; 3], b: &[R; 3], c: &[R; 3]) -> R {
    let m0 = b[1].clone() * &c[2] - b[2].clone() * &c[1];
    let m1 = b[0].clone() * &c[2] - b[2].clone() * &c[0];
    let m2 = b[0].clone() * &c[1] - b[1].clone() * &c[0];
    a[0].clone() * &m0 - a[1].clone() * &m1 + a[2].clone() * &m2
}

pub fn cross<R: Ring>(a: &[R; 3], b: &[R; 3]) -> [R; 3] {
    [
        a[1].clone() * &b[2] - a[2].clone() * &b[1],
        a[2].clone() * &b[0] - a[0].clone() * &b[2],
        a[0].clone() * &b[1] - a[1].clone() * &b[0],
    ]
}

pub fn dot<R: Ring>(a: &[R; 3], b: &[R; 3]) -> R {
    a[0].clone() * &b[0] + a[1].clone() * &b[1] + a[2].clone() * &b[2]
}

/// Adjugate of a 3×3 matrix (`adj(M)·M = det(M)·I`).
pub fn adjugate3<R: Ring>(m: &[[R; 3]; 3]) -> [[R; 3]; 3] {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| {
        m[r0][c0].clone() * &m[r1][c1] - m[r0][c1].clone() * &m[r1][c0]
    };
    [
        [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
        [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
        [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
    ]
}

pub fn mat_vec3<R: Ring>(m: &[[R; 3]; 3], v: &[R; 3]) -> [R; 3] {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn leibniz(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        (0..n)
            .permutations(n)
            .map(|p| {
                let inv = (0..n).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
                let prod: i64 = (0..n).map(|i| m[i][p[i]]).product();
                if inv % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .sum()
    }

    #[test]
    fn subset_determinant_matches_leibniz() {
        let m: Vec<Vec<i64>> = vec![
            vec![3, -1, 4, 1, -5, 9],
            vec![2, 6, -5, 3, 5, -8],
            vec![9, 7, 9, -3, 2, 3],
            vec![-8, 4, 6, 2, 6, 4],
            vec![3, 3, -8, 3, 2, 7],
            vec![9, -5, 0, 2, 8, 8],
        ];
        let rows: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        assert_eq!(det(&refs), leibniz(&m) as f64);

        let top: Vec<&[f64]> = refs[..5].to_vec();
        let c = cofactor_row(&top);
        let via: f64 = c.iter().zip(rows[5].iter()).map(|(a, b)| a * b).sum();
        assert_eq!(via, leibniz(&m) as f64);
    }

    #[test]
    fn adjugate_inverts_up_to_det() {
        let m = [[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 4.0]];
        let a = adjugate3(&m);
        let d = det3(&m[0], &m[1], &m[2]);
        for i in 0..3 {
            for j in 0..3 {
                let s: f64 = (0..3).map(|k| a[i][k] * m[k][j]).sum();
                assert_eq!(s, if i == j { d } else { 0.0 });
            }
        }
    }
}
