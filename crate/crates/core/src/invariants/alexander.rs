//! Alexander polynomial of a braid closure from the reduced Burau representation.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, Variable};

type Matrix = Vec<Vec<LaurentPolynomial>>;

fn t_pow(e: i64, c: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(Variable::T, e, c)
}

fn zero() -> LaurentPolynomial {
    LaurentPolynomial::zero(Variable::T)
}

fn identity(m: usize) -> Matrix {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { t_pow(0, 1) } else { zero() })
                .collect()
        })
        .collect()
}

/// The 3×3 block of the reduced Burau image of `σ_i^{±1}`, acting on coordinates
/// `i-2, i-1, i` (0-based) and clipped to the `(n-1)`-dimensional space.
fn generator_block(positive: bool) -> [[LaurentPolynomial; 3]; 3] {
    let o = || t_pow(0, 1);
    if positive {
        [
            [o(), t_pow(1, 1), zero()],
            [zero(), t_pow(1, -1), zero()],
            [zero(), o(), o()],
        ]
    } else {
        [
            [o(), o(), zero()],
            [zero(), t_pow(-1, -1), zero()],
            [zero(), t_pow(-1, 1), o()],
        ]
    }
}

/// Reduced Burau matrix of a braid word (`(n-1) × (n-1)`).
pub fn reduced_burau(b: &BraidWord) -> Vec<Vec<LaurentPolynomial>> {
    let m = b.strands() - 1;
    let mut mat = identity(m);
    for l in b.letters() {
        let block = generator_block(l.is_positive());
        // block coordinate r sits at matrix index (index - 2 + r)
        let coords: Vec<(usize, usize)> = (0..3)
            .filter_map(|r| {
                let idx = l.index as isize - 2 + r as isize;
                (idx >= 0 && (idx as usize) < m).then_some((r, idx as usize))
            })
            .collect();
        // mat <- mat · G; only the block's columns change
        for row in mat.iter_mut() {
            let old: Vec<LaurentPolynomial> = coords.iter().map(|&(_, j)| row[j].clone()).collect();
            for &(c, j) in &coords {
                let mut acc = zero();
                for (k, &(r, _)) in coords.iter().enumerate() {
                    let g = &block[r][c];
                    if !g.is_zero() && !old[k].is_zero() {
                        acc = &acc + &(&old[k] * g);
                    }
                }
                row[j] = acc;
            }
        }
    }
    mat
}

/// Fraction-free (Bareiss) determinant over `Z[t, t⁻¹]`.
pub(crate) fn determinant(mut mat: Matrix) -> LaurentPolynomial {
    let m = mat.len();
    if m == 0 {
        return t_pow(0, 1);
    }
    let mut sign = 1i64;
    let mut prev = t_pow(0, 1);
    for k in 0..m {
        if mat[k][k].is_zero() {
            let Some(r) = (k + 1..m).find(|&r| !mat[r][k].is_zero()) else {
                return zero();
            };
            mat.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            mat[i][k] = zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[m - 1][m - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Alexander polynomial of the closure of `b`, which must be a knot.
///
/// `Δ(t) = det(I − R(b)) · (1 − t)/(1 − tⁿ)`, normalized to be symmetric with `Δ(1) = 1`.
pub fn alexander(b: &BraidWord) -> Result<LaurentPolynomial> {
    let perm = b.permutation();
    if !perm.is_full_cycle() {
        return Err(Error::NotAKnot {
            components: perm.cycle_count(),
        });
    }
    let n = b.strands();
    let r = reduced_burau(b);
    let m = r.len();
    let diff: Matrix = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let id = if i == j { t_pow(0, 1) } else { zero() };
                    &id - &r[i][j]
                })
                .collect()
        })
        .collect();
    let det = determinant(diff);
    let geometric = LaurentPolynomial::from_terms(Variable::T, (0..n as i64).map(|e| (e, 1)));
    let delta = det
        .div_exact(&geometric)
        .expect("1 + t + ... + t^(n-1) divides det(I - R) for knot closures");
    let normalized = delta.symmetrize();
    assert!(
        normalized.eval_at_one() == 1.into(),
        "Alexander polynomial of a knot has |Δ(1)| = 1"
    );
    Ok(normalized)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, ints: &[i64]) -> BraidWord {
        BraidWord::from_ints(strands, ints).unwrap()
    }

    fn is_identity(m: &Matrix) -> bool {
        m.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    #[test]
    fn generator_inverses() {
        for n in 2..6 {
            for i in 1..n {
                let b = BraidWord::from_ints(n, &[i as i64, -(i as i64)]).unwrap();
                assert!(is_identity(&reduced_burau(&b)), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        let lhs = reduced_burau(&w(4, &[1, 2, 1]));
        let rhs = reduced_burau(&w(4, &[2, 1, 2]));
        assert_eq!(lhs, rhs);
        let lhs = reduced_burau(&w(4, &[2, 3, 2]));
        let rhs = reduced_burau(&w(4, &[3, 2, 3]));
        assert_eq!(lhs, rhs);
        assert_eq!(reduced_burau(&w(4, &[1, 3])), reduced_burau(&w(4, &[3, 1])));
    }

    #[test]
    fn unknots_and_trefoil() {
        assert!(alexander(&BraidWord::identity(1)).unwrap().is_one());
        assert!(alexander(&w(3, &[1, -2])).unwrap().is_one());
        assert!(alexander(&w(2, &[1])).unwrap().is_one());
        assert_eq!(
            alexander(&w(2, &[1, 1, 1])).unwrap().to_string(),
            "t^-1 - 1 + t"
        );
    }

    #[test]
    fn figure_eight() {
        let fig8 = w(3, &[1, -2, 1, -2]);
        assert_eq!(alexander(&fig8).unwrap().to_string(), "-t^-1 + 3 - t");
    }

    #[test]
    fn rejects_links() {
        assert!(matches!(
            alexander(&w(2, &[1, 1])),
            Err(Error::NotAKnot { components: 2 })
        ));
    }

    #[test]
    fn determinant_small() {
        let m = vec![
            vec![t_pow(1, 1), t_pow(0, 2)],
            vec![t_pow(0, 1), t_pow(-1, 3)],
        ];
        // t · 3t⁻¹ − 2 = 1
        assert!(determinant(m).is_one());
        let singular = vec![vec![zero(), t_pow(0, 1)], vec![zero(), t_pow(0, 1)]];
        assert!(determinant(singular).is_zero());
    }
}
