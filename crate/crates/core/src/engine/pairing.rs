//! The linear system relating f and g when h_i = c_i·h_{i+n+1}, after the
//! last n+1 hyperplanes have been moved to coordinate hyperplanes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{det_poly_in_g, LaurentPoly};
use crate::ring::{det_by_minors, Matrix, Ring};
use crate::scalar::ExactScalar;

/// b^i_i = a_ii·g_i − c_i·Σ_j a_ij·g_j and b^i_j = a_ij·g_i for j ≠ i, with
/// row i of `a` holding the coefficients of the (i+1)-th hyperplane.
pub fn pairing_matrix<R: Ring>(a: &[Vec<R>], c: &[R], g: &[R]) -> Matrix<R> {
    let size = a.len();
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let own = a[i][j].mul(&g[i]);
                    if i != j {
                        return own;
                    }
                    let sum = (0..size).fold(own.zero_like(), |acc, l| acc.add(&a[i][l].mul(&g[l])));
                    own.sub(&c[i].mul(&sum))
                })
                .collect()
        })
        .collect()
}

/// (1 − c_k)·a_kk·∏_{j≠k}(−c_j·a_jk): the determinant at g = e_k.
pub fn unit_vector_value<R: Ring>(a: &[Vec<R>], c: &[R], k: usize) -> R {
    let one = c[k].one_like();
    let mut acc = one.sub(&c[k]).mul(&a[k][k]);
    for j in (0..a.len()).filter(|&j| j != k) {
        acc = acc.mul(&c[j].mul(&a[j][k]).neg());
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingReport {
    pub det_vanishes: bool,
    pub forced_c: bool,
}

/// Expands det(b) in g_0 … g_n, checks the value at every unit vector
/// against the product formula, and reports whether a vanishing determinant
/// came with c = (1, …, 1).
pub fn pairing_identity_check(n: usize, a: &[Vec<ExactScalar>], c: &[ExactScalar]) -> Result<PairingReport> {
    let size = n + 1;
    if a.len() != size || a.iter().any(|r| r.len() != size) || c.len() != size {
        return Err(Error::Shape(format!("expected a {size}×{size} matrix and {size} constants")));
    }
    if det_by_minors(a).is_zero() {
        return Err(Error::Precondition("the rows of a are linearly dependent".into()));
    }
    if let Some((i, j)) = (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).find(|&(i, j)| a[i][j].is_zero()) {
        return Err(Error::Precondition(format!("coefficient a[{i}][{j}] is zero")));
    }
    let lift = |x: &ExactScalar| LaurentPoly::constant(size, x.clone());
    let pa: Matrix<LaurentPoly> = a.iter().map(|r| r.iter().map(lift).collect()).collect();
    let pc: Vec<LaurentPoly> = c.iter().map(lift).collect();
    let g: Vec<LaurentPoly> = (0..size).map(|i| LaurentPoly::variable(size, i)).collect();
    let det = det_poly_in_g(&pairing_matrix(&pa, &pc, &g))?;
    for k in 0..size {
        let point: Vec<ExactScalar> = (0..size).map(|j| ExactScalar::from_integer((j == k) as i64)).collect();
        assert_eq!(det.evaluate(&point)?, unit_vector_value(a, c, k), "unit-vector evaluation at e_{k}");
    }
    let det_vanishes = det.is_zero();
    let forced_c = !det_vanishes || c.iter().all(ExactScalar::is_one);
    Ok(PairingReport { det_vanishes, forced_c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> ExactScalar {
        ExactScalar::from_integer(v)
    }

    #[test]
    fn n1_unit_vector_formula() {
        let a = vec![vec![s(2), s(3)], vec![s(5), s(7)]];
        let c = vec![s(4), s(-1)];
        // −(1 − c_0)·a_00·c_1·a_10
        assert_eq!(unit_vector_value(&a, &c, 0), s(-(1 - 4) * 2 * -5));
        let r = pairing_identity_check(1, &a, &c).unwrap();
        assert_eq!(r, PairingReport { det_vanishes: false, forced_c: true });
    }

    #[test]
    fn all_ones_vanish() {
        let a = vec![vec![s(1), s(2), s(3)], vec![s(2), s(7), s(5)], vec![s(3), s(1), s(11)]];
        let ones = vec![s(1); 3];
        for k in 0..3 {
            assert!(unit_vector_value(&a, &ones, k).is_zero());
        }
        let r = pairing_identity_check(2, &a, &ones).unwrap();
        assert!(r.det_vanishes && r.forced_c);
    }

    #[test]
    fn c_not_all_one() {
        let a = vec![vec![s(1), s(2)], vec![s(3), s(5)]];
        let r = pairing_identity_check(1, &a, &[s(2), s(1)]).unwrap();
        assert!(!r.det_vanishes);
    }

    #[test]
    fn preconditions() {
        let a = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert!(matches!(pairing_identity_check(1, &a, &[s(1), s(1)]), Err(Error::Precondition(_))));
        let a = vec![vec![s(1), s(0)], vec![s(2), s(4)]];
        assert!(matches!(pairing_identity_check(1, &a, &[s(1), s(1)]), Err(Error::Precondition(_))));
        assert!(matches!(pairing_identity_check(2, &a, &[s(1), s(1)]), Err(Error::Shape(_))));
    }
}
