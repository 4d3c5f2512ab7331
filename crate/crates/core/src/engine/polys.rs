//! The determinants P1 and P2 obtained by putting η_1 = … = η_n = 2.

use crate::error::{Error, Result};
use crate::ring::{det_by_minors, Matrix};
use crate::scalar::{root_of_unity, ExactScalar};

/// ξ = ζ_{n+1}.
pub fn xi(n: usize) -> ExactScalar {
    root_of_unity(n as u32 + 1, 1)
}

fn check_rows(n: usize, rows: &[Vec<ExactScalar>], special: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::Parameters("n must be at least 1".into()));
    }
    if rows.len() != n + 1 || rows.iter().any(|r| r.len() != n + 1) {
        return Err(Error::Shape(format!("expected a {0}×{0} matrix", n + 1)));
    }
    if special > n {
        return Err(Error::Parameters(format!("special row {special} out of range")));
    }
    Ok(())
}

fn pow2(e: usize) -> ExactScalar {
    ExactScalar::from_integer(1i64 << e)
}

/// Row i of the P1 matrix for the constant c: (r_0(c − 1), r_j(c − 2)).
fn constant_row(row: &[ExactScalar], c: &ExactScalar) -> Vec<ExactScalar> {
    let one = ExactScalar::one();
    let two = ExactScalar::from_integer(2);
    row.iter().enumerate().map(|(j, x)| x * &(c - if j == 0 { &one } else { &two })).collect()
}

/// Matrix of P1. `powers[i]` is the ξ-exponent given to row i; the special
/// row must have exponent 0 and the others must use 1, …, n exactly once.
pub fn p1_matrix(n: usize, rows: &[Vec<ExactScalar>], special: usize, powers: &[u32]) -> Result<Matrix<ExactScalar>> {
    check_rows(n, rows, special)?;
    let mut seen: Vec<u32> = powers.to_vec();
    seen.sort_unstable();
    if powers.len() != n + 1 || powers[special] != 0 || seen != (0..=n as u32).collect::<Vec<_>>() {
        return Err(Error::Parameters(format!("powers {powers:?} are not a bijection onto 1..{n} off the special row")));
    }
    let xi = xi(n);
    let head = pow2(n);
    let tail = pow2(n + 1);
    let one = ExactScalar::one();
    Ok(rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if i == special {
                row.iter().enumerate().map(|(j, x)| x * &(&one - if j == 0 { &head } else { &tail })).collect()
            } else {
                constant_row(row, &xi.pow(powers[i] as i64).expect("root of unity"))
            }
        })
        .collect())
}

pub fn build_p1(n: usize, rows: &[Vec<ExactScalar>], special: usize, powers: &[u32]) -> Result<ExactScalar> {
    Ok(det_by_minors(&p1_matrix(n, rows, special, powers)?))
}

/// Matrix of P2: rows other than `special` become (−r_0, −3r_j), the special
/// row (r_0((−1)^n − 1), r_j((−1)^n − 2)).
pub fn p2_matrix(n: usize, rows: &[Vec<ExactScalar>], special: usize) -> Result<Matrix<ExactScalar>> {
    check_rows(n, rows, special)?;
    let sign = ExactScalar::from_integer(if n.is_multiple_of(2) { 1 } else { -1 });
    let minus_three = ExactScalar::from_integer(-3);
    Ok(rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if i == special {
                constant_row(row, &sign)
            } else {
                row.iter().enumerate().map(|(j, x)| if j == 0 { -x } else { x * &minus_three }).collect()
            }
        })
        .collect())
}

pub fn build_p2(n: usize, rows: &[Vec<ExactScalar>], special: usize) -> Result<ExactScalar> {
    Ok(det_by_minors(&p2_matrix(n, rows, special)?))
}
