//! A minimal commutative-ring interface and the division-free determinant
//! shared by scalar, Laurent, and g-polynomial matrices.

use std::collections::HashMap;

use crate::scalar::ExactScalar;

pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for ExactScalar {
    fn zero_like(&self) -> Self {
        ExactScalar::zero()
    }
    fn one_like(&self) -> Self {
        ExactScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn neg(&self) -> Self {
        self.neg_ref()
    }
}

pub type Matrix<R> = Vec<Vec<R>>;

pub fn is_square<R>(m: &[Vec<R>]) -> bool {
    m.iter().all(|row| row.len() == m.len())
}

/// Determinant by Laplace expansion along successive rows, memoised on the
/// set of remaining columns. Uses only ring operations, so it works over
/// Laurent polynomial rings where fraction-free elimination would need exact
/// division. Cost is O(n·2^n) ring multiplications.
///
/// Panics if the matrix is not square or is empty-rowed inconsistently;
/// callers validate shape first. The 0×0 determinant is not representable
/// without a ring element to clone, so `m` must be non-empty.
pub fn det_by_minors<R: Ring>(m: &[Vec<R>]) -> R {
    assert!(!m.is_empty(), "determinant of an empty matrix");
    assert!(is_square(m), "determinant of a non-square matrix");
    let n = m.len();
    assert!(n < 64, "matrix too large for minor expansion");
    let mut memo: HashMap<u64, R> = HashMap::new();
    let full = (1u64 << n) - 1;
    minor(m, full, &mut memo)
}

fn minor<R: Ring>(m: &[Vec<R>], cols: u64, memo: &mut HashMap<u64, R>) -> R {
    let n = m.len();
    let size = cols.count_ones() as usize;
    let row = n - size;
    if size == 1 {
        let j = cols.trailing_zeros() as usize;
        return m[row][j].clone();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = m[0][0].zero_like();
    let mut pos = 0usize;
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[row][j];
        if !entry.is_zero() {
            let sub = minor(m, cols & !(1 << j), memo);
            if !sub.is_zero() {
                let term = entry.mul(&sub);
                acc = if pos.is_multiple_of(2) { acc.add(&term) } else { acc.sub(&term) };
            }
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Submatrix on the given row and column indices, in the given order.
pub fn submatrix<R: Clone>(m: &[Vec<R>], rows: &[usize], cols: &[usize]) -> Matrix<R> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

pub fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Matrix<R> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "incompatible matrix product");
            (0..cols)
                .map(|j| {
                    let mut acc = row[0].zero_like();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&x.mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat<R: Ring>(v: &[R], m: &[Vec<R>]) -> Vec<R> {
    mat_mul(&[v.to_vec()], m).pop().expect("one row")
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn s(v: i64) -> ExactScalar {
        ExactScalar::from_integer(v)
    }

    fn leibniz(m: &[Vec<ExactScalar>]) -> ExactScalar {
        let n = m.len();
        let mut acc = ExactScalar::zero();
        for perm in (0..n).permutations(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let mut term = ExactScalar::one();
            for (i, &p) in perm.iter().enumerate() {
                term = &term * &m[i][p];
            }
            acc = if inversions % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![s(1), s(2)], vec![s(3), s(4)]];
        assert_eq!(det_by_minors(&m), s(-2));
        let m = vec![vec![s(2), s(0), s(1)], vec![s(1), s(3), s(2)], vec![s(1), s(1), s(1)]];
        assert_eq!(det_by_minors(&m), leibniz(&m));
        assert_eq!(det_by_minors(&[vec![s(5)]]), s(5));
    }

    #[test]
    fn agrees_with_leibniz_on_grid() {
        // deterministic pseudo-random fill
        let mut x: i64 = 17;
        for n in 1..=5 {
            for _ in 0..10 {
                let m: Vec<Vec<ExactScalar>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                x = (x * 1103515245 + 12345) % 2147483648;
                                s(x % 7 - 3)
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(det_by_minors(&m), leibniz(&m));
            }
        }
    }
}
