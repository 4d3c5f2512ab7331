//! Hyperplane families in P^n with exact coefficients.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{det_by_minors, is_square, submatrix, vec_mat, Matrix};
use crate::scalar::ExactScalar;

/// q hyperplanes in P^n; row i holds the coefficients (a^i_0, …, a^i_n) of a
/// defining linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneFamily {
    n: usize,
    rows: Matrix<ExactScalar>,
}

impl HyperplaneFamily {
    pub fn new(n: usize, rows: Matrix<ExactScalar>) -> Result<Self> {
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n + 1) {
            return Err(Error::Shape(format!("hyperplane {i} has {} coefficients, expected {}", row.len(), n + 1)));
        }
        if let Some(i) = rows.iter().position(|r| r.iter().all(ExactScalar::is_zero)) {
            return Err(Error::Precondition(format!("hyperplane {i} has an all-zero coefficient row")));
        }
        Ok(HyperplaneFamily { n, rows })
    }

    pub fn from_integers(n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(n, rows.iter().map(|r| r.iter().map(|&x| ExactScalar::from_integer(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<ExactScalar>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[ExactScalar] {
        &self.rows[i]
    }

    /// Rows rescaled so that the first non-zero coefficient is 1. Meant for
    /// presentation; computations keep the rows as given.
    pub fn canonical(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let lead = r.iter().find(|x| !x.is_zero()).expect("rows are non-zero");
                let inv = lead.inv().expect("non-zero lead");
                r.iter().map(|x| x.mul_ref(&inv)).collect()
            })
            .collect();
        HyperplaneFamily { n: self.n, rows }
    }

    /// Same family with rows listed in the order `perm` (new row i = old row perm[i]).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        HyperplaneFamily { n: self.n, rows: perm.iter().map(|&i| self.rows[i].clone()).collect() }
    }

    /// Applies the coordinate change row ↦ row·C to every hyperplane.
    pub fn transformed(&self, c: &[Vec<ExactScalar>]) -> Result<Self> {
        if c.len() != self.n + 1 || !is_square(c) {
            return Err(Error::Shape("coordinate change must be (n+1)×(n+1)".into()));
        }
        Self::new(self.n, self.rows.iter().map(|r| vec_mat(r, c)).collect())
    }

    /// Block determinant det(rows in `idx`, in that order).
    pub fn minor(&self, idx: &[usize]) -> ExactScalar {
        let cols: Vec<usize> = (0..=self.n).collect();
        det_by_minors(&submatrix(&self.rows, idx, &cols))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralPosition {
    pub ok: bool,
    /// Lexicographically first (n+1)-subset (0-based) with vanishing determinant.
    pub violating_subset: Option<Vec<usize>>,
}

/// Every n + 1 of the hyperplanes have independent defining forms.
pub fn general_position(f: &HyperplaneFamily) -> Result<GeneralPosition> {
    let k = f.n + 1;
    if f.len() < k {
        return Err(Error::Parameters(format!("general position needs at least {k} hyperplanes, got {}", f.len())));
    }
    let bad = (0..f.len()).combinations(k).find(|idx| f.minor(idx).is_zero());
    Ok(GeneralPosition { ok: bad.is_none(), violating_subset: bad })
}

/// Classical adjugate (transposed cofactor matrix). Checks M·adj(M) = det(M)·I.
pub fn adjugate(m: &[Vec<ExactScalar>]) -> Result<Matrix<ExactScalar>> {
    if m.is_empty() || !is_square(m) {
        return Err(Error::Shape("adjugate needs a non-empty square matrix".into()));
    }
    let size = m.len();
    let adj: Matrix<ExactScalar> = if size == 1 {
        vec![vec![ExactScalar::one()]]
    } else {
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        // adj[i][j] = (-1)^{i+j} · minor with row j and column i removed
                        let rows: Vec<usize> = (0..size).filter(|&r| r != j).collect();
                        let cols: Vec<usize> = (0..size).filter(|&c| c != i).collect();
                        let d = det_by_minors(&submatrix(m, &rows, &cols));
                        if (i + j) % 2 == 0 {
                            d
                        } else {
                            d.neg_ref()
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let det = det_by_minors(m);
    let prod = crate::ring::mat_mul(m, &adj);
    for (i, row) in prod.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let expected = if i == j { det.clone() } else { ExactScalar::zero() };
            assert_eq!(*x, expected, "M·adj(M) != det(M)·I");
        }
    }
    Ok(adj)
}

/// Moves the block hyperplanes to the coordinate hyperplanes: every row r is
/// replaced by r·adj(M), M being the block rows in the given order. Block row
/// j becomes det(M)·e_j.
pub fn normalize_block(f: &HyperplaneFamily, block: &[usize]) -> Result<HyperplaneFamily> {
    if block.len() != f.n + 1 || block.iter().any(|&i| i >= f.len()) || !block.iter().all_unique() {
        return Err(Error::Shape(format!("block must list {} distinct hyperplane indices", f.n + 1)));
    }
    let m: Matrix<ExactScalar> = block.iter().map(|&i| f.rows[i].clone()).collect();
    let det = det_by_minors(&m);
    if det.is_zero() {
        return Err(Error::Singular(format!("block {block:?} is not independent")));
    }
    let adj = adjugate(&m)?;
    let rows: Matrix<ExactScalar> = f.rows.iter().map(|r| vec_mat(r, &adj)).collect();
    for (j, &i) in block.iter().enumerate() {
        debug_assert!(rows[i].iter().enumerate().all(|(c, x)| if c == j { *x == det } else { x.is_zero() }));
    }
    HyperplaneFamily::new(f.n, rows)
}
