//! The (t+1)×(t+1) determinant whose identical vanishing pins the constants
//! down to roots of unity or signs, and the 2(t+1)×2(t+1) block determinant
//! it is extracted from.

use serde::{Deserialize, Serialize};

use super::first_vanishing_minor;
use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::laurent::{det_laurent, LaurentPoly, MonomialUnit};
use crate::ring::{is_square, Matrix};
use crate::scalar::{root_of_unity, ExactScalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FujimotoShape {
    pub t: usize,
    pub k: usize,
    /// a_1 < … < a_k in [1, t]; row i (0-based, i < k) carries the product
    /// η_{a_{i−1}+1} ⋯ η_{a_i}, with a_0 = 0.
    pub breakpoints: Vec<usize>,
    /// c_1 … c_{t+1}, stored 0-based.
    pub constants: Vec<ExactScalar>,
}

impl FujimotoShape {
    pub fn new(t: usize, breakpoints: Vec<usize>, constants: Vec<ExactScalar>) -> Result<Self> {
        let k = breakpoints.len();
        if t < 1 || k < 1 || k > t {
            return Err(Error::Parameters(format!("need 1 <= k <= t, got k={k}, t={t}")));
        }
        if breakpoints[0] < 1 || breakpoints.windows(2).any(|w| w[0] >= w[1]) || breakpoints[k - 1] > t {
            return Err(Error::Parameters(format!("breakpoints {breakpoints:?} must increase strictly within [1, {t}]")));
        }
        if constants.len() != t + 1 {
            return Err(Error::Shape(format!("{} constants for t = {t}", constants.len())));
        }
        if let Some(i) = constants.iter().position(ExactScalar::is_zero) {
            return Err(Error::Parameters(format!("constant c_{} is zero", i + 1)));
        }
        Ok(FujimotoShape { t, k, breakpoints, constants })
    }

    /// Exponent vector of η̃_i for row i < k.
    pub fn eta_tilde(&self, i: usize) -> ExponentVector {
        let start = if i == 0 { 0 } else { self.breakpoints[i - 1] };
        let mut e = vec![0; self.t];
        for x in &mut e[start..self.breakpoints[i]] {
            *x = 1;
        }
        ExponentVector(e)
    }
}

fn check_matrix(shape: &FujimotoShape, a: &[Vec<ExactScalar>]) -> Result<()> {
    if a.len() != shape.t + 1 || !is_square(a) {
        return Err(Error::Shape(format!("expected a {0}×{0} coefficient matrix", shape.t + 1)));
    }
    if let Some((rows, cols)) = first_vanishing_minor(a) {
        return Err(Error::VanishingMinor { rows, cols });
    }
    Ok(())
}

/// The symbolic matrix: row i < k has entries a_ij·(c_i − η̃_i·η_j), rows
/// i ≥ k have a_ij·(c_i − η_j), where η_0 stands for 1.
pub fn fujimoto_matrix(shape: &FujimotoShape, a: &[Vec<ExactScalar>]) -> Result<Matrix<LaurentPoly>> {
    check_matrix(shape, a)?;
    let t = shape.t;
    let eta = |j: usize| if j == 0 { ExponentVector::zero(t) } else { ExponentVector::unit(t, j - 1) };
    Ok((0..=t)
        .map(|i| {
            let tilde = if i < shape.k { shape.eta_tilde(i) } else { ExponentVector::zero(t) };
            (0..=t)
                .map(|j| {
                    let c = LaurentPoly::constant(t, shape.constants[i].clone());
                    let m = LaurentPoly::monomial(ExactScalar::one(), &tilde + &eta(j));
                    c.sub_ref(&m).scale(&a[i][j])
                })
                .collect()
        })
        .collect())
}

pub fn fujimoto_determinant(shape: &FujimotoShape, a: &[Vec<ExactScalar>]) -> Result<LaurentPoly> {
    det_laurent(&fujimoto_matrix(shape, a)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma41Case {
    Alpha,
    Beta,
    /// At t = 1 the two cases describe the same constants.
    AlphaAndBeta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma41Report {
    pub vanishes: bool,
    pub case: Option<Lemma41Case>,
    pub consistent: bool,
}

fn is_alpha(shape: &FujimotoShape) -> bool {
    let t = shape.t as u32;
    if shape.k != 1 || !shape.constants[0].is_one() {
        return false;
    }
    let mut want: Vec<ExactScalar> = (1..=t).map(|m| root_of_unity(t + 1, m as i64)).collect();
    for c in &shape.constants[1..] {
        match want.iter().position(|w| w == c) {
            Some(p) => {
                want.swap_remove(p);
            }
            None => return false,
        }
    }
    want.is_empty()
}

fn is_beta(shape: &FujimotoShape) -> bool {
    let t = shape.t;
    let sign = ExactScalar::from_integer(if t.is_multiple_of(2) { 1 } else { -1 });
    shape.k == t && shape.constants[..t].iter().all(ExactScalar::is_one) && shape.constants[t] == sign
}

/// Computes whether the determinant vanishes identically and, if so, whether
/// the shape and constants fall under one of the two admissible cases.
pub fn lemma41_forward_check(shape: &FujimotoShape, a: &[Vec<ExactScalar>]) -> Result<Lemma41Report> {
    let vanishes = fujimoto_determinant(shape, a)?.is_zero();
    if !vanishes {
        return Ok(Lemma41Report { vanishes, case: None, consistent: true });
    }
    let case = match (is_alpha(shape), is_beta(shape)) {
        (true, true) => Some(Lemma41Case::AlphaAndBeta),
        (true, false) => Some(Lemma41Case::Alpha),
        (false, true) => Some(Lemma41Case::Beta),
        (false, false) => None,
    };
    let consistent = shape.breakpoints[shape.k - 1] == shape.t && case.is_some();
    Ok(Lemma41Report { vanishes, case, consistent })
}

/// The 2t+2 rows entering the block determinant: `top` holds the t+1
/// hyperplanes carrying the constants, `bottom` the t+1 hyperplanes moved to
/// coordinate hyperplanes, each row with its unit h_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRows {
    pub top: Matrix<ExactScalar>,
    pub top_units: Vec<MonomialUnit>,
    pub bottom: Matrix<ExactScalar>,
    pub bottom_units: Vec<MonomialUnit>,
}

impl BlockRows {
    /// Rows for a shape: h_i = c_i·η̃_i^{-1} for i < k, h_i = c_i otherwise,
    /// and the bottom block is the identity with units 1, η_1, …, η_t.
    pub fn from_shape(shape: &FujimotoShape, a: &[Vec<ExactScalar>]) -> Result<Self> {
        check_matrix(shape, a)?;
        let t = shape.t;
        let top_units = (0..=t)
            .map(|i| {
                let e = if i < shape.k { -&shape.eta_tilde(i) } else { ExponentVector::zero(t) };
                MonomialUnit::new(shape.constants[i].clone(), e)
            })
            .collect::<Result<Vec<_>>>()?;
        let bottom = (0..=t).map(|i| (0..=t).map(|j| ExactScalar::from_integer((i == j) as i64)).collect()).collect();
        let bottom_units = (0..=t)
            .map(|i| MonomialUnit::pure(if i == 0 { ExponentVector::zero(t) } else { ExponentVector::unit(t, i - 1) }))
            .collect();
        Ok(BlockRows { top: a.to_vec(), top_units, bottom, bottom_units })
    }
}

/// The 2(t+1)×2(t+1) determinant with rows (a_i, a_i·h_i) over both blocks.
/// Equals `step4_factor(shape)` times the matching [`fujimoto_determinant`].
pub fn reduce_block_determinant(t: usize, rows: &BlockRows) -> Result<LaurentPoly> {
    let size = t + 1;
    let square = |m: &Matrix<ExactScalar>| m.len() == size && m.iter().all(|r| r.len() == size);
    if !square(&rows.top) || !square(&rows.bottom) || rows.top_units.len() != size || rows.bottom_units.len() != size {
        return Err(Error::Shape(format!("block rows must be {size}×{size} with {size} units each")));
    }
    for (i, row) in rows.bottom.iter().enumerate() {
        if row.iter().enumerate().any(|(j, x)| *x != ExactScalar::from_integer((i == j) as i64)) {
            return Err(Error::Precondition(format!("bottom row {i} is not the coordinate vector e_{i}")));
        }
        let want = if i == 0 { ExponentVector::zero(t) } else { ExponentVector::unit(t, i - 1) };
        let u = &rows.bottom_units[i];
        if !u.constant().is_one() || *u.exponents() != want {
            return Err(Error::Precondition(format!("bottom unit {i} must be η_{i} (η_0 = 1)")));
        }
    }
    if let Some(bad) = rows.top_units.iter().find(|u| u.dim() != t) {
        return Err(Error::Dimension { expected: t, got: bad.dim() });
    }
    let m: Matrix<LaurentPoly> = rows
        .top
        .iter()
        .zip(&rows.top_units)
        .chain(rows.bottom.iter().zip(&rows.bottom_units))
        .map(|(row, u)| {
            let h = u.to_poly();
            row.iter()
                .map(|x| LaurentPoly::constant(t, x.clone()))
                .chain(row.iter().map(|x| h.scale(x)))
                .collect()
        })
        .collect();
    det_laurent(&m)
}

/// The unit (−1)^{t+1}·∏_{i<k} η̃_i^{-1} relating the block determinant to
/// the Fujimoto determinant.
pub fn step4_factor(shape: &FujimotoShape) -> MonomialUnit {
    let sign = if (shape.t + 1).is_multiple_of(2) { 1 } else { -1 };
    let e = (0..shape.k).fold(ExponentVector::zero(shape.t), |acc, i| &acc - &shape.eta_tilde(i));
    MonomialUnit::new(ExactScalar::from_integer(sign), e).expect("non-zero sign")
}
