//! Sparse Laurent polynomials in η_1 … η_t over [`ExactScalar`], monomial
//! units, and the symbolic determinants built from them.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration and
//! printing follow lexicographic exponent order and zero coefficients are
//! never stored. The same type doubles as the ordinary polynomial ring in
//! g_0 … g_n: those are simply Laurent polynomials whose exponents happen to
//! be non-negative.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::ring::{det_by_minors, is_square, Ring};
use crate::scalar::ExactScalar;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    dim: usize,
    terms: BTreeMap<ExponentVector, ExactScalar>,
}

/// Selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        LaurentPoly { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: ExactScalar) -> Self {
        Self::monomial(c, ExponentVector::zero(dim))
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, ExactScalar::one())
    }

    pub fn monomial(c: ExactScalar, exponents: ExponentVector) -> Self {
        let dim = exponents.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        LaurentPoly { dim, terms }
    }

    /// The variable η_i (0-based).
    pub fn variable(dim: usize, i: usize) -> Self {
        Self::monomial(ExactScalar::one(), ExponentVector::unit(dim, i))
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (ExponentVector, ExactScalar)>) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            if e.dim() != dim {
                return Err(Error::Dimension { expected: dim, got: e.dim() });
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> ExactScalar {
        self.terms.get(e).cloned().unwrap_or_else(ExactScalar::zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension { expected: self.dim, got: other.dim });
        }
        Ok(())
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "Laurent dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        LaurentPoly { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect() }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "Laurent dimension mismatch");
        let mut out = Self::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        LaurentPoly { dim: self.dim, terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul_ref(c))).collect() }
    }

    /// Multiplies by η^e.
    pub fn shift(&self, e: &ExponentVector) -> Self {
        assert_eq!(self.dim, e.dim(), "Laurent dimension mismatch");
        LaurentPoly { dim: self.dim, terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect() }
    }

    /// Degrees of all terms, when they agree.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|e| e.0.iter().sum::<i64>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.0.iter().any(|&x| x < 0))
    }

    /// Exact value at a point. A zero coordinate is allowed only where every
    /// term has a non-negative exponent on it.
    pub fn evaluate(&self, point: &[ExactScalar]) -> Result<ExactScalar> {
        if point.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: point.len() });
        }
        for (i, x) in point.iter().enumerate() {
            if x.is_zero() && self.terms.keys().any(|e| e.0[i] < 0) {
                return Err(Error::ZeroToNegativePower { index: i });
            }
        }
        let mut acc = ExactScalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k != 0 {
                    term = term.mul_ref(&x.pow(k)?);
                }
            }
            acc = acc.add_ref(&term);
        }
        Ok(acc)
    }

    /// Substitutes a value for the single variable `var`, keeping the
    /// dimension (the variable's exponent becomes 0 everywhere).
    pub fn specialize(&self, var: usize, value: &ExactScalar) -> Result<Self> {
        if var >= self.dim {
            return Err(Error::Dimension { expected: self.dim, got: var + 1 });
        }
        if value.is_zero() && self.terms.keys().any(|e| e.0[var] < 0) {
            return Err(Error::ZeroToNegativePower { index: var });
        }
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            let mut key = e.clone();
            let k = std::mem::replace(&mut key.0[var], 0);
            out.add_term(key, &c.mul_ref(&value.pow(k)?));
        }
        Ok(out)
    }

    /// Parses the line format produced by `Display`: one `c * e1 … et` line per term.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        let mut p = Self::zero(dim);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (coef, exps) = line
                .rsplit_once(" *")
                .ok_or_else(|| Error::Parse { literal: line.into(), reason: "expected 'c * e1 ... et'".into() })?;
            let c: ExactScalar = coef.parse()?;
            let exps = exps
                .split_whitespace()
                .map(|x| x.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Parse { literal: line.into(), reason: "bad exponent".into() })?;
            if exps.len() != dim {
                return Err(Error::Dimension { expected: dim, got: exps.len() });
            }
            p.add_term(ExponentVector(exps), &c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} *")?;
            for x in &e.0 {
                write!(f, " {x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "LaurentPoly(dim={}, 0)", self.dim);
        }
        write!(f, "LaurentPoly(dim={}, ", self.dim)?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*η^{e:?}")?;
        }
        f.write_str(")")
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.dim)
    }
    fn one_like(&self) -> Self {
        Self::one(self.dim)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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

/// Checked ring arithmetic.
pub fn poly_arith(p: &LaurentPoly, q: &LaurentPoly, op: PolyOp) -> Result<LaurentPoly> {
    p.check_dim(q)?;
    Ok(match op {
        PolyOp::Add => p.add_ref(q),
        PolyOp::Sub => p.sub_ref(q),
        PolyOp::Mul => p.mul_ref(q),
    })
}

fn check_matrix(m: &[Vec<LaurentPoly>]) -> Result<usize> {
    if m.is_empty() || !is_square(m) {
        return Err(Error::Shape(format!(
            "expected a non-empty square matrix, got {} rows of lengths {:?}",
            m.len(),
            m.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    let dim = m[0][0].dim();
    if let Some(bad) = m.iter().flatten().find(|p| p.dim() != dim) {
        return Err(Error::Dimension { expected: dim, got: bad.dim() });
    }
    Ok(dim)
}

/// Determinant over the Laurent ring; the result is zero exactly when the
/// determinant vanishes identically.
pub fn det_laurent(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    check_matrix(m)?;
    Ok(det_by_minors(m))
}

/// Determinant of a matrix of linear forms in g_0 … g_n (n + 1 = matrix
/// size). The result is zero or homogeneous of degree n + 1.
pub fn det_poly_in_g(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let dim = check_matrix(m)?;
    if dim != m.len() {
        return Err(Error::Dimension { expected: m.len(), got: dim });
    }
    for p in m.iter().flatten() {
        if p.has_negative_exponents() || !(p.is_zero() || p.homogeneous_degree() == Some(1)) {
            return Err(Error::Precondition(format!("entry {p:?} is not a linear form in g")));
        }
    }
    let det = det_by_minors(m);
    assert!(
        det.is_zero() || det.homogeneous_degree() == Some(m.len() as i64),
        "determinant of linear forms is not homogeneous"
    );
    Ok(det)
}

/// c·η^e with c ≠ 0.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MonomialUnit {
    constant: ExactScalar,
    exponents: ExponentVector,
}

impl MonomialUnit {
    pub fn new(constant: ExactScalar, exponents: ExponentVector) -> Result<Self> {
        if constant.is_zero() {
            return Err(Error::Precondition("monomial unit with zero constant".into()));
        }
        Ok(MonomialUnit { constant, exponents })
    }

    pub fn pure(exponents: ExponentVector) -> Self {
        MonomialUnit { constant: ExactScalar::one(), exponents }
    }

    pub fn constant(&self) -> &ExactScalar {
        &self.constant
    }

    pub fn exponents(&self) -> &ExponentVector {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.dim()
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.constant.clone(), self.exponents.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        MonomialUnit { constant: self.constant.mul_ref(&other.constant), exponents: &self.exponents + &other.exponents }
    }

    pub fn inv(&self) -> Self {
        MonomialUnit { constant: self.constant.inv().expect("unit constant is non-zero"), exponents: -&self.exponents }
    }
}

/// Terms sharing one exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelGroup {
    pub exponents: ExponentVector,
    pub indices: Vec<usize>,
    pub constant_sum: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelReport {
    pub is_zero: bool,
    /// Partition of term indices by exponent vector, in lexicographic order.
    pub groups: Vec<BorelGroup>,
}

/// Decides whether a sum of monomial units vanishes by grouping terms with
/// equal exponents: the sum is zero exactly when every group's constants
/// cancel, and a singleton group can never cancel.
pub fn borel_check(terms: &[MonomialUnit]) -> Result<BorelReport> {
    let dim = terms.first().map_or(0, MonomialUnit::dim);
    if let Some(bad) = terms.iter().find(|t| t.dim() != dim) {
        return Err(Error::Dimension { expected: dim, got: bad.dim() });
    }
    let mut by_exponent: BTreeMap<ExponentVector, (Vec<usize>, ExactScalar)> = BTreeMap::new();
    for (i, t) in terms.iter().enumerate() {
        let slot = by_exponent.entry(t.exponents.clone()).or_insert_with(|| (vec![], ExactScalar::zero()));
        slot.0.push(i);
        slot.1 = slot.1.add_ref(&t.constant);
    }
    let groups: Vec<BorelGroup> = by_exponent
        .into_iter()
        .map(|(exponents, (indices, constant_sum))| BorelGroup { exponents, indices, constant_sum })
        .collect();
    let is_zero = groups.iter().all(|g| g.constant_sum.is_zero());
    if is_zero {
        assert!(groups.iter().all(|g| g.indices.len() >= 2), "a single non-zero unit cancelled");
    }
    let direct = terms.iter().fold(LaurentPoly::zero(dim), |acc, t| acc.add_ref(&t.to_poly()));
    assert_eq!(is_zero, direct.is_zero(), "group cancellation disagrees with the Laurent sum");
    Ok(BorelReport { is_zero, groups })
}

/// Substitutes X_j ↦ c_j·η^{l_j} into a polynomial in X_1 … X_t.
pub fn substitute_monomials(p: &LaurentPoly, units: &[MonomialUnit]) -> Result<LaurentPoly> {
    if p.dim() != units.len() {
        return Err(Error::Shape(format!("polynomial in {} variables, {} units given", p.dim(), units.len())));
    }
    let out_dim = units.first().map_or(0, MonomialUnit::dim);
    if let Some(bad) = units.iter().find(|u| u.dim() != out_dim) {
        return Err(Error::Dimension { expected: out_dim, got: bad.dim() });
    }
    let mut out = LaurentPoly::zero(out_dim);
    for (e, c) in p.terms() {
        let mut coef = c.clone();
        let mut exps = ExponentVector::zero(out_dim);
        for (u, &k) in units.iter().zip(&e.0) {
            if k == 0 {
                continue;
            }
            coef = coef.mul_ref(&u.constant.pow(k)?);
            for (acc, &l) in exps.0.iter_mut().zip(&u.exponents.0) {
                *acc += k * l;
            }
        }
        out.add_term(exps, &coef);
    }
    Ok(out)
}

/// Evaluates `p` at `point`.
pub fn evaluate(p: &LaurentPoly, point: &[ExactScalar]) -> Result<ExactScalar> {
    p.evaluate(point)
}
