//! Tuples in a torsion-free abelian group, modelled additively as integer
//! exponent vectors.
//!
//! An element `c·η_1^{l_1}⋯η_t^{l_t}` of the unit group modulo constants is
//! the vector `(l_1, …, l_t)`; products become sums and the unit element is
//! the zero vector. Every combinatorial statement about such tuples is then a
//! finite check over integer vectors.

mod classify;
pub mod hnf;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classify::{classify, pattern, ClassKind, Classification};

/// Largest tuple length accepted by the subset enumerations.
pub const MAX_TUPLE_LEN: usize = 12;
/// Largest ambient dimension accepted by the subset enumerations.
pub const MAX_AMBIENT_DIM: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), rhs.dim(), "exponent vectors of different length");
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), rhs.dim(), "exponent vectors of different length");
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

/// A q-tuple of group elements sharing one ambient dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupTuple {
    dim: usize,
    elements: Vec<ExponentVector>,
}

impl GroupTuple {
    pub fn new(dim: usize, elements: Vec<ExponentVector>) -> Result<Self> {
        if let Some(bad) = elements.iter().find(|e| e.dim() != dim) {
            return Err(Error::Dimension { expected: dim, got: bad.dim() });
        }
        Ok(GroupTuple { dim, elements })
    }

    /// Infers the ambient dimension from the first element (0 for an empty tuple).
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows.first().map_or(0, Vec::len);
        Self::new(dim, rows.into_iter().map(ExponentVector).collect())
    }

    /// One-dimensional tuple from plain integers.
    pub fn scalars(values: &[i64]) -> Self {
        GroupTuple { dim: 1, elements: values.iter().map(|&v| ExponentVector(vec![v])).collect() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[ExponentVector] {
        &self.elements
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.elements.iter().map(|e| e.0.clone()).collect()
    }

    pub fn contains_identity(&self) -> bool {
        self.elements.iter().any(ExponentVector::is_zero)
    }

    /// Applies `f` to every element.
    pub fn map(&self, dim: usize, f: impl Fn(&ExponentVector) -> ExponentVector) -> Result<Self> {
        Self::new(dim, self.elements.iter().map(f).collect())
    }

    /// Canonical basis of the generated subgroup.
    pub fn subgroup_basis(&self) -> Vec<Vec<num_bigint::BigInt>> {
        hnf::hermite_normal_form(&self.rows(), self.dim)
    }
}

/// Rank of the subgroup of Z^t generated by the tuple, read off the Hermite
/// normal form.
pub fn tuple_rank(a: &GroupTuple) -> usize {
    a.subgroup_basis().len()
}

fn check_limits(a: &GroupTuple) -> Result<()> {
    if a.len() > MAX_TUPLE_LEN {
        return Err(Error::SizeLimit(format!("tuple length {} exceeds {MAX_TUPLE_LEN}", a.len())));
    }
    if a.dim() > MAX_AMBIENT_DIM {
        return Err(Error::SizeLimit(format!("ambient dimension {} exceeds {MAX_AMBIENT_DIM}", a.dim())));
    }
    Ok(())
}

fn check_rs(q: usize, r: usize, s: usize) -> Result<()> {
    if !(q >= r && r > s && s >= 1) {
        return Err(Error::Parameters(format!("need q >= r > s >= 1, got q={q}, r={r}, s={s}")));
    }
    Ok(())
}

/// Whether every s-subset sum inside `chosen` is attained by a second,
/// different s-subset.
fn sums_all_repeated(elements: &[ExponentVector], chosen: &[usize], s: usize) -> bool {
    let mut counts: HashMap<ExponentVector, u32> = HashMap::new();
    for subset in chosen.iter().combinations(s) {
        let mut sum = ExponentVector::zero(elements[0].dim());
        for &&i in &subset {
            for (acc, x) in sum.0.iter_mut().zip(&elements[i].0) {
                *acc += x;
            }
        }
        *counts.entry(sum).or_default() += 1;
    }
    counts.values().all(|&c| c >= 2)
}

/// Property (P_{r,s}): within any r elements of the tuple, every sum of s of
/// them equals the sum over some other s-subset of the same r elements.
pub fn has_property(a: &GroupTuple, r: usize, s: usize) -> Result<bool> {
    check_rs(a.len(), r, s)?;
    check_limits(a)?;
    Ok((0..a.len()).combinations(r).all(|chosen| sums_all_repeated(&a.elements, &chosen, s)))
}

/// Some element value occurs at least q − r + 2 times.
pub fn collapse_conclusion(a: &GroupTuple, r: usize, s: usize) -> Result<bool> {
    check_rs(a.len(), r, s)?;
    let needed = a.len() - r + 2;
    Ok(max_multiplicity(a) >= needed)
}

pub fn max_multiplicity(a: &GroupTuple) -> usize {
    a.elements.iter().counts().into_values().max().unwrap_or(0)
}

/// Whether the subgroups generated by `a` and `b` coincide, where
/// `a_i = shift + b_i` and both tuples contain the identity. Under those
/// hypotheses the answer is always `true`; the function checks it rather than
/// assuming it.
pub fn same_subgroup(a: &GroupTuple, b: &GroupTuple, shift: &ExponentVector) -> Result<bool> {
    if a.len() != b.len() || a.dim() != b.dim() || shift.dim() != a.dim() {
        return Err(Error::Shape(format!(
            "tuples of length {}/{} and dimension {}/{} with shift of dimension {}",
            a.len(),
            b.len(),
            a.dim(),
            b.dim(),
            shift.dim()
        )));
    }
    if let Some(i) = (0..a.len()).find(|&i| a.elements[i] != shift + &b.elements[i]) {
        return Err(Error::Precondition(format!("a[{i}] != shift + b[{i}]")));
    }
    if !a.contains_identity() || !b.contains_identity() {
        return Err(Error::Precondition("both tuples must contain the identity".into()));
    }
    Ok(a.subgroup_basis() == b.subgroup_basis())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(rows: &[&[i64]]) -> GroupTuple {
        GroupTuple::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(tuple_rank(&tuple(&[&[1, 0], &[0, 1], &[1, 1]])), 2);
        assert_eq!(tuple_rank(&tuple(&[&[2, 4], &[1, 2]])), 1);
        assert_eq!(tuple_rank(&tuple(&[&[0, 0]])), 0);
    }

    #[test]
    fn property_examples() {
        assert!(has_property(&GroupTuple::scalars(&[0, 0, 1, -1]), 4, 2).unwrap());
        assert!(!has_property(&GroupTuple::scalars(&[0, 0, 1, 1]), 4, 2).unwrap());
        let zeros = GroupTuple::scalars(&[0; 5]);
        for (r, s) in [(2, 1), (3, 1), (3, 2), (5, 4), (4, 2)] {
            assert!(has_property(&zeros, r, s).unwrap());
        }
    }

    #[test]
    fn property_parameter_errors() {
        let a = GroupTuple::scalars(&[0, 1, 2]);
        assert!(matches!(has_property(&a, 2, 2), Err(Error::Parameters(_))));
        assert!(matches!(has_property(&a, 4, 2), Err(Error::Parameters(_))));
        assert!(matches!(has_property(&a, 2, 0), Err(Error::Parameters(_))));
        let big = GroupTuple::scalars(&[0; 13]);
        assert!(matches!(has_property(&big, 3, 2), Err(Error::SizeLimit(_))));
        let wide = GroupTuple::from_rows(vec![vec![0; 5]; 3]).unwrap();
        assert!(matches!(has_property(&wide, 3, 2), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn collapse_examples() {
        assert!(collapse_conclusion(&GroupTuple::scalars(&[0, 0, 0, 0]), 3, 2).unwrap());
        assert!(collapse_conclusion(&GroupTuple::scalars(&[0, 0, 0, 5]), 3, 2).unwrap());
        assert!(!collapse_conclusion(&GroupTuple::scalars(&[0, 1, 2, 3]), 4, 2).unwrap());
        assert!(collapse_conclusion(&GroupTuple::scalars(&[0, 1]), 3, 2).is_err());
    }

    #[test]
    fn same_subgroup_examples() {
        let a = GroupTuple::scalars(&[0, 1]);
        let b = GroupTuple::scalars(&[-1, 0]);
        assert!(same_subgroup(&a, &b, &ExponentVector(vec![1])).unwrap());
        let a = GroupTuple::scalars(&[0, 2]);
        let b = GroupTuple::scalars(&[-2, 0]);
        assert!(same_subgroup(&a, &b, &ExponentVector(vec![2])).unwrap());
        let z = GroupTuple::scalars(&[0, 0, 0]);
        assert!(same_subgroup(&z, &z, &ExponentVector(vec![0])).unwrap());
    }

    #[test]
    fn same_subgroup_errors() {
        let a = GroupTuple::scalars(&[0, 1]);
        let b = GroupTuple::scalars(&[0, 1, 2]);
        assert!(matches!(same_subgroup(&a, &b, &ExponentVector(vec![0])), Err(Error::Shape(_))));
        let b = GroupTuple::scalars(&[0, 2]);
        assert!(matches!(same_subgroup(&a, &b, &ExponentVector(vec![0])), Err(Error::Precondition(_))));
        let a = GroupTuple::scalars(&[1, 2]);
        let b = GroupTuple::scalars(&[0, 1]);
        assert!(matches!(same_subgroup(&a, &b, &ExponentVector(vec![1])), Err(Error::Precondition(_))));
    }
}
