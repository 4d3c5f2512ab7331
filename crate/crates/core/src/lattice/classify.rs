//! Normal forms for tuples with property (P_{q,s}) whose rank is s − 1.
//!
//! After a shift by a common element and a reindexing, such a tuple is one of
//!
//! * type A (s odd): `0, 0, β1, β1, …, β_{s−1}, β_{s−1}`
//! * type B: `0 ×(s+1−k), β1, …, β_{s−1}, −(β1+…+β_{a1}), −(β_{a1+1}+…+β_{a2}), …`
//!
//! with `β1 … β_{s−1}` a basis of the generated subgroup. [`classify`] finds a
//! witness by search and checks it before returning.

use std::collections::HashSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{has_property, tuple_rank, ExponentVector, GroupTuple};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    TypeA,
    TypeB,
    RankDeficit,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: ClassKind,
    pub k: usize,
    pub breakpoints: Vec<usize>,
    pub basis: Vec<ExponentVector>,
    /// `reindexing[p]` is the original (0-based) index placed at pattern position `p`.
    pub reindexing: Vec<usize>,
}

impl Classification {
    fn bare(kind: ClassKind) -> Self {
        Classification { kind, k: 0, breakpoints: vec![], basis: vec![], reindexing: vec![] }
    }

    /// Re-substitutes the witness: the reindexed tuple must equal the pattern
    /// up to one global shift, and the basis must be a basis of the subgroup
    /// generated by the tuple.
    pub fn verify(&self, a: &GroupTuple, s: usize) -> bool {
        if !matches!(self.kind, ClassKind::TypeA | ClassKind::TypeB) {
            return true;
        }
        let q = a.len();
        if q != 2 * s || self.basis.len() != s - 1 || self.k != self.breakpoints.len() {
            return false;
        }
        if self.kind == ClassKind::TypeA && (s.is_multiple_of(2) || self.k != 0) {
            return false;
        }
        let increasing = self.breakpoints.windows(2).all(|w| w[0] < w[1]);
        let in_range = self.breakpoints.iter().all(|&b| (1..s).contains(&b));
        if !increasing || !in_range || self.k > s - 1 {
            return false;
        }
        let mut seen = self.reindexing.clone();
        seen.sort_unstable();
        if seen != (0..q).collect::<Vec<_>>() {
            return false;
        }
        if self.basis.iter().any(|b| b.dim() != a.dim()) {
            return false;
        }
        let basis = match GroupTuple::new(a.dim(), self.basis.clone()) {
            Ok(b) => b,
            Err(_) => return false,
        };
        if tuple_rank(&basis) != s - 1 || basis.subgroup_basis() != a.subgroup_basis() {
            return false;
        }
        let pat = pattern(self.kind, s, &self.breakpoints, &self.basis);
        let shift = &a.elements()[self.reindexing[0]] - &pat[0];
        pat.iter().zip(&self.reindexing).all(|(p, &i)| a.elements()[i] == &shift + p)
    }
}

/// The pattern tuple (in additive notation, unshifted) for a witness.
pub fn pattern(kind: ClassKind, s: usize, breakpoints: &[usize], basis: &[ExponentVector]) -> Vec<ExponentVector> {
    let dim = basis.first().map_or(0, ExponentVector::dim);
    let zero = ExponentVector::zero(dim);
    match kind {
        ClassKind::TypeA => {
            let mut out = vec![zero.clone(), zero];
            for b in basis {
                out.push(b.clone());
                out.push(b.clone());
            }
            out
        }
        ClassKind::TypeB => {
            let k = breakpoints.len();
            let mut out = vec![zero.clone(); s + 1 - k];
            out.extend(basis.iter().cloned());
            let mut start = 0;
            for &end in breakpoints {
                let block = basis[start..end].iter().fold(zero.clone(), |acc, b| &acc + b);
                out.push(-&block);
                start = end;
            }
            out
        }
        ClassKind::RankDeficit | ClassKind::NotApplicable => vec![],
    }
}

/// Lexicographically smallest assignment of original indices to pattern
/// positions, given the shifted tuple `shifted` (same values as the pattern).
fn assign(shifted: &[ExponentVector], pat: &[ExponentVector]) -> Option<Vec<usize>> {
    let mut used = vec![false; shifted.len()];
    let mut out = Vec::with_capacity(pat.len());
    for p in pat {
        let i = (0..shifted.len()).find(|&i| !used[i] && &shifted[i] == p)?;
        used[i] = true;
        out.push(i);
    }
    Some(out)
}

type Candidate = (Vec<usize>, Vec<ExponentVector>, Vec<usize>);

fn type_a_candidates(a: &GroupTuple, s: usize, shift: &ExponentVector, out: &mut Vec<Candidate>) {
    let shifted: Vec<ExponentVector> = a.elements().iter().map(|e| e - shift).collect();
    let counts = shifted.iter().counts();
    if counts.values().any(|&c| c != 2) || counts.len() != s {
        return;
    }
    if counts.get(&ExponentVector::zero(a.dim())) != Some(&2) {
        return;
    }
    let nonzero: Vec<ExponentVector> = counts.keys().filter(|e| !e.is_zero()).map(|&e| e.clone()).sorted().collect();
    for basis in nonzero.iter().cloned().permutations(s - 1) {
        let pat = pattern(ClassKind::TypeA, s, &[], &basis);
        if let Some(reindexing) = assign(&shifted, &pat) {
            out.push((reindexing, basis, vec![]));
        }
    }
}

fn type_b_candidates(a: &GroupTuple, s: usize, shift: &ExponentVector, out: &mut Vec<Candidate>) {
    let shifted: Vec<ExponentVector> = a.elements().iter().map(|e| e - shift).collect();
    let zeros = shifted.iter().filter(|e| e.is_zero()).count();
    if zeros < 2 || zeros > s + 1 {
        return;
    }
    let k = s + 1 - zeros;
    let nonzero: Vec<ExponentVector> = shifted.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut tried: HashSet<Vec<ExponentVector>> = HashSet::new();
    for picks in (0..nonzero.len()).permutations(s - 1) {
        let basis: Vec<ExponentVector> = picks.iter().map(|&i| nonzero[i].clone()).collect();
        if !tried.insert(basis.clone()) {
            continue;
        }
        if basis.iter().duplicates().next().is_some() {
            continue;
        }
        for breakpoints in (1..s).combinations(k) {
            let pat = pattern(ClassKind::TypeB, s, &breakpoints, &basis);
            if let Some(reindexing) = assign(&shifted, &pat) {
                out.push((reindexing, basis.clone(), breakpoints));
            }
        }
    }
}

/// Classifies a tuple with property (P_{q,s}) that contains the identity.
///
/// Inputs outside `2 ≤ s < q ≤ 2s`, without the identity, or without the
/// property are reported as `NotApplicable`. Rank below s − 1 is
/// `RankDeficit`. At rank s − 1 a type A witness is returned when one exists,
/// otherwise a type B witness; ties are broken by the smallest reindexing,
/// then the smallest basis. A rank above s − 1, or a rank of s − 1 with no
/// witness, contradicts the classification and comes back as
/// [`Error::Counterexample`].
pub fn classify(a: &GroupTuple, s: usize) -> Result<Classification> {
    let q = a.len();
    if !(2 <= s && s < q && q <= 2 * s) || !a.contains_identity() {
        return Ok(Classification::bare(ClassKind::NotApplicable));
    }
    if !has_property(a, q, s)? {
        return Ok(Classification::bare(ClassKind::NotApplicable));
    }
    let rank = tuple_rank(a);
    if rank < s - 1 {
        return Ok(Classification::bare(ClassKind::RankDeficit));
    }
    if rank > s - 1 {
        return Err(Error::Counterexample(format!("rank {rank} exceeds s - 1 = {} for {:?}", s - 1, a.elements())));
    }
    if q != 2 * s {
        return Err(Error::Counterexample(format!("rank s - 1 with q = {q} != 2s for {:?}", a.elements())));
    }
    let shifts: Vec<ExponentVector> = a.elements().iter().cloned().sorted().dedup().collect();
    for kind in [ClassKind::TypeA, ClassKind::TypeB] {
        if kind == ClassKind::TypeA && s.is_multiple_of(2) {
            continue;
        }
        let mut candidates = Vec::new();
        for shift in &shifts {
            match kind {
                ClassKind::TypeA => type_a_candidates(a, s, shift, &mut candidates),
                _ => type_b_candidates(a, s, shift, &mut candidates),
            }
        }
        if let Some((reindexing, basis, breakpoints)) = candidates.into_iter().min() {
            let found = Classification { kind, k: breakpoints.len(), breakpoints, basis, reindexing };
            if !found.verify(a, s) {
                return Err(Error::Counterexample(format!("witness failed re-substitution: {found:?}")));
            }
            return Ok(found);
        }
    }
    Err(Error::Counterexample(format!("no type A/B witness for {:?} with s = {s}", a.elements())))
}
