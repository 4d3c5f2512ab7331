//! The determinant identities behind the exceptional set V and the
//! genericity certificate built on them.

mod certify;
mod fujimoto;
mod pairing;
mod polys;
mod shared;

use itertools::Itertools;

use crate::ring::{det_by_minors, submatrix};
use crate::scalar::ExactScalar;

pub use certify::{
    expected_configurations, genericity_check, render_text, verify_witness, witness_matrices, witness_symbolic,
    Enumeration, GenericityCertificate, GenericityOptions, Mode, Polynomial, Verdict, Witness,
};
pub use fujimoto::{
    fujimoto_determinant, fujimoto_matrix, lemma41_forward_check, reduce_block_determinant, step4_factor, BlockRows,
    FujimotoShape, Lemma41Case, Lemma41Report,
};
pub use pairing::{pairing_identity_check, pairing_matrix, unit_vector_value, PairingReport};
pub use polys::{build_p1, build_p2, p1_matrix, p2_matrix, xi};
pub use shared::shared_determinant;

/// First vanishing minor of a square matrix, smallest size first, then
/// lexicographic rows, then lexicographic columns.
pub fn first_vanishing_minor(a: &[Vec<ExactScalar>]) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = a.len();
    for size in 1..=n {
        for rows in (0..n).combinations(size) {
            for cols in (0..n).combinations(size) {
                if det_by_minors(&submatrix(a, &rows, &cols)).is_zero() {
                    return Some((rows, cols));
                }
            }
        }
    }
    None
}
