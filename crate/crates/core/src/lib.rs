//! Exact algebra for certifying that 2n+2 hyperplanes in P^n avoid the
//! exceptional set of the (2n+2)-hyperplane uniqueness theorem, together with
//! executable checks of the group-combinatorial and determinant lemmas the
//! proof relies on.
//!
//! Layout:
//! - [`scalar`]: rationals and cyclotomic field elements
//! - [`lattice`]: exponent-vector tuples, rank, property (P_{r,s}), classification
//! - [`laurent`]: Laurent polynomials, monomial units, symbolic determinants
//! - [`geometry`]: hyperplane families, general position, adjugate normalisation
//! - [`engine`]: the determinant identities and the genericity certificate
//! - [`json`]: input and output schemas shared with the command-line tool

pub mod engine;
pub mod error;
pub mod geometry;
pub mod json;
pub mod lattice;
pub mod laurent;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::ExactScalar;
