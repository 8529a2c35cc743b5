//! Gröbner fans of ideals in monomial subalgebras `k[x^a_1, ..., x^a_s]` and
//! fans of normalized higher Nash blowups of affine normal toric varieties.

pub mod cli;
pub mod error;
pub mod gfan;
pub mod nash;
pub mod polyhedral;
pub mod polyring;
pub mod semigroup;
pub mod subalgebra;

pub use error::{Error, Result};
