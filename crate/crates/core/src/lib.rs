//! Exact computation of local projective-differential invariants of
//! varieties given by polynomial parametrizations.

pub mod algebra;
pub mod certify;
pub mod defect;
pub mod error;
pub mod jets;
pub mod linalg;
pub mod quadric;
pub mod report;
pub mod zoo;

pub use error::{Error, Result};
