//! Exact linear algebra over the Gaussian rationals ℚ(i).

pub mod matrix;
pub mod random;
pub mod scalar;
pub mod subspace;

pub use matrix::{dot, int_vector, is_zero_vec, unit_vector, Echelon, Matrix};
pub use random::{random_vector, random_vector_with, RandomOptions, Stream};
pub use scalar::Scalar;
pub use subspace::{intersect, span_sum, Quotient, Subspace, SubspaceRecord};

/// Rank of a matrix, computed by fraction-free elimination.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Kernel of a matrix as a canonical subspace.
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::kernel(m)
}
