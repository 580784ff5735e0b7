//! Division algebras R, C, H, O over ℚ(i) and Hermitian 3×3 matrices over them.

pub mod division;
pub mod jordan;

pub use division::{AlgebraElement, AlgebraTag};
pub use jordan::{herm_det, herm_rank, severi_chart, HermMatrix};
