//! Dense and sparse exact linear algebra over Q(q), with tensor-factor
//! bookkeeping for matrices acting on `V^{⊗m}`.

mod echelon;
mod matrix;
mod sparse;

use thiserror::Error;

pub use echelon::{inverse, rank, rational_rank, row_reduce, solve, RowReduction, Solution};
pub use matrix::{from_digits, to_digits, ScalarMatrix};
pub use sparse::{SparseEchelon, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("factor index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("matrix has no tensor shape")]
    MissingShape,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("matrix is singular")]
    Singular,
}
