//! Noncommutative polynomials over truncated series, rewrite systems,
//! tensor products and generator maps.

mod map;
mod poly;
mod rewrite;
mod tensor;
mod word;

pub use map::{apply_map, GenMap, MapKind, MapTarget};
pub use poly::NCPoly;
pub use rewrite::{
    critical_pairs_check, default_step_budget, nc_commutator, CriticalPairFailure,
    CriticalPairReport, RewriteSystem, DEFAULT_STEP_BUDGET,
};
pub use tensor::TensorPoly;
pub use word::{Alphabet, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("reduction step budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("rule {lhs} -> {term} does not decrease in the monomial order")]
    NotDecreasing { lhs: String, term: String },
    #[error("rule left-hand side must have two letters, got {0}")]
    BadLhs(usize),
    #[error("tensor arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("no image for generator {0}")]
    MissingImage(String),
    #[error(transparent)]
    Scalar(#[from] crate::scalar::ScalarError),
}
