use thiserror::Error;

use crate::freealg::FreeAlgError;
use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error("elimination could not isolate leading word {0}")]
    RankDeficient(String),
    #[error("linear part of the map is not invertible")]
    NotInvertible,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
