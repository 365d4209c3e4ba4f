use thiserror::Error;

use crate::scalars::FieldSpec;
use crate::subspaces::Subspace;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inversion of zero")]
    InversionOfZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("bad scalar: {0:?}")]
    BadScalar(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("invalid structure table: {0}")]
    InvalidTable(String),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("dimension {dim} exceeds enumeration cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("exhaustive enumeration is impossible over the rationals")]
    RationalsNotEnumerable,
    #[error("scan of {size} elements exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("operation undefined on the zero-dimensional algebra")]
    ZeroAlgebra,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no unique maximal ideal; maximal elements: {}", .0.len())]
    NoUniqueMaximum(Vec<Subspace>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
