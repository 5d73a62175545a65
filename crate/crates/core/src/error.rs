//! Error type shared by the whole crate.
//!
//! Every fallible public operation returns [`Result`]. Arithmetic helpers
//! that are only reachable after a boundary check (for example operator
//! impls on ring elements) panic on context mismatch instead; the public
//! constructors and algebra operations check first and return
//! [`Error::CtxMismatch`].

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements belong to different ring contexts")]
    CtxMismatch,

    #[error("modulus is invalid: {0}")]
    InvalidModulus(String),

    #[error("{0} is not prime")]
    InvalidPrime(u64),

    #[error("enumeration of {needed} points exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("row is not unimodular: sum v_i * w_i != 1")]
    RowNotUnimodular,

    #[error("vector does not satisfy the module membership constraint")]
    NotInModule,

    #[error("operation requires the free standard module")]
    NotFreeCase,

    #[error("matrix determinant is not 1")]
    DetNotOne,

    #[error("element norm is not a unit")]
    NonUnitNorm,

    #[error("element is not a unit")]
    NotUnit,

    #[error("operation is not defined in characteristic {0}")]
    UnsupportedCharacteristic(u64),

    #[error("unknown group label: {0}")]
    UnknownGroup(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("polynomial must be a cubic with nonzero constant term")]
    DegreeNotThree,

    #[error("parse error at byte {pos}: {msg}")]
    ParseError { pos: usize, msg: String },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
