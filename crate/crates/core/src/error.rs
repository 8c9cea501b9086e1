use alloc::string::String;

/// Errors raised by the exact and numeric routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("zero ideal")]
    ZeroIdeal,
    #[error("elements or ideals belong to different fields")]
    FieldMismatch,
    #[error("no degree-one place above {0}")]
    NoDegreeOnePlace(u64),
    #[error("norm too large to factor: {0}")]
    NormTooLarge(String),
    #[error("element is not integral at the place")]
    NotIntegral,
    #[error("zero has no valuation")]
    ZeroValuation,
    #[error("no multiplier system of half-integral weight exists (2 does not split completely)")]
    TwoNotSplit,
    #[error("dyadic completion other than Q_2 is not supported")]
    NonSplitDyadic,
    #[error("symbol undefined for ({0}, {1})")]
    UndefinedSymbol(String, String),
    #[error("matrix does not have determinant 1")]
    NotSl2,
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("triple is not admissible: {0}")]
    NotAdmissible(String),
    #[error("point is not in the upper half plane")]
    NotInUpperHalfPlane,
    #[error("discriminant out of range: {0}")]
    DiscriminantOutOfRange(String),
    #[error("numerical evaluation did not converge: {0}")]
    NoConvergence(String),
}

pub type Result<T> = core::result::Result<T, Error>;
