//! Shared error type for precondition and contract violations.

/// Errors raised when an operation's preconditions are not met.
///
/// A mathematically meaningful "no" (a property that fails to hold) is never
/// an error; those come back as [`crate::algebra::VerificationReport`]s. Errors
/// mean the question itself was malformed for the given input.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("not contained: {0}")]
    NotContained(String),
    #[error("twisting map is not multiplicative")]
    NotMultiplicative,
    #[error("not regular: {0}")]
    NotRegular(String),
    #[error("cochain degree out of range: {0}")]
    DegreeOutOfRange(String),
    #[error("not a hom-cochain: {0}")]
    NotHomCochain(String),
    #[error("not a representation: {0}")]
    InvalidRepresentation(String),
    #[error("difference of the two cochains is not the coboundary of the supplied cochain")]
    NotCoboundary,
    #[error("operator does not commute with the twisting map")]
    NotCommutingWithAlpha,
    #[error("operator is not hom-Nijenhuis")]
    NotNijenhuis,
}
