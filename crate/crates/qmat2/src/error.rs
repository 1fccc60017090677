use thiserror::Error;

/// Errors reported by the library.
///
/// Every operation on canonical values is total except the few listed
/// here: evaluation preconditions, index domains, and parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown generator `{0}` (expected one of a, b, c, d)")]
    UnknownGenerator(String),

    /// Specializing a Laurent polynomial at `v = 0` is undefined because
    /// of negative exponents.
    #[error("cannot specialize at v = 0: negative powers are undefined")]
    SpecializeAtZero,

    /// Index passed to the polynomial family constructors was below -1.
    #[error("polynomial family index must be at least -1, got {0}")]
    IndexOutOfRange(i64),

    /// The closed-form power formulas are stated for exponents >= 1.
    #[error("closed-form power formulas require an exponent >= 1")]
    ZeroPowerIndex,

    /// Two-variable polynomial evaluation requires commuting arguments.
    #[error("polynomial arguments do not commute; evaluation would be ambiguous")]
    NonCommutingArguments,

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
