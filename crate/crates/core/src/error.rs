use core::fmt;

use crate::grassmannian::LieType;

/// Errors shared by every module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Ambient parameters out of range.
    InvalidParameters(&'static str),
    /// A symbol failed validation against its ambient space.
    InvalidSymbol(&'static str),
    /// The operation is only defined for another Lie type.
    WrongLieType {
        expected: &'static str,
        found: LieType,
    },
    /// Symbols of different cardinalities were compared.
    LengthMismatch,
    /// Enumeration would exceed the configured cap.
    SizeLimitExceeded { symbols: u128, cap: u128 },
    /// The symbol is not an element of the poset's ground set.
    UnknownSymbol,
    /// The componentwise bound `t_i <= p_i` does not hold.
    NotLeq,
    /// The Bruhat relation `T ⪯ P` does not hold.
    NotPreceq,
    /// A documented precondition of the operation was not met.
    PreconditionViolated(&'static str),
    /// Ring elements with different truncation moduli were combined.
    ModulusMismatch,
    /// Exact integer arithmetic overflowed.
    Overflow,
    /// Special class parameters out of range for the space.
    InvalidSpecial(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::InvalidSymbol(msg) => write!(f, "invalid symbol: {msg}"),
            Error::WrongLieType { expected, found } => {
                write!(
                    f,
                    "wrong Lie type: operation requires type {expected}, got {found}"
                )
            }
            Error::LengthMismatch => write!(f, "symbols have different cardinalities"),
            Error::SizeLimitExceeded { symbols, cap } => {
                write!(f, "{symbols} symbols exceed the configured cap of {cap}")
            }
            Error::UnknownSymbol => write!(f, "symbol is not in the poset"),
            Error::NotLeq => write!(f, "componentwise bound T <= P fails"),
            Error::NotPreceq => write!(f, "Bruhat relation T ⪯ P fails"),
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
            Error::ModulusMismatch => write!(f, "ring elements have different moduli"),
            Error::Overflow => write!(f, "integer overflow in exact arithmetic"),
            Error::InvalidSpecial(msg) => write!(f, "invalid special class: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
