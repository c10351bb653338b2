use alloc::string::String;
use core::fmt;

use crate::val::Val;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The element cannot be told apart from zero at its recorded precision.
    ZeroAtPrecision {
        precision: Option<Val>,
    },
    /// A computation needs more absolute precision than is available.
    InsufficientPrecision {
        context: String,
    },
    /// Residue requested for an element of negative valuation.
    NegativeValuation(Val),
    /// A tower step failed validation; `step` is its index in the spec.
    Construction {
        step: usize,
        reason: String,
    },
    Parse {
        position: usize,
        message: String,
    },
    /// A rational power that the tower cannot express exactly.
    Unresolvable(String),
    CannotSplit(String),
    InconclusiveRootSearch(String),
    NotPGroup(String),
    Unsupported(String),
    Invalid(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn precision(context: impl Into<String>) -> Self {
        Error::InsufficientPrecision { context: context.into() }
    }

    /// True for failures that a rerun at higher precision may fix.
    pub fn is_precision(&self) -> bool {
        matches!(self, Error::ZeroAtPrecision { .. } | Error::InsufficientPrecision { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroAtPrecision { precision: Some(n) } => {
                write!(f, "element indistinguishable from 0 at precision {}", n)
            }
            Error::ZeroAtPrecision { precision: None } => write!(f, "element is exactly 0"),
            Error::InsufficientPrecision { context } => {
                write!(f, "insufficient precision: {}", context)
            }
            Error::NegativeValuation(v) => write!(f, "negative valuation {}", v),
            Error::Construction { step, reason } => write!(f, "tower step {}: {}", step, reason),
            Error::Parse { position, message } => {
                write!(f, "parse error at {}: {}", position, message)
            }
            Error::Unresolvable(s) => write!(f, "not resolvable in this tower: {}", s),
            Error::CannotSplit(s) => write!(f, "cannot split: {}", s),
            Error::InconclusiveRootSearch(s) => write!(f, "inconclusive root search: {}", s),
            Error::NotPGroup(s) => write!(f, "not a p-group: {}", s),
            Error::Unsupported(s) => write!(f, "unsupported: {}", s),
            Error::Invalid(s) => write!(f, "{}", s),
        }
    }
}
