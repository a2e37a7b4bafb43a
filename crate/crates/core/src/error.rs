use alloc::string::String;
use core::fmt;

use crate::coxeter::SubsetMask;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    InvalidSpec(String),
    /// Enumeration hit the element (or root) cap before closing.
    GroupTooLarge { cap: usize },
    NotASubgroup,
    NotConjugate { from: SubsetMask, to: SubsetMask },
    InvalidPrime(u64),
    ResourceLimit { order: usize, limit: usize },
    NoUsablePrimes,
    Parse(String),
    /// A cross-check between two independent computations failed. Always a bug.
    InternalInvariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidSpec(msg) => write!(f, "invalid Coxeter specification: {msg}"),
            Error::GroupTooLarge { cap } => {
                write!(f, "group too large or infinite (enumeration cap {cap} exceeded)")
            }
            Error::NotASubgroup => write!(f, "not a subgroup"),
            Error::NotConjugate { from, to } => {
                write!(f, "not conjugate: W_{from:?} and W_{to:?} lie in different classes")
            }
            Error::InvalidPrime(p) => write!(f, "{p} is not an admissible prime modulus"),
            Error::ResourceLimit { order, limit } => {
                write!(f, "group order {order} exceeds the limit {limit} for dense matrices")
            }
            Error::NoUsablePrimes => write!(f, "every prime was skipped; nothing was verified"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InternalInvariant(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
