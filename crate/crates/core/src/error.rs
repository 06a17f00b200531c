use core::fmt;

use crate::kravchuk::EigenSymbol;

/// Errors raised by the invariant machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(&'static str),
    /// `s·i` is not an eigenvalue of the derivation on forms of order `n`.
    InvalidEigenvalue { n: u32, s: i32 },
    /// The anchor `(p, q)` of a rational basis is not a positive eigen-weight.
    InvalidAnchor { p: u32, q: i32 },
    /// A polynomial mentions a variable `a[k,j]` outside `2 ≤ k+j ≤ d`.
    VariableOutOfRange { k: u32, j: u32, d: u32 },
    /// A moment table lacks an entry that the operation needs.
    IncompleteTable { p: u32, q: u32 },
    /// The input has zero mass or otherwise cannot be normalized.
    DegenerateInput(&'static str),
    /// A generator used as a denominator vanishes on the input shape.
    DegenerateShape(&'static str),
    /// The Hilbert basis search reached its degree guard.
    DegreeCapExceeded { cap: u32, frontier: usize },
    /// The operation has no implementation for these parameters.
    Unsupported(&'static str),
    /// Text could not be parsed.
    Parse(alloc::string::String),
}

impl Error {
    pub(crate) fn invalid_eigen(sym: EigenSymbol) -> Self {
        Error::InvalidEigenvalue { n: sym.n, s: sym.s }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidEigenvalue { n, s } => {
                write!(f, "{s}i is not an eigenvalue of the derivation on V_{n}")
            }
            Error::InvalidAnchor { p, q } => {
                write!(f, "invalid anchor (p, q) = ({p}, {q}): need 2 <= p <= d and q*i a positive eigenvalue of V_p")
            }
            Error::VariableOutOfRange { k, j, d } => {
                write!(f, "variable a[{k},{j}] is outside 2 <= k+j <= {d}")
            }
            Error::IncompleteTable { p, q } => write!(f, "moment table has no entry ({p},{q})"),
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::DegenerateShape(name) => {
                write!(f, "degenerate shape: generator {name} vanishes")
            }
            Error::DegreeCapExceeded { cap, frontier } => write!(
                f,
                "Hilbert basis search exceeded degree cap {cap} with {frontier} open candidates"
            ),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
