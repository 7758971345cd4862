use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Error type shared by every module of the crate.
///
/// Variants carry enough context to reconstruct what went wrong; `code()`
/// gives the stable machine-readable name used by the CLI JSON output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus is not an odd prime (composite, even, or < 3).
    NotAnOddPrime(u64),
    /// Two elements (or ideals) from fields of different level were combined.
    ContextMismatch { left: u64, right: u64 },
    /// A Galois exponent or group-power exponent shares a factor with the modulus.
    NotCoprime { value: i64, modulus: u64 },
    /// Zero where a nonzero element is required.
    ZeroInput,
    /// Division by the zero element.
    ZeroDivisor,
    /// Exact division failed: the quotient is not integral.
    NotDivisible,
    /// The element is not a unit; carries the offending norm.
    NotAUnit(BigInt),
    /// Index outside the accepted range.
    OutOfRange { index: u64, min: u64, max: u64 },
    /// Torsion matching hit the minus sign case, impossible for these units.
    MinusSignCase,
    /// Torsion matching found no candidate at all.
    NoTorsionMatch,
    /// A stated divisibility hypothesis does not hold for the given input.
    HypothesisFailed(String),
    /// The element does not have norm one; carries the actual norm.
    NormNotOne(BigRational),
    /// A rational element was supplied where an integral one is required.
    NotIntegralEta,
    /// Every basis element gave a zero resolvent (cannot occur mathematically).
    ExhaustedBasis,
    /// The residue table has a number of zeros different from one.
    NonUniqueZero(usize),
    /// The rational number supplied to a splitting routine is not prime.
    NotPrime(u64),
    /// Class-number certification is only implemented for p in {3, 5, 7}.
    UnsupportedPrime(u64),
    /// A small-norm prime ideal resisted the bounded principality search.
    CertificationFailed(String),
    /// Every generator of the ideal is zero.
    ZeroIdeal,
    /// An even index is required.
    OddIndex(u64),
    /// Malformed element text, wrong coefficient count, or a rational where
    /// an integer is required.
    InvalidElement(String),
    /// An identity that must hold for correct arithmetic failed: a bug.
    InternalInconsistency(String),
}

impl Error {
    /// Stable error code, reported verbatim by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAnOddPrime(_) => "NotAnOddPrime",
            Error::ContextMismatch { .. } => "ContextMismatch",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::ZeroInput => "ZeroInput",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::NotDivisible => "NotDivisible",
            Error::NotAUnit(_) => "NotAUnit",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::MinusSignCase => "MinusSignCase",
            Error::NoTorsionMatch => "NoTorsionMatch",
            Error::HypothesisFailed(_) => "HypothesisFailed",
            Error::NormNotOne(_) => "NormNotOne",
            Error::NotIntegralEta => "NotIntegralEta",
            Error::ExhaustedBasis => "ExhaustedBasis",
            Error::NonUniqueZero(_) => "NonUniqueZero",
            Error::NotPrime(_) => "NotPrime",
            Error::UnsupportedPrime(_) => "UnsupportedPrime",
            Error::CertificationFailed(_) => "CertificationFailed",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::OddIndex(_) => "OddIndex",
            Error::InvalidElement(_) => "InvalidElement",
            Error::InternalInconsistency(_) => "InternalInconsistency",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAnOddPrime(p) => write!(f, "{p} is not an odd prime >= 3"),
            Error::ContextMismatch { left, right } => {
                write!(
                    f,
                    "elements belong to different fields: p={left} vs p={right}"
                )
            }
            Error::NotCoprime { value, modulus } => {
                write!(f, "{value} is not coprime to {modulus}")
            }
            Error::ZeroInput => write!(f, "input must be nonzero"),
            Error::ZeroDivisor => write!(f, "division by zero element"),
            Error::NotDivisible => write!(f, "quotient is not integral"),
            Error::NotAUnit(n) => write!(f, "not a unit: norm is {n}, expected 1"),
            Error::OutOfRange { index, min, max } => {
                write!(f, "index {index} outside [{min}, {max}]")
            }
            Error::MinusSignCase => {
                write!(f, "torsion quotient matched -zeta^m: impossible for a unit")
            }
            Error::NoTorsionMatch => {
                write!(f, "torsion quotient matched no candidate +/-zeta^m")
            }
            Error::HypothesisFailed(msg) => write!(f, "hypothesis failed: {msg}"),
            Error::NormNotOne(n) => write!(f, "norm is {n}, expected 1"),
            Error::NotIntegralEta => write!(f, "eta must have integer coefficients"),
            Error::ExhaustedBasis => {
                write!(f, "all basis resolvents vanished: impossible")
            }
            Error::NonUniqueZero(k) => {
                write!(f, "residue table has {k} zeros, expected exactly one")
            }
            Error::NotPrime(q) => write!(f, "{q} is not prime"),
            Error::UnsupportedPrime(p) => {
                write!(
                    f,
                    "class number certification supports p in {{3, 5, 7}}, got {p}"
                )
            }
            Error::CertificationFailed(msg) => write!(f, "certification failed: {msg}"),
            Error::ZeroIdeal => write!(f, "all generators are zero"),
            Error::OddIndex(n) => write!(f, "index {n} must be even"),
            Error::InvalidElement(msg) => write!(f, "invalid element: {msg}"),
            Error::InternalInconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
