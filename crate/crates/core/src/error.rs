//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong when building or querying the combinatorial
/// data of a stratification.
///
/// Errors split into two families: rejections of invalid input (bad Cartan
/// matrices, non-dominant weights, non-reduced words, non-members of the fan,
/// …) and violations of internal invariants that valid input can never
/// trigger ([`Error::is_internal`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The Cartan matrix is not a generalized Cartan matrix (shape, diagonal,
    /// sign or symmetrizability defect).
    InvalidCartan(String),
    /// The symmetrized Cartan matrix is not positive definite.
    NotFiniteType,
    /// A weight required to be dominant is not.
    NotDominant,
    /// The highest weight of a stratification must be nonzero.
    ZeroHighestWeight,
    /// A simple-root index is out of range for the rank.
    IndexOutOfRange(usize),
    /// A word is not reduced, or not a word of the required element.
    NotReduced(String),
    /// The explicit `qset` is incompatible with `λ`.
    QsetIncompatible(String),
    /// Two poset elements are not comparable where a chain is required.
    Incomparable,
    /// A fan element fails the lattice membership conditions.
    NotFanMember,
    /// A fan element has non-integral degree where an integer is required.
    NonIntegralDegree,
    /// Operands of the triangle comparison have different degrees.
    DegreeMismatch,
    /// An element is not thin (two support elements of equal length).
    NotThin,
    /// An LS-path fails its structural or chain conditions.
    InvalidPath(String),
    /// Barycentric coordinates expected: nonnegative entries summing to one.
    NotBarycentric,
    /// Too few sample points for the requested interpolation.
    InsufficientSamples,
    /// A character subtraction produced a negative multiplicity in a context
    /// asserted nonnegative.
    NegativeMultiplicity,
    /// An exponent of the divided-power reduction came out non-integral; this
    /// indicates an upstream bug, never valid input.
    IntegralityViolation,
    /// Dimension counts that should be polynomial are not.
    NonPolynomialData,
    /// A structural invariant failed; indicates a bug.
    Internal(String),
}

impl Error {
    /// True for errors that signal a broken internal invariant rather than
    /// rejected input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NegativeMultiplicity
                | Error::IntegralityViolation
                | Error::NonPolynomialData
                | Error::Internal(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCartan(msg) => write!(f, "invalid Cartan matrix: {msg}"),
            Error::NotFiniteType => write!(f, "Cartan matrix is not of finite type"),
            Error::NotDominant => write!(f, "weight is not dominant"),
            Error::ZeroHighestWeight => write!(f, "highest weight must be nonzero"),
            Error::IndexOutOfRange(i) => write!(f, "simple-root index {i} out of range"),
            Error::NotReduced(msg) => write!(f, "word is not reduced: {msg}"),
            Error::QsetIncompatible(msg) => write!(f, "qset incompatible with lambda: {msg}"),
            Error::Incomparable => write!(f, "elements are not comparable in Bruhat order"),
            Error::NotFanMember => write!(f, "element is not in the fan of monoids"),
            Error::NonIntegralDegree => write!(f, "element degree is not an integer"),
            Error::DegreeMismatch => write!(f, "elements have different degrees"),
            Error::NotThin => write!(f, "element is not thin"),
            Error::InvalidPath(msg) => write!(f, "invalid LS-path: {msg}"),
            Error::NotBarycentric => {
                write!(f, "expected nonnegative coordinates summing to one")
            }
            Error::InsufficientSamples => write!(f, "not enough sample points"),
            Error::NegativeMultiplicity => write!(f, "negative multiplicity in character"),
            Error::IntegralityViolation => write!(f, "non-integral exponent in reduction"),
            Error::NonPolynomialData => write!(f, "dimension counts are not polynomial"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
