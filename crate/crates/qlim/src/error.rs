//! One error type for the whole crate.  Every fallible operation funnels
//! through [`Error`]; panics are reserved for violated internal invariants.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator count mismatch: algebra on {left} index pairs vs {right}")]
    GeneratorCountMismatch { left: usize, right: usize },

    #[error("element is not homogeneous")]
    Inhomogeneous,

    #[error("expected degree {expected}, found a term of degree {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{n} index pairs exceed the supported maximum of {max}")]
    TooManyGenerators { n: usize, max: usize },

    #[error("vector has length {len} but the degree component has dimension {dim}")]
    VectorLength { len: usize, dim: usize },

    #[error("image of {what} must be homogeneous of degree {degree}")]
    BadGeneratorImage { what: String, degree: usize },

    #[error(transparent)]
    Ambient(#[from] gf2::AmbientMismatch),

    #[error("not an action of the symmetric group on three letters: {reason}")]
    BadAction { reason: String },

    #[error("subspace is not invariant under the action")]
    NotInvariant,

    #[error("module is not projective of the expected shape: dim im(e) = {im_dim}, dim ker(e) = {ker_dim}")]
    NotProjective { im_dim: usize, ker_dim: usize },

    #[error("sequence is not in the image of alpha: the gap condition fails at position {j}")]
    NotInImage { j: usize },

    #[error("the zero element has no leading sequence")]
    ZeroElement,

    #[error("denominator has zero constant term")]
    ZeroConstantDenominator,

    #[error("cannot expand: constant term {0} of the denominator is not a unit in the integers")]
    NonUnitConstant(String),

    #[error("coefficient {value} at degree {degree} is negative where a dimension was expected")]
    NegativeCoefficient { degree: usize, value: String },

    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
