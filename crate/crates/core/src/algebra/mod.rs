//! Words, orders, scalars, polynomials and presentations of the free algebra.

mod alphabet;
mod parse;
pub(crate) mod poly;
mod presentation;
mod scalar;
mod word;

use thiserror::Error;

pub use alphabet::Alphabet;
pub use parse::{parse_presentation, ParseError, ParseErrorKind};
pub use poly::Polynomial;
pub use presentation::Presentation;
pub use scalar::{is_prime, Field, Scalar};
pub use word::{cmp_deglex, DegLexOrder, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("alphabet has more than 255 letters")]
    AlphabetTooLarge,
    #[error("duplicate generator name `{0}`")]
    DuplicateLetter(String),
    #[error("invalid generator name `{0}`")]
    InvalidLetterName(String),
    #[error("letter rank {rank} is out of range for an alphabet of size {size}")]
    LetterOutOfRange { rank: usize, size: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("no leading term: polynomial is zero")]
    NoLeadingTerm,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("coefficient {0} is not an integer")]
    NonIntegerCoefficient(String),
    #[error("coefficient {0} is not invertible in GF({1})")]
    NotInvertible(String, u64),
    #[error("specialization expects a polynomial over Q")]
    NotRational,
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("relation {0} is not homogeneous")]
    InhomogeneousRelation(usize),
    #[error("relation {index} has degree {degree}; relations must have degree at least 2")]
    LowDegreeRelation { index: usize, degree: usize },
}
