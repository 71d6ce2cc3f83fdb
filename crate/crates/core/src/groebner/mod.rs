//! Reduction, ambiguity generation and degree-truncated Buchberger
//! completion in the free algebra.

mod completion;
pub mod matcher;
mod overlap;
mod rewrite;

use thiserror::Error;

pub use completion::{buchberger_truncated, ideal_member_up_to, interreduce, TruncatedGB};
pub use matcher::FactorMatcher;
pub use overlap::{all_overlaps, find_overlaps, Overlap, OverlapKind};
pub use rewrite::{normal_form, RewriteSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("polynomials over different fields")]
    FieldMismatch,
    #[error("letter rank {0} is outside the alphabet")]
    LetterOutOfRange(usize),
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    BeyondBound { degree: usize, bound: usize },
    #[error("membership test needs a homogeneous polynomial")]
    NotHomogeneous,
}
