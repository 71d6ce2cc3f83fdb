use thiserror::Error;

use crate::algebra::{AlgebraError, ParseError};
use crate::automaton::AutomatonError;
use crate::groebner::GroebnerError;
use crate::normal_words::NormalWordsError;
use crate::series::SeriesError;
use crate::suite::SuiteError;

/// Umbrella error for callers that mix several modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    NormalWords(#[from] NormalWordsError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
}
