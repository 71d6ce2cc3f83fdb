//! Forbidden-factor automata: pattern families of leading words compiled to
//! DFAs, transfer-matrix counting and rational generating functions.

mod dfa;
mod pattern;
mod transfer;

use thiserror::Error;

pub use dfa::{compile_forbidden, compile_forbidden_ranks, count_by_degree, Dfa};
pub use pattern::{Atom, FactorPattern};
pub use transfer::{charpoly, series_from_dfa};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("pattern syntax: {0}")]
    PatternSyntax(String),
    #[error("unknown letter `{0}` in pattern")]
    UnknownLetter(String),
    #[error("pattern matches the empty word")]
    EmptyPattern,
    #[error("transition table is inconsistent with the state count")]
    MalformedDfa,
}

/// One pattern per line; blank lines and `#` comments are skipped.
pub fn parse_pattern_file(text: &str, alphabet: &crate::algebra::Alphabet) -> Result<Vec<FactorPattern>, (usize, AutomatonError)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| FactorPattern::parse(l, alphabet).map_err(|e| (i, e)))
        .collect()
}
