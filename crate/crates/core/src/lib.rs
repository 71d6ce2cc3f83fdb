//! Degree-truncated Gröbner bases of finitely presented graded associative
//! algebras, normal-word counting, Hilbert series and growth statistics.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: words, the degree-lexicographic order, exact scalars over
//!   `Q` and `GF(p)`, sparse noncommutative polynomials and presentations.
//! * [`groebner`]: reduction, overlap generation and truncated Buchberger
//!   completion over a multi-pattern factor matcher.
//! * [`normal_words`]: enumeration and counting of normal words, and
//!   verification of claimed basis families.
//! * [`automaton`]: forbidden-factor patterns compiled into DFAs, transfer
//!   matrix counting and rational generating functions.
//! * [`series`]: rational power series, the `∏(1+2tⁿ)` generating function,
//!   root localisation and growth estimation.
//! * [`suite`]: the built-in algebras and the reproduction report.
//! * [`oracle`]: an independent rank computation over the span of relation
//!   multiples, used to cross-check completion.

pub mod algebra;
pub mod automaton;
pub mod error;
pub mod groebner;
pub mod normal_words;
pub mod oracle;
pub mod series;
pub mod suite;

pub use algebra::{
    cmp_deglex, parse_presentation, Alphabet, DegLexOrder, Field, Polynomial, Presentation,
    Scalar, Word,
};
pub use automaton::{compile_forbidden, count_by_degree, series_from_dfa, Dfa, FactorPattern};
pub use error::Error;
pub use groebner::{
    buchberger_truncated, find_overlaps, ideal_member_up_to, interreduce, normal_form, Overlap,
    RewriteSet, TruncatedGB,
};
pub use normal_words::{count_normal, enumerate_normal, verify_family, ClaimedFamily, CountTable};
pub use series::{
    dominant_root, expand_rational, growth_estimates, phi_series, Classification, GrowthReport,
    RationalSeries,
};
