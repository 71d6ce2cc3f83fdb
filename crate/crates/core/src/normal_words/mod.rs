//! Normal words of a truncated Gröbner basis: enumeration, counting, and
//! verification of claimed basis families.

mod family;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, Word};
use crate::automaton::AutomatonError;
use crate::groebner::TruncatedGB;

pub use family::{verify_family, verify_family_against, ClaimedFamily, Discrepancy, DiscrepancyKind, FamilyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalWordsError {
    #[error("degree {degree} is beyond the trustworthy range (basis truncated at {bound})")]
    BeyondBound { degree: usize, bound: usize },
    #[error("family member {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("family member {0} is zero")]
    ZeroMember(String),
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("case not covered by the family: {0}")]
    Uncovered(String),
    #[error("family file line {line}: {message}")]
    FamilySyntax { line: usize, message: String },
    #[error("family needs generator `{0}`")]
    MissingGenerator(String),
    #[error(transparent)]
    Pattern(#[from] AutomatonError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Per-degree normal-word counts `a[n]` and cumulative counts `p[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub a: Vec<BigUint>,
    pub p: Vec<BigUint>,
    /// Largest degree whose count is determined by the data it came from.
    pub valid_to: usize,
}

impl CountTable {
    pub fn new(a: Vec<BigUint>, valid_to: usize) -> Self {
        let mut p = Vec::with_capacity(a.len());
        let mut acc = BigUint::zero();
        for c in &a {
            acc += c;
            p.push(acc.clone());
        }
        let valid_to = valid_to.min(a.len().saturating_sub(1));
        CountTable { a, p, valid_to }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The first `n + 1` entries.
    pub fn truncate(&self, n: usize) -> CountTable {
        CountTable::new(self.a.iter().take(n + 1).cloned().collect(), self.valid_to.min(n))
    }
}

fn check_bound(gb: &TruncatedGB, n: usize) -> Result<(), NormalWordsError> {
    if gb.covers(n) {
        Ok(())
    } else {
        Err(NormalWordsError::BeyondBound {
            degree: n,
            bound: gb.degree_bound(),
        })
    }
}

/// All normal words of degree `n`, ascending in deglex order.
pub fn enumerate_normal(gb: &TruncatedGB, n: usize) -> Result<Vec<Word>, NormalWordsError> {
    check_bound(gb, n)?;
    let m = gb.basis().matcher();
    let g = gb.basis().alphabet_size();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn walk(m: &crate::groebner::FactorMatcher, g: usize, state: usize, n: usize, prefix: &mut Vec<u8>, out: &mut Vec<Word>) {
        if prefix.len() == n {
            out.push(Word::new(prefix.clone()));
            return;
        }
        // the last rank is the smallest letter
        for l in (0..g as u8).rev() {
            let next = m.step(state, l);
            if !m.is_terminal(next) {
                prefix.push(l);
                walk(m, g, next, n, prefix, out);
                prefix.pop();
            }
        }
    }
    walk(m, g, m.start(), n, &mut prefix, &mut out);
    Ok(out)
}

/// Normal-word counts for degrees `0..=n` by dynamic programming over the
/// factor-avoidance automaton of the leading words.
pub fn count_normal(gb: &TruncatedGB, n: usize) -> Result<CountTable, NormalWordsError> {
    check_bound(gb, n)?;
    let m = gb.basis().matcher();
    let g = gb.basis().alphabet_size();
    let states = m.num_states();
    let next: Vec<Option<usize>> = (0..states)
        .flat_map(|s| (0..g as u8).map(move |l| (s, l)))
        .map(|(s, l)| {
            let t = m.step(s, l);
            (!m.is_terminal(t)).then_some(t)
        })
        .collect();
    let mut v = vec![BigUint::zero(); states];
    v[m.start()] = BigUint::one();
    let mut a = Vec::with_capacity(n + 1);
    for step in 0..=n {
        a.push(v.iter().sum());
        if step == n {
            break;
        }
        let mut w = vec![BigUint::zero(); states];
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for t in next[s * g..(s + 1) * g].iter().flatten() {
                w[*t] += c;
            }
        }
        v = w;
    }
    Ok(CountTable::new(a, n))
}
