use rayon::prelude::*;

use crate::groebner::buchberger_truncated;
use crate::normal_words::{count_normal, CountTable};
use crate::series::{growth_estimates, Classification, GrowthReport};

use super::builtin::Builtin;
use super::SuiteError;

/// Counting horizon used once the basis is known to be complete.
pub const COMPLETE_HORIZON: usize = 120;

/// Normal-word counts of a built-in algebra up to `d`, or further when the
/// truncated basis carries the completeness certificate.
pub fn counts_for(alg: &Builtin, characteristic: u64, d: usize) -> Result<(CountTable, bool), SuiteError> {
    let p = alg.presentation(characteristic)?;
    let gb = buchberger_truncated(&p, d);
    let n = if gb.complete() { d.max(COMPLETE_HORIZON) } else { d };
    Ok((count_normal(&gb, n)?, gb.complete()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct JumpReport {
    pub algebra: String,
    pub degree_bound: usize,
    pub char0: GrowthReport,
    pub per_prime: Vec<(u64, GrowthReport)>,
    /// Characteristic 0 is polynomial with GK estimate within 0.2 of 3 and
    /// every tested prime is exponential.
    pub verdict: bool,
}

pub fn growth_jump_report(alg: &Builtin, primes: &[u64], d: usize) -> Result<JumpReport, SuiteError> {
    if d < 12 {
        return Err(SuiteError::Precondition(format!("degree bound {d} is below 12")));
    }
    if matches!(alg, Builtin::A) {
        if let Some(&p) = primes.iter().find(|&&p| p < 5) {
            return Err(SuiteError::Uncovered(format!("A at p = {p} is outside the exa1 hypotheses")));
        }
    }
    let chars: Vec<u64> = std::iter::once(0).chain(primes.iter().copied()).collect();
    let reports = chars
        .par_iter()
        .map(|&c| -> Result<GrowthReport, SuiteError> {
            let (table, _) = counts_for(alg, c, d)?;
            Ok(growth_estimates(&table)?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let char0 = reports[0].clone();
    let per_prime: Vec<(u64, GrowthReport)> = primes.iter().copied().zip(reports[1..].iter().cloned()).collect();
    let verdict = char0.classification == Classification::Polynomial
        && (char0.gk_estimate - 3.0).abs() <= 0.2
        && per_prime.iter().all(|(_, r)| r.classification == Classification::Exponential);
    Ok(JumpReport {
        algebra: alg.to_string(),
        degree_bound: d,
        char0,
        per_prime,
        verdict,
    })
}
