use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::SeriesError;
use crate::normal_words::CountTable;

const MIN_DEGREE: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Polynomial,
    Exponential,
    Undetermined,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Polynomial => "polynomial",
            Classification::Exponential => "exponential",
            Classification::Undetermined => "undetermined/intermediate-candidate",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tail fits of a count table. All fits use the top third of the degrees
/// `0..=valid_to`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    /// Slope of `ln p(n)` against `ln(n+1)`.
    pub gk_estimate: f64,
    /// Slope of `ln a(n)` against `n`, clamped at zero.
    pub exp_rate: f64,
    /// `ln ln p(N) / ln N` at `N = valid_to`, clamped to `[0, 1]`.
    pub kappa_estimate: f64,
    /// Local growth exponent: `ln p(n) ~ n^beta`, fitted from the increments
    /// of `ln p`. Near 0 for polynomial growth, 1 for exponential.
    pub beta: f64,
    pub classification: Classification,
    /// `exp(-exp_rate)` when the growth is classified exponential.
    pub dominant_root: Option<f64>,
    pub fit_from: usize,
    pub fit_to: usize,
}

/// Natural logarithm of a positive big integer.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

pub fn growth_estimates(table: &CountTable) -> Result<GrowthReport, SeriesError> {
    let top = table.valid_to.min(table.a.len().saturating_sub(1));
    if top < MIN_DEGREE {
        return Err(SeriesError::InsufficientData {
            needed: MIN_DEGREE,
            got: top,
        });
    }
    if let Some(n) = table.a[..=top].iter().position(Zero::is_zero) {
        return Err(SeriesError::ZeroCount(n));
    }
    let lo = top - top / 3;
    let degrees: Vec<usize> = (lo..=top).collect();
    let ln_a: Vec<f64> = table.a.iter().take(top + 1).map(ln_big).collect();
    let ln_p: Vec<f64> = table.p.iter().take(top + 1).map(ln_big).collect();

    let xs: Vec<f64> = degrees.iter().map(|&n| ((n + 1) as f64).ln()).collect();
    let ys: Vec<f64> = degrees.iter().map(|&n| ln_p[n]).collect();
    let gk_estimate = slope(&xs, &ys);

    let xs: Vec<f64> = degrees.iter().map(|&n| n as f64).collect();
    let ys: Vec<f64> = degrees.iter().map(|&n| ln_a[n]).collect();
    let exp_rate = slope(&xs, &ys).max(0.0);

    let kappa_estimate = (ln_p[top].ln() / (top as f64).ln()).clamp(0.0, 1.0);

    // ln p(n) - ln p(n-1) = ln(1 + a(n)/p(n-1))
    let xs: Vec<f64> = degrees.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = degrees
        .iter()
        .map(|&n| (ln_a[n] - ln_p[n - 1]).exp().ln_1p().ln())
        .collect();
    let beta = 1.0 + slope(&xs, &ys);

    let classification = if beta < 0.25 {
        Classification::Polynomial
    } else if beta > 0.7 && exp_rate > 0.05 {
        Classification::Exponential
    } else {
        Classification::Undetermined
    };
    let dominant_root = (classification == Classification::Exponential).then(|| (-exp_rate).exp());
    Ok(GrowthReport {
        gk_estimate,
        exp_rate,
        kappa_estimate,
        beta,
        classification,
        dominant_root,
        fit_from: lo,
        fit_to: top,
    })
}
