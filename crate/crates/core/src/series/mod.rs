//! Rational power series, the `∏(1+2tⁿ)` generating function, root
//! localisation and growth statistics.

mod growth;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use growth::{growth_estimates, ln_big, Classification, GrowthReport};

/// The factor `1 − t`.
pub const ONE_MINUS_T: &[(usize, i64)] = &[(0, 1), (1, -1)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator must have constant term 1")]
    DenominatorConstant,
    #[error("growth estimates need counts up to degree at least {needed}, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("count at degree {0} is zero; logarithms are undefined")]
    ZeroCount(usize),
}

/// `num(t) / den(t)` with integer coefficients, dense and ascending.
///
/// Not reduced to lowest terms; compare with [`RationalSeries::same_series`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Product of two dense integer polynomials.
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Dense polynomial from `(exponent, coefficient)` pairs.
pub fn sparse_poly(terms: &[(usize, i64)]) -> Vec<BigInt> {
    let len = terms.iter().map(|&(e, _)| e + 1).max().unwrap_or(0);
    let mut out = vec![BigInt::zero(); len];
    for &(e, c) in terms {
        out[e] += BigInt::from(c);
    }
    trim(out)
}

impl RationalSeries {
    pub fn new(num: Vec<BigInt>, den: Vec<BigInt>) -> Result<Self, SeriesError> {
        let den = trim(den);
        if den.first().is_none_or(|c| !c.is_one()) {
            return Err(SeriesError::DenominatorConstant);
        }
        Ok(RationalSeries {
            num: trim(num),
            den,
        })
    }

    /// Numerator and denominator as products of sparse factors.
    pub fn from_factors(num: &[&[(usize, i64)]], den: &[&[(usize, i64)]]) -> Result<Self, SeriesError> {
        let product = |fs: &[&[(usize, i64)]]| {
            fs.iter()
                .fold(vec![BigInt::one()], |acc, f| poly_mul(&acc, &sparse_poly(f)))
        };
        RationalSeries::new(product(num), product(den))
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.den
    }

    /// Coefficients `c[0..=n]`.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = self.num.get(k).cloned().unwrap_or_default();
            for (i, d) in self.den.iter().enumerate().skip(1).take(k) {
                if !d.is_zero() {
                    v -= d * &c[k - i];
                }
            }
            c.push(v);
        }
        c
    }

    /// Equality as power series, by cross multiplication.
    pub fn same_series(&self, other: &RationalSeries) -> bool {
        poly_mul(&self.num, &other.den) == poly_mul(&other.num, &self.den)
    }
}

fn fmt_poly(p: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (e, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        match (e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "t")?,
            (1, false) => write!(f, "{mag}*t")?,
            (_, true) => write!(f, "t^{e}")?,
            (_, false) => write!(f, "{mag}*t^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_poly(&self.num, f)?;
        write!(f, ")/(")?;
        fmt_poly(&self.den, f)?;
        write!(f, ")")
    }
}

/// Power-series coefficients `c[0..=n]` of `num/den`.
pub fn expand_rational(num: &[BigInt], den: &[BigInt], n: usize) -> Result<Vec<BigInt>, SeriesError> {
    Ok(RationalSeries::new(num.to_vec(), den.to_vec())?.expand(n))
}

/// Coefficients of `∏_{k≥1}(1+2t^k)` up to degree `n`.
pub fn phi_series(n: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); n + 1];
    c[0] = BigUint::one();
    for k in 1..=n {
        for d in (k..=n).rev() {
            let add = &c[d - k] * 2u32;
            c[d] += add;
        }
    }
    c
}

fn eval(p: &[f64], t: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

/// Smallest root of `poly` in the open interval `(0, 1)` at which it changes
/// sign, located by bisection to `1e-12`. `None` if there is none.
pub fn dominant_root(poly: &[BigInt]) -> Option<f64> {
    let p: Vec<f64> = poly.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    if p.len() < 2 {
        return None;
    }
    const GRID: usize = 20_000;
    let mut lo = 0.0;
    let mut flo = eval(&p, 1e-15);
    for i in 1..GRID {
        let hi = i as f64 / GRID as f64;
        let fhi = eval(&p, hi);
        if fhi == 0.0 {
            return Some(hi);
        }
        if flo.signum() != fhi.signum() {
            let (mut a, mut b) = (lo, hi);
            while b - a > 1e-13 {
                let mid = 0.5 * (a + b);
                let fm = eval(&p, mid);
                if fm == 0.0 {
                    return Some(mid);
                }
                if fm.signum() == flo.signum() {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            return Some(0.5 * (a + b));
        }
        lo = hi;
        flo = fhi;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn expansions() {
        let cube = RationalSeries::from_factors(&[], &[crate::series::ONE_MINUS_T; 3]).unwrap();
        assert_eq!(ints(&cube.expand(5)), [1, 3, 6, 10, 15, 21]);
        let fib = RationalSeries::from_factors(&[&[(0, 1), (1, 1)]], &[&[(0, 1), (1, -1), (2, -1)]]).unwrap();
        assert_eq!(ints(&fib.expand(5)), [1, 2, 3, 5, 8, 13]);
        assert_eq!(
            expand_rational(&[BigInt::one()], &[BigInt::from(2)], 3),
            Err(SeriesError::DenominatorConstant)
        );
    }

    #[test]
    fn display() {
        let s = RationalSeries::from_factors(&[&[(0, 1), (4, -1), (5, -1)]], &[&[(0, 1), (1, -2)]]).unwrap();
        assert_eq!(s.to_string(), "(1 - t^4 - t^5)/(1 - 2*t)");
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = RationalSeries::from_factors(&[], &[&[(0, 1), (1, -1)]]).unwrap();
        let b = RationalSeries::from_factors(&[&[(0, 1), (1, 1)]], &[&[(0, 1), (2, -1)]]).unwrap();
        assert!(a.same_series(&b));
        let c = RationalSeries::from_factors(&[], &[&[(0, 1), (1, -2)]]).unwrap();
        assert!(!a.same_series(&c));
    }

    #[test]
    fn phi_values() {
        let v: Vec<u64> = phi_series(6).iter().map(|c| c.to_u64().unwrap()).collect();
        assert_eq!(v, [1, 2, 2, 6, 6, 10, 18]);
        assert_eq!(phi_series(0), vec![BigUint::one()]);
        assert_eq!(phi_series(1).len(), 2);
    }

    fn distinct_partitions(n: usize, max: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| 2 * distinct_partitions(n - k, k - 1)).sum()
    }

    #[test]
    fn phi_matches_partition_enumeration() {
        let phi = phi_series(30);
        for n in 0..=30 {
            assert_eq!(phi[n].to_u64().unwrap(), distinct_partitions(n, n), "n = {n}");
        }
    }

    #[test]
    fn roots() {
        let golden = dominant_root(&sparse_poly(&[(0, 1), (1, -1), (2, -1)])).unwrap();
        assert!((golden - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
        let c4 = dominant_root(&sparse_poly(&[(0, 1), (1, -1), (4, -1)])).unwrap();
        assert!(c4 > 0.72 && c4 < 0.73);
        assert_eq!(dominant_root(&sparse_poly(&[(0, 1), (1, -1)])), None);
    }

    proptest! {
        #[test]
        fn geometric(g in 1i64..6, n in 0usize..20) {
            let s = RationalSeries::from_factors(&[], &[&[(0, 1), (1, -g)]]).unwrap();
            prop_assert_eq!(s.expand(n)[n].clone(), BigInt::from(g).pow(n as u32));
        }

        #[test]
        fn expansion_times_denominator_is_numerator(
            num in proptest::collection::vec(-5i64..5, 0..5),
            den in proptest::collection::vec(-3i64..3, 0..4),
            n in 0usize..15,
        ) {
            let mut d = vec![BigInt::one()];
            d.extend(den.into_iter().map(BigInt::from));
            let num: Vec<BigInt> = num.into_iter().map(BigInt::from).collect();
            let s = RationalSeries::new(num, d).unwrap();
            let c = s.expand(n);
            let prod = poly_mul(&c, s.denominator());
            for k in 0..=n {
                let lhs = prod.get(k).cloned().unwrap_or_default();
                let rhs = s.numerator().get(k).cloned().unwrap_or_default();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn root_is_a_zero(m in 2usize..14) {
            let r = dominant_root(&sparse_poly(&[(0, 1), (1, -1), (m, -1)])).unwrap();
            prop_assert!((1.0 - r - r.powi(m as i32)).abs() <= 1e-10);
        }
    }
}
