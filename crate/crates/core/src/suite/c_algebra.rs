use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::normal_words::CountTable;
use crate::series::phi_series;

/// Normal-word counts of `C` for degrees `0..=n`.
///
/// A normal word is `u^j z^k` followed by an optional tail
/// `s₀ z^{k₁} s₁ z^{k₂} … s_m z^{k_{m+1}}` with `s_r ∈ {x, y}`,
/// `k₁ > k₂ > … > k_{m+1} ≥ 0`, and `k_r > k_{r+1} + 1` whenever `s_r = x`
/// for `r ≥ 1`.
pub fn c_counts(n: usize) -> CountTable {
    let b = c_tail_counts(n);
    let a: Vec<BigUint> = (0..=n)
        .map(|len| {
            (0..=len).fold(BigUint::zero(), |acc, d| acc + &b[d] * BigUint::from(len - d + 1))
        })
        .collect();
    CountTable::new(a, n)
}

/// `b[len]`: tails of length `len` (the empty tail counts once at 0).
pub fn c_tail_counts(n: usize) -> Vec<BigUint> {
    // t[len][k]: sequences z^k s₁ z^{k₂} … of length len with first exponent k
    // prefix[len][j] = Σ_{k<j} t[len][k]
    let mut t: Vec<Vec<BigUint>> = Vec::with_capacity(n);
    let mut prefix: Vec<Vec<BigUint>> = Vec::with_capacity(n);
    for len in 0..n {
        let mut row = vec![BigUint::zero(); len + 1];
        for (k, slot) in row.iter_mut().enumerate() {
            if k == len {
                *slot += 1u32;
                continue;
            }
            let rest = len - k - 1;
            let pre = &prefix[rest];
            let below = |j: usize| pre.get(j.min(pre.len() - 1)).cloned().unwrap_or_default();
            // s₁ = y needs k₂ < k, s₁ = x needs k₂ < k − 1
            *slot += below(k);
            if k >= 1 {
                *slot += below(k - 1);
            }
        }
        let mut pre = Vec::with_capacity(row.len() + 2);
        let mut acc = BigUint::zero();
        pre.push(acc.clone());
        for c in &row {
            acc += c;
            pre.push(acc.clone());
        }
        t.push(row);
        prefix.push(pre);
    }
    let mut b = vec![BigUint::one()];
    for len in 1..=n {
        let total: BigUint = t[len - 1].iter().sum();
        b.push(total * 2u32);
    }
    b
}

/// Result of checking `2^⌊√n⌋ ≤ p(n) ≤ (n+1)³ φ(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub max_degree: usize,
    pub lower_holds: bool,
    pub upper_holds: bool,
    /// First degree at which either bound fails.
    pub first_failure: Option<usize>,
}

impl BoundsReport {
    pub fn pass(&self) -> bool {
        self.lower_holds && self.upper_holds
    }
}

pub fn check_c_bounds(n: usize) -> BoundsReport {
    check_bounds_for(&c_counts(n), n)
}

pub fn check_bounds_for(table: &CountTable, n: usize) -> BoundsReport {
    let phi = phi_series(n);
    let mut report = BoundsReport {
        max_degree: n,
        lower_holds: true,
        upper_holds: true,
        first_failure: None,
    };
    for d in 0..=n.min(table.p.len() - 1) {
        let p = &table.p[d];
        let lower = BigUint::one() << d.isqrt();
        let upper = BigUint::from(d + 1).pow(3) * &phi[d];
        let (lo, up) = (&lower <= p, p <= &upper);
        report.lower_holds &= lo;
        report.upper_holds &= up;
        if (!lo || !up) && report.first_failure.is_none() {
            report.first_failure = Some(d);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn small_counts() {
        let t = c_counts(9);
        let a: Vec<u64> = t.a.iter().map(|c| c.to_u64().unwrap()).collect();
        assert_eq!(a, [1, 4, 9, 18, 33, 56, 91, 142, 215, 318]);
        let p: Vec<u64> = t.p.iter().take(4).map(|c| c.to_u64().unwrap()).collect();
        assert_eq!(p, [1, 5, 14, 32]);
    }

    #[test]
    fn bounds_small() {
        let r = check_c_bounds(30);
        assert!(r.pass(), "{r:?}");
        let broken = CountTable::new(vec![BigUint::zero(); 11], 10);
        assert_eq!(check_bounds_for(&broken, 10).first_failure, Some(0));
    }
}
