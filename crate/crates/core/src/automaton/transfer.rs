use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::dfa::{count_by_degree, Dfa};
use crate::series::{poly_mul, RationalSeries};

/// Coefficients `[1, c1, .., cn]` of `det(λI − M) = λⁿ + c1 λⁿ⁻¹ + … + cn`,
/// by the Faddeev–LeVerrier recursion (all divisions are exact).
pub fn charpoly(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigInt::one()];
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{k-1} I
        let mut next = matmul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[k - 1];
        }
        mk = next;
        let am = matmul(m, &mk);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs.push(-trace / BigInt::from(k));
    }
    coeffs
}

fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Generating function of the accepted words by length.
///
/// The denominator is `det(I − tM)` for the transfer matrix `M` of the live
/// states; the numerator is the truncated product of the denominator with the
/// counts. The expansion is checked against direct counting for
/// `2·|states| + 5` terms.
pub fn series_from_dfa(dfa: &Dfa) -> RationalSeries {
    let live = dfa.live_states();
    let n = live.len();
    let mut index = vec![usize::MAX; dfa.num_states()];
    for (i, &s) in live.iter().enumerate() {
        index[s] = i;
    }
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, &s) in live.iter().enumerate() {
        for l in 0..dfa.alphabet_size() as u8 {
            let t = index[dfa.step(s, l)];
            if t != usize::MAX {
                m[i][t] += 1;
            }
        }
    }
    let den = charpoly(&m);
    let check = 2 * dfa.num_states() + 5;
    let counts: Vec<BigInt> = count_by_degree(dfa, check)
        .a
        .into_iter()
        .map(BigInt::from)
        .collect();
    let mut num = poly_mul(&den, &counts[..n.max(1)]);
    num.truncate(n);
    let series = RationalSeries::new(num, den).expect("charpoly is monic");
    assert_eq!(series.expand(check), counts, "transfer-matrix series disagrees with direct counts");
    series
}
