//! Independent count of normal words by exact linear algebra: the
//! dimension of the degree-`n` component of the ideal is the rank of the
//! span of all `u·f·v` with `f` a relation and `deg(u f v) = n`.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::algebra::{Presentation, Scalar, Word};

fn words_of_degree(g: usize, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..g as u8).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

/// Rank of the degree-`n` component of the two-sided ideal.
pub fn ideal_rank(p: &Presentation, n: usize) -> usize {
    let g = p.alphabet().len();
    // pivot word -> reduced row with that leading word
    let mut pivots: BTreeMap<Word, Vec<(Word, Scalar)>> = BTreeMap::new();
    for f in p.relations() {
        let d = f.degree();
        if d > n {
            continue;
        }
        for left in 0..=n - d {
            for u in words_of_degree(g, left) {
                for v in words_of_degree(g, n - d - left) {
                    let row = f.sandwich(&u, &v);
                    let mut row: BTreeMap<Word, Scalar> = row.terms().iter().cloned().collect();
                    while let Some((lead, c)) = row.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) {
                        match pivots.get(&lead) {
                            Some(pivot) => {
                                for (w, d) in pivot {
                                    let delta = &c * d;
                                    let e = row.entry(w.clone()).or_insert_with(|| p.field().zero());
                                    *e = &*e - &delta;
                                    if e.is_zero() {
                                        row.remove(w);
                                    }
                                }
                            }
                            None => {
                                let inv = c.inv().expect("non-zero");
                                let normalized = row.iter().rev().map(|(w, d)| (w.clone(), &inv * d)).collect();
                                pivots.insert(lead, normalized);
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    pivots.len()
}

/// `gⁿ − rank` for every degree `0..=n`.
pub fn oracle_counts(p: &Presentation, n: usize) -> Vec<BigUint> {
    let g = BigUint::from(p.alphabet().len());
    (0..=n)
        .map(|d| g.pow(d as u32) - BigUint::from(ideal_rank(p, d)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_presentation;
    use num_traits::ToPrimitive;

    #[test]
    fn algebra_a_small_degrees() {
        let p = parse_presentation("generators: x y z\nfield: Q\nrelations:\nx*y\ny*z\nx^2 - x*z - 2*z^2\n").unwrap();
        let c: Vec<u64> = oracle_counts(&p, 4).iter().map(|c| c.to_u64().unwrap()).collect();
        assert_eq!(c, [1, 3, 6, 10, 15]);
    }

    #[test]
    fn dependent_rows_are_detected() {
        let p = parse_presentation("generators: x y\nfield: GF(3)\nrelations:\nx*y - y*x\n").unwrap();
        let c: Vec<u64> = oracle_counts(&p, 4).iter().map(|c| c.to_u64().unwrap()).collect();
        assert_eq!(c, [1, 2, 3, 4, 5]);
    }
}
