use num_bigint::BigUint;
use proptest::prelude::*;

use ncgrowth_core::oracle::oracle_counts;
use ncgrowth_core::{
    buchberger_truncated, compile_forbidden, count_by_degree, count_normal, enumerate_normal, parse_presentation,
    series_from_dfa, FactorPattern, Presentation,
};

const LETTERS: [&str; 3] = ["x", "y", "z"];

fn monomials(g: usize, deg: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..deg {
        out = out
            .iter()
            .flat_map(|m| LETTERS[..g].iter().map(move |l| if m.is_empty() { l.to_string() } else { format!("{m}*{l}") }))
            .collect();
    }
    out
}

/// Random homogeneous presentation; coefficient 0 drops a term.
fn presentation(g: usize, field: &str, rels: &[(usize, Vec<i64>)]) -> Option<Presentation> {
    let mut lines = Vec::new();
    for (deg, coeffs) in rels {
        let mut line = String::new();
        for (m, &c) in monomials(g, *deg).iter().zip(coeffs) {
            if c != 0 {
                let sign = if c < 0 { "-" } else if line.is_empty() { "" } else { "+" };
                line.push_str(&format!("{sign} {}*{m} ", c.abs()));
            }
        }
        if !line.is_empty() {
            lines.push(line.trim().to_string());
        }
    }
    if lines.is_empty() {
        return None;
    }
    let text = format!("generators: {}\nfield: {field}\nrelations:\n{}\n", LETTERS[..g].join(" "), lines.join("\n"));
    Some(parse_presentation(&text).unwrap())
}

fn coefficient() -> impl Strategy<Value = i64> {
    prop_oneof![3 => Just(0i64), 1 => -2i64..=-1, 1 => 1i64..=2]
}

fn rel_strategy() -> impl Strategy<Value = (usize, Vec<(usize, Vec<i64>)>)> {
    (2usize..=3).prop_flat_map(|g| {
        let rel = (2usize..=3).prop_flat_map(move |d| (Just(d), prop::collection::vec(coefficient(), g.pow(d as u32))));
        (Just(g), prop::collection::vec(rel, 1..=3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn completion_agrees_with_rank_oracle((g, rels) in rel_strategy(), q in prop::sample::select(vec!["Q", "GF(3)", "GF(7)"])) {
        if let Some(p) = presentation(g, q, &rels) {
            // exact rank over Q is costly for dense relations
            let n = if q == "Q" { 4 } else { 5 };
            let gb = buchberger_truncated(&p, n);
            let counts = count_normal(&gb, n).unwrap();
            prop_assert_eq!(counts.a, oracle_counts(&p, n));
        }
    }

    #[test]
    fn automaton_of_leading_words_counts_normal_words((g, rels) in rel_strategy()) {
        if let Some(p) = presentation(g, "GF(5)", &rels) {
            let gb = buchberger_truncated(&p, 7);
            let patterns: Vec<FactorPattern> = gb.leading_words().iter().map(FactorPattern::word).collect();
            let dfa = compile_forbidden(&patterns, p.alphabet()).unwrap();
            let by_dfa = count_by_degree(&dfa, 7);
            let by_dp = count_normal(&gb, 7).unwrap();
            prop_assert_eq!(&by_dfa.a, &by_dp.a);
            for n in 0..=4 {
                prop_assert_eq!(BigUint::from(enumerate_normal(&gb, n).unwrap().len()), by_dp.a[n].clone());
            }
            let series = series_from_dfa(&dfa).expand(8);
            for n in 0..=7 {
                prop_assert_eq!(series[n].to_biguint().unwrap(), by_dfa.a[n].clone());
            }
        }
    }

    #[test]
    fn relation_order_does_not_matter((g, rels) in rel_strategy(), seed in any::<u64>()) {
        if let Some(p) = presentation(g, "GF(5)", &rels) {
            let mut shuffled = p.relations().to_vec();
            let len = shuffled.len();
            shuffled.rotate_left(seed as usize % len);
            if seed % 2 == 1 {
                shuffled.reverse();
            }
            let q = p.with_relations(shuffled).unwrap();
            prop_assert_eq!(buchberger_truncated(&p, 6), buchberger_truncated(&q, 6));
            prop_assert_eq!(p.canonical_text(), q.canonical_text());
        }
    }
}

#[test]
fn complete_basis_counts_extend_past_the_bound() {
    let text = "generators: x y\nfield: GF(3)\nrelations:\ny^3\nx^2*y - y*x^2 - y*x*y\n";
    let p = parse_presentation(text).unwrap();
    let gb = buchberger_truncated(&p, 10);
    assert!(gb.complete());
    let long = count_normal(&gb, 30).unwrap();
    let deep = count_normal(&buchberger_truncated(&p, 30), 30).unwrap();
    assert_eq!(long.a, deep.a);
}
