use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Polynomial, Presentation, Word};

use super::overlap::{all_overlaps, find_overlaps, Overlap};
use super::rewrite::{normal_form, RewriteSet};
use super::GroebnerError;

/// The reduced Gröbner basis elements of degree at most `degree_bound`.
///
/// `complete` is set only when every ambiguity of the returned basis (of any
/// degree) resolves and every relation above the bound reduces to zero, in
/// which case the basis is the whole reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedGB {
    basis: RewriteSet,
    degree_bound: usize,
    complete: bool,
    leading_words: Vec<Word>,
}

impl TruncatedGB {
    pub fn basis(&self) -> &RewriteSet {
        &self.basis
    }

    pub fn elements(&self) -> &[Polynomial] {
        self.basis.elements()
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    /// Sorted ascending in deglex order.
    pub fn leading_words(&self) -> &[Word] {
        &self.leading_words
    }

    /// Degree-`n` data is determined by this basis.
    pub fn covers(&self, n: usize) -> bool {
        self.complete || n <= self.degree_bound
    }

    pub fn max_element_degree(&self) -> usize {
        self.leading_words.iter().map(Word::degree).max().unwrap_or(0)
    }
}

fn add_element(
    rs: &mut RewriteSet,
    queue: &mut BTreeSet<Overlap>,
    h: Polynomial,
    bound: usize,
) {
    let idx = rs.push(h);
    queue.extend(
        find_overlaps(rs, idx)
            .into_iter()
            .filter(|o| o.degree() <= bound),
    );
}

fn split_leading(p: &Polynomial) -> (Polynomial, Polynomial) {
    let (w, c) = p.leading_term().expect("non-zero");
    let lead = Polynomial::from_sorted_unchecked(p.field(), vec![(w.clone(), c.clone())]);
    let tail = Polynomial::from_sorted_unchecked(p.field(), p.terms()[1..].to_vec());
    (lead, tail)
}

fn reduce_tail(rs: &mut RewriteSet, index: usize) {
    let (lead, tail) = split_leading(&rs.elements()[index]);
    if tail.is_zero() {
        return;
    }
    let reduced = normal_form(&tail, rs);
    if reduced != tail {
        rs.replace_tail(index, lead.add(&reduced).expect("same field"));
    }
}

/// Degree-by-degree Buchberger completion of a homogeneous presentation,
/// truncated at `bound`.
///
/// Ambiguities are processed in ascending order of ambiguity word; for a
/// graded ideal every degree-`n` basis element arises from degree-`n`
/// relations or ambiguities, so the result is exact up to `bound`.
pub fn buchberger_truncated(presentation: &Presentation, bound: usize) -> TruncatedGB {
    let field = presentation.field();
    let mut relations: BTreeMap<usize, Vec<Polynomial>> = BTreeMap::new();
    for r in presentation.relations() {
        relations
            .entry(r.degree())
            .or_default()
            .push(r.monic().expect("relations are non-zero"));
    }
    for list in relations.values_mut() {
        list.sort();
        list.dedup();
    }

    let mut rs = RewriteSet::new(field, presentation.alphabet().len());
    let mut queue: BTreeSet<Overlap> = BTreeSet::new();
    for d in 1..=bound {
        let first_new = rs.len();
        if let Some(list) = relations.get(&d) {
            for r in list {
                let h = normal_form(r, &rs);
                if !h.is_zero() {
                    add_element(&mut rs, &mut queue, h, bound);
                }
            }
        }
        while queue.first().is_some_and(|o| o.degree() <= d) {
            let ov = queue.pop_first().expect("checked non-empty");
            if ov.is_trivial(&rs) {
                continue;
            }
            let h = normal_form(&ov.s_polynomial(&rs), &rs);
            if !h.is_zero() {
                add_element(&mut rs, &mut queue, h, bound);
            }
        }
        for i in first_new..rs.len() {
            reduce_tail(&mut rs, i);
        }
    }

    let basis = interreduce(&rs);
    let complete = certify(&basis, presentation, bound);
    let leading_words = basis.leading_words();
    TruncatedGB {
        basis,
        degree_bound: bound,
        complete,
        leading_words,
    }
}

fn certify(basis: &RewriteSet, presentation: &Presentation, bound: usize) -> bool {
    let high_relations_vanish = presentation
        .relations()
        .iter()
        .filter(|r| r.degree() > bound)
        .all(|r| normal_form(r, basis).is_zero());
    high_relations_vanish
        && all_overlaps(basis)
            .into_iter()
            .filter(|o| o.degree() > bound && !o.is_trivial(basis))
            .all(|o| normal_form(&o.s_polynomial(basis), basis).is_zero())
}

/// Removes rules whose leading word is reducible by another rule, reduces
/// every tail, and sorts by leading word. Idempotent.
pub fn interreduce(rs: &RewriteSet) -> RewriteSet {
    let mut cur = rs.clone();
    loop {
        let victim = (0..cur.len()).rev().find(|&i| {
            let lw = cur.elements()[i].leading_word();
            cur.matcher().find_all(lw).iter().any(|&(_, j)| j != i)
        });
        let Some(i) = victim else { break };
        let f = cur.remove(i);
        let h = normal_form(&f, &cur);
        if !h.is_zero() {
            cur.push(h);
        }
    }
    for i in 0..cur.len() {
        reduce_tail(&mut cur, i);
    }
    cur.sort_by_leading_word();
    cur
}

/// Ideal membership, decided by reduction against the truncated basis.
pub fn ideal_member_up_to(f: &Polynomial, gb: &TruncatedGB) -> Result<bool, GroebnerError> {
    if f.field() != gb.basis.field() {
        return Err(GroebnerError::FieldMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    if !f.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    if !gb.covers(f.degree()) {
        return Err(GroebnerError::BeyondBound {
            degree: f.degree(),
            bound: gb.degree_bound,
        });
    }
    Ok(normal_form(f, &gb.basis).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_presentation, Field};

    const A: &str = "generators: x y z\nfield: Q\nrelations:\nx*y\ny*z\nx^2 - x*z - 2*z^2\n";
    const C: &str = "generators: x y z u\nfield: Q\nrelations:\n\
        x*u - y*z\ny*u - z*x\nz*u - u*z\ny^2\ny*x\nx*y\nx^2\n";

    fn lws(gb: &TruncatedGB, p: &Presentation) -> Vec<String> {
        gb.leading_words()
            .iter()
            .map(|w| w.display(p.alphabet()))
            .collect()
    }

    fn w(p: &Presentation, s: &str) -> Word {
        Word::new(s.chars().map(|c| p.alphabet().rank_of(&c.to_string()).unwrap()).collect())
    }

    #[test]
    fn algebra_a_degree_six() {
        let p = parse_presentation(A).unwrap();
        let gb = buchberger_truncated(&p, 6);
        let mut expected = vec![w(&p, "yz"), w(&p, "xx"), w(&p, "xy")];
        for j in 1..=4 {
            let z = "z".repeat(j);
            expected.push(w(&p, &format!("x{z}x")));
            expected.push(w(&p, &format!("x{z}y")));
        }
        expected.sort();
        assert_eq!(gb.leading_words(), &expected[..]);
        assert!(!gb.complete());
    }

    #[test]
    fn algebra_a_mod_five_has_finite_order_pattern() {
        let p = parse_presentation(A).unwrap().specialize_mod_p(5).unwrap();
        let gb = buchberger_truncated(&p, 8);
        let got = lws(&gb, &p);
        for s in ["z^4*y", "x*z^4", "y*z", "x*z^2*x"] {
            assert!(got.contains(&s.to_string()), "{s} missing from {got:?}");
        }
        assert!(!got.contains(&"x*z^3*x".to_string()));
    }

    #[test]
    fn algebra_c_low_degrees() {
        let p = parse_presentation(C).unwrap();
        let gb = buchberger_truncated(&p, 5);
        let high: Vec<String> = gb
            .leading_words()
            .iter()
            .filter(|w| w.degree() >= 3)
            .map(|w| w.display(p.alphabet()))
            .collect();
        assert_eq!(
            high,
            ["y*z*x", "x*z*x", "y*z*y*z", "x*z*y*z", "y*z^2*x*z", "x*z^2*x*z"]
        );
    }

    #[test]
    fn permuted_relations_give_identical_basis() {
        let p = parse_presentation(C).unwrap();
        let mut rels = p.relations().to_vec();
        rels.reverse();
        rels.swap(1, 4);
        let q = p.with_relations(rels).unwrap();
        assert_eq!(buchberger_truncated(&p, 9), buchberger_truncated(&q, 9));
    }

    #[test]
    fn overlaps_up_to_bound_resolve() {
        let p = parse_presentation(A).unwrap();
        let gb = buchberger_truncated(&p, 9);
        for o in all_overlaps(gb.basis()).into_iter().filter(|o| o.degree() <= 9) {
            assert!(normal_form(&o.s_polynomial(gb.basis()), gb.basis()).is_zero());
        }
    }

    #[test]
    fn leading_words_grow_monotonically() {
        let p = parse_presentation(C).unwrap();
        let small = buchberger_truncated(&p, 6);
        let large = buchberger_truncated(&p, 9);
        let prefix: Vec<&Word> = large.leading_words().iter().filter(|w| w.degree() <= 6).collect();
        assert_eq!(prefix, small.leading_words().iter().collect::<Vec<_>>());
    }

    #[test]
    fn finite_basis_is_certified() {
        let text = "generators: x y\nfield: GF(3)\nrelations:\ny^3\nx^2*y - y*x^2 - y*x*y\n";
        let p = parse_presentation(text).unwrap();
        let gb = buchberger_truncated(&p, 12);
        assert!(gb.complete());
        assert_eq!(gb.elements().len(), 4);
        assert!(!buchberger_truncated(&parse_presentation(A).unwrap(), 12).complete());
    }

    #[test]
    fn membership() {
        let p = parse_presentation(A).unwrap();
        let gb = buchberger_truncated(&p, 5);
        let f = parse_presentation(
            "generators: x y z\nfield: Q\nrelations:\nx*z*x - 3*x*z^2 + 2*z^2*x - 2*z^3\n",
        )
        .unwrap()
        .relations()[0]
            .clone();
        assert_eq!(ideal_member_up_to(&f, &gb), Ok(true));
        let z = Polynomial::monomial(Field::Rational, w(&p, "z"));
        assert_eq!(ideal_member_up_to(&z, &gb), Ok(false));
        let long = Polynomial::monomial(Field::Rational, w(&p, "zzzzzz"));
        assert!(matches!(
            ideal_member_up_to(&long, &gb),
            Err(GroebnerError::BeyondBound { .. })
        ));
    }

    #[test]
    fn interreduce_examples() {
        let q = Field::Rational;
        let x2 = Polynomial::monomial(q, Word::new(vec![0, 0]));
        let xz = Polynomial::monomial(q, Word::new(vec![0, 1]));
        let rs = RewriteSet::from_polynomials(q, 2, [x2.clone(), x2.sub(&xz).unwrap()]).unwrap();
        let out = interreduce(&rs);
        assert_eq!(out.elements(), &[xz, x2][..]);
        assert_eq!(interreduce(&out), out);

        let two_xy = Polynomial::monomial(q, Word::new(vec![0, 1])).scale(&q.from_i64(2));
        let rs = RewriteSet::from_polynomials(q, 2, [two_xy]).unwrap();
        assert!(interreduce(&rs).elements()[0].leading_term().unwrap().1.is_one());
    }
}
