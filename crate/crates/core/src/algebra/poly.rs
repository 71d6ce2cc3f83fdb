use std::collections::BTreeMap;

use super::{AlgebraError, Alphabet, Field, Scalar, Word};

/// Sparse noncommutative polynomial with exact coefficients.
///
/// Terms are kept strictly descending in deglex order with no zero
/// coefficients, so the first term is the leading term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    field: Field,
    terms: Vec<(Word, Scalar)>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial {
            field,
            terms: Vec::new(),
        }
    }

    pub fn monomial(field: Field, word: Word) -> Self {
        Polynomial {
            field,
            terms: vec![(word, field.one())],
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(field: Field, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in terms {
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    left: field,
                    right: c.field(),
                });
            }
            accumulate(&mut acc, w, c);
        }
        Ok(Self::from_map(field, acc))
    }

    pub(crate) fn from_map(field: Field, map: BTreeMap<Word, Scalar>) -> Self {
        Polynomial {
            field,
            terms: map.into_iter().rev().collect(),
        }
    }

    /// Trusts the caller: terms strictly descending, non-zero, in `field`.
    pub(crate) fn from_sorted_unchecked(field: Field, terms: Vec<(Word, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|t| t[0].0 > t[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { field, terms }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[(Word, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Result<(&Word, &Scalar), AlgebraError> {
        self.terms
            .first()
            .map(|(w, c)| (w, c))
            .ok_or(AlgebraError::NoLeadingTerm)
    }

    /// Leading word; panics on the zero polynomial.
    pub fn leading_word(&self) -> &Word {
        &self.terms[0].0
    }

    /// Degree of the leading word, 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.first().map_or(0, |(w, _)| w.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.iter().all(|(w, _)| w.degree() == d)
    }

    fn check_field(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    fn to_map(&self) -> BTreeMap<Word, Scalar> {
        self.terms.iter().cloned().collect()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.add_scaled(&self.field.one(), &Word::one(), other, &Word::one())
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.add_scaled(&(-&self.field.one()), &Word::one(), other, &Word::one())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&(-&self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(w, d)| (w.clone(), c * d)).collect(),
        }
    }

    /// Computes `self + c · u · g · v`.
    pub fn add_scaled(
        &self,
        c: &Scalar,
        u: &Word,
        g: &Polynomial,
        v: &Word,
    ) -> Result<Polynomial, AlgebraError> {
        self.check_field(g)?;
        if c.field() != self.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field,
                right: c.field(),
            });
        }
        let mut acc = self.to_map();
        if !c.is_zero() {
            for (w, d) in &g.terms {
                accumulate(&mut acc, w.sandwich(u.letters(), v.letters()), c * d);
            }
        }
        Ok(Self::from_map(self.field, acc))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_field(other)?;
        let mut acc = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                accumulate(&mut acc, a.concat(b), c * d);
            }
        }
        Ok(Self::from_map(self.field, acc))
    }

    /// `u · self · v`
    pub fn sandwich(&self, u: &[u8], v: &[u8]) -> Polynomial {
        Polynomial {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(u, v), c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial, AlgebraError> {
        let (_, lc) = self.leading_term()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = lc.inv().expect("leading coefficient is non-zero");
        Ok(self.scale(&inv))
    }

    /// Reduces integer coefficients modulo `p`.
    pub fn specialize_mod_p(&self, p: u64) -> Result<Polynomial, AlgebraError> {
        if self.field != Field::Rational {
            return Err(AlgebraError::NotRational);
        }
        let target = Field::prime(p)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (w, c) in &self.terms {
            let r = c.specialize(p)?;
            if !r.is_zero() {
                terms.push((w.clone(), r));
            }
        }
        Ok(Polynomial {
            field: target,
            terms,
        })
    }

    /// Text form using the presentation grammar, e.g. `x^2 - x*z - 2*z^2`.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let word = w.display(alphabet);
            if magnitude.is_one() {
                out.push_str(&word);
            } else if w.is_one() {
                out.push_str(&magnitude.to_string());
            } else {
                out.push_str(&format!("{magnitude}*{word}"));
            }
        }
        out
    }
}

pub(crate) fn accumulate(acc: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::new(s.bytes().map(|b| b - b'x').collect())
    }

    fn q(terms: &[(&str, i64)]) -> Polynomial {
        let f = Field::Rational;
        Polynomial::from_terms(f, terms.iter().map(|(s, c)| (w(s), f.from_i64(*c)))).unwrap()
    }

    fn alphabet() -> Alphabet {
        Alphabet::parse("x y z").unwrap()
    }

    #[test]
    fn add_scaled_examples() {
        let one = Field::Rational.one();
        let minus = -&one;
        let xy = q(&[("xy", 1)]);
        assert!(xy.add_scaled(&minus, &Word::one(), &xy, &Word::one()).unwrap().is_zero());

        let xx = q(&[("xx", 1)]);
        let x = q(&[("x", 1)]);
        assert!(xx.add_scaled(&minus, &w("x"), &x, &Word::one()).unwrap().is_zero());

        let f = q(&[("xx", 1), ("xz", -1), ("zz", -2)]);
        let g = q(&[("xz", 1), ("zz", 2)]);
        let r = f.add_scaled(&one, &Word::one(), &g, &Word::one()).unwrap();
        assert_eq!(r, q(&[("xx", 1)]));
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = q(&[("x", 1)]);
        let b = Polynomial::monomial(Field::Prime(5), w("x"));
        assert!(matches!(a.add(&b), Err(AlgebraError::FieldMismatch { .. })));
    }

    #[test]
    fn leading_term_examples() {
        let f = q(&[("zz", -2), ("xz", -1), ("xx", 1)]);
        let (lw, lc) = f.leading_term().unwrap();
        assert_eq!(lw, &w("xx"));
        assert!(lc.is_one());
        let g = q(&[("z", 3)]);
        assert_eq!(g.leading_term().unwrap(), (&w("z"), &Field::Rational.from_i64(3)));
        assert_eq!(
            Polynomial::zero(Field::Rational).leading_term(),
            Err(AlgebraError::NoLeadingTerm)
        );
    }

    #[test]
    fn specialization_examples() {
        let a = alphabet();
        let f = q(&[("xx", 1), ("xz", -1), ("zz", -2)]);
        assert_eq!(f.specialize_mod_p(2).unwrap().display(&a), "x^2 + x*z");
        assert_eq!(f.specialize_mod_p(5).unwrap().display(&a), "x^2 + 4*x*z + 3*z^2");
        assert!(q(&[("zz", 5)]).specialize_mod_p(5).unwrap().is_zero());
        assert_eq!(f.specialize_mod_p(9), Err(AlgebraError::NotPrime(9)));
    }

    #[test]
    fn display_and_monic() {
        let a = alphabet();
        let f = q(&[("xx", 2), ("xz", -2), ("zz", -4)]);
        assert_eq!(f.display(&a), "2*x^2 - 2*x*z - 4*z^2");
        assert_eq!(f.monic().unwrap().display(&a), "x^2 - x*z - 2*z^2");
        assert!(f.is_homogeneous());
        assert!(!q(&[("xy", 1), ("z", 1)]).is_homogeneous());
    }

    fn poly_strategy() -> impl Strategy<Value = Vec<(Vec<u8>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u8..3, 0..4), -9i64..9), 0..6)
    }

    fn build(field: Field, raw: &[(Vec<u8>, i64)]) -> Polynomial {
        Polynomial::from_terms(field, raw.iter().map(|(l, c)| (Word::new(l.clone()), field.from_i64(*c)))).unwrap()
    }

    proptest! {
        #[test]
        fn addition_is_exact(f in poly_strategy(), g in poly_strategy()) {
            let (f, g) = (build(Field::Rational, &f), build(Field::Rational, &g));
            prop_assert_eq!(f.add(&g).unwrap().sub(&g).unwrap(), f);
        }

        #[test]
        fn invariants_hold(f in poly_strategy()) {
            let f = build(Field::Rational, &f);
            prop_assert!(f.terms().windows(2).all(|t| t[0].0 > t[1].0));
            prop_assert!(f.terms().iter().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn specialization_is_a_ring_homomorphism(
            f in poly_strategy(),
            g in poly_strategy(),
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
        ) {
            let (f, g) = (build(Field::Rational, &f), build(Field::Rational, &g));
            let pf = f.specialize_mod_p(p).unwrap();
            let pg = g.specialize_mod_p(p).unwrap();
            prop_assert_eq!(f.mul(&g).unwrap().specialize_mod_p(p).unwrap(), pf.mul(&pg).unwrap());
            prop_assert_eq!(f.add(&g).unwrap().specialize_mod_p(p).unwrap(), pf.add(&pg).unwrap());
        }
    }
}
