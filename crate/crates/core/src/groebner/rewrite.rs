use std::collections::BTreeMap;

use crate::algebra::{poly::accumulate, Field, Polynomial, Scalar, Word};

use super::matcher::FactorMatcher;
use super::GroebnerError;

/// Monic rewriting rules indexed by a factor matcher over their leading words.
#[derive(Clone, Debug)]
pub struct RewriteSet {
    field: Field,
    alphabet_size: usize,
    elements: Vec<Polynomial>,
    matcher: FactorMatcher,
}

impl PartialEq for RewriteSet {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.alphabet_size == other.alphabet_size
            && self.elements == other.elements
    }
}

impl Eq for RewriteSet {}

impl RewriteSet {
    pub fn new(field: Field, alphabet_size: usize) -> Self {
        RewriteSet {
            field,
            alphabet_size,
            elements: Vec::new(),
            matcher: FactorMatcher::new(alphabet_size, std::iter::empty()),
        }
    }

    /// Normalises each non-zero polynomial to monic form; zeros are skipped.
    pub fn from_polynomials<I>(field: Field, alphabet_size: usize, polys: I) -> Result<Self, GroebnerError>
    where
        I: IntoIterator<Item = Polynomial>,
    {
        let mut elements = Vec::new();
        for p in polys {
            if p.field() != field {
                return Err(GroebnerError::FieldMismatch);
            }
            if let Some(&r) = p
                .terms()
                .iter()
                .flat_map(|(w, _)| w.letters())
                .find(|&&r| r as usize >= alphabet_size)
            {
                return Err(GroebnerError::LetterOutOfRange(r as usize));
            }
            if !p.is_zero() {
                elements.push(p.monic().expect("non-zero"));
            }
        }
        let mut rs = RewriteSet::new(field, alphabet_size);
        rs.elements = elements;
        rs.rebuild();
        Ok(rs)
    }

    fn rebuild(&mut self) {
        self.matcher = FactorMatcher::new(
            self.alphabet_size,
            self.elements.iter().map(Polynomial::leading_word),
        );
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn matcher(&self) -> &FactorMatcher {
        &self.matcher
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.elements.iter().map(|p| p.leading_word().clone()).collect()
    }

    /// Appends a non-zero polynomial (made monic) and returns its index.
    pub fn push(&mut self, p: Polynomial) -> usize {
        debug_assert_eq!(p.field(), self.field);
        self.elements.push(p.monic().expect("pushed polynomial must be non-zero"));
        self.rebuild();
        self.elements.len() - 1
    }

    pub(crate) fn remove(&mut self, index: usize) -> Polynomial {
        let p = self.elements.remove(index);
        self.rebuild();
        p
    }

    /// Replaces an element without touching its leading word.
    pub(crate) fn replace_tail(&mut self, index: usize, p: Polynomial) {
        debug_assert_eq!(p.leading_word(), self.elements[index].leading_word());
        self.elements[index] = p;
    }

    pub(crate) fn sort_by_leading_word(&mut self) {
        self.elements.sort_by(|a, b| a.leading_word().cmp(b.leading_word()));
        self.rebuild();
    }

    /// The rule used to rewrite `w`: the smallest applicable leading word,
    /// at its leftmost occurrence, ties broken by element index.
    /// Returns `(element index, position)`.
    pub fn find_reducer(&self, w: &Word) -> Option<(usize, usize)> {
        self.matcher
            .find_all(w)
            .into_iter()
            .min_by(|&(pa, ia), &(pb, ib)| {
                self.elements[ia]
                    .leading_word()
                    .cmp(self.elements[ib].leading_word())
                    .then(pa.cmp(&pb))
                    .then(ia.cmp(&ib))
            })
            .map(|(pos, idx)| (idx, pos))
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        !self.matcher.contains_any(w)
    }
}

/// Fully reduces `f`: repeatedly rewrites the greatest reducible monomial.
pub fn normal_form(f: &Polynomial, rs: &RewriteSet) -> Polynomial {
    if rs.is_empty() || f.is_zero() {
        return f.clone();
    }
    let field = f.field();
    let mut work: BTreeMap<Word, Scalar> = f.terms().iter().cloned().collect();
    let mut done: Vec<(Word, Scalar)> = Vec::new();
    while let Some((w, c)) = work.pop_last() {
        match rs.find_reducer(&w) {
            None => done.push((w, c)),
            Some((idx, pos)) => {
                let g = &rs.elements[idx];
                let len = g.leading_word().degree();
                let (u, v) = (&w.letters()[..pos], &w.letters()[pos + len..]);
                let minus_c = -&c;
                for (t, d) in &g.terms()[1..] {
                    accumulate(&mut work, t.sandwich(u, v), &minus_c * d);
                }
            }
        }
    }
    Polynomial::from_sorted_unchecked(field, done)
}
