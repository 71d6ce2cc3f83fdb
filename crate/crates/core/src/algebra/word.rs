use std::cmp::Ordering;
use std::fmt::Write as _;

use super::{AlgebraError, Alphabet};

/// A monomial of the free monoid: a sequence of letter ranks.
///
/// Rank 0 is the largest letter. The derived [`Ord`] is the
/// degree-lexicographic order: shorter words are smaller, and words of the
/// same length compare left to right by letter precedence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    /// The unit word `1`.
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letter(rank: u8) -> Self {
        Word(vec![rank])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `u · self · v`
    pub fn sandwich(&self, left: &[u8], right: &[u8]) -> Word {
        let mut v = Vec::with_capacity(left.len() + self.0.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(right);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Positions where `pattern` occurs as a factor.
    pub fn occurrences(&self, pattern: &Word) -> Vec<usize> {
        let (n, m) = (self.0.len(), pattern.0.len());
        if m > n {
            return Vec::new();
        }
        (0..=n - m)
            .filter(|&i| self.0[i..i + m] == pattern.0[..])
            .collect()
    }

    pub fn contains_factor(&self, pattern: &Word) -> bool {
        let m = pattern.0.len();
        m == 0 || self.0.windows(m).any(|w| w == &pattern.0[..])
    }

    pub fn check_range(&self, size: usize) -> Result<(), AlgebraError> {
        match self.0.iter().find(|&&r| r as usize >= size) {
            Some(&r) => Err(AlgebraError::LetterOutOfRange {
                rank: r as usize,
                size,
            }),
            None => Ok(()),
        }
    }

    /// Renders the word as `x*z^2*x`, or `1` for the unit.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if i > 0 {
                out.push('*');
            }
            out.push_str(alphabet.name(self.0[i]));
            if j - i > 1 {
                let _ = write!(out, "^{}", j - i);
            }
            i = j;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            // smaller rank is the larger letter
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

/// Left-to-right degree-lexicographic order on words over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegLexOrder {
    alphabet: Alphabet,
}

impl DegLexOrder {
    pub fn new(alphabet: Alphabet) -> Self {
        DegLexOrder { alphabet }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Result<Ordering, AlgebraError> {
        u.check_range(self.alphabet.len())?;
        v.check_range(self.alphabet.len())?;
        Ok(u.cmp(v))
    }
}

pub fn cmp_deglex(u: &Word, v: &Word, order: &DegLexOrder) -> Result<Ordering, AlgebraError> {
    order.compare(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // x=0 > y=1 > z=2
    fn w(s: &str) -> Word {
        Word::new(
            s.bytes()
                .map(|b| match b {
                    b'x' => 0,
                    b'y' => 1,
                    b'z' => 2,
                    _ => unreachable!(),
                })
                .collect(),
        )
    }

    fn order() -> DegLexOrder {
        DegLexOrder::new(Alphabet::parse("x y z").unwrap())
    }

    #[test]
    fn deglex_examples() {
        let ord = order();
        assert_eq!(cmp_deglex(&w("xz"), &w("yz"), &ord), Ok(Ordering::Greater));
        assert_eq!(cmp_deglex(&Word::one(), &w("x"), &ord), Ok(Ordering::Less));
        assert_eq!(cmp_deglex(&w("xzx"), &w("xzz"), &ord), Ok(Ordering::Greater));
        assert_eq!(cmp_deglex(&w("zzz"), &w("xx"), &ord), Ok(Ordering::Greater));
        assert_eq!(cmp_deglex(&w("yzx"), &w("yzx"), &ord), Ok(Ordering::Equal));
    }

    #[test]
    fn out_of_range_letter() {
        let ord = order();
        assert_eq!(
            cmp_deglex(&Word::new(vec![3]), &w("x"), &ord),
            Err(AlgebraError::LetterOutOfRange { rank: 3, size: 3 })
        );
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w("xz").concat(&w("x")), w("xzx"));
        assert_eq!(Word::one().concat(&w("yz")), w("yz"));
        assert_eq!(w("xz").concat(&Word::one()), w("xz"));
        assert_eq!(w("xz").concat(&w("x")).degree(), 3);
    }

    #[test]
    fn display_compresses_runs() {
        let a = Alphabet::parse("x y z").unwrap();
        assert_eq!(w("xzzx").display(&a), "x*z^2*x");
        assert_eq!(Word::one().display(&a), "1");
        assert_eq!(w("yyy").display(&a), "y^3");
    }

    #[test]
    fn factor_search() {
        assert_eq!(w("xzxzx").occurrences(&w("xzx")), vec![0, 2]);
        assert!(w("yzzx").contains_factor(&w("zz")));
        assert!(!w("yzzx").contains_factor(&w("xy")));
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..3, 0..7).prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(u in word_strategy(), v in word_strategy(), m in word_strategy()) {
            if u < v {
                prop_assert!(m.concat(&u) < m.concat(&v));
                prop_assert!(u.concat(&m) < v.concat(&m));
            }
        }

        #[test]
        fn order_is_total_and_antisymmetric(u in word_strategy(), v in word_strategy()) {
            prop_assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
            prop_assert_eq!(u.cmp(&v) == Ordering::Equal, u == v);
            prop_assert!(Word::one() <= u);
        }

        #[test]
        fn order_is_transitive(u in word_strategy(), v in word_strategy(), m in word_strategy()) {
            if u <= v && v <= m {
                prop_assert!(u <= m);
            }
        }
    }
}
