use std::fmt;

use super::AlgebraError;

/// Ordered generator names. Position 0 is the largest letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<String>,
}

pub(crate) fn valid_letter_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = names.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(AlgebraError::EmptyAlphabet);
        }
        if letters.len() > u8::MAX as usize {
            return Err(AlgebraError::AlphabetTooLarge);
        }
        for (i, name) in letters.iter().enumerate() {
            if !valid_letter_name(name) {
                return Err(AlgebraError::InvalidLetterName(name.clone()));
            }
            if letters[..i].contains(name) {
                return Err(AlgebraError::DuplicateLetter(name.clone()));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Parses a whitespace-separated list such as `"x y z"`.
    pub fn parse(spec: &str) -> Result<Self, AlgebraError> {
        Self::new(spec.split_whitespace())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn name(&self, rank: u8) -> &str {
        &self.letters[rank as usize]
    }

    pub fn rank_of(&self, name: &str) -> Option<u8> {
        self.letters.iter().position(|l| l == name).map(|i| i as u8)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_alphabets() {
        assert_eq!(Alphabet::parse(""), Err(AlgebraError::EmptyAlphabet));
        assert_eq!(
            Alphabet::parse("x y x"),
            Err(AlgebraError::DuplicateLetter("x".into()))
        );
        assert!(matches!(
            Alphabet::parse("x 2y"),
            Err(AlgebraError::InvalidLetterName(_))
        ));
    }

    #[test]
    fn ranks_follow_listing_order() {
        let a = Alphabet::parse("x y z u").unwrap();
        assert_eq!(a.rank_of("x"), Some(0));
        assert_eq!(a.rank_of("u"), Some(3));
        assert_eq!(a.rank_of("w"), None);
        assert_eq!(a.to_string(), "x y z u");
    }
}
