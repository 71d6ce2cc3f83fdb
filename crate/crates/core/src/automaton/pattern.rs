use std::fmt;

use crate::algebra::{Alphabet, Word};

use super::AutomatonError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Letter(u8),
    /// Zero or more repetitions of a non-empty word.
    Star(Vec<u8>),
}

/// A concatenation of letters and starred words, e.g. `x z* x` or
/// `y y (x y)* x y y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorPattern {
    atoms: Vec<Atom>,
}

#[derive(Debug, PartialEq, Eq)]
enum Token {
    Name(String),
    Open,
    Close,
    Star,
}

fn tokenize(text: &str) -> Result<Vec<Token>, AutomatonError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | '*' => {
                chars.next();
                out.push(match c {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    _ => Token::Star,
                });
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Name(name));
            }
            other => return Err(AutomatonError::PatternSyntax(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// A name is a generator, or a run of one-character generator names.
fn resolve(name: &str, alphabet: &Alphabet) -> Result<Vec<u8>, AutomatonError> {
    if let Some(r) = alphabet.rank_of(name) {
        return Ok(vec![r]);
    }
    name.chars()
        .map(|c| alphabet.rank_of(&c.to_string()))
        .collect::<Option<Vec<u8>>>()
        .ok_or_else(|| AutomatonError::UnknownLetter(name.to_string()))
}

impl FactorPattern {
    pub fn new(atoms: Vec<Atom>) -> Result<Self, AutomatonError> {
        if atoms.iter().any(|a| matches!(a, Atom::Star(w) if w.is_empty())) {
            return Err(AutomatonError::PatternSyntax("empty starred word".into()));
        }
        let p = FactorPattern { atoms };
        if p.min_degree() == 0 {
            return Err(AutomatonError::EmptyPattern);
        }
        Ok(p)
    }

    /// A single word.
    pub fn word(w: &Word) -> Self {
        FactorPattern {
            atoms: w.letters().iter().map(|&l| Atom::Letter(l)).collect(),
        }
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, AutomatonError> {
        let tokens = tokenize(text)?;
        let mut atoms = Vec::new();
        let mut i = 0;
        while i < tokens.len() {
            match &tokens[i] {
                Token::Name(n) => {
                    let letters = resolve(n, alphabet)?;
                    if tokens.get(i + 1) == Some(&Token::Star) {
                        let (last, init) = letters.split_last().expect("names are non-empty");
                        atoms.extend(init.iter().map(|&l| Atom::Letter(l)));
                        atoms.push(Atom::Star(vec![*last]));
                        i += 2;
                    } else {
                        atoms.extend(letters.into_iter().map(Atom::Letter));
                        i += 1;
                    }
                }
                Token::Open => {
                    let mut word = Vec::new();
                    i += 1;
                    loop {
                        match tokens.get(i) {
                            Some(Token::Name(n)) => word.extend(resolve(n, alphabet)?),
                            Some(Token::Close) => break,
                            _ => return Err(AutomatonError::PatternSyntax("expected `)`".into())),
                        }
                        i += 1;
                    }
                    if tokens.get(i + 1) != Some(&Token::Star) {
                        return Err(AutomatonError::PatternSyntax("group must be followed by `*`".into()));
                    }
                    atoms.push(Atom::Star(word));
                    i += 2;
                }
                Token::Close => return Err(AutomatonError::PatternSyntax("unbalanced `)`".into())),
                Token::Star => return Err(AutomatonError::PatternSyntax("`*` must follow a letter or group".into())),
            }
        }
        if atoms.is_empty() {
            return Err(AutomatonError::EmptyPattern);
        }
        FactorPattern::new(atoms)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Length of the shortest instance.
    pub fn min_degree(&self) -> usize {
        self.atoms.iter().filter(|a| matches!(a, Atom::Letter(_))).count()
    }

    pub fn is_finite(&self) -> bool {
        self.atoms.iter().all(|a| matches!(a, Atom::Letter(_)))
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.atoms
            .iter()
            .flat_map(|a| match a {
                Atom::Letter(l) => std::slice::from_ref(l),
                Atom::Star(w) => w.as_slice(),
            })
            .copied()
            .max()
    }

    /// All instances of degree at most `max_degree`, ascending.
    pub fn instances_up_to(&self, max_degree: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.expand(0, &mut prefix, max_degree, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn expand(&self, i: usize, prefix: &mut Vec<u8>, max: usize, out: &mut Vec<Word>) {
        let rest: usize = self.atoms[i..]
            .iter()
            .filter(|a| matches!(a, Atom::Letter(_)))
            .count();
        if prefix.len() + rest > max {
            return;
        }
        let Some(atom) = self.atoms.get(i) else {
            out.push(Word::new(prefix.clone()));
            return;
        };
        match atom {
            Atom::Letter(l) => {
                prefix.push(*l);
                self.expand(i + 1, prefix, max, out);
                prefix.pop();
            }
            Atom::Star(w) => {
                let base = prefix.len();
                loop {
                    self.expand(i + 1, prefix, max, out);
                    if prefix.len() + w.len() + rest > max {
                        break;
                    }
                    prefix.extend_from_slice(w);
                }
                prefix.truncate(base);
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        PatternDisplay { pattern: self, alphabet }
    }
}

struct PatternDisplay<'a> {
    pattern: &'a FactorPattern,
    alphabet: &'a Alphabet,
}

impl fmt::Display for PatternDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.pattern.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match atom {
                Atom::Letter(l) => write!(f, "{}", self.alphabet.name(*l))?,
                Atom::Star(w) if w.len() == 1 => write!(f, "{}*", self.alphabet.name(w[0]))?,
                Atom::Star(w) => {
                    let names: Vec<&str> = w.iter().map(|&l| self.alphabet.name(l)).collect();
                    write!(f, "({})*", names.join(" "))?;
                }
            }
        }
        Ok(())
    }
}
