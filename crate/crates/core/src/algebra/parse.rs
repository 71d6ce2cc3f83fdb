//! Reader for the presentation text format:
//!
//! ```text
//! # algebra A
//! generators: x y z
//! field: Q
//! relations:
//! x*y
//! y*z
//! x^2 - x*z - 2*z^2
//! ```
//!
//! Generators are listed largest first. Relations are signed sums of terms;
//! a term is an optional coefficient (`3` or `3/4`), optionally followed by
//! `*`, then `*`-separated letters with optional `^k` powers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::alphabet::valid_letter_name;
use super::{AlgebraError, Alphabet, Field, Polynomial, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownGenerator(String),
    Inhomogeneous,
    NonPrimeModulus(u64),
    MissingGenerators,
    DuplicateHeader(&'static str),
    ZeroRelation,
    LowDegree(usize),
    Algebra(AlgebraError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::UnknownGenerator(g) => write!(f, "unknown generator `{g}`"),
            ParseErrorKind::Inhomogeneous => f.write_str("inhomogeneous relation"),
            ParseErrorKind::NonPrimeModulus(p) => write!(f, "modulus {p} is not prime"),
            ParseErrorKind::MissingGenerators => f.write_str("missing `generators:` line"),
            ParseErrorKind::DuplicateHeader(h) => write!(f, "duplicate `{h}:` line"),
            ParseErrorKind::ZeroRelation => f.write_str("relation is zero"),
            ParseErrorKind::LowDegree(d) => {
                write!(f, "relation has degree {d}; degree at least 2 required")
            }
            ParseErrorKind::Algebra(e) => write!(f, "{e}"),
        }
    }
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

struct RawFactor {
    name: String,
    column: usize,
    power: usize,
}

struct RawTerm {
    column: usize,
    coeff: BigRational,
    factors: Vec<RawFactor>,
}

impl RawTerm {
    fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.power).sum()
    }
}

struct RawRelation {
    line: usize,
    column: usize,
    terms: Vec<RawTerm>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Star,
    Caret,
    Slash,
    Plus,
    Minus,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), column));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Name(chars[start..i].iter().collect()), column));
                continue;
            }
            other => {
                return Err(err(
                    line,
                    column,
                    ParseErrorKind::Syntax(format!("unexpected character `{other}`")),
                ))
            }
        };
        out.push((tok, column));
        i += 1;
    }
    Ok(out)
}

struct RelationParser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_column: usize,
}

impl RelationParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |(_, c)| *c)
    }

    fn syntax(&self, msg: &str) -> ParseError {
        err(self.line, self.column(), ParseErrorKind::Syntax(msg.to_string()))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn relation(&mut self) -> Result<Vec<RawTerm>, ParseError> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -1
            }
            Some(Tok::Plus) => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let mut term = self.term()?;
            if sign < 0 {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            sign = match self.peek() {
                None => break,
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                Some(_) => return Err(self.syntax("expected `+` or `-` between terms")),
            };
            self.bump();
        }
        Ok(terms)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => {
                self.pos -= 1;
                Err(self.syntax("expected an integer"))
            }
        }
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let column = self.column();
        let mut coeff = BigRational::one();
        let mut factors = Vec::new();
        if let Some(Tok::Int(_)) = self.peek() {
            let num = self.integer()?;
            let mut den = BigInt::one();
            if self.peek() == Some(&Tok::Slash) {
                self.bump();
                den = self.integer()?;
                if den.is_zero() {
                    self.pos -= 1;
                    return Err(self.syntax("zero denominator"));
                }
            }
            coeff = BigRational::new(num, den);
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                }
                Some(Tok::Name(_)) => {}
                _ => return Ok(RawTerm { column, coeff, factors }),
            }
        }
        loop {
            let fcol = self.column();
            let name = match self.bump() {
                Some(Tok::Name(n)) => n,
                _ => {
                    self.pos -= 1;
                    return Err(self.syntax("expected a generator"));
                }
            };
            let mut power = 1usize;
            if self.peek() == Some(&Tok::Caret) {
                self.bump();
                let n = self.integer()?;
                power = usize::try_from(n).map_err(|_| {
                    err(self.line, fcol, ParseErrorKind::Syntax("bad exponent".into()))
                })?;
            }
            factors.push(RawFactor {
                name,
                column: fcol,
                power,
            });
            if self.peek() == Some(&Tok::Star) {
                self.bump();
            } else {
                break;
            }
        }
        Ok(RawTerm {
            column,
            coeff,
            factors,
        })
    }
}

fn parse_field(value: &str, line: usize, column: usize) -> Result<Field, ParseError> {
    let compact: String = value.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "Q" {
        return Ok(Field::Rational);
    }
    let inner = compact
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| {
            err(
                line,
                column,
                ParseErrorKind::Syntax(format!("expected `Q` or `GF(p)`, found `{value}`")),
            )
        })?;
    let p: u64 = inner.parse().map_err(|_| {
        err(
            line,
            column,
            ParseErrorKind::Syntax(format!("bad modulus `{inner}`")),
        )
    })?;
    Field::prime(p).map_err(|_| err(line, column, ParseErrorKind::NonPrimeModulus(p)))
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut generators: Option<(Alphabet, usize)> = None;
    let mut field: Option<Field> = None;
    let mut in_relations = false;
    let mut raw: Vec<RawRelation> = Vec::new();

    for (idx, full) in text.lines().enumerate() {
        let line = idx + 1;
        let body = match full.find('#') {
            Some(i) => &full[..i],
            None => full,
        };
        let trimmed = body.trim_start();
        let indent = body.chars().count() - trimmed.chars().count();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let header = trimmed
            .split_once(':')
            .map(|(k, v)| (k.trim(), v, indent + k.chars().count() + 2));
        match header {
            Some(("generators", value, vcol)) => {
                if generators.is_some() {
                    return Err(err(line, indent + 1, ParseErrorKind::DuplicateHeader("generators")));
                }
                if let Some(bad) = value.split_whitespace().find(|n| !valid_letter_name(n)) {
                    return Err(err(
                        line,
                        vcol,
                        ParseErrorKind::Syntax(format!("invalid generator name `{bad}`")),
                    ));
                }
                let alphabet = Alphabet::parse(value)
                    .map_err(|e| err(line, vcol, ParseErrorKind::Algebra(e)))?;
                generators = Some((alphabet, line));
            }
            Some(("field", value, vcol)) => {
                if field.is_some() {
                    return Err(err(line, indent + 1, ParseErrorKind::DuplicateHeader("field")));
                }
                field = Some(parse_field(value, line, vcol)?);
            }
            Some(("relations", value, vcol)) => {
                if in_relations {
                    return Err(err(line, indent + 1, ParseErrorKind::DuplicateHeader("relations")));
                }
                in_relations = true;
                if !value.trim().is_empty() {
                    raw.push(parse_relation(value, line, vcol)?);
                }
            }
            _ if in_relations => raw.push(parse_relation(trimmed, line, indent + 1)?),
            _ => {
                return Err(err(
                    line,
                    indent + 1,
                    ParseErrorKind::Syntax(
                        "expected `generators:`, `field:` or `relations:`".into(),
                    ),
                ))
            }
        }
    }

    for rel in &raw {
        let mut live = rel.terms.iter().filter(|t| !t.coeff.is_zero());
        if let Some(first) = live.next() {
            let d = first.degree();
            if let Some(bad) = live.find(|t| t.degree() != d) {
                return Err(err(rel.line, bad.column, ParseErrorKind::Inhomogeneous));
            }
        }
    }

    let (alphabet, _) = generators.ok_or_else(|| err(1, 1, ParseErrorKind::MissingGenerators))?;
    let field = field.unwrap_or(Field::Rational);

    let mut relations = Vec::with_capacity(raw.len());
    for rel in &raw {
        let mut terms = Vec::with_capacity(rel.terms.len());
        for t in &rel.terms {
            let mut letters = Vec::new();
            for f in &t.factors {
                let rank = alphabet.rank_of(&f.name).ok_or_else(|| {
                    err(
                        rel.line,
                        f.column,
                        ParseErrorKind::UnknownGenerator(f.name.clone()),
                    )
                })?;
                letters.extend(std::iter::repeat_n(rank, f.power));
            }
            let c = field
                .from_rational(&t.coeff)
                .map_err(|e| err(rel.line, t.column, ParseErrorKind::Algebra(e)))?;
            terms.push((Word::new(letters), c));
        }
        let poly = Polynomial::from_terms(field, terms)
            .map_err(|e| err(rel.line, rel.column, ParseErrorKind::Algebra(e)))?;
        if poly.is_zero() {
            return Err(err(rel.line, rel.column, ParseErrorKind::ZeroRelation));
        }
        if poly.degree() < 2 {
            return Err(err(rel.line, rel.column, ParseErrorKind::LowDegree(poly.degree())));
        }
        relations.push(poly);
    }

    Presentation::new(alphabet, field, relations)
        .map_err(|e| err(1, 1, ParseErrorKind::Algebra(e)))
}

fn parse_relation(text: &str, line: usize, column: usize) -> Result<RawRelation, ParseError> {
    let toks = tokenize(text, line, column)?;
    let end_column = column + text.chars().count();
    let mut p = RelationParser {
        toks,
        pos: 0,
        line,
        end_column,
    };
    let terms = p.relation()?;
    Ok(RawRelation {
        line,
        column,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALGEBRA_A: &str = "\
# algebra A
generators: x y z
field: Q
relations:
x*y
y*z
x^2 - x*z - 2*z^2
";

    const ALGEBRA_C: &str = "\
generators: x y z u
relations:
x*u - y*z
y*u - z*x
z*u - u*z
y*y
y*x
x*y
x*x
";

    #[test]
    fn parses_a() {
        let p = parse_presentation(ALGEBRA_A).unwrap();
        assert_eq!(p.alphabet().len(), 3);
        assert_eq!(p.relations().len(), 3);
        assert!(p.relations().iter().all(|r| r.degree() == 2));
        assert_eq!(p.field(), Field::Rational);
        assert_eq!(
            p.relations()[2].display(p.alphabet()),
            "x^2 - x*z - 2*z^2"
        );
    }

    #[test]
    fn parses_c() {
        let p = parse_presentation(ALGEBRA_C).unwrap();
        assert_eq!(p.alphabet().len(), 4);
        assert_eq!(p.relations().len(), 7);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let e = parse_presentation("generators: x y z\nrelations: x*y + z").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Inhomogeneous);
        assert_eq!((e.line, e.column), (2, 18));
        let e = parse_presentation("relations: x*y + z").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Inhomogeneous);
    }

    #[test]
    fn reports_unknown_generator_position() {
        let e = parse_presentation("generators: x y\nrelations:\n  x*w + y^2\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownGenerator("w".into()));
        assert_eq!((e.line, e.column), (3, 5));
    }

    #[test]
    fn rejects_non_prime_modulus() {
        let e = parse_presentation("generators: x\nfield: GF(9)\nrelations:\nx^2\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonPrimeModulus(9));
    }

    #[test]
    fn syntax_errors() {
        let e = parse_presentation("generators: x y\nrelations:\nx*y +\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(e.line, 3);
        let e = parse_presentation("generators: x y\nrelations:\nx $ y\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(e.column, 3);
        let e = parse_presentation("x*y\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = parse_presentation("generators: x y\nrelations:\nx\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::LowDegree(1));
        let e = parse_presentation("generators: x y\nrelations:\nx*y - x*y\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroRelation);
    }

    #[test]
    fn coefficient_forms() {
        let p = parse_presentation(
            "generators: x y\nfield: GF(5)\nrelations:\n3 x*y \u{2212} 2*y^2 + 3/2*x^2 # trailing\n",
        )
        .unwrap();
        assert_eq!(p.relations()[0].display(p.alphabet()), "4*x^2 + 3*x*y + 3*y^2");
    }

    #[test]
    fn print_parse_roundtrip() {
        for text in [ALGEBRA_A, ALGEBRA_C] {
            let p = parse_presentation(text).unwrap();
            assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
            let p5 = p.specialize_mod_p(5).unwrap();
            assert_eq!(parse_presentation(&p5.to_string()).unwrap(), p5);
        }
        let half = parse_presentation("generators: x y\nrelations:\nx^2 - 3/4*y^2\n").unwrap();
        assert_eq!(parse_presentation(&half.to_string()).unwrap(), half);
    }
}
