use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{is_prime, Alphabet, Field, Polynomial, Presentation, Scalar, Word};
use crate::automaton::{Atom, FactorPattern};
use crate::normal_words::ClaimedFamily;
use crate::series::RationalSeries;

use super::SuiteError;

/// The algebras of the paper and their parametric families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// `xy`, `yz`, `x² − xz − 2z²` in `x > y > z`.
    A,
    /// `y³`, `x²y − yx² − yxy` in `x > y`.
    B,
    /// `xu − yz`, `yu − zx`, `zu − uz`, `y²`, `yx`, `xy`, `x²` in `x > y > z > u`.
    C,
    /// `xy`, `yz`, `x² − xz − a z²` with `a = (b² − 1)/4`.
    Exa1 { b: BigRational },
    /// `y³`, `x²y − a yx² − yxy`.
    Exa2 { a: BigRational },
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::A => write!(f, "A"),
            Builtin::B => write!(f, "B"),
            Builtin::C => write!(f, "C"),
            Builtin::Exa1 { b } => write!(f, "exa1(b={b})"),
            Builtin::Exa2 { a } => write!(f, "exa2(a={a})"),
        }
    }
}

fn param(body: &str, key: &str) -> Option<Result<BigRational, SuiteError>> {
    body.split(',').find_map(|kv| {
        let (k, v) = kv.split_once('=')?;
        (k.trim() == key).then(|| {
            BigRational::from_str(v.trim()).map_err(|_| SuiteError::InvalidParameters(format!("`{v}` is not rational")))
        })
    })
}

fn exa1_a(b: &BigRational) -> BigRational {
    (b * b - BigRational::one()) / BigRational::from_integer(BigInt::from(4))
}

impl FromStr for Builtin {
    type Err = SuiteError;

    /// `A`, `B`, `C`, `exa1(b=-3)`, `exa1(a=2,b=-3)`, `exa2(a=1)`.
    fn from_str(s: &str) -> Result<Self, SuiteError> {
        let s = s.trim();
        let (name, body) = match s.split_once('(') {
            Some((n, rest)) => (
                n.trim(),
                rest.strip_suffix(')')
                    .ok_or_else(|| SuiteError::InvalidParameters(format!("unbalanced `{s}`")))?,
            ),
            None => (s, ""),
        };
        match name {
            "A" => Ok(Builtin::A),
            "B" => Ok(Builtin::B),
            "C" => Ok(Builtin::C),
            "exa1" => {
                let b = param(body, "b").ok_or_else(|| SuiteError::InvalidParameters("exa1 needs b".into()))??;
                if let Some(a) = param(body, "a") {
                    if a? != exa1_a(&b) {
                        return Err(SuiteError::InvalidParameters("exa1 needs a = (b^2 - 1)/4".into()));
                    }
                }
                Ok(Builtin::Exa1 { b })
            }
            "exa2" => Ok(Builtin::Exa2 {
                a: param(body, "a").ok_or_else(|| SuiteError::InvalidParameters("exa2 needs a".into()))??,
            }),
            other => Err(SuiteError::UnknownAlgebra(other.to_string())),
        }
    }
}

pub fn field_of(characteristic: u64) -> Result<Field, SuiteError> {
    if characteristic == 0 {
        Ok(Field::Rational)
    } else {
        Field::prime(characteristic).map_err(|_| SuiteError::NotPrime(characteristic))
    }
}

struct Rels {
    alphabet: Alphabet,
    field: Field,
    relations: Vec<Polynomial>,
}

impl Rels {
    fn new(letters: &str, field: Field) -> Self {
        Rels {
            alphabet: Alphabet::parse(letters).expect("valid letters"),
            field,
            relations: Vec::new(),
        }
    }

    fn word(&self, w: &str) -> Word {
        Word::new(w.chars().map(|c| self.alphabet.rank_of(&c.to_string()).expect("known letter")).collect())
    }

    fn add(&mut self, terms: &[(Scalar, &str)]) -> Result<(), SuiteError> {
        let terms = terms.iter().map(|(c, w)| (self.word(w), c.clone()));
        let f = Polynomial::from_terms(self.field, terms)?;
        self.relations.push(f);
        Ok(())
    }

    fn finish(self) -> Result<Presentation, SuiteError> {
        Ok(Presentation::new(self.alphabet, self.field, self.relations)?)
    }
}

impl Builtin {
    pub fn presentation(&self, characteristic: u64) -> Result<Presentation, SuiteError> {
        let field = field_of(characteristic)?;
        let one = field.one();
        let neg = -&one;
        match self {
            Builtin::A => Builtin::exa1_relations(field, field.from_i64(2)),
            Builtin::Exa1 { b } => {
                if characteristic == 2 {
                    return Err(SuiteError::Uncovered("exa1 needs characteristic other than 2".into()));
                }
                let b = field.from_rational(b)?;
                if b.is_zero() || (&b * &b).is_one() {
                    return Err(SuiteError::InvalidParameters("exa1 needs b != 0 and b^2 != 1".into()));
                }
                let a = &(&(&b * &b) - &one) * &field.from_i64(4).inv().expect("odd characteristic");
                Builtin::exa1_relations(field, a)
            }
            Builtin::B => Builtin::exa2_relations(field, one),
            Builtin::Exa2 { a } => {
                let a = field.from_rational(a)?;
                if a.is_zero() {
                    return Err(SuiteError::InvalidParameters("exa2 needs a != 0".into()));
                }
                Builtin::exa2_relations(field, a)
            }
            Builtin::C => {
                let mut r = Rels::new("x y z u", field);
                r.add(&[(one.clone(), "xu"), (neg.clone(), "yz")])?;
                r.add(&[(one.clone(), "yu"), (neg.clone(), "zx")])?;
                r.add(&[(one.clone(), "zu"), (neg.clone(), "uz")])?;
                for w in ["yy", "yx", "xy", "xx"] {
                    r.add(&[(one.clone(), w)])?;
                }
                r.finish()
            }
        }
    }

    fn exa1_relations(field: Field, a: Scalar) -> Result<Presentation, SuiteError> {
        let one = field.one();
        let mut r = Rels::new("x y z", field);
        r.add(&[(one.clone(), "xy")])?;
        r.add(&[(one.clone(), "yz")])?;
        r.add(&[(one.clone(), "xx"), (-&one, "xz"), (-&a, "zz")])?;
        r.finish()
    }

    fn exa2_relations(field: Field, a: Scalar) -> Result<Presentation, SuiteError> {
        let one = field.one();
        let mut r = Rels::new("x y", field);
        r.add(&[(one.clone(), "yyy")])?;
        r.add(&[(one.clone(), "xxy"), (-&a, "yxx"), (-&one, "yxy")])?;
        r.finish()
    }

    fn exa1_b(&self) -> Option<BigRational> {
        match self {
            Builtin::A => Some(BigRational::from_integer(BigInt::from(-3))),
            Builtin::Exa1 { b } => Some(b.clone()),
            _ => None,
        }
    }

    fn exa2_a(&self) -> Option<BigRational> {
        match self {
            Builtin::B => Some(BigRational::one()),
            Builtin::Exa2 { a } => Some(a.clone()),
            _ => None,
        }
    }
}

/// Multiplicative order of `x` modulo the prime `p`.
pub fn mult_order(x: i64, p: u64) -> Result<u64, SuiteError> {
    if !is_prime(p) {
        return Err(SuiteError::NotPrime(p));
    }
    let field = Field::Prime(p);
    let s = field.from_i64(x);
    if s.is_zero() {
        return Err(SuiteError::InvalidParameters(format!("{x} is zero modulo {p}")));
    }
    let mut acc = s.clone();
    let mut m = 1;
    while !acc.is_one() {
        acc = &acc * &s;
        m += 1;
    }
    Ok(m)
}

fn scalar_order(s: &Scalar) -> Option<u64> {
    match s {
        Scalar::Residue { modulus, .. } => {
            let mut acc = s.clone();
            let mut m = 1;
            while !acc.is_one() {
                acc = &acc * s;
                m += 1;
                if m > *modulus {
                    return None;
                }
            }
            Some(m)
        }
        // the only rational roots of unity are 1 and -1
        Scalar::Rational(q) if q.is_one() => Some(1),
        Scalar::Rational(q) if (-q).is_one() => Some(2),
        Scalar::Rational(_) => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// `s = (1−b)/(1+b)` has infinite order.
    InfiniteOrder,
    /// `s` has order `m`.
    FiniteOrder { m: u64 },
    /// `1 + a + … + a^k ≠ 0` for every `k ≥ 1`.
    InfiniteK,
    /// `k` is minimal with `1 + a + … + a^k = 0`.
    FiniteK { k: u64 },
    C,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::InfiniteOrder => write!(f, "infinite-order"),
            Case::FiniteOrder { m } => write!(f, "finite-order m={m}"),
            Case::InfiniteK => write!(f, "char0-B"),
            Case::FiniteK { k } => write!(f, "finite-k k={k}"),
            Case::C => write!(f, "C"),
        }
    }
}

/// The claimed leading-word family and Hilbert series for one algebra over
/// one field. `series` is `None` for `C`, whose series is not rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedPattern {
    pub case: Case,
    pub family: ClaimedFamily,
    pub series: Option<RationalSeries>,
}

impl ExpectedPattern {
    /// The factor patterns of the family; empty for `C`.
    pub fn patterns(&self) -> &[FactorPattern] {
        match &self.family {
            ClaimedFamily::Patterns(ps) => ps,
            _ => &[],
        }
    }
}

fn letters(ranks: &[u8]) -> impl Iterator<Item = Atom> + '_ {
    ranks.iter().map(|&l| Atom::Letter(l))
}

fn pattern(atoms: Vec<Atom>) -> FactorPattern {
    FactorPattern::new(atoms).expect("non-empty pattern")
}

const X: u8 = 0;
const Y: u8 = 1;
const Z: u8 = 2;

pub fn expected_pattern(alg: &Builtin, characteristic: u64) -> Result<ExpectedPattern, SuiteError> {
    let field = field_of(characteristic)?;
    if let Some(b) = alg.exa1_b() {
        if characteristic == 2 {
            return Err(SuiteError::Uncovered("characteristic 2 is excluded by the exa1 hypotheses".into()));
        }
        let b = field.from_rational(&b)?;
        let one = field.one();
        if b.is_zero() || (&b * &b).is_one() {
            return Err(SuiteError::Uncovered(format!("b = {b} violates b != 0, b^2 != 1 in {field}")));
        }
        let s = &(&one - &b) * &(&one + &b).inv().expect("b != -1");
        let yz = pattern(letters(&[Y, Z]).collect());
        return Ok(match scalar_order(&s) {
            None => ExpectedPattern {
                case: Case::InfiniteOrder,
                family: ClaimedFamily::Patterns(vec![
                    yz,
                    pattern(vec![Atom::Letter(X), Atom::Star(vec![Z]), Atom::Letter(X)]),
                    pattern(vec![Atom::Letter(X), Atom::Star(vec![Z]), Atom::Letter(Y)]),
                ]),
                series: Some(RationalSeries::from_factors(&[], &[crate::series::ONE_MINUS_T; 3]).expect("monic")),
            },
            Some(m) => {
                let mu = m as usize;
                let mut ps = vec![yz];
                for j in 0..=mu.saturating_sub(2) {
                    let zs = vec![Z; j];
                    ps.push(pattern(letters(&[X]).chain(letters(&zs)).chain(letters(&[X])).collect()));
                    ps.push(pattern(letters(&[X]).chain(letters(&zs)).chain(letters(&[Y])).collect()));
                }
                ps.push(pattern(letters(&[X]).chain(letters(&vec![Z; mu])).collect()));
                let mut cycle = vec![X];
                cycle.extend(vec![Z; mu - 1]);
                ps.push(pattern(
                    letters(&vec![Z; mu])
                        .chain([Atom::Star(cycle)])
                        .chain(letters(&[Y]))
                        .collect(),
                ));
                let (m1, m2) = (mu, mu + 1);
                ExpectedPattern {
                    case: Case::FiniteOrder { m },
                    family: ClaimedFamily::Patterns(ps),
                    series: Some(
                        RationalSeries::from_factors(
                            &[&[(0, 1), (m1, -1), (m2, -1)]],
                            &[&[(0, 1), (1, -1)], &[(0, 1), (1, -1)], &[(0, 1), (1, -1), (m1, -1)]],
                        )
                        .expect("monic"),
                    ),
                }
            }
        });
    }
    if let Some(a) = alg.exa2_a() {
        let a = field.from_rational(&a)?;
        if a.is_zero() {
            return Err(SuiteError::InvalidParameters("exa2 needs a != 0".into()));
        }
        let bound = if characteristic == 0 { 2 } else { characteristic };
        let mut partial = field.one();
        let mut power = field.one();
        let mut k = None;
        for j in 1..=bound {
            power = &power * &a;
            partial = &partial + &power;
            if partial.is_zero() {
                k = Some(j);
                break;
            }
        }
        let head = vec![pattern(letters(&[Y, Y, Y]).collect()), pattern(letters(&[X, X, Y]).collect())];
        let tail = |j: usize| {
            let mut w = vec![Y, Y];
            for _ in 0..j {
                w.extend([X, Y]);
            }
            w.extend([X, Y, Y]);
            pattern(letters(&w).collect())
        };
        return Ok(match k {
            None => {
                let mut ps = head;
                ps.push(pattern(
                    letters(&[Y, Y])
                        .chain([Atom::Star(vec![X, Y])])
                        .chain(letters(&[X, Y, Y]))
                        .collect(),
                ));
                ExpectedPattern {
                    case: Case::InfiniteK,
                    family: ClaimedFamily::Patterns(ps),
                    series: Some(
                        RationalSeries::from_factors(&[], &[&[(0, 1), (1, 1)], &[(0, 1), (1, -1)], &[(0, 1), (1, -1)], &[(0, 1), (1, -1)]])
                            .expect("monic"),
                    ),
                }
            }
            Some(k) => {
                let mut ps = head;
                ps.extend((0..k as usize).map(tail));
                let e = 2 * k as usize + 3;
                ExpectedPattern {
                    case: Case::FiniteK { k },
                    family: ClaimedFamily::Patterns(ps),
                    series: Some(
                        RationalSeries::from_factors(
                            &[&[(0, 1), (e, -1)]],
                            &[&[(0, 1), (1, -1)], &[(0, 1), (1, -1)], &[(0, 1), (2, -1), (e, -1)]],
                        )
                        .expect("monic"),
                    ),
                }
            }
        });
    }
    Ok(ExpectedPattern {
        case: Case::C,
        family: ClaimedFamily::RgbC,
        series: None,
    })
}

/// Denominator factor whose smallest root in `(0, 1)` governs exponential
/// growth: `1 − t − t^m` or `1 − t² − t^{2k+3}`.
pub fn growth_polynomial(case: Case) -> Option<Vec<BigInt>> {
    match case {
        Case::FiniteOrder { m } => Some(crate::series::sparse_poly(&[(0, 1), (1, -1), (m as usize, -1)])),
        Case::FiniteK { k } => Some(crate::series::sparse_poly(&[(0, 1), (2, -1), (2 * k as usize + 3, -1)])),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentations() {
        let a = Builtin::A.presentation(0).unwrap();
        assert_eq!((a.alphabet().len(), a.relations().len()), (3, 3));
        assert!(a.relations().iter().all(|r| r.degree() == 2));
        let c = Builtin::C.presentation(0).unwrap();
        assert_eq!((c.alphabet().len(), c.relations().len()), (4, 7));
        let exa = "exa1(b=-3)".parse::<Builtin>().unwrap().presentation(0).unwrap();
        assert_eq!(exa.canonical_text(), a.canonical_text());
        assert_eq!(
            "exa2(a=1)".parse::<Builtin>().unwrap().presentation(5).unwrap(),
            Builtin::B.presentation(5).unwrap()
        );
        assert_eq!(Builtin::A.presentation(5).unwrap(), a.specialize_mod_p(5).unwrap());
    }

    #[test]
    fn invalid_parameters() {
        let one = "exa1(b=1)".parse::<Builtin>().unwrap();
        assert!(matches!(one.presentation(0), Err(SuiteError::InvalidParameters(_))));
        assert!(matches!("exa1(a=1,b=-3)".parse::<Builtin>(), Err(SuiteError::InvalidParameters(_))));
        assert!(matches!("D".parse::<Builtin>(), Err(SuiteError::UnknownAlgebra(_))));
        assert!(matches!(Builtin::A.presentation(4), Err(SuiteError::NotPrime(4))));
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(-2, 5).unwrap(), 4);
        assert_eq!(mult_order(-2, 7).unwrap(), 6);
        assert_eq!(mult_order(-2, 11).unwrap(), 5);
        assert_eq!(mult_order(-2, 13).unwrap(), 12);
        assert_eq!(mult_order(1, 13).unwrap(), 1);
        assert!(mult_order(5, 5).is_err());
    }

    #[test]
    fn cases() {
        assert_eq!(expected_pattern(&Builtin::A, 0).unwrap().case, Case::InfiniteOrder);
        let a5 = expected_pattern(&Builtin::A, 5).unwrap();
        assert_eq!(a5.case, Case::FiniteOrder { m: 4 });
        assert_eq!(a5.series.unwrap().to_string(), "(1 - t^4 - t^5)/(1 - 3*t + 3*t^2 - t^3 - t^4 + 2*t^5 - t^6)");
        assert_eq!(expected_pattern(&Builtin::B, 3).unwrap().case, Case::FiniteK { k: 2 });
        assert_eq!(expected_pattern(&Builtin::B, 0).unwrap().case, Case::InfiniteK);
        assert!(matches!(expected_pattern(&Builtin::A, 2), Err(SuiteError::Uncovered(_))));
        assert!(matches!(expected_pattern(&Builtin::A, 3), Err(SuiteError::Uncovered(_))));
        let minus_one = "exa2(a=-1)".parse::<Builtin>().unwrap();
        assert_eq!(expected_pattern(&minus_one, 0).unwrap().case, Case::FiniteK { k: 1 });
    }
}
