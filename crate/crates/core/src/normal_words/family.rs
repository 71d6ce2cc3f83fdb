use std::str::FromStr;

use num_rational::BigRational;

use crate::algebra::{Alphabet, Field, Polynomial, Presentation, Scalar, Word};
use crate::automaton::FactorPattern;
use crate::groebner::{buchberger_truncated, normal_form, TruncatedGB};

use super::NormalWordsError;

/// A claimed description of the reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimedFamily {
    /// Leading words only.
    Patterns(Vec<FactorPattern>),
    /// Relations `xy`, `yz`, `x² − xz − a z²` with `a = (b² − 1)/4`.
    Exa1 { a: BigRational, b: BigRational },
    /// Relations `y³`, `x²y − a yx² − yxy`.
    Exa2 { a: BigRational },
    /// The seven quadratic relations in `x > y > z > u`.
    RgbC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiscrepancyKind {
    /// A constructed member does not reduce to zero.
    NotInIdeal,
    /// Claimed leading word absent from the computed basis.
    Missing,
    /// Computed leading word not claimed.
    Unclaimed,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Discrepancy {
    pub degree: usize,
    pub word: Word,
    pub kind: DiscrepancyKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub degree_bound: usize,
    pub claimed: Vec<Word>,
    pub computed: Vec<Word>,
    /// `None` when the family has no element constructors.
    pub members_in_ideal: Option<bool>,
    pub leading_words_match: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

impl FamilyReport {
    pub fn pass(&self) -> bool {
        self.first_discrepancy.is_none()
    }
}

fn rational(text: &str) -> Result<BigRational, NormalWordsError> {
    BigRational::from_str(text.trim())
        .map_err(|_| NormalWordsError::InvalidParameters(format!("`{text}` is not a rational number")))
}

fn params(body: &str) -> Result<Vec<(String, BigRational)>, NormalWordsError> {
    body.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| NormalWordsError::InvalidParameters(format!("expected key=value, got `{kv}`")))?;
            Ok((k.trim().to_string(), rational(v)?))
        })
        .collect()
}

fn lookup(ps: &[(String, BigRational)], key: &str) -> Option<BigRational> {
    ps.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone())
}

impl ClaimedFamily {
    /// `exa1(a=2,b=-3)`, `exa1(b=-3)`, `exa2(a=1)` or `rgbC`.
    pub fn builtin(spec: &str) -> Result<Self, NormalWordsError> {
        let spec = spec.trim();
        let (name, body) = match spec.split_once('(') {
            Some((n, rest)) => {
                let body = rest
                    .strip_suffix(')')
                    .ok_or_else(|| NormalWordsError::InvalidParameters(format!("unbalanced `{spec}`")))?;
                (n.trim(), body)
            }
            None => (spec, ""),
        };
        let ps = params(body)?;
        match name {
            "exa1" => {
                let b = lookup(&ps, "b")
                    .ok_or_else(|| NormalWordsError::InvalidParameters("exa1 needs b".into()))?;
                let four = BigRational::from_integer(4.into());
                let a = lookup(&ps, "a").unwrap_or_else(|| (&b * &b - BigRational::from_integer(1.into())) / four);
                Ok(ClaimedFamily::Exa1 { a, b })
            }
            "exa2" => Ok(ClaimedFamily::Exa2 {
                a: lookup(&ps, "a").ok_or_else(|| NormalWordsError::InvalidParameters("exa2 needs a".into()))?,
            }),
            "rgbC" => Ok(ClaimedFamily::RgbC),
            other => Err(NormalWordsError::InvalidParameters(format!("unknown family `{other}`"))),
        }
    }

    /// Family file: either a `builtin: NAME(params)` line or one factor
    /// pattern per line. `#` starts a comment.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, NormalWordsError> {
        let mut builtin = None;
        let mut patterns = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| NormalWordsError::FamilySyntax { line: i + 1, message };
            if let Some(spec) = line.strip_prefix("builtin:") {
                if builtin.is_some() {
                    return Err(err("more than one builtin line".into()));
                }
                builtin = Some(ClaimedFamily::builtin(spec).map_err(|e| err(e.to_string()))?);
            } else {
                patterns.push(FactorPattern::parse(line, alphabet).map_err(|e| err(e.to_string()))?);
            }
        }
        match (builtin, patterns.is_empty()) {
            (Some(_), false) => Err(NormalWordsError::FamilySyntax {
                line: 0,
                message: "builtin and patterns cannot be mixed".into(),
            }),
            (Some(b), true) => Ok(b),
            (None, _) => Ok(ClaimedFamily::Patterns(patterns)),
        }
    }

    /// Constructed members of degree at most `max_degree`, or `None` for a
    /// pattern-only family.
    pub fn members(&self, p: &Presentation, max_degree: usize) -> Result<Option<Vec<Polynomial>>, NormalWordsError> {
        let b = Builder::new(p);
        let members = match self {
            ClaimedFamily::Patterns(_) => return Ok(None),
            ClaimedFamily::Exa1 { a, b: bb } => b.exa1(a, bb, max_degree)?,
            ClaimedFamily::Exa2 { a } => b.exa2(a, max_degree)?,
            ClaimedFamily::RgbC => b.rgb_c(max_degree)?,
        };
        let mut out = Vec::new();
        for m in members {
            if m.is_zero() {
                return Err(NormalWordsError::ZeroMember(format!("{} (degree bound {max_degree})", out.len())));
            }
            if !m.is_homogeneous() {
                return Err(NormalWordsError::Inhomogeneous(m.display(p.alphabet())));
            }
            if m.degree() <= max_degree {
                out.push(m.monic()?);
            }
        }
        Ok(Some(out))
    }

    /// Claimed leading words of degree at most `max_degree`, ascending.
    pub fn leading_words(&self, p: &Presentation, max_degree: usize) -> Result<Vec<Word>, NormalWordsError> {
        let mut words: Vec<Word> = match self {
            ClaimedFamily::Patterns(ps) => ps.iter().flat_map(|q| q.instances_up_to(max_degree)).collect(),
            _ => self
                .members(p, max_degree)?
                .unwrap_or_default()
                .iter()
                .map(|m| m.leading_word().clone())
                .collect(),
        };
        words.sort();
        words.dedup();
        Ok(words)
    }
}

struct Builder<'a> {
    p: &'a Presentation,
    field: Field,
}

impl<'a> Builder<'a> {
    fn new(p: &'a Presentation) -> Self {
        Builder { p, field: p.field() }
    }

    fn word(&self, text: &str) -> Result<Word, NormalWordsError> {
        text.chars()
            .map(|c| {
                self.p
                    .alphabet()
                    .rank_of(&c.to_string())
                    .ok_or_else(|| NormalWordsError::MissingGenerator(c.to_string()))
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(Word::new)
    }

    fn poly(&self, terms: Vec<(Scalar, String)>) -> Result<Polynomial, NormalWordsError> {
        let terms = terms
            .into_iter()
            .map(|(c, w)| Ok((self.word(&w)?, c)))
            .collect::<Result<Vec<_>, NormalWordsError>>()?;
        Ok(Polynomial::from_terms(self.field, terms)?)
    }

    fn mono(&self, w: String) -> Result<Polynomial, NormalWordsError> {
        self.poly(vec![(self.field.one(), w)])
    }

    fn scalar(&self, q: &BigRational) -> Result<Scalar, NormalWordsError> {
        self.field
            .from_rational(q)
            .map_err(|e| NormalWordsError::InvalidParameters(e.to_string()))
    }

    fn exa1(&self, a: &BigRational, b: &BigRational, max: usize) -> Result<Vec<Polynomial>, NormalWordsError> {
        if self.field.characteristic() == 2 {
            return Err(NormalWordsError::Uncovered("characteristic 2".into()));
        }
        let (a, b) = (self.scalar(a)?, self.scalar(b)?);
        let one = self.field.one();
        let four = self.field.from_i64(4);
        if b.is_zero() || (&b * &b).is_one() {
            return Err(NormalWordsError::InvalidParameters("need b != 0 and b^2 != 1".into()));
        }
        if &four * &a != &(&b * &b) - &one {
            return Err(NormalWordsError::InvalidParameters("need a = (b^2 - 1)/4".into()));
        }
        let (up, down) = (&one + &b, &one - &b);
        let p = |j: u64| &up.pow(j) - &down.pow(j);
        let half = self.field.from_i64(2).inv().expect("odd characteristic");
        let two_a = &self.field.from_i64(2) * &a;
        let z = |k: usize| "z".repeat(k);

        let mut out = vec![self.mono("yz".into())?];
        let mut order = None;
        for j in 0..=max.saturating_sub(2) {
            let ju = j as u64;
            out.push(self.poly(vec![
                (p(ju + 1), format!("x{}x", z(j))),
                (-&(&p(ju + 2) * &half), format!("x{}", z(j + 1))),
                (&two_a * &p(ju), format!("{}x", z(j + 1))),
                (-&(&a * &p(ju + 1)), z(j + 2)),
            ])?);
            out.push(self.poly(vec![
                (p(ju + 1), format!("x{}y", z(j))),
                (&two_a * &p(ju), format!("{}y", z(j + 1))),
            ])?);
            if p(ju + 1).is_zero() {
                order = Some(j + 1);
                break;
            }
        }
        if let Some(m) = order {
            for i in 1.. {
                if m + i * m + 1 > max {
                    break;
                }
                out.push(self.mono(format!("{}{}y", z(m), format!("x{}", z(m - 1)).repeat(i)))?);
            }
        }
        Ok(out)
    }

    fn exa2(&self, a: &BigRational, max: usize) -> Result<Vec<Polynomial>, NormalWordsError> {
        let a = self.scalar(a)?;
        if a.is_zero() {
            return Err(NormalWordsError::InvalidParameters("need a != 0".into()));
        }
        let one = self.field.one();
        let mut out = vec![
            self.mono("yyy".into())?,
            self.poly(vec![
                (one.clone(), "xxy".into()),
                (-&a, "yxx".into()),
                (-&one, "yxy".into()),
            ])?,
        ];
        let mut partial = one.clone();
        let mut power = one.clone();
        for j in 0.. {
            if 2 * j + 5 > max {
                break;
            }
            out.push(self.mono(format!("yy{}xyy", "xy".repeat(j)))?);
            power = &power * &a;
            partial = &partial + &power;
            if partial.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    fn rgb_c(&self, max: usize) -> Result<Vec<Polynomial>, NormalWordsError> {
        let one = self.field.one();
        let minus = -&one;
        let bin = |a: &str, b: &str| self.poly(vec![(one.clone(), a.into()), (minus.clone(), b.into())]);
        let mut out = vec![
            bin("xu", "yz")?,
            bin("yu", "zx")?,
            bin("zu", "uz")?,
            self.mono("yx".into())?,
            self.mono("xx".into())?,
        ];
        let z = |k: usize| "z".repeat(k);
        for k in 0.. {
            if 2 * k + 2 > max {
                break;
            }
            out.push(self.mono(format!("y{}y{}", z(k), z(k)))?);
            out.push(self.mono(format!("x{}y{}", z(k), z(k)))?);
            if 2 * k + 3 <= max {
                out.push(self.mono(format!("y{}x{}", z(k + 1), z(k)))?);
                out.push(self.mono(format!("x{}x{}", z(k + 1), z(k)))?);
            }
        }
        Ok(out)
    }
}

/// Compares a claimed family with the truncated basis computed from `p`.
pub fn verify_family(p: &Presentation, family: &ClaimedFamily, max_degree: usize) -> Result<FamilyReport, NormalWordsError> {
    verify_family_against(&buchberger_truncated(p, max_degree), p, family)
}

/// As [`verify_family`], with a basis already computed from `p`.
pub fn verify_family_against(
    gb: &TruncatedGB,
    p: &Presentation,
    family: &ClaimedFamily,
) -> Result<FamilyReport, NormalWordsError> {
    let d = gb.degree_bound();
    let claimed = family.leading_words(p, d)?;
    let computed: Vec<Word> = gb.leading_words().iter().filter(|w| w.degree() <= d).cloned().collect();
    let mut discrepancies = Vec::new();
    let members = family.members(p, d)?;
    let members_in_ideal = members.map(|ms| {
        let mut all = true;
        for m in ms {
            if !normal_form(&m, gb.basis()).is_zero() {
                all = false;
                discrepancies.push(Discrepancy {
                    degree: m.degree(),
                    word: m.leading_word().clone(),
                    kind: DiscrepancyKind::NotInIdeal,
                });
            }
        }
        all
    });
    for w in claimed.iter().filter(|w| computed.binary_search(w).is_err()) {
        discrepancies.push(Discrepancy {
            degree: w.degree(),
            word: w.clone(),
            kind: DiscrepancyKind::Missing,
        });
    }
    for w in computed.iter().filter(|w| claimed.binary_search(w).is_err()) {
        discrepancies.push(Discrepancy {
            degree: w.degree(),
            word: w.clone(),
            kind: DiscrepancyKind::Unclaimed,
        });
    }
    let leading_words_match = claimed == computed;
    Ok(FamilyReport {
        degree_bound: d,
        claimed,
        computed,
        members_in_ideal,
        leading_words_match,
        first_discrepancy: discrepancies.into_iter().min(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_presentation;

    const A: &str = "generators: x y z\nfield: Q\nrelations:\nx*y\ny*z\nx^2 - x*z - 2*z^2\n";
    const B: &str = "generators: x y\nfield: Q\nrelations:\ny^3\nx^2*y - y*x^2 - y*x*y\n";
    const C: &str = "generators: x y z u\nfield: Q\nrelations:\n\
        x*u - y*z\ny*u - z*x\nz*u - u*z\ny^2\ny*x\nx*y\nx^2\n";

    #[test]
    fn exa1_family_over_q() {
        let p = parse_presentation(A).unwrap();
        let fam = ClaimedFamily::builtin("exa1(a=2,b=-3)").unwrap();
        let r = verify_family(&p, &fam, 10).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.members_in_ideal, Some(true));
        assert_eq!(r.claimed.len(), 1 + 2 * 9);
    }

    #[test]
    fn exa1_family_mod_p() {
        for prime in [5, 7, 11] {
            let p = parse_presentation(A).unwrap().specialize_mod_p(prime).unwrap();
            let fam = ClaimedFamily::builtin("exa1(b=-3)").unwrap();
            let r = verify_family(&p, &fam, 16).unwrap();
            assert!(r.pass(), "p = {prime}: {:?}", r.first_discrepancy);
        }
    }

    #[test]
    fn exa1_rejects_bad_parameters() {
        let p = parse_presentation(A).unwrap();
        for spec in ["exa1(b=1)", "exa1(b=0)", "exa1(a=1,b=-3)"] {
            let fam = ClaimedFamily::builtin(spec).unwrap();
            assert!(matches!(verify_family(&p, &fam, 5), Err(NormalWordsError::InvalidParameters(_))), "{spec}");
        }
        let p2 = p.specialize_mod_p(2).unwrap();
        let fam = ClaimedFamily::builtin("exa1(b=-3)").unwrap();
        assert!(matches!(verify_family(&p2, &fam, 5), Err(NormalWordsError::Uncovered(_))));
    }

    #[test]
    fn exa2_and_rgb_c() {
        let b = parse_presentation(B).unwrap();
        let r = verify_family(&b, &ClaimedFamily::builtin("exa2(a=1)").unwrap(), 13).unwrap();
        assert!(r.pass(), "{r:?}");
        let b3 = b.specialize_mod_p(3).unwrap();
        let r = verify_family(&b3, &ClaimedFamily::builtin("exa2(a=1)").unwrap(), 13).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.computed.len(), 4);

        let c = parse_presentation(C).unwrap();
        let r = verify_family(&c, &ClaimedFamily::RgbC, 12).unwrap();
        assert!(r.pass(), "{r:?}");
    }

    #[test]
    fn wrong_family_reports_first_mismatch() {
        let p = parse_presentation(A).unwrap();
        let text = "# xz^j x replaced by xz^j z for j >= 1\ny z\nx x\nx y\nx z z* z\nx z z* y\n";
        let fam = ClaimedFamily::parse(text, p.alphabet()).unwrap();
        let r = verify_family(&p, &fam, 6).unwrap();
        assert!(!r.pass());
        assert_eq!(r.members_in_ideal, None);
        let d = r.first_discrepancy.unwrap();
        assert_eq!(d.degree, 3);
        assert_eq!(d.word.display(p.alphabet()), "x*z^2");
        assert_eq!(d.kind, DiscrepancyKind::Missing);
    }

    #[test]
    fn family_file_builtin_line() {
        let a = Alphabet::parse("x y z u").unwrap();
        assert_eq!(ClaimedFamily::parse("builtin: rgbC\n", &a).unwrap(), ClaimedFamily::RgbC);
        assert!(ClaimedFamily::parse("builtin: rgbC\nx y\n", &a).is_err());
        assert!(matches!(
            ClaimedFamily::parse("x (y\n", &a),
            Err(NormalWordsError::FamilySyntax { line: 1, .. })
        ));
    }
}
