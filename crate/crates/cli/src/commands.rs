use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

use ncgrowth_core::automaton::parse_pattern_file;
use ncgrowth_core::normal_words::FamilyReport;
use ncgrowth_core::suite::{paper_claims, Builtin, COMPLETE_HORIZON};
use ncgrowth_core::{
    buchberger_truncated, compile_forbidden, count_by_degree, count_normal, growth_estimates, parse_presentation,
    series_from_dfa, verify_family, Alphabet, ClaimedFamily, CountTable, FactorPattern, Presentation, RationalSeries,
};

use crate::report::{sha256_hex, Report};
use crate::{Command, Input};

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Core(ncgrowth_core::Error),
    Pattern(PathBuf, usize, String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Pattern(path, line, msg) => write!(f, "{}:{line}: {msg}", path.display()),
        }
    }
}

impl<E: Into<ncgrowth_core::Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Core(e.into())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load(input: &Input) -> Result<Presentation, CliError> {
    let p = parse_presentation(&read(&input.input)?)?;
    Ok(match input.characteristic {
        Some(ch) => p.specialize_mod_p(ch)?,
        None => p,
    })
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    xs.iter().map(|x| Value::String(x.to_string())).collect()
}

fn put_counts(r: &mut Report, t: &CountTable) {
    r.put("a", strings(&t.a));
    r.put("p", strings(&t.p));
    r.put("valid_to", t.valid_to);
}

fn series_value(s: &RationalSeries) -> Value {
    let mut m = Map::new();
    m.insert("denominator".into(), strings(s.denominator()));
    m.insert("numerator".into(), strings(s.numerator()));
    m.insert("text".into(), s.to_string().into());
    Value::Object(m)
}

fn words(p: &Presentation, ws: &[ncgrowth_core::Word]) -> Value {
    ws.iter().map(|w| Value::String(w.display(p.alphabet()))).collect()
}

/// Series of the normal words when the basis is complete.
fn exact_series(p: &Presentation, lws: &[ncgrowth_core::Word]) -> Result<RationalSeries, CliError> {
    let patterns: Vec<FactorPattern> = lws.iter().map(FactorPattern::word).collect();
    Ok(series_from_dfa(&compile_forbidden(&patterns, p.alphabet())?))
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Gb(input) => gb(input),
        Command::Hilbert(input) => hilbert(input),
        Command::Automaton {
            patterns,
            alphabet,
            max_degree,
        } => automaton(patterns, alphabet, *max_degree),
        Command::Growth(input) => growth(input),
        Command::Verify { input, family, builtin } => verify(input, family.as_deref(), builtin.as_deref()),
        Command::Paper {
            algebra,
            characteristic,
            max_degree,
            n_large,
        } => paper(algebra, *characteristic, *max_degree, *n_large),
    }
}

fn gb(input: &Input) -> Result<Report, CliError> {
    let p = load(input)?;
    let gb = buchberger_truncated(&p, input.max_degree);
    let mut r = Report::for_presentation("gb", &p);
    r.put("complete", gb.complete());
    r.put("degree_bound", input.max_degree);
    let elements: Vec<String> = gb.elements().iter().map(|f| f.display(p.alphabet())).collect();
    r.put("elements", elements);
    r.put("leading_words", words(&p, gb.leading_words()));
    r.put("num_leading_words", gb.leading_words().len());
    Ok(r)
}

fn hilbert(input: &Input) -> Result<Report, CliError> {
    let p = load(input)?;
    let gb = buchberger_truncated(&p, input.max_degree);
    let mut r = Report::for_presentation("hilbert", &p);
    put_counts(&mut r, &count_normal(&gb, input.max_degree)?);
    r.put("complete", gb.complete());
    if gb.complete() {
        r.put("series", series_value(&exact_series(&p, gb.leading_words())?));
    }
    Ok(r)
}

fn automaton(path: &Path, alphabet: &str, max_degree: usize) -> Result<Report, CliError> {
    let alphabet = Alphabet::parse(alphabet)?;
    let patterns =
        parse_pattern_file(&read(path)?, &alphabet).map_err(|(line, e)| CliError::Pattern(path.to_path_buf(), line, e.to_string()))?;
    let mut shown: Vec<String> = patterns.iter().map(|f| f.display(&alphabet).to_string()).collect();
    shown.sort();
    shown.dedup();
    let dfa = compile_forbidden(&patterns, &alphabet)?;
    let mut r = Report::new("automaton");
    r.meta("alphabet", alphabet.to_string());
    r.meta("patterns_sha256", sha256_hex(&format!("{alphabet}\n{}\n", shown.join("\n"))));
    r.put("patterns", shown);
    r.put("states", dfa.num_states());
    r.put("live_states", dfa.live_states().len());
    put_counts(&mut r, &count_by_degree(&dfa, max_degree));
    r.put("series", series_value(&series_from_dfa(&dfa)));
    Ok(r)
}

fn growth(input: &Input) -> Result<Report, CliError> {
    let p = load(input)?;
    let gb = buchberger_truncated(&p, input.max_degree);
    let horizon = if gb.complete() {
        input.max_degree.max(COMPLETE_HORIZON)
    } else {
        input.max_degree
    };
    let table = count_normal(&gb, horizon)?;
    let g = growth_estimates(&table)?;
    let mut r = Report::for_presentation("growth", &p);
    r.put("beta", g.beta);
    r.put("classification", g.classification.as_str());
    r.put("complete", gb.complete());
    r.put("dominant_root", g.dominant_root);
    r.put("exp_rate", g.exp_rate);
    r.put("fit_from", g.fit_from);
    r.put("fit_to", g.fit_to);
    r.put("gk_estimate", g.gk_estimate);
    r.put("kappa_estimate", g.kappa_estimate);
    r.put("valid_to", table.valid_to);
    Ok(r)
}

fn family_payload(r: &mut Report, p: &Presentation, f: &FamilyReport) {
    r.put("claimed", words(p, &f.claimed));
    r.put("computed", words(p, &f.computed));
    r.put("degree_bound", f.degree_bound);
    r.put("leading_words_match", f.leading_words_match);
    r.put("members_in_ideal", f.members_in_ideal);
    let first = f.first_discrepancy.as_ref().map(|d| {
        let mut m = Map::new();
        m.insert("degree".into(), d.degree.into());
        m.insert("kind".into(), format!("{:?}", d.kind).into());
        m.insert("word".into(), d.word.display(p.alphabet()).into());
        Value::Object(m)
    });
    r.put("first_discrepancy", first);
}

fn verify(input: &Input, family: Option<&Path>, builtin: Option<&str>) -> Result<Report, CliError> {
    let p = load(input)?;
    let (fam, source) = match (family, builtin) {
        (Some(path), _) => {
            let text = read(path)?;
            (ClaimedFamily::parse(&text, p.alphabet())?, sha256_hex(&text))
        }
        (None, Some(name)) => (ClaimedFamily::builtin(name)?, name.to_string()),
        (None, None) => unreachable!("clap requires one of --family, --builtin"),
    };
    let report = verify_family(&p, &fam, input.max_degree)?;
    let mut r = Report::for_presentation("verify", &p);
    r.meta("family", source);
    family_payload(&mut r, &p, &report);
    let ok = report.pass() as usize;
    r.summarize(ok, 1 - ok);
    Ok(r)
}

fn paper(algebra: &str, characteristic: Option<u64>, d: usize, n_large: usize) -> Result<Report, CliError> {
    let alg: Builtin = algebra.parse()?;
    let claims = paper_claims(&alg, characteristic, d, n_large)?;
    let p = alg.presentation(characteristic.unwrap_or(0))?;
    let mut r = Report::for_presentation("paper", &p);
    r.meta("algebra", algebra);
    r.put("degree_bound", d);
    if matches!(alg, Builtin::C) {
        r.put("n_large", n_large);
    }
    let list: Vec<Value> = claims
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("computed".into(), c.computed.clone().into());
            m.insert("expected".into(), c.expected.clone().into());
            m.insert("id".into(), c.id.clone().into());
            m.insert("pass".into(), c.pass.into());
            m.insert("statement".into(), c.statement.clone().into());
            Value::Object(m)
        })
        .collect();
    r.put("claims", list);
    let passed = claims.iter().filter(|c| c.pass).count();
    r.summarize(passed, claims.len() - passed);
    Ok(r)
}

