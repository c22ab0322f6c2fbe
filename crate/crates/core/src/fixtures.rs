//! Bracket tables transcribed from the published lists, embedded at build time.
//!
//! File format: `# basis: NAME` and `# sign-factor: SPEC` headers, then one
//! entry per line, `[a,b] = …` for commutators and `{a,b} = …` for
//! anticommutators, with integer or rational coefficients.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{render_combination, BracketKind};
use crate::scalars::{parse_rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}")]
    Unknown(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing header {0:?}")]
    MissingHeader(&'static str),
}

pub const FIXTURE_NAMES: [&str; 6] = [
    "g2",
    "color-case1",
    "color-case2",
    "color-case3",
    "cartan-weyl",
    "color-7x7",
];

/// Raw text of an embedded fixture.
pub fn fixture_text(name: &str) -> Result<&'static str, FixtureError> {
    Ok(match name {
        "g2" => include_str!("../fixtures/g2.txt"),
        "color-case1" => include_str!("../fixtures/color-case1.txt"),
        "color-case2" => include_str!("../fixtures/color-case2.txt"),
        "color-case3" => include_str!("../fixtures/color-case3.txt"),
        "cartan-weyl" => include_str!("../fixtures/cartan-weyl.txt"),
        "color-7x7" => include_str!("../fixtures/color-7x7.txt"),
        other => return Err(FixtureError::Unknown(other.to_string())),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureEntry {
    pub left: String,
    pub right: String,
    pub kind: BracketKind,
    pub terms: Vec<(String, Scalar)>,
}

impl fmt::Display for FixtureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (o, c) = match self.kind {
            BracketKind::Commutator => ('[', ']'),
            BracketKind::Anticommutator => ('{', '}'),
        };
        let idx: Vec<(usize, Scalar)> = self
            .terms
            .iter()
            .enumerate()
            .map(|(k, (_, s))| (k, s.clone()))
            .collect();
        let rhs = render_combination(&idx, |k| self.terms[k].0.clone());
        write!(f, "{o}{},{}{c} = {rhs}", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub name: String,
    pub basis: String,
    pub sign_factor: String,
    pub entries: Vec<FixtureEntry>,
}

impl Fixture {
    pub fn get(&self, left: &str, right: &str) -> Option<&FixtureEntry> {
        self.entries
            .iter()
            .find(|e| e.left == left && e.right == right)
    }
}

/// Loads and parses an embedded fixture.
pub fn load_fixture(name: &str) -> Result<Fixture, FixtureError> {
    parse_fixture(name, fixture_text(name)?)
}

pub fn parse_fixture(name: &str, text: &str) -> Result<Fixture, FixtureError> {
    let mut basis = None;
    let mut sign_factor = None;
    let mut entries = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(h) = line.strip_prefix('#') {
            if let Some((key, value)) = h.split_once(':') {
                match key.trim() {
                    "basis" => basis = Some(value.trim().to_string()),
                    "sign-factor" => sign_factor = Some(value.trim().to_string()),
                    _ => {}
                }
            }
            continue;
        }
        entries.push(parse_entry(line).map_err(|msg| FixtureError::Parse { line: k + 1, msg })?);
    }
    Ok(Fixture {
        name: name.to_string(),
        basis: basis.ok_or(FixtureError::MissingHeader("basis"))?,
        sign_factor: sign_factor.ok_or(FixtureError::MissingHeader("sign-factor"))?,
        entries,
    })
}

impl FromStr for FixtureEntry {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_entry(s)
    }
}

fn parse_entry(line: &str) -> Result<FixtureEntry, String> {
    let (lhs, rhs) = line.split_once('=').ok_or("missing '='")?;
    let lhs = lhs.trim();
    let (kind, inner) = if let Some(x) = lhs.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
        (BracketKind::Commutator, x)
    } else if let Some(x) = lhs.strip_prefix('{').and_then(|x| x.strip_suffix('}')) {
        (BracketKind::Anticommutator, x)
    } else {
        return Err(format!("bad bracket {lhs:?}"));
    };
    let (left, right) = inner.split_once(',').ok_or("missing ',' in bracket")?;
    Ok(FixtureEntry {
        left: left.trim().to_string(),
        right: right.trim().to_string(),
        kind,
        terms: parse_terms(rhs.trim())?,
    })
}

fn parse_terms(rhs: &str) -> Result<Vec<(String, Scalar)>, String> {
    if rhs == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut sign = 1i64;
    let mut expect_term = true;
    for tok in rhs.split_whitespace() {
        match tok {
            "+" | "-" if !expect_term => {
                sign = if tok == "-" { -1 } else { 1 };
                expect_term = true;
            }
            _ if expect_term => {
                let (neg, body) = match tok.strip_prefix('-') {
                    Some(b) => (true, b),
                    None => (false, tok),
                };
                let split = body
                    .find(|c: char| c.is_ascii_alphabetic())
                    .ok_or_else(|| format!("term {tok:?} has no label"))?;
                let (num, label) = body.split_at(split);
                let mut c = if num.is_empty() {
                    Scalar::one()
                } else {
                    Scalar::from_rational(parse_rational(num).map_err(|e| e.to_string())?)
                };
                if neg != (sign == -1) {
                    c = -c;
                }
                out.push((label.to_string(), c));
                expect_term = false;
                sign = 1;
            }
            _ => return Err(format!("unexpected token {tok:?}")),
        }
    }
    if expect_term {
        return Err("dangling operator".into());
    }
    Ok(out)
}
