//! Line-oriented identity manifests.
//!
//! ```text
//! # comment
//! [tag]
//! name := lhs == rhs @ exact
//! name := lhs == rhs @ order 3
//! name := lhs == rhs @ exact | extract per basis
//! name := check position @ order 3
//! ```
//!
//! A `[tag]` line applies to the entries that follow it. `extract per B`
//! reports the constant `c` with `lhs = c B`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::expr::{parse, Expr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameCheck {
    Mass,
    Position,
    Metric,
    Tetrad,
    Momentum,
    Commutators,
    Reciprocity,
    Homomorphism,
    Hermitian,
}

impl FrameCheck {
    pub const ALL: [FrameCheck; 9] = [
        FrameCheck::Mass,
        FrameCheck::Position,
        FrameCheck::Metric,
        FrameCheck::Tetrad,
        FrameCheck::Momentum,
        FrameCheck::Commutators,
        FrameCheck::Reciprocity,
        FrameCheck::Homomorphism,
        FrameCheck::Hermitian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameCheck::Mass => "mass",
            FrameCheck::Position => "position",
            FrameCheck::Metric => "metric",
            FrameCheck::Tetrad => "tetrad",
            FrameCheck::Momentum => "momentum",
            FrameCheck::Commutators => "commutators",
            FrameCheck::Reciprocity => "reciprocity",
            FrameCheck::Homomorphism => "homomorphism",
            FrameCheck::Hermitian => "hermitian",
        }
    }
}

impl FromStr for FrameCheck {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        FrameCheck::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Exact,
    Series(u32),
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Exact => write!(f, "exact"),
            Order::Series(n) => write!(f, "order {n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Identity { lhs: Expr, rhs: Expr },
    Frame(FrameCheck),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityEntry {
    pub name: String,
    pub tag: String,
    pub check: Check,
    pub order: Order,
    pub extract: Option<Expr>,
    /// Manifest line the entry came from (0 when built in code).
    pub line: usize,
}

impl fmt::Display for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} := ", self.name)?;
        match &self.check {
            Check::Identity { lhs, rhs } => write!(f, "{lhs} == {rhs}")?,
            Check::Frame(c) => write!(f, "check {}", c.name())?,
        }
        write!(f, " @ {}", self.order)?;
        if let Some(b) = &self.extract {
            write!(f, " | extract per {b}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Manifest {
    pub entries: Vec<IdentityEntry>,
}

fn manifest_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Manifest {
        line,
        column,
        message: message.into(),
    }
}

/// Column (1-based, in characters) of byte offset `at` within `line`.
fn column_of(line: &str, at: usize) -> usize {
    line[..at].chars().count() + 1
}

fn parse_expr_at(line_no: usize, line: &str, start: usize, text: &str) -> Result<Expr> {
    parse(text).map_err(|e| match e {
        Error::Parse {
            line: l,
            column,
            expected,
        } => {
            let base = if l == 1 {
                column_of(line, start) - 1
            } else {
                0
            };
            manifest_error(
                line_no,
                base + column,
                format!("expected {}", expected.join(", ")),
            )
        }
        other => other,
    })
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest> {
        let mut entries = Vec::new();
        let mut names = HashSet::new();
        let mut tag = String::from("untagged");
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(inner) = trimmed.strip_prefix('[') {
                let Some(t) = inner.strip_suffix(']') else {
                    return Err(manifest_error(line_no, raw.len() + 1, "expected `]`"));
                };
                tag = t.trim().to_string();
                continue;
            }
            let entry = parse_entry(line_no, raw, &tag)?;
            if !names.insert(entry.name.clone()) {
                return Err(manifest_error(
                    line_no,
                    1,
                    format!("duplicate entry name `{}`", entry.name),
                ));
            }
            entries.push(entry);
        }
        Ok(Manifest { entries })
    }

    pub fn tags(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for e in &self.entries {
            if !out.contains(&e.tag.as_str()) {
                out.push(&e.tag);
            }
        }
        out
    }

    /// Manifest text; parses back to an equal manifest.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut tag: Option<&str> = None;
        for e in &self.entries {
            if tag != Some(e.tag.as_str()) {
                if tag.is_some() {
                    out.push('\n');
                }
                out.push_str(&format!("[{}]\n", e.tag));
                tag = Some(&e.tag);
            }
            out.push_str(&format!("{e}\n"));
        }
        out
    }
}

fn parse_entry(line_no: usize, line: &str, tag: &str) -> Result<IdentityEntry> {
    let Some(def) = line.find(":=") else {
        return Err(manifest_error(line_no, 1, "expected `name := ...`"));
    };
    let name = line[..def].trim();
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(manifest_error(
            line_no,
            1,
            "expected an entry name without spaces",
        ));
    }
    let body_start = def + 2;
    let Some(at_rel) = line[body_start..].rfind('@') else {
        return Err(manifest_error(
            line_no,
            line.len() + 1,
            "expected `@ exact` or `@ order N`",
        ));
    };
    let at = body_start + at_rel;
    let (order_text, extract_text, extract_start) = match line[at + 1..].find('|') {
        Some(p) => (
            &line[at + 1..at + 1 + p],
            Some(&line[at + 2 + p..]),
            at + 2 + p,
        ),
        None => (&line[at + 1..], None, 0),
    };
    let order = parse_order(order_text).ok_or_else(|| {
        manifest_error(
            line_no,
            column_of(line, at + 1),
            "expected `exact` or `order N`",
        )
    })?;
    let extract = match extract_text {
        None => None,
        Some(t) => {
            let trimmed = t.trim_start();
            let skipped = t.len() - trimmed.len();
            let Some(rest) = trimmed.strip_prefix("extract") else {
                return Err(manifest_error(
                    line_no,
                    column_of(line, extract_start + skipped),
                    "expected `extract per <expr>`",
                ));
            };
            let rest_trim = rest.trim_start();
            let Some(basis) = rest_trim.strip_prefix("per") else {
                return Err(manifest_error(
                    line_no,
                    column_of(line, line.len() - rest.len()),
                    "expected `per`",
                ));
            };
            let start = line.len() - basis.len();
            Some(parse_expr_at(line_no, line, start, basis)?)
        }
    };
    let body = &line[body_start..at];
    let check = if let Some(rest) = body.trim_start().strip_prefix("check ") {
        let c = rest.trim();
        match c.parse::<FrameCheck>() {
            Ok(fc) => Check::Frame(fc),
            Err(()) => {
                let names: Vec<&str> = FrameCheck::ALL.iter().map(|c| c.name()).collect();
                return Err(manifest_error(
                    line_no,
                    column_of(line, line.len() - line[body_start..].trim_start().len() + 6),
                    format!(
                        "unknown frame check `{c}`, expected one of {}",
                        names.join(", ")
                    ),
                ));
            }
        }
    } else {
        let Some(eq) = body.find("==") else {
            return Err(manifest_error(
                line_no,
                column_of(line, at),
                "expected `lhs == rhs`",
            ));
        };
        let lhs = parse_expr_at(line_no, line, body_start, &body[..eq])?;
        let rhs = parse_expr_at(line_no, line, body_start + eq + 2, &body[eq + 2..])?;
        Check::Identity { lhs, rhs }
    };
    Ok(IdentityEntry {
        name: name.to_string(),
        tag: tag.to_string(),
        check,
        order,
        extract,
        line: line_no,
    })
}

fn parse_order(text: &str) -> Option<Order> {
    let mut words = text.split_whitespace();
    let order = match words.next()? {
        "exact" => Order::Exact,
        "order" => Order::Series(words.next()?.parse().ok()?),
        _ => return None,
    };
    words.next().is_none().then_some(order)
}
