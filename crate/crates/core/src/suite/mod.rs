//! Identity manifests, the parallel runner and its reports.

mod default;
mod manifest;
mod report;
mod snapshot;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use default::{default_manifest, generate_default_manifest, DEFAULT_MANIFEST};
pub use manifest::{Check, FrameCheck, IdentityEntry, Manifest, Order};
pub use snapshot::{diff_snapshots, golden_snapshot, render_snapshot, snapshot_file_name};

use crate::error::Result;
use crate::expr::{EvalConfig, Evaluator, Expr};
use crate::frames::{self, extract_ratio, FrameShift};
use crate::ncalg::NCElement;

/// Order used for series entries when neither the run nor the entry sets one.
pub const DEFAULT_ORDER: u32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Overrides the order of every series entry and frame check.
    pub order: Option<u32>,
    /// Keep only entries with this tag.
    pub filter: Option<String>,
    /// Worker threads; `None` uses the global pool.
    pub parallelism: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub tag: String,
    pub status: Status,
    /// `"exact"` or the truncation order used.
    pub order: String,
    pub residual: String,
    pub ms: f64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub coefficients: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportConfig {
    pub order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub suite: String,
    pub config: ReportConfig,
    pub entries: Vec<EntryReport>,
    pub totals: Totals,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.totals.pass == self.totals.total
    }

    pub fn entry(&self, name: &str) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Zeroes wall times so that two runs compare byte for byte.
    pub fn without_timings(mut self) -> Self {
        for e in &mut self.entries {
            e.ms = 0.0;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_markdown(&self) -> String {
        report::markdown(self)
    }
}

struct Outcome {
    status: Status,
    residual: String,
    coefficients: BTreeMap<String, String>,
}

fn order_label(entry: &IdentityEntry, config: &SuiteConfig) -> (String, Option<u32>) {
    match (entry.order, &entry.check) {
        (Order::Exact, _) => ("exact".into(), None),
        (Order::Series(n), _) => {
            let n = config.order.unwrap_or(n);
            (n.to_string(), Some(n))
        }
    }
}

fn residual_outcome(residual: &NCElement) -> (Status, String) {
    if residual.is_zero() {
        (Status::Pass, "0".into())
    } else {
        (Status::Fail, residual.render_plain_inline())
    }
}

fn frame_check(check: FrameCheck, order: Option<u32>) -> FrameShift {
    let n = order.unwrap_or(DEFAULT_ORDER);
    match check {
        FrameCheck::Mass => frames::check_mass_law(n),
        FrameCheck::Position => frames::check_position_law(n),
        FrameCheck::Metric => frames::metric_check(n),
        FrameCheck::Tetrad => frames::check_tetrad_law(n),
        FrameCheck::Momentum => frames::check_momentum_law(n),
        FrameCheck::Commutators => frames::check_canonical_commutators(n),
        FrameCheck::Reciprocity => frames::reciprocity_check(n),
        FrameCheck::Homomorphism => frames::check_homomorphism(n),
        FrameCheck::Hermitian => frames::check_hermitian_forms(),
    }
}

fn evaluate(entry: &IdentityEntry, order: Option<u32>) -> Result<Outcome> {
    match &entry.check {
        Check::Frame(c) => {
            let shift = frame_check(*c, order);
            let (status, residual) = if shift.passed() {
                (Status::Pass, "0".to_string())
            } else {
                let worst = shift
                    .components
                    .iter()
                    .find(|c| !c.residual.alpha_truncate(shift.order).is_zero())
                    .expect("a failing component");
                (
                    Status::Fail,
                    format!(
                        "{}: {}",
                        worst.label,
                        worst
                            .residual
                            .alpha_truncate(shift.order)
                            .render_plain_inline()
                    ),
                )
            };
            let coefficients = shift
                .coefficients
                .iter()
                .map(|(n, c)| (n.clone(), c.to_string()))
                .collect();
            Ok(Outcome {
                status,
                residual,
                coefficients,
            })
        }
        Check::Identity { lhs, rhs } => {
            let mut ev = Evaluator::new(EvalConfig {
                order: Some(order.unwrap_or(DEFAULT_ORDER)),
            });
            let l = ev.eval(lhs)?;
            let r = ev.eval(rhs)?;
            let mut residual = l.clone() - r;
            if let Some(n) = order {
                residual = residual.alpha_truncate(n);
            }
            let (status, text) = residual_outcome(&residual);
            let mut coefficients = BTreeMap::new();
            if let Some(basis) = &entry.extract {
                let b = ev.eval(basis)?;
                let c = extract_ratio(&l, &b)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "unresolved".into());
                coefficients.insert("coefficient".to_string(), c);
            }
            Ok(Outcome {
                status,
                residual: text,
                coefficients,
            })
        }
    }
}

fn run_entry(entry: &IdentityEntry, config: &SuiteConfig) -> EntryReport {
    let (order_text, order) = order_label(entry, config);
    let start = Instant::now();
    let outcome = evaluate(entry, order).unwrap_or_else(|e| Outcome {
        status: Status::Error,
        residual: e.to_string(),
        coefficients: BTreeMap::new(),
    });
    let ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    EntryReport {
        name: entry.name.clone(),
        tag: entry.tag.clone(),
        status: outcome.status,
        order: order_text,
        residual: outcome.residual,
        ms,
        coefficients: outcome.coefficients,
    }
}

/// Evaluates every selected entry. Statuses and residuals do not depend on
/// the degree of parallelism; entries keep manifest order.
pub fn run_suite(name: &str, manifest: &Manifest, config: &SuiteConfig) -> Result<IdentityReport> {
    let selected: Vec<&IdentityEntry> = manifest
        .entries
        .iter()
        .filter(|e| config.filter.as_deref().is_none_or(|t| e.tag == t))
        .collect();
    let work =
        || -> Vec<EntryReport> { selected.par_iter().map(|e| run_entry(e, config)).collect() };
    let entries = match config.parallelism {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| crate::error::Error::Io(e.to_string()))?
            .install(work),
        None => work(),
    };
    let mut totals = Totals {
        total: entries.len(),
        ..Totals::default()
    };
    for e in &entries {
        match e.status {
            Status::Pass => totals.pass += 1,
            Status::Fail => totals.fail += 1,
            Status::Error => totals.error += 1,
        }
    }
    Ok(IdentityReport {
        suite: name.to_string(),
        config: ReportConfig {
            order: config.order,
        },
        entries,
        totals,
    })
}

fn is_literal_zero(e: &Expr) -> bool {
    matches!(e, Expr::Num(r) if *r == num_rational::Ratio::from_integer(0))
}

/// The entry with one sign flipped: a nonzero right-hand side is negated,
/// otherwise the top-level operator on the left flips (see
/// [`Expr::sign_flipped`]). Frame checks and unflippable entries give
/// `None`.
pub fn negative_control(entry: &IdentityEntry) -> Option<IdentityEntry> {
    let Check::Identity { lhs, rhs } = &entry.check else {
        return None;
    };
    let (lhs, rhs) = if is_literal_zero(rhs) {
        (lhs.sign_flipped()?, rhs.clone())
    } else {
        (lhs.clone(), Expr::Neg(Box::new(rhs.clone())))
    };
    Some(IdentityEntry {
        name: format!("{}~flipped", entry.name),
        check: Check::Identity { lhs, rhs },
        extract: None,
        ..entry.clone()
    })
}

/// Negative controls for every identity entry that admits one.
pub fn negative_controls(manifest: &Manifest) -> Manifest {
    Manifest {
        entries: manifest
            .entries
            .iter()
            .filter_map(negative_control)
            .collect(),
    }
}
