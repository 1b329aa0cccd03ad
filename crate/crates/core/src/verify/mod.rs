//! Executable identity checks.
//!
//! Every entry pairs two to four independently built series ("sides") and
//! compares them coefficientwise from `compare_from` up to the requested
//! order. At least one side of each passing entry comes from partition
//! enumeration, a sieve or an explicit closed form rather than from the
//! product code.
//!
//! Entries whose printed form is known to be wrong are kept next to their
//! corrected counterparts and are expected to fail.

mod asym;
mod build;
mod count;
mod registry;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::fps::{FpsError, Series, ZPoly};

pub use asym::{asym_table, ffw_values, sample_points, AsymRow};
pub use registry::registry;

/// Enumeration-backed sides are only built below this order.
pub const ENUM_ORDER_CAP: usize = 101;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Classical,
    Lemmas,
    Core,
    General,
    Tails,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Classical,
        Suite::Lemmas,
        Suite::Core,
        Suite::General,
        Suite::Tails,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Classical => "classical",
            Suite::Lemmas => "lemmas",
            Suite::Core => "core",
            Suite::General => "general",
            Suite::Tails => "tails",
        }
    }

    /// `None` stands for every suite.
    pub fn parse(name: &str) -> Result<Option<Suite>, VerifyError> {
        if name == "all" {
            return Ok(None);
        }
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .map(Some)
            .ok_or_else(|| VerifyError::UnknownSuite(name.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expectation {
    Pass,
    /// Registered to document a misprint; the check must fail.
    FailAsPrinted,
}

impl Expectation {
    pub fn name(self) -> &'static str {
        match self {
            Expectation::Pass => "pass",
            Expectation::FailAsPrinted => "fail_as_printed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(usize),
}

/// Builds one series per parameter value of the owning check.
pub type Builder = Box<dyn Fn(usize) -> Result<Vec<Series>, FpsError> + Send + Sync>;

pub struct Side {
    pub label: &'static str,
    /// Largest order this side can be built at, if bounded.
    pub limit: Option<usize>,
    /// Built from enumeration, a sieve or a direct counting recurrence, with
    /// no series code shared with the other sides.
    pub independent: bool,
    build: Builder,
}

impl Side {
    pub fn new(label: &'static str, build: Builder) -> Self {
        Side {
            label,
            limit: None,
            independent: false,
            build,
        }
    }

    pub fn counted(label: &'static str, build: Builder) -> Self {
        Side {
            independent: true,
            ..Side::new(label, build)
        }
    }

    pub fn enumerated(label: &'static str, build: Builder) -> Self {
        Side {
            label,
            limit: Some(ENUM_ORDER_CAP),
            independent: true,
            build,
        }
    }

    pub fn build(&self, order: usize) -> Result<Vec<Series>, FpsError> {
        (self.build)(self.limit.map_or(order, |l| order.min(l)))
    }
}

pub struct IdentityCheck {
    pub id: &'static str,
    pub reference: &'static str,
    pub suite: Suite,
    pub expectation: Expectation,
    pub compare_from: usize,
    /// One label per parameter value; a single empty label for plain checks.
    pub params: Vec<String>,
    pub sides: Vec<Side>,
}

/// Where two sides first disagree. `n` is negative when a side that should
/// be a power series left a nonzero coefficient at a negative power of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideMismatch {
    pub n: i64,
    pub sides: [String; 2],
    pub lhs: ZPoly,
    pub rhs: ZPoly,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub id: String,
    pub reference: String,
    pub order: usize,
    pub status: Status,
    pub expected: Expectation,
    pub first_mismatch: Option<SideMismatch>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn meets_expectation(&self) -> bool {
        matches!(
            (self.status, self.expected),
            (Status::Pass, Expectation::Pass) | (Status::Fail, Expectation::FailAsPrinted)
        )
    }

    /// Everything except the timing, for determinism checks.
    pub fn outcome(&self) -> (&str, Status, Option<&SideMismatch>) {
        (&self.id, self.status, self.first_mismatch.as_ref())
    }

    pub fn to_json(&self) -> Value {
        let mismatch = self.first_mismatch.as_ref().map(|m| {
            json!({
                "n": m.n,
                "sides": [m.sides[0], m.sides[1]],
                "lhs": poly_json(&m.lhs),
                "rhs": poly_json(&m.rhs),
            })
        });
        json!({
            "id": self.id,
            "paper_ref": self.reference,
            "status": self.status.name(),
            "expected": self.expected.name(),
            "first_mismatch": mismatch,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

fn poly_json(p: &ZPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

/// The report document for a suite (or a single id) run.
pub fn reports_json(suite: &str, order: usize, reports: &[Report]) -> Value {
    json!({
        "suite": suite,
        "order": order,
        "results": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
    })
}

impl fmt::Display for SideMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q^{}: {} = {} but {} = {}",
            self.n, self.sides[0], self.lhs, self.sides[1], self.rhs
        )
    }
}

fn side_name(label: &str, param: &str) -> String {
    if param.is_empty() {
        label.to_string()
    } else {
        format!("{label} [{param}]")
    }
}

impl IdentityCheck {
    pub fn run(&self, order: usize) -> Result<Report, VerifyError> {
        if order < 2 {
            return Err(VerifyError::OrderTooSmall(order));
        }
        let start = Instant::now();
        let first_mismatch = self.compare(order);
        Ok(Report {
            id: self.id.to_string(),
            reference: self.reference.to_string(),
            order,
            status: if first_mismatch.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            expected: self.expectation,
            first_mismatch,
            elapsed_ms: start.elapsed().as_millis() as u64,
        })
    }

    /// Side 0 against every other side, parameter by parameter; the first
    /// parameter with a disagreement reports its lowest mismatching power.
    fn compare(&self, order: usize) -> Option<SideMismatch> {
        let mut built = Vec::with_capacity(self.sides.len());
        for side in &self.sides {
            match side.build(order) {
                Ok(v) => {
                    assert_eq!(
                        v.len(),
                        self.params.len(),
                        "{}: side {}",
                        self.id,
                        side.label
                    );
                    built.push(v);
                }
                Err(e) => return Some(build_failure(side.label, e)),
            }
        }
        for (b, param) in self.params.iter().enumerate() {
            let mut best: Option<SideMismatch> = None;
            for j in 1..self.sides.len() {
                let hi = [order, limit(&self.sides[0]), limit(&self.sides[j])]
                    .into_iter()
                    .min()
                    .expect("nonempty");
                let (a, c) = (&built[0][b], &built[j][b]);
                assert!(
                    a.order() >= hi && c.order() >= hi,
                    "{}: side built short of order {hi}",
                    self.id
                );
                if let Some(m) = a
                    .truncate(hi)
                    .first_mismatch(&c.truncate(hi), self.compare_from)
                {
                    if best.as_ref().is_none_or(|x| (m.n as i64) < x.n) {
                        best = Some(SideMismatch {
                            n: m.n as i64,
                            sides: [
                                side_name(self.sides[0].label, param),
                                side_name(self.sides[j].label, param),
                            ],
                            lhs: m.lhs,
                            rhs: m.rhs,
                        });
                    }
                }
            }
            if best.is_some() {
                return best;
            }
        }
        None
    }
}

fn limit(side: &Side) -> usize {
    side.limit.unwrap_or(usize::MAX)
}

fn build_failure(label: &str, err: FpsError) -> SideMismatch {
    let (n, coeff) = match &err {
        FpsError::NegativePowerResidue { exponent, coeff } => (*exponent, coeff.clone()),
        FpsError::NotDivisible { n } => (*n as i64, ZPoly::zero()),
        _ => (0, ZPoly::zero()),
    };
    SideMismatch {
        n,
        sides: [label.to_string(), format!("({err})")],
        lhs: coeff,
        rhs: ZPoly::zero(),
    }
}

/// Runs the entry `id` at `order`.
pub fn run(id: &str, order: usize) -> Result<Report, VerifyError> {
    let reg = registry();
    let check = reg
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))?;
    check.run(order)
}

/// Runs every entry of `suite` (all entries for `None`) in parallel;
/// reports come back in registry order.
pub fn run_suite(suite: Option<Suite>, order: usize) -> Result<Vec<Report>, VerifyError> {
    if order < 2 {
        return Err(VerifyError::OrderTooSmall(order));
    }
    let reg = registry();
    let selected: Vec<&IdentityCheck> = reg
        .iter()
        .filter(|c| suite.is_none_or(|s| c.suite == s))
        .collect();
    selected.par_iter().map(|c| c.run(order)).collect()
}

/// True when every report meets its expectation.
pub fn suite_passes(reports: &[Report]) -> bool {
    reports.iter().all(Report::meets_expectation)
}
