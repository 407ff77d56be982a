//! Verification suites and the named reproduction scenarios behind the
//! `cointerval` binary.

mod scenarios;
mod suite;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::cocat::{CheckReport, Status};
use crate::error::{Error, Result};
use crate::exactalg::Ring;

pub use scenarios::{reproduce, SCENARIOS};
pub use suite::{default_checks, run_suite, CHECKS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContextKind {
    FinCat,
    ChainCat,
}

impl fmt::Display for ContextKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContextKind::FinCat => "fincat",
            ContextKind::ChainCat => "chaincat",
        })
    }
}

impl FromStr for ContextKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fincat" => Ok(ContextKind::FinCat),
            "chaincat" => Ok(ContextKind::ChainCat),
            _ => Err(Error::Config(format!("unknown context '{s}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub context: ContextKind,
    pub ring: Ring,
    pub depth_bound: usize,
    pub cap: usize,
    pub coeff_box: i64,
    /// Built-in interval name; ignored when an input file is given.
    pub interval: String,
    /// `None` runs the default suite for the interval.
    pub checks: Option<Vec<String>>,
    /// Echoed in the report to identify the input.
    pub input_name: Option<String>,
}

impl SuiteConfig {
    pub fn new(context: ContextKind, interval: impl Into<String>) -> Self {
        SuiteConfig {
            context,
            ring: Ring::Integers,
            depth_bound: 12,
            cap: 10_000,
            coeff_box: 3,
            interval: interval.into(),
            checks: None,
            input_name: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.checks.as_ref().is_some_and(Vec::is_empty) {
            return Err(Error::Config("no checks selected".into()));
        }
        if self.depth_bound == 0 || self.cap == 0 || self.coeff_box <= 0 {
            return Err(Error::Config(
                "depth bound, cap and coefficient box must be positive".into(),
            ));
        }
        if let Some(bad) = self.checks.iter().flatten().find(|c| !CHECKS.contains(&c.as_str())) {
            return Err(Error::Config(format!("unknown check '{bad}'")));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "context": self.context.to_string(),
            "depth_bound": self.depth_bound,
            "cap": self.cap,
            "checks": self.checks,
            "interval": self.interval,
        });
        if self.context == ContextKind::ChainCat {
            v["ring"] = json!(self.ring.to_string());
            v["coeff_box"] = json!(self.coeff_box);
        }
        if let Some(name) = &self.input_name {
            v["input"] = json!(name);
        }
        v
    }
}

/// The outcome of a suite or scenario. Everything but `timing` is a pure
/// function of the configuration and inputs.
#[derive(Debug, Clone)]
pub struct Report {
    pub config: Value,
    pub results: Vec<CheckReport>,
    /// Milliseconds per result, keyed by result name.
    pub timing: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(config: Value) -> Self {
        Report {
            config,
            results: Vec::new(),
            timing: BTreeMap::new(),
        }
    }

    pub fn verdict(&self) -> Status {
        self.results.iter().fold(Status::Pass, |acc, r| acc.and(r.status()))
    }

    pub fn result(&self, name: &str) -> Option<&CheckReport> {
        self.results.iter().find(|r| r.name == name)
    }

    /// Runs `f`, recording its report and wall-clock time.
    pub(crate) fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> CheckReport) {
        let start = std::time::Instant::now();
        let mut r = f();
        r.name = name.into();
        self.timing.insert(r.name.clone(), start.elapsed().as_secs_f64() * 1e3);
        self.results.push(r);
    }

    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut v = json!({
            "tool": format!("cointerval {}", env!("CARGO_PKG_VERSION")),
            "config": self.config,
            "results": self.results.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
            "verdict": self.verdict(),
        });
        if with_timing {
            v["timing_ms"] = json!(self.timing);
        }
        v
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn render(&self, with_timing: bool) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json(with_timing)).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Inconclusive => 2,
    }
}

/// Wraps a report whose failure is the expected result: passes exactly
/// when `inner` fails, keeping the inner items as data.
pub(crate) fn expect_failure(inner: CheckReport) -> CheckReport {
    let mut r = CheckReport::new(format!("not-{}", inner.name));
    match inner.status() {
        Status::Fail => r.pass("fails as expected"),
        Status::Pass => r.fail(
            "fails as expected",
            format!("{} unexpectedly passed", inner.name),
            json!(null),
        ),
        Status::Inconclusive => r.inconclusive("fails as expected", format!("{} was inconclusive", inner.name)),
    }
    r.set_data("report", inner.to_json());
    r
}
