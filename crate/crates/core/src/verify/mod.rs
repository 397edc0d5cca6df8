//! Catalog of named checks with expected outcomes, and a runner producing JSON reports.
//!
//! Every check is exact: a case passes when the computed outcome equals the expected one.

mod catalog;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use catalog::catalog;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;

/// Value a case computes. Finite abelian groups are given by their invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Outcome {
    Integer(u64),
    Integers(Vec<u64>),
    Boolean(bool),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Integer(n) => write!(f, "{n}"),
            Outcome::Integers(v) => write!(f, "{v:?}"),
            Outcome::Boolean(b) => write!(f, "{b}"),
        }
    }
}

pub type Builder = fn(u64) -> Result<Outcome>;

/// One catalog entry.
#[derive(Clone)]
pub struct CaseSpec {
    pub id: &'static str,
    pub description: &'static str,
    /// The mathematical statement the case checks.
    pub claim: &'static str,
    pub tags: &'static [&'static str],
    pub expected: Outcome,
    /// Largest module or algebra dimension the case handles, for the skip cap.
    pub size: usize,
    pub builder: Builder,
}

impl fmt::Debug for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CaseSpec").field("id", &self.id).field("expected", &self.expected).finish()
    }
}

impl CaseSpec {
    pub fn matches(&self, filter: &[String]) -> bool {
        filter.is_empty() || filter.iter().any(|f| f == self.id || self.tags.contains(&f.as_str()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case_id: String,
    pub status: Status,
    pub expected: Outcome,
    pub computed: Option<Outcome>,
    /// Error raised by the computation, if any.
    pub error: Option<String>,
    pub seed: u64,
    pub elapsed_ms: u64,
    pub version: String,
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub seed: u64,
    /// Cases whose `size` exceeds the cap are skipped.
    pub cap: Option<usize>,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl RunOptions {
    pub fn with_seed(seed: u64) -> Self {
        RunOptions { seed, ..Self::default() }
    }
}

fn execute(case: &CaseSpec, opts: &RunOptions) -> VerificationReport {
    let mut report = VerificationReport {
        case_id: case.id.to_string(),
        status: Status::Skip,
        expected: case.expected.clone(),
        computed: None,
        error: None,
        seed: opts.seed,
        elapsed_ms: 0,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    if opts.cap.is_some_and(|cap| case.size > cap) {
        return report;
    }
    let start = Instant::now();
    let result = (case.builder)(opts.seed);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(out) => {
            report.status = if out == case.expected { Status::Pass } else { Status::Fail };
            report.computed = Some(out);
        }
        Err(e) => {
            report.status = Status::Fail;
            report.error = Some(e.to_string());
        }
    }
    report
}

pub fn find_case(case_id: &str) -> Result<CaseSpec> {
    catalog().into_iter().find(|c| c.id == case_id).ok_or_else(|| Error::UnknownCase(case_id.to_string()))
}

pub fn run_case(case_id: &str, seed: u64) -> Result<VerificationReport> {
    run_case_with(case_id, &RunOptions::with_seed(seed))
}

pub fn run_case_with(case_id: &str, opts: &RunOptions) -> Result<VerificationReport> {
    Ok(execute(&find_case(case_id)?, opts))
}

#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub warnings: Vec<String>,
}

impl RunSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Run every case matching `filter` (ids or tags; empty matches all), in catalog order.
pub fn run_all(filter: &[String], opts: &RunOptions) -> Result<RunSummary> {
    let cases: Vec<CaseSpec> = catalog().into_iter().filter(|c| c.matches(filter)).collect();
    let mut warnings = Vec::new();
    if cases.is_empty() {
        warnings.push(format!("no case matches filter {filter:?}"));
    }
    let run = || cases.par_iter().map(|c| execute(c, opts)).collect::<Vec<_>>();
    let reports = match opts.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Consistency(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    Ok(RunSummary { passed: count(Status::Pass), failed: count(Status::Fail), skipped: count(Status::Skip), warnings, reports })
}

/// All tags used in the catalog, sorted.
pub fn tags() -> Vec<&'static str> {
    let mut t: Vec<&'static str> = catalog().iter().flat_map(|c| c.tags.iter().copied()).collect();
    t.sort_unstable();
    t.dedup();
    t
}
