//! Identity catalog and verification engine.
//!
//! Each entry pairs two series builders; verification expands both to a
//! common order and compares every coefficient exactly.

mod catalog;
mod helpers;


use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{format_rational, LaurentSeries, DEFAULT_ORDER};

pub use catalog::catalog;

/// Builds one side of an identity to at least the given order.
pub type Builder = fn(i64) -> Result<LaurentSeries>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Expectation {
    MustPass,
    Exploratory,
}

#[derive(Clone, Copy)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub paper_ref: &'static str,
    pub expectation: Expectation,
    pub default_order: i64,
    /// Both sides are expected to have integer coefficients.
    pub integral: bool,
    pub lhs: Builder,
    pub rhs: Builder,
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("expectation", &self.expectation)
            .field("default_order", &self.default_order)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "exploratory-pass")]
    ExploratoryPass,
    #[serde(rename = "exploratory-fail")]
    ExploratoryFail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExploratoryPass => "exploratory-pass",
            Status::ExploratoryFail => "exploratory-fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip)]
    pub order: i64,
    pub first_mismatch: Option<i64>,
    pub lhs_coeff: Option<String>,
    pub rhs_coeff: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    /// False only for a failed must-pass entry.
    pub fn acceptable(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Common order of all results, absent if entries ran at different orders.
    pub order: Option<i64>,
    pub results: Vec<VerificationReport>,
}

impl Report {
    /// Wrap results; `order` is set when every entry ran at the same order.
    pub fn new(results: Vec<VerificationReport>) -> Self {
        let first = results.first().map(|r| r.order);
        let order = first.filter(|&o| results.iter().all(|r| r.order == o));
        Report { order, results }
    }

    pub fn must_pass_failures(&self) -> usize {
        self.results.iter().filter(|r| !r.acceptable()).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn lookup(id: &str) -> Result<IdentityEntry> {
    catalog().into_iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn first_non_integral(s: &LaurentSeries, order: i64) -> Option<i64> {
    if s.is_integral() {
        return None;
    }
    (s.min_exp()..=order).find(|&e| !s.coeff(e).map(|c| c.is_integer()).unwrap_or(true))
}

/// Milliseconds since an arbitrary start; the bare wasm target has no clock.
#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
fn stopwatch() -> impl Fn() -> u64 {
    let start = std::time::Instant::now();
    move || start.elapsed().as_millis() as u64
}

#[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
fn stopwatch() -> impl Fn() -> u64 {
    || 0
}

fn coeff_string(s: &LaurentSeries, e: i64) -> Option<String> {
    s.coeff_or_zero(e).ok().map(|c| format_rational(&c))
}

/// Verify one entry at `order`.
pub fn verify_entry(entry: &IdentityEntry, order: i64) -> Result<VerificationReport> {
    let elapsed = stopwatch();
    let lhs = (entry.lhs)(order)?;
    let rhs = (entry.rhs)(order)?;
    let (_, mut mismatch) = lhs.equal_upto(&rhs, order)?;
    if mismatch.is_none() && entry.integral && entry.expectation == Expectation::MustPass {
        mismatch = first_non_integral(&lhs, order).into_iter().chain(first_non_integral(&rhs, order)).min();
    }
    let status = match (entry.expectation, mismatch.is_none()) {
        (Expectation::MustPass, true) => Status::Pass,
        (Expectation::MustPass, false) => Status::Fail,
        (Expectation::Exploratory, true) => Status::ExploratoryPass,
        (Expectation::Exploratory, false) => Status::ExploratoryFail,
    };
    Ok(VerificationReport {
        id: entry.id.to_string(),
        paper_ref: entry.paper_ref.to_string(),
        status,
        order,
        first_mismatch: mismatch,
        lhs_coeff: mismatch.and_then(|e| coeff_string(&lhs, e)),
        rhs_coeff: mismatch.and_then(|e| coeff_string(&rhs, e)),
        elapsed_ms: elapsed(),
    })
}

/// Verify the entry `id` at `order`, or at its default order.
pub fn verify(id: &str, order: Option<i64>) -> Result<VerificationReport> {
    let entry = lookup(id)?;
    verify_entry(&entry, order.unwrap_or(entry.default_order))
}

/// Verify every catalog entry. Results come back in catalog order whether
/// or not they are computed in parallel.
pub fn verify_all(order: Option<i64>, parallel: bool) -> Result<Report> {
    let entries = catalog();
    let run = |e: &IdentityEntry| verify_entry(e, order.unwrap_or(e.default_order));
    let results: Result<Vec<_>> = if parallel {
        run_parallel(&entries, run)
    } else {
        entries.iter().map(run).collect()
    };
    Ok(Report::new(results?))
}

#[cfg(feature = "parallel")]
fn run_parallel<F>(entries: &[IdentityEntry], run: F) -> Result<Vec<VerificationReport>>
where
    F: Fn(&IdentityEntry) -> Result<VerificationReport> + Sync + Send,
{
    use rayon::prelude::*;
    entries.par_iter().map(run).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_parallel<F>(entries: &[IdentityEntry], run: F) -> Result<Vec<VerificationReport>>
where
    F: Fn(&IdentityEntry) -> Result<VerificationReport>,
{
    entries.iter().map(run).collect()
}

/// Order used when neither the caller nor the entry specifies one.
pub const fn default_order() -> i64 {
    DEFAULT_ORDER
}
