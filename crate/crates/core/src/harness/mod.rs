//! Claim registry and verification runs.
//!
//! Each registered claim compares search values, exact counts and
//! constructions over a range of `n`. Search results go through a
//! [`ResultCache`]. Claims asserted only for large `n` are scored with a
//! threshold: the least `n*` from which every checked `n` holds.

mod cache;
mod claims;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::MultipartitePattern;
use crate::search::{Engine, SearchOptions, SearchResult, HARD_CAP};

pub use cache::{CacheEntry, CacheKey, Lookup, ResultCache, TOOL_VERSION};
pub use claims::{registry, ClaimSpec};
pub use report::{summary_table, write_csv, write_json, CsvRow};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(usize),
    List(Vec<usize>),
}

/// Named claim parameters, e.g. `a=1 b=3 s=2 t=2` or `h=1,2,2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn int(mut self, key: &str, v: usize) -> Self {
        self.0.insert(key.to_string(), ParamValue::Int(v));
        self
    }

    pub fn list(mut self, key: &str, v: &[usize]) -> Self {
        self.0.insert(key.to_string(), ParamValue::List(v.to_vec()));
        self
    }

    pub fn get(&self, key: &str) -> Result<usize> {
        match self.0.get(key) {
            Some(ParamValue::Int(v)) => Ok(*v),
            _ => Err(Error::pre(format!("missing integer parameter `{key}`"))),
        }
    }

    pub fn get_list(&self, key: &str) -> Result<&[usize]> {
        match self.0.get(key) {
            Some(ParamValue::List(v)) => Ok(v),
            _ => Err(Error::pre(format!("missing list parameter `{key}`"))),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match v {
                ParamValue::Int(x) => write!(f, "{k}={x}")?,
                ParamValue::List(xs) => {
                    let xs: Vec<String> = xs.iter().map(ToString::to_string).collect();
                    write!(f, "{k}={}", xs.join(","))?
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    ExactValue,
    LowerBound,
    UpperBound,
    Structure,
    AsymptoticWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ClaimStatus {
    /// Every checked `n` holds, all from exhaustive search.
    Verified,
    /// Holds for every checked `n >= n_star`; smaller `n` fail.
    VerifiedFromThreshold { n_star: usize },
    /// A large-`n` claim that fails at the top of the checked range.
    ThresholdNotReached,
    Mismatch {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        certificate: Option<String>,
    },
    /// Asymptotic claims: ratios recorded, no hard failure.
    Witnessed,
    /// Consistent so far, but some evidence came from the heuristic engine.
    LowerBound,
    Skipped { reason: String },
}

impl ClaimStatus {
    pub fn label(&self) -> &'static str {
        match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::VerifiedFromThreshold { .. } => "verified_from_threshold",
            ClaimStatus::ThresholdNotReached => "threshold_not_reached",
            ClaimStatus::Mismatch { .. } => "mismatch",
            ClaimStatus::Witnessed => "witnessed",
            ClaimStatus::LowerBound => "lower_bound",
            ClaimStatus::Skipped { .. } => "skipped",
        }
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self, ClaimStatus::Mismatch { .. })
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimStatus::VerifiedFromThreshold { n_star } => write!(f, "verified_from_threshold(n*={n_star})"),
            ClaimStatus::Mismatch { n, .. } => write!(f, "mismatch(n={n})"),
            ClaimStatus::Skipped { reason } => write!(f, "skipped({reason})"),
            other => f.write_str(other.label()),
        }
    }
}

/// One checked `n` (or one instance, for hypergraph claims).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub n: usize,
    pub value: Option<u128>,
    pub reference_value: Option<u128>,
    pub holds: bool,
    /// The value is a proven maximum (or not a search value at all).
    pub exhaustive: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    /// graph6 of a graph on which the row fails.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl Evidence {
    fn new(n: usize, value: Option<u128>, reference_value: Option<u128>, holds: bool) -> Self {
        Evidence { n, value, reference_value, holds, exhaustive: true, note: String::new(), certificate: None }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    pub params: Params,
    pub n_range: [usize; 2],
    pub kind: ClaimKind,
    #[serde(flatten)]
    pub status: ClaimStatus,
    pub evidence: Vec<Evidence>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub details: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Scoring {
    /// Asserted for every `n`: any failing row is a mismatch.
    Exact,
    /// Asserted for `n` large enough.
    Threshold,
    /// Failing rows are mismatches, otherwise witnessed.
    Witness,
}

fn score(rows: &[Evidence], scoring: Scoring) -> ClaimStatus {
    if rows.is_empty() {
        return ClaimStatus::Skipped { reason: "no n left in range after clipping".into() };
    }
    let first_failure = |rows: &[Evidence]| {
        rows.iter().find(|r| !r.holds).map(|r| ClaimStatus::Mismatch { n: r.n, certificate: r.certificate.clone() })
    };
    let status = match scoring {
        Scoring::Exact => first_failure(rows).unwrap_or(ClaimStatus::Verified),
        Scoring::Witness => return first_failure(rows).unwrap_or(ClaimStatus::Witnessed),
        Scoring::Threshold => match rows.iter().rposition(|r| !r.holds) {
            None => ClaimStatus::Verified,
            Some(i) if i + 1 == rows.len() => ClaimStatus::ThresholdNotReached,
            Some(i) => ClaimStatus::VerifiedFromThreshold { n_star: rows[i + 1].n },
        },
    };
    let heuristic = rows.iter().any(|r| !r.exhaustive);
    match status {
        ClaimStatus::Verified | ClaimStatus::VerifiedFromThreshold { .. } if heuristic => ClaimStatus::LowerBound,
        s => s,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Largest `n` searched exhaustively.
    pub n_max: usize,
    /// Search-based claims extend to this `n` with the heuristic engine.
    pub heuristic_n_max: Option<usize>,
    pub workers: usize,
    pub seed: u64,
    pub budget: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        let search = SearchOptions::default();
        SuiteOptions { n_max: 8, heuristic_n_max: None, workers: search.workers, seed: 0, budget: search.budget }
    }
}

pub struct Harness {
    cache: ResultCache,
    opts: SuiteOptions,
}

impl Harness {
    pub fn new(cache_dir: Option<&Path>, opts: SuiteOptions) -> Result<Self> {
        if opts.n_max > HARD_CAP {
            return Err(Error::SearchCap { n: opts.n_max, cap: HARD_CAP });
        }
        if opts.workers == 0 {
            return Err(Error::pre("workers must be at least 1"));
        }
        Ok(Harness { cache: ResultCache::new(cache_dir)?, opts })
    }

    pub fn options(&self) -> &SuiteOptions {
        &self.opts
    }

    pub fn cache(&self) -> &ResultCache {
        &self.cache
    }

    /// Runs one claim over `n_range`; search-based claims are clipped to the
    /// configured engines' reach.
    pub fn run_claim(&self, claim_id: &str, params: &Params, n_range: (usize, usize)) -> Result<ClaimRecord> {
        let spec = registry()
            .into_iter()
            .find(|c| c.id == claim_id)
            .ok_or_else(|| Error::UnknownClaim(claim_id.to_string()))?;
        claims::run(self, &spec, params, n_range)
    }

    /// Runs every registered claim whose id matches the glob `filter`.
    pub fn run_suite(&self, filter: &str) -> Result<Vec<ClaimRecord>> {
        let pattern = glob::Pattern::new(filter).map_err(|e| Error::pre(format!("bad filter `{filter}`: {e}")))?;
        let mut out = Vec::new();
        for spec in registry().into_iter().filter(|c| pattern.matches(c.id)) {
            for (params, range) in &spec.defaults {
                out.push(claims::run(self, &spec, params, *range)?);
            }
        }
        Ok(out)
    }

    /// The upper end of `hi` reachable by search, given the engines configured.
    fn search_reach(&self, hi: usize, structural: bool) -> usize {
        let reach = match self.opts.heuristic_n_max {
            Some(h) if !structural => h.max(self.opts.n_max),
            _ => self.opts.n_max,
        };
        hi.min(reach)
    }

    fn search(&self, n: usize, h: &MultipartitePattern, f: &MultipartitePattern) -> Result<SearchResult> {
        let mut opts = SearchOptions::default().with_workers(self.opts.workers);
        if n > self.opts.n_max {
            opts.engine = Engine::Heuristic;
            opts.seed = self.opts.seed;
            opts.budget = self.opts.budget;
        }
        Ok(self.cache.get_or_compute(n, h, f, &opts)?.0)
    }
}

pub fn any_mismatch(records: &[ClaimRecord]) -> bool {
    records.iter().any(|r| r.status.is_mismatch())
}
