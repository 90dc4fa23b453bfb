//! Exact and heuristic computation of `ex(n, H, F)`.

mod exhaustive;
mod heuristic;

use serde::{Deserialize, Serialize};

use crate::counting::count_pattern;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::MultipartitePattern;
use crate::subgraph::contains_pattern;

pub use exhaustive::{enumerate_extremal, exhaustive_max, free_graphs, vertex_increment};
pub use heuristic::{heuristic_max, RESTARTS};

/// Exhaustive search refuses orders above this.
pub const HARD_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    Exhaustive,
    Heuristic,
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Engine::Exhaustive),
            "heuristic" => Ok(Engine::Heuristic),
            _ => Err(Error::pre(format!("unknown engine `{s}` (expected exhaustive or heuristic)"))),
        }
    }
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Engine::Exhaustive => "exhaustive",
            Engine::Heuristic => "heuristic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub engine: Engine,
    pub workers: usize,
    /// Heuristic move budget, shared by all restarts.
    pub budget: u64,
    pub seed: u64,
    pub collect_certificates: bool,
    pub prune_bounds: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            engine: Engine::Exhaustive,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: 10_000,
            seed: 0,
            collect_certificates: true,
            prune_bounds: false,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn heuristic(budget: u64, seed: u64) -> Self {
        SearchOptions { engine: Engine::Heuristic, budget, seed, ..SearchOptions::default() }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        if self.workers == 0 {
            return Err(Error::pre("workers must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::pre(format!("thread pool: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub h: MultipartitePattern,
    pub f: MultipartitePattern,
    pub value: u128,
    /// The value is the proven maximum.
    pub exhaustive: bool,
    /// Extremal graphs up to isomorphism, graph6, in canonical order.
    pub certificates: Vec<String>,
    pub engine: Engine,
    pub runtime_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl SearchResult {
    /// Decodes every certificate and checks order, `F`-freeness and count.
    pub fn verify_certificates(&self) -> Result<()> {
        for cert in &self.certificates {
            let g = crate::graph6::decode(cert)?;
            if g.order() != self.n || contains_pattern(&g, &self.f) || count_pattern(&g, &self.h) != self.value {
                return Err(Error::pre(format!("certificate {cert} does not witness value {}", self.value)));
            }
        }
        Ok(())
    }
}

/// Runs the engine selected in `opts`.
pub fn search(n: usize, h: &MultipartitePattern, f: &MultipartitePattern, opts: &SearchOptions) -> Result<SearchResult> {
    match opts.engine {
        Engine::Exhaustive => exhaustive_max(n, h, f, opts),
        Engine::Heuristic => heuristic_max(n, h, f, opts),
    }
}

fn check_sizes(n: usize, h: &MultipartitePattern) -> Result<()> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    if h.order() > n {
        return Err(Error::pre(format!("pattern {h} has more than n = {n} vertices")));
    }
    Ok(())
}

fn certificate(g: &Graph) -> String {
    crate::graph6::encode(g)
}
