//! The `tnt` command line.
//!
//! Exit codes: 0 success, 1 a claim mismatch, 2 usage or input error,
//! 3 internal error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::{build, ConstructionSpec};
use crate::counting::count_pattern;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::harness::{any_mismatch, summary_table, write_csv, write_json, Harness, ResultCache, SuiteOptions};
use crate::hypergraph::{contains_berge, generate_girth5_linear, place_bipartite, BergeMode, BergeQuery, Hypergraph, PlacementRule};
use crate::pattern::MultipartitePattern;
use crate::search::{Engine, SearchOptions, HARD_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const DEFAULT_CACHE_DIR: &str = ".tnt-cache";
pub const DEFAULT_N_CAP: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "tnt", version, about = "Generalized Turán numbers for complete bipartite patterns")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CliConfig {
    /// Directory of cached search results.
    #[arg(long, global = true, env = "TNT_CACHE_DIR", default_value = DEFAULT_CACHE_DIR)]
    pub cache_dir: PathBuf,
    /// Disable the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub output: Option<Output>,
    /// Advisory cap on exhaustive search orders; `--force` exceeds it.
    #[arg(long, global = true, default_value_t = DEFAULT_N_CAP)]
    pub n_cap: usize,
}

impl CliConfig {
    fn workers(&self) -> usize {
        self.workers.map_or_else(|| SearchOptions::default().workers, |w| w as usize)
    }

    fn cache(&self) -> Result<ResultCache> {
        ResultCache::new((!self.no_cache).then_some(self.cache_dir.as_path()))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count copies of a complete multipartite pattern in one graph.
    Count(CountArgs),
    /// Compute ex(n, H, F) by search.
    Search(SearchArgs),
    /// Run the claim suite.
    Verify(VerifyArgs),
    /// Hypergraph tools.
    #[command(subcommand)]
    Hyper(HyperCommand),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["g6", "file", "construct"])))]
pub struct CountArgs {
    #[arg(long)]
    pub g6: Option<String>,
    /// A graph6 line or an edge list (`n m` header, then `u v` lines).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// A construction as JSON, e.g. `{"family":"complete_bipartite","params":[2,6]}`.
    #[arg(long)]
    pub construct: Option<String>,
    /// Part sizes, e.g. `2,3`.
    #[arg(long, value_parser = parse_pattern)]
    pub pattern: MultipartitePattern,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_pattern)]
    pub pattern: MultipartitePattern,
    #[arg(long, value_parser = parse_pattern)]
    pub forbid: MultipartitePattern,
    #[arg(long, default_value = "exhaustive", value_parser = parse_engine)]
    pub engine: Engine,
    /// Heuristic move budget.
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
    /// Allow exhaustive search above `--n-cap`.
    #[arg(long)]
    pub force: bool,
    /// Omit extremal graphs from the output.
    #[arg(long)]
    pub no_certificates: bool,
    /// Prune search branches with closed-form bounds.
    #[arg(long)]
    pub prune: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Glob over claim ids.
    #[arg(long, default_value = "*")]
    pub filter: String,
    /// Largest n searched exhaustively.
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Extend search-based claims to this n with the heuristic engine.
    #[arg(long)]
    pub heuristic_n_max: Option<usize>,
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
    /// Allow `--n-max` above `--n-cap`.
    #[arg(long)]
    pub force: bool,
    /// Also write the JSON report here.
    #[arg(long)]
    pub json_report: Option<PathBuf>,
    /// Also write the CSV report here.
    #[arg(long)]
    pub csv_report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum HyperCommand {
    /// Berge girth (2 when the hypergraph is not linear).
    Girth {
        #[arg(long)]
        file: PathBuf,
    },
    /// Whether the hypergraph contains a Berge copy (or expansion) of a pattern.
    Berge {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_parser = parse_pattern)]
        pattern: MultipartitePattern,
        #[arg(long, value_enum, default_value = "berge")]
        mode: ModeArg,
    },
    /// Place K_{a,b} into every hyperedge; prints graph6.
    Place {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value = "lowest_lex")]
        rule: RuleArg,
    },
    /// Random linear hypergraph of Berge girth at least 5.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Stop after this many edges.
        #[arg(long)]
        target: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Berge,
    Expansion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum RuleArg {
    LowestLex,
    SeededRandom,
}

fn parse_pattern(s: &str) -> std::result::Result<MultipartitePattern, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_engine(s: &str) -> std::result::Result<Engine, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Csv(_) | Error::Cache(_) | Error::Overflow(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cfg = &cli.config;
    if cfg.n_cap > HARD_CAP {
        return Err(Error::pre(format!("--n-cap must be at most {HARD_CAP}")));
    }
    match &cli.command {
        Command::Count(args) => cmd_count(cfg, args, out),
        Command::Search(args) => cmd_search(cfg, args, out),
        Command::Verify(args) => cmd_verify(cfg, args, out, err),
        Command::Hyper(cmd) => cmd_hyper(cfg, cmd, out),
    }
}

fn read_input(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::pre(format!("cannot read {}: {e}", path.display())))
}

/// A single graph6 token, or else an edge list.
fn parse_graph_file(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if !trimmed.is_empty() && !trimmed.contains(char::is_whitespace) && !trimmed.starts_with(|c: char| c.is_ascii_digit()) {
        return graph6::decode(trimmed);
    }
    Graph::parse_edge_list(text)
}

/// JSON output of `count`.
#[derive(Debug, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub graph6: String,
    pub canonical_form: CanonicalForm,
    pub pattern: MultipartitePattern,
    pub count: u128,
}

fn cmd_count(cfg: &CliConfig, args: &CountArgs, out: &mut dyn Write) -> Result<i32> {
    let g = if let Some(s) = &args.g6 {
        graph6::decode(s)?
    } else if let Some(path) = &args.file {
        parse_graph_file(&read_input(path)?)?
    } else {
        let spec: ConstructionSpec = serde_json::from_str(args.construct.as_deref().unwrap_or_default())
            .map_err(|e| Error::Parse { line: e.line(), msg: format!("construction spec, column {}: {e}", e.column()) })?;
        build(&spec)?
    };
    let count = count_pattern(&g, &args.pattern);
    match cfg.output.unwrap_or(Output::Plain) {
        Output::Plain => writeln!(out, "{count}")?,
        Output::Csv => {
            writeln!(out, "n,pattern,count")?;
            writeln!(out, "{},{},{count}", g.order(), args.pattern)?;
        }
        Output::Json => {
            let report = CountReport {
                n: g.order(),
                graph6: graph6::encode(&g),
                canonical_form: canonical_form(&g),
                pattern: args.pattern.clone(),
                count,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_search(cfg: &CliConfig, args: &SearchArgs, out: &mut dyn Write) -> Result<i32> {
    if args.engine == Engine::Exhaustive && args.n > cfg.n_cap && !args.force {
        return Err(Error::pre(format!(
            "n = {} is above the advisory cap {} for exhaustive search; pass --force (hard cap {HARD_CAP})",
            args.n, cfg.n_cap
        )));
    }
    let opts = SearchOptions {
        engine: args.engine,
        workers: cfg.workers(),
        budget: args.budget,
        seed: cfg.seed,
        collect_certificates: true,
        prune_bounds: args.prune,
    };
    let (mut result, _) = cfg.cache()?.get_or_compute(args.n, &args.pattern, &args.forbid, &opts)?;
    if args.no_certificates {
        result.certificates.clear();
    }
    match cfg.output.unwrap_or(Output::Json) {
        Output::Json => writeln!(out, "{}", serde_json::to_string_pretty(&result)?)?,
        Output::Plain => {
            writeln!(out, "{}", result.value)?;
            for c in &result.certificates {
                writeln!(out, "{c}")?;
            }
        }
        Output::Csv => {
            writeln!(out, "n,pattern,forbid,engine,value,exhaustive,certificates")?;
            writeln!(
                out,
                "{},\"{}\",\"{}\",{},{},{},{}",
                result.n,
                result.h,
                result.f,
                result.engine,
                result.value,
                result.exhaustive,
                result.certificates.join(" ")
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cfg: &CliConfig, args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if args.n_max > cfg.n_cap && !args.force {
        return Err(Error::pre(format!("--n-max {} is above the advisory cap {}; pass --force", args.n_max, cfg.n_cap)));
    }
    let opts = SuiteOptions {
        n_max: args.n_max,
        heuristic_n_max: args.heuristic_n_max,
        workers: cfg.workers(),
        seed: cfg.seed,
        budget: args.budget,
    };
    let cache_dir = (!cfg.no_cache).then_some(cfg.cache_dir.as_path());
    let harness = Harness::new(cache_dir, opts)?;
    let records = harness.run_suite(&args.filter)?;
    if let Some(path) = &args.json_report {
        write_json(&records, std::fs::File::create(path)?)?;
    }
    if let Some(path) = &args.csv_report {
        write_csv(&records, std::fs::File::create(path)?)?;
    }
    match cfg.output.unwrap_or(Output::Csv) {
        Output::Csv => {
            write_csv(&records, &mut *out)?;
            write!(err, "{}", summary_table(&records))?;
        }
        Output::Json => write_json(&records, &mut *out)?,
        Output::Plain => write!(out, "{}", summary_table(&records))?,
    }
    Ok(if any_mismatch(&records) { EXIT_MISMATCH } else { EXIT_OK })
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph> {
    let text = read_input(path)?;
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() });
    }
    Hypergraph::parse(&text)
}

fn cmd_hyper(cfg: &CliConfig, cmd: &HyperCommand, out: &mut dyn Write) -> Result<i32> {
    let json_out = cfg.output == Some(Output::Json);
    match cmd {
        HyperCommand::Girth { file } => {
            let girth = load_hypergraph(file)?.berge_girth();
            if json_out {
                writeln!(out, "{}", json!({ "girth": girth }))?;
            } else {
                match girth {
                    Some(g) => writeln!(out, "{g}")?,
                    None => writeln!(out, "acyclic")?,
                }
            }
        }
        HyperCommand::Berge { file, pattern, mode } => {
            let mode = match mode {
                ModeArg::Berge => BergeMode::Berge,
                ModeArg::Expansion => BergeMode::Expansion,
            };
            let found = contains_berge(&load_hypergraph(file)?, &BergeQuery { pattern: pattern.clone(), mode });
            if json_out {
                writeln!(out, "{}", json!({ "pattern": pattern, "mode": mode, "contains": found }))?;
            } else {
                writeln!(out, "{found}")?;
            }
        }
        HyperCommand::Place { file, a, b, rule } => {
            let rule = match rule {
                RuleArg::LowestLex => PlacementRule::LowestLex,
                RuleArg::SeededRandom => PlacementRule::SeededRandom(cfg.seed),
            };
            let g = place_bipartite(&load_hypergraph(file)?, *a, *b, rule)?;
            if json_out {
                writeln!(out, "{}", json!({ "n": g.order(), "graph6": graph6::encode(&g) }))?;
            } else {
                writeln!(out, "{}", graph6::encode(&g))?;
            }
        }
        HyperCommand::Gen { n, r, target } => {
            let h = generate_girth5_linear(*n, *r, cfg.seed, *target)?;
            if json_out {
                writeln!(out, "{}", serde_json::to_string(&h)?)?;
            } else {
                write!(out, "{}", h.to_text())?;
            }
        }
    }
    Ok(EXIT_OK)
}
