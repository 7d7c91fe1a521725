//! Command-line front end.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative one, 2 for bad
//! input or an IO failure.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use polyuni_core::enumerate::Method;
use polyuni_core::families::{realize_family, sequence_of, witness_pair, FamilyId, WitnessRecipe};
use polyuni_core::{canonical_form, is_isomorphic, is_polyhedral, DegreeSequence, Graph, Verdict};
use rayon::ThreadPool;
use serde::Serialize;

use crate::cache::Cache;
use crate::dot::to_dot;
use crate::json::FeasibilityJson;
use crate::parallel;
use crate::sweep::{check_cached, sweep, table2, SweepFilter};

/// Largest order `table1` accepts without `--force`.
pub const TABLE1_MAX_P: usize = 11;
/// Largest order `table2` accepts without `--force`.
pub const TABLE2_MAX_P: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "polyuni", version, about = "Unigraphic degree sequences of polyhedral graphs")]
pub struct Cli {
    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Directory holding the result cache.
    #[arg(long, global = true, env = "POLYUNI_CACHE_DIR", default_value = "./.polyuni-cache")]
    pub cache_dir: PathBuf,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Auto,
    Generic,
    Apex,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Generic => Method::Generic,
            MethodArg::Apex => Method::Apex,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Emit {
    Sequence,
    Graph,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Graphicality and the polyhedral necessary conditions, as JSON.
    Check { sequence: String },
    /// All polyhedral realizations as graph6, one per line.
    Enumerate {
        sequence: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Stop after this many distinct realizations.
        #[arg(long)]
        limit: Option<usize>,
        /// Write graph6 here and the JSON summary to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the graphs as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Whether the sequence has exactly one polyhedral realization.
    Unigraphic {
        sequence: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Realizations to look for before stopping; 0 counts them all.
        #[arg(long, default_value_t = 2)]
        limit: usize,
        /// Also write the graphs as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// A named family member, e.g. `nu:p=15,m=3`.
    Family {
        family: String,
        #[arg(long, value_enum, default_value = "sequence")]
        emit: Emit,
        /// Also write the graphs as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Two non-isomorphic polyhedra with one sequence.
    Witness {
        /// A sequence or a family member.
        target: String,
        /// STAR_SPLIT, TRIANGLE_K_DROP, TRIANGLE_STAR_GROW, SIGMA_IJ_MOVE or
        /// CAT_HEAD_SWAP:spine.
        recipe: String,
        /// Also write the graphs as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Unigraphic sequences starting with p-2, p-2 for each order.
    Table1 {
        /// Smallest order swept.
        #[arg(long, default_value_t = 6)]
        p_min: usize,
        /// Largest order swept.
        #[arg(long, default_value_t = 10)]
        p_max: usize,
        /// Allow orders beyond the default budget.
        #[arg(long)]
        force: bool,
    },
    /// Sequences of all polyhedra with two vertices of degree p-2.
    Table2 {
        /// Order of the polyhedra.
        #[arg(long)]
        p: usize,
        /// Also sweep sequences whose largest degree is p-1.
        #[arg(long)]
        any_max_degree: bool,
        /// Allow orders beyond the default budget.
        #[arg(long)]
        force: bool,
    },
}

/// Input or IO failure; maps to exit code 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match dispatch(&cli, &pool, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Heavy work goes through `pool`; the writers stay on this thread.
fn dispatch(cli: &Cli, pool: &ThreadPool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Check { sequence } => check(sequence, out),
        Command::Enumerate { sequence, method, limit, out: file, dot } => {
            enumerate(pool, sequence, (*method).into(), *limit, file.as_ref(), dot.as_ref(), out, err)
        }
        Command::Unigraphic { sequence, method, limit, dot } => {
            let limit = (*limit > 0).then_some(*limit);
            unigraphic(cli, pool, sequence, (*method).into(), limit, dot.as_ref(), out, err)
        }
        Command::Family { family, emit, dot } => family_cmd(family, *emit, dot.as_ref(), out),
        Command::Witness { target, recipe, dot } => witness(target, recipe, dot.as_ref(), out),
        Command::Table1 { p_min, p_max, force } => {
            if *p_min < 4 || p_min > p_max {
                return Err(Failure(format!("need 4 <= p-min <= p-max, got {p_min}..{p_max}")));
            }
            if *p_max > TABLE1_MAX_P && !force {
                return Err(Failure(format!("p-max {p_max} exceeds {TABLE1_MAX_P}; pass --force")));
            }
            let cache = open_cache(cli, err);
            let (report, hits) =
                pool.install(|| sweep(*p_min, *p_max, SweepFilter::TwoApex, Some(2), cache.as_ref()))?;
            writeln!(err, "cache hits: {hits}")?;
            print_json(out, &report)?;
            Ok(0)
        }
        Command::Table2 { p, any_max_degree, force } => {
            if *p < 7 {
                return Err(Failure(format!("table2 needs p >= 7, got {p}")));
            }
            if *p > TABLE2_MAX_P && !force {
                return Err(Failure(format!("p {p} exceeds {TABLE2_MAX_P}; pass --force")));
            }
            let cache = open_cache(cli, err);
            let filter = if *any_max_degree { SweepFilter::TwoOfDegreePMinus2 } else { SweepFilter::TwoApex };
            let (report, hits) = pool.install(|| table2(*p, filter, cache.as_ref()))?;
            writeln!(err, "cache hits: {hits}")?;
            print_json(out, &report)?;
            Ok(if report.closed { 0 } else { 1 })
        }
    }
}

fn open_cache(cli: &Cli, err: &mut dyn Write) -> Option<Cache> {
    if cli.no_cache {
        return None;
    }
    match Cache::open(&cli.cache_dir) {
        Ok(c) => Some(c),
        Err(e) => {
            let _ = writeln!(err, "warning: running without cache, {}: {e}", cli.cache_dir.display());
            None
        }
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn write_dot(path: Option<&PathBuf>, graphs: &[Graph], name: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, to_dot(graphs, name))?;
    }
    Ok(())
}

fn parse_sequence(text: &str) -> Result<DegreeSequence, Failure> {
    Ok(text.parse()?)
}

fn check(text: &str, out: &mut dyn Write) -> Outcome {
    let s = parse_sequence(text)?;
    let r = s.polyhedral_feasible();
    print_json(out, &FeasibilityJson::new(&s, &r))?;
    Ok(if r.graphical && r.polyhedral_necessary { 0 } else { 1 })
}

#[derive(Serialize)]
struct EnumerateSummary {
    sequence: String,
    method: String,
    limit: Option<usize>,
    count: usize,
    truncated: bool,
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    pool: &ThreadPool,
    text: &str,
    method: Method,
    limit: Option<usize>,
    file: Option<&PathBuf>,
    dot: Option<&PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let s = parse_sequence(text)?;
    let (resolved, found) = pool.install(|| parallel::enumerate(&s, method, limit))?;
    let codes = found.codes();
    let mut lines = String::new();
    for c in &codes {
        lines.push_str(c.as_str());
        lines.push('\n');
    }
    let summary = EnumerateSummary {
        sequence: s.to_string(),
        method: resolved.name().to_string(),
        limit,
        count: codes.len(),
        truncated: limit.is_some_and(|l| codes.len() >= l),
    };
    let summary = serde_json::to_string(&summary)?;
    match file {
        Some(path) => {
            fs::write(path, lines)?;
            writeln!(out, "{summary}")?;
        }
        None => {
            out.write_all(lines.as_bytes())?;
            writeln!(err, "{summary}")?;
        }
    }
    write_dot(dot, &found.into_graphs(), "realization")?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn unigraphic(
    cli: &Cli,
    pool: &ThreadPool,
    text: &str,
    method: Method,
    limit: Option<usize>,
    dot: Option<&PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let s = parse_sequence(text)?;
    let cache = open_cache(cli, err);
    let (report, _) = pool.install(|| check_cached(&s, method, limit, cache.as_ref()))?;
    print_json(out, &report)?;
    let graphs = report.to_report()?.witnesses;
    write_dot(dot, &graphs, "witness")?;
    Ok(if report.verdict() == Some(Verdict::Unigraphic) { 0 } else { 1 })
}

/// Caret form once the plain list gets long.
fn sequence_text(s: &DegreeSequence) -> String {
    if s.len() > 10 {
        s.to_caret_string()
    } else {
        s.to_string()
    }
}

fn family_cmd(text: &str, emit: Emit, dot: Option<&PathBuf>, out: &mut dyn Write) -> Outcome {
    let id: FamilyId = text.parse()?;
    if matches!(emit, Emit::Sequence | Emit::Both) {
        writeln!(out, "{}", sequence_text(&sequence_of(&id)?))?;
    }
    if matches!(emit, Emit::Graph | Emit::Both) || dot.is_some() {
        let g = realize_family(&id)?;
        if !matches!(emit, Emit::Sequence) {
            writeln!(out, "{}", canonical_form(&g))?;
        }
        write_dot(dot, &[g], "family")?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct WitnessJson {
    sequence: String,
    recipe: String,
    first: String,
    second: String,
    same_sequence: bool,
    both_polyhedral: bool,
    isomorphic: bool,
}

fn witness(target: &str, recipe_text: &str, dot: Option<&PathBuf>, out: &mut dyn Write) -> Outcome {
    let s = if target.contains('=') { sequence_of(&target.parse::<FamilyId>()?)? } else { parse_sequence(target)? };
    let recipe =
        WitnessRecipe::from_name(recipe_text).ok_or_else(|| Failure(format!("unknown recipe `{recipe_text}`")))?;
    let (g, h) = match witness_pair(&s, &recipe) {
        Ok(pair) => pair,
        Err(e @ polyuni_core::Error::RecipeNotApplicable(_)) => {
            writeln!(out, "{e}")?;
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let report = WitnessJson {
        sequence: s.to_string(),
        recipe: recipe_text.to_ascii_uppercase(),
        first: canonical_form(&g).to_string(),
        second: canonical_form(&h).to_string(),
        same_sequence: DegreeSequence::of_graph(&g) == DegreeSequence::of_graph(&h),
        both_polyhedral: is_polyhedral(&g) && is_polyhedral(&h),
        isomorphic: is_isomorphic(&g, &h).is_some(),
    };
    writeln!(out, "{}", report.first)?;
    writeln!(out, "{}", report.second)?;
    writeln!(out, "{}", serde_json::to_string(&report)?)?;
    write_dot(dot, &[g, h], "witness")?;
    Ok(if report.isomorphic { 1 } else { 0 })
}

/// Parses `args` (including the program name) and runs; clap's own usage
/// errors also exit with 2.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            }
        }
    }
}
