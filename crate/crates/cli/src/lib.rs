//! Command-line front end: `construct`, `analyze`, `verify`, `search`.
//!
//! Exit codes: 0 success (or a passing verification), 1 violation,
//! 2 inconclusive or incomplete, 64 usage error, 65 malformed input,
//! 74 I/O failure.

pub mod format;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use binmat::constructions::{Family, FamilyParams, FamilySpec};
use binmat::search::{
    max_size, max_size_complement, theorem_bound, verify_theorem, ConstraintSet, SearchOptions,
    Theorem, TheoremParams, VerifyOutcome, COMPLEMENT_WINDOW,
};
use binmat::BinaryMatroid;
use clap::{Args, Parser, Subcommand};

use report::{AnalysisReport, SearchJson, VerifyJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_IO: i32 = 74;

/// Default budget for `verify`, in seconds.
pub const DEFAULT_BUDGET: u64 = 600;
/// Default budget for `verify --deep`, in seconds.
pub const DEEP_BUDGET: u64 = 6 * 3600;

#[derive(Debug, Parser)]
#[command(name = "binmat", version, about = "Simple binary matroids as point sets of PG(r-1,2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named family and write it in the matroid text format.
    Construct(ConstructArgs),
    /// Print the invariants of a matroid file.
    Analyze(AnalyzeArgs),
    /// Check an extremal bound by exhaustive search at one rank.
    Verify(VerifyArgs),
    /// Find the largest point set satisfying the given constraints.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// pg, ag, bb, circuit, extremal-odd-girth or extremal-gs.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Worker threads.
    #[arg(long, env = "BINMAT_THREADS", default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// main, bose-burton or gs.
    pub theorem: String,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: usize,
    /// Allow instances expected to run for hours.
    #[arg(long)]
    pub deep: bool,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub min_odd_girth: Option<usize>,
    /// Require critical number at least 2.
    #[arg(long)]
    pub forbid_affine: bool,
    #[arg(long)]
    pub min_critical: Option<usize>,
    /// Forbid PG(n-1,2)-restrictions for this n.
    #[arg(long, value_name = "N")]
    pub pg_free: Option<usize>,
    #[arg(long)]
    pub full_rank: bool,
    /// Enumerate complements instead of point sets (needs --pg-free).
    #[arg(long)]
    pub complement: bool,
    /// Largest complement size tried by --complement.
    #[arg(long, default_value_t = COMPLEMENT_WINDOW)]
    pub max_blocker: usize,
    /// Write the witness to this file.
    #[arg(long)]
    pub emit_witness: Option<PathBuf>,
    #[command(flatten)]
    pub run: RunArgs,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: format!("{}: {e}", path.display()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Instances that are expected to take hours and so need `--deep`.
pub fn is_deep_instance(r: usize, bound: usize) -> bool {
    r >= 7 || (r == 6 && bound >= 16)
}

fn options(run: &RunArgs, default_budget: Option<u64>) -> Result<SearchOptions, Failure> {
    if run.threads == 0 {
        return Err(Failure::usage("--threads must be at least 1"));
    }
    Ok(SearchOptions {
        budget: run.budget.or(default_budget).map(Duration::from_secs),
        threads: run.threads,
        pruning: true,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn print_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("reports serialise");
    writeln!(out, "{text}").map_err(|e| Failure::io(Path::new("<stdout>"), e))
}

pub fn read_matroid(path: &Path) -> Result<BinaryMatroid, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    format::parse_matroid(&text).map_err(|e| Failure {
        code: EXIT_DATA,
        message: format!("{}: {e}", path.display()),
    })
}

fn construct(a: &ConstructArgs, out: &mut dyn Write) -> Outcome {
    let family: Family = a.family.parse().map_err(Failure::usage)?;
    let params = FamilyParams {
        r: a.r,
        c: a.c,
        k: a.k,
        n: a.n,
    };
    let spec = FamilySpec::from_params(family, params).map_err(Failure::usage)?;
    let m = spec.build().map_err(|e| Failure::usage(format!("{spec}: {e}")))?;
    let text = format::write_matroid(&m);
    let io = |e| Failure::io(Path::new("<stdout>"), e);
    match &a.out {
        Some(path) => {
            write_file(path, &text)?;
            writeln!(out, "{spec}: rank {}, size {}", m.ambient_rank(), m.len()).map_err(io)?;
        }
        None => out.write_all(text.as_bytes()).map_err(io)?,
    }
    Ok(EXIT_OK)
}

fn analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> Outcome {
    let m = read_matroid(&a.path)?;
    let rep = AnalysisReport::new(&m);
    if a.json {
        print_json(out, &rep)?;
    } else {
        out.write_all(rep.to_table().as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e))?;
    }
    Ok(EXIT_OK)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let theorem: Theorem = a.theorem.parse().map_err(Failure::usage)?;
    let params = TheoremParams {
        k: a.k,
        n: a.n,
        r: a.r,
    };
    let (bound, _) = theorem_bound(theorem, params).map_err(Failure::usage)?;
    if is_deep_instance(a.r, bound) && !a.deep {
        return Err(Failure::usage(format!(
            "{theorem} at r = {} (bound {bound}) can take hours; pass --deep to run it",
            a.r
        )));
    }
    let default_budget = if a.deep { DEEP_BUDGET } else { DEFAULT_BUDGET };
    let opts = options(&a.run, Some(default_budget))?;
    let rep = verify_theorem(theorem, params, &opts).map_err(Failure::usage)?;
    print_json(out, &VerifyJson::from(&rep))?;
    Ok(exit_code(rep.outcome))
}

pub fn exit_code(outcome: VerifyOutcome) -> i32 {
    match outcome {
        VerifyOutcome::Pass => EXIT_OK,
        VerifyOutcome::Violation => EXIT_VIOLATION,
        VerifyOutcome::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn search(a: &SearchArgs, out: &mut dyn Write) -> Outcome {
    let constraints = ConstraintSet {
        min_odd_girth: a.min_odd_girth,
        forbid_affine: a.forbid_affine,
        min_critical: a.min_critical,
        pg_free_order: a.pg_free,
        full_rank: a.full_rank,
    };
    constraints.validate(a.r).map_err(Failure::usage)?;
    let opts = options(&a.run, None)?;
    let rep = if a.complement {
        max_size_complement(a.r, &constraints, a.max_blocker, &opts)
    } else {
        max_size(a.r, &constraints, &opts)
    }
    .map_err(Failure::usage)?;
    if let Some(path) = &a.emit_witness {
        write_file(path, &format::write_matroid(&rep.witness))?;
    }
    print_json(out, &SearchJson::from(&rep))?;
    Ok(if rep.exhaustive() {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    })
}

/// Runs a parsed command, writing its normal output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Analyze(a) => analyze(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Search(a) => search(a, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("binmat").chain(args.iter().copied())).unwrap()
    }

    fn run_capture(args: &[&str]) -> (Outcome, String) {
        let mut buf = Vec::new();
        let res = run(&parse(args), &mut buf);
        (res, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn outcome_codes() {
        assert_eq!(exit_code(VerifyOutcome::Pass), 0);
        assert_eq!(exit_code(VerifyOutcome::Violation), 1);
        assert_eq!(exit_code(VerifyOutcome::Inconclusive), 2);
    }

    #[test]
    fn deep_gate() {
        assert!(!is_deep_instance(5, 24));
        assert!(!is_deep_instance(6, 8));
        assert!(is_deep_instance(6, 20));
        assert!(is_deep_instance(7, 14));
    }

    #[test]
    fn construct_to_stdout() {
        let (res, text) = run_capture(&["construct", "--family", "circuit", "--k", "3"]);
        assert_eq!(res.unwrap(), EXIT_OK);
        assert_eq!(text, "rank 2\n01\n10\n11\n");
    }

    #[test]
    fn missing_parameter_is_usage() {
        let (res, _) = run_capture(&["construct", "--family", "bb", "--r", "4"]);
        assert_eq!(res.unwrap_err().code, EXIT_USAGE);
        let (res, _) = run_capture(&["verify", "gs", "--n", "3", "--r", "4"]);
        assert_eq!(res.unwrap_err().code, EXIT_USAGE);
    }

    #[test]
    fn deep_instances_need_the_flag() {
        let (res, _) = run_capture(&["verify", "main", "--k", "5", "--r", "6"]);
        let f = res.unwrap_err();
        assert_eq!(f.code, EXIT_USAGE);
        assert!(f.message.contains("--deep"));
    }

    #[test]
    fn empty_search_is_usage() {
        let (res, _) = run_capture(&["search", "--r", "4"]);
        assert_eq!(res.unwrap_err().code, EXIT_USAGE);
    }
}
