//! `berge` — construct extremal hypergraphs, check Berge containment,
//! evaluate Turán bound formulas, run exhaustive searches, and drive the
//! cross-verification suites.
//!
//! Exit codes: 0 success (a negative containment answer is still success),
//! 1 verification suite with failing rows, 2 usage or parse errors,
//! 3 runtime errors (I/O, malformed input files).

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use berge_turan::berge::{contains, BergeWitness};
use berge_turan::bounds::{eval_bound, parse_params, THEOREM_IDS};
use berge_turan::constructions::{self, ConstructionReport};
use berge_turan::family::FamilySpec;
use berge_turan::hypergraph::Hypergraph;
use berge_turan::search::{local_lower_bound, turan_connected, turan_exact, SearchOptions};
use berge_turan::suites::{verify_suite, GridSpec, Verdict, SUITE_IDS};

#[derive(Parser)]
#[command(
    name = "berge",
    version,
    about = "Berge hypergraph containment, extremal constructions, Turán bounds, and exhaustive search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an extremal construction with its predicted edge count.
    Construct(ConstructArgs),
    /// Decide Berge containment for a hypergraph read from a file.
    Check(CheckArgs),
    /// Evaluate a closed-form bound by theorem id.
    Bound(BoundArgs),
    /// Exact (or seeded lower-bound) Turán numbers by exhaustive search.
    Turan(TuranArgs),
    /// Run a cross-verification suite and emit one JSON row per case.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// One of: hstar, hhat, htilde, clique-blocks, partition-regular.
    #[arg(long)]
    family: String,
    /// Named integers, e.g. n=9,l=2,k=2,r=3 (htilde paths as l1=3,l2=3).
    #[arg(long, default_value = "")]
    params: String,
    /// Also write the bare hypergraph (interchange format) to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Hypergraph file in the interchange format {"n", "r", "edges"}.
    #[arg(long = "in")]
    input: PathBuf,
    /// Forbidden family, e.g. "P3+2S2+M2".
    #[arg(long)]
    forest: String,
    /// Include the witness in the output when containment holds.
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct BoundArgs {
    /// Theorem id, e.g. gkl-path-i (see --theorem help for the list).
    #[arg(long, help = theorem_help())]
    theorem: String,
    /// Named integers, e.g. n=8,l=4,r=3.
    #[arg(long, default_value = "")]
    params: String,
}

#[derive(Args)]
struct TuranArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Forbidden family, e.g. "S2" or "P3+P3".
    #[arg(long)]
    forest: String,
    /// Restrict to connected hypergraphs.
    #[arg(long)]
    connected: bool,
    /// Randomized greedy + hill climbing instead of exhaustive search
    /// (always reports a lower bound only).
    #[arg(long)]
    local: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Wall-clock limit in seconds; exhaustive runs degrade to lower bounds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Hypergraph file providing an initial lower bound (must be free).
    #[arg(long)]
    seed_construction: Option<PathBuf>,
    /// Disable the first-edge symmetry fixing.
    #[arg(long)]
    no_symmetry: bool,
    /// Enable the isomorphism-digest subtree memo (trades memory for time).
    #[arg(long)]
    iso_prune: bool,
    /// RNG seed for --local.
    #[arg(long, default_value_t = 0x5eed_2024)]
    rng_seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: constructions, lemma3.1, bounds-vs-search, thm2.7-desk.
    #[arg(long)]
    suite: String,
    /// Grid override, e.g. "n=5..8,r=2..3,count=100".
    #[arg(long)]
    grid: Option<String>,
    /// Also write the JSON rows to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Seed for randomized suites (rides into the grid as `seed`).
    #[arg(long, default_value_t = 0x5eed_2024)]
    rng_seed: u64,
}

fn theorem_help() -> String {
    format!("Theorem id, one of: {}", THEOREM_IDS.join(", "))
}

#[derive(Serialize, Deserialize)]
struct CheckOutput {
    contains: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<BergeWitness>,
}

enum Failure {
    Usage(String),
    Runtime(String),
    FailingRows(usize),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Runtime(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
            Failure::FailingRows(count) => {
                eprintln!("error: {count} failing rows");
                ExitCode::from(1)
            }
        }
    }
}

fn emit<T: Serialize>(doc: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(doc).map_err(|e| Failure::Runtime(e.to_string()))?;
    println!("{line}");
    Ok(())
}

fn parse_forest(text: &str) -> Result<FamilySpec, Failure> {
    FamilySpec::parse(text).map_err(|e| Failure::Usage(format!("--forest: {e}")))
}

fn read_hypergraph(path: &PathBuf) -> Result<Hypergraph, Failure> {
    let raw = fs::read_to_string(path)
        .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn require(params: &BTreeMap<String, i64>, key: &str) -> Result<usize, Failure> {
    match params.get(key) {
        Some(&v) if v >= 0 => Ok(v as usize),
        Some(&v) => Err(Failure::Usage(format!("parameter {key}={v} must be nonnegative"))),
        None => Err(Failure::Usage(format!("missing parameter {key}"))),
    }
}

fn lengths_from(params: &BTreeMap<String, i64>) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for i in 1.. {
        match params.get(&format!("l{i}")) {
            Some(&v) if v >= 1 => out.push(v as usize),
            Some(&v) => return Err(Failure::Usage(format!("parameter l{i}={v} must be >= 1"))),
            None => break,
        }
    }
    if out.is_empty() {
        return Err(Failure::Usage("expected path lengths l1=...,l2=...".into()));
    }
    Ok(out)
}

fn run_construct(args: &ConstructArgs) -> Result<(), Failure> {
    let params = parse_params(&args.params).map_err(Failure::Usage)?;
    let report: ConstructionReport = match args.family.as_str() {
        "hstar" => constructions::hstar(
            require(&params, "n")?,
            require(&params, "l")?,
            require(&params, "k")?,
            require(&params, "r")?,
        ),
        "hhat" => constructions::hhat(
            require(&params, "n")?,
            require(&params, "l1")?,
            require(&params, "l2")?,
            require(&params, "k")?,
            require(&params, "r")?,
        ),
        "htilde" => constructions::htilde(
            require(&params, "n")?,
            &lengths_from(&params)?,
            require(&params, "r")?,
        ),
        "clique-blocks" => constructions::clique_blocks(
            require(&params, "n")?,
            require(&params, "l")?,
            require(&params, "r")?,
        ),
        "partition-regular" => constructions::partition_regular(
            require(&params, "n")?,
            require(&params, "r")?,
            require(&params, "d")?,
        ),
        other => {
            return Err(Failure::Usage(format!(
                "unknown family {other:?} (expected hstar, hhat, htilde, clique-blocks, partition-regular)"
            )))
        }
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    if let Some(path) = &args.out {
        let json = serde_json::to_string(&report.hypergraph)
            .map_err(|e| Failure::Runtime(e.to_string()))?;
        fs::write(path, json + "\n")
            .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    }
    emit(&report)
}

fn run_check(args: &CheckArgs) -> Result<(), Failure> {
    let forest = parse_forest(&args.forest)?;
    let h = read_hypergraph(&args.input)?;
    let witness = contains(&h, &forest);
    let output = CheckOutput {
        contains: witness.is_some(),
        witness: if args.witness { witness } else { None },
    };
    emit(&output)
}

fn run_bound(args: &BoundArgs) -> Result<(), Failure> {
    let params = parse_params(&args.params).map_err(Failure::Usage)?;
    let result = eval_bound(&args.theorem, &params).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(&result)
}

fn run_turan(args: &TuranArgs) -> Result<(), Failure> {
    let forest = parse_forest(&args.forest)?;
    if args.time_limit.is_some_and(|t| !t.is_finite() || t < 0.0) {
        return Err(Failure::Usage("--time-limit must be a nonnegative number".into()));
    }
    let seed = match &args.seed_construction {
        Some(path) => Some(read_hypergraph(path)?),
        None => None,
    };
    let opts = SearchOptions {
        workers: args.workers,
        time_limit: args.time_limit.map(Duration::from_secs_f64),
        symmetry_fixing: !args.no_symmetry,
        iso_hash_pruning: args.iso_prune,
        seed,
        rng_seed: args.rng_seed,
        ..Default::default()
    };
    let run = if args.local {
        if args.connected {
            return Err(Failure::Usage(
                "--local does not support --connected".into(),
            ));
        }
        local_lower_bound(args.n, args.r, &forest, &opts)
    } else if args.connected {
        turan_connected(args.n, args.r, &forest, &opts)
    } else {
        turan_exact(args.n, args.r, &forest, &opts)
    };
    let outcome = run.map_err(|e| Failure::Usage(e.to_string()))?;
    eprintln!("wall_ms={}", outcome.stats.wall.as_millis());
    emit(&outcome)
}

fn run_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let mut grid = match &args.grid {
        Some(text) => GridSpec::parse(text).map_err(Failure::Usage)?,
        None => GridSpec::default(),
    };
    // The RNG seed rides in the grid; an explicit grid seed wins.
    if !grid.contains_key("seed") {
        let mut text = grid.to_string();
        if !text.is_empty() {
            text.push(',');
        }
        text.push_str(&format!("seed={}", args.rng_seed));
        grid = GridSpec::parse(&text).map_err(Failure::Usage)?;
    }
    let rows = verify_suite(&args.suite, &grid)
        .map_err(|e| Failure::Usage(format!("{e} (expected one of: {})", SUITE_IDS.join(", "))))?;
    let mut sink: Option<fs::File> = match &args.report {
        Some(path) => Some(
            fs::File::create(path)
                .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    let (mut pass, mut fail, mut reported) = (0usize, 0usize, 0usize);
    for row in &rows {
        let line = serde_json::to_string(row).map_err(|e| Failure::Runtime(e.to_string()))?;
        println!("{line}");
        if let Some(file) = sink.as_mut() {
            writeln!(file, "{line}").map_err(|e| Failure::Runtime(e.to_string()))?;
        }
        match row.verdict {
            Verdict::Pass => pass += 1,
            Verdict::Fail => fail += 1,
            Verdict::Report => reported += 1,
        }
    }
    eprintln!(
        "suite {}: {} rows ({pass} pass, {fail} fail, {reported} reported)",
        args.suite,
        rows.len()
    );
    if fail > 0 {
        return Err(Failure::FailingRows(fail));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(args) => run_construct(args),
        Command::Check(args) => run_check(args),
        Command::Bound(args) => run_bound(args),
        Command::Turan(args) => run_turan(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => failure.exit(),
    }
}
