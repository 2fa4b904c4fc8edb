use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rclattice::catalog::{self, BasicBlockId};
use rclattice::census::CensusQuery;
use rclattice::order::{parse_dot, to_dot};
use rclattice::report::{self, parse_range, Mode, Query, VerifyPlan};
use rclattice::{basic_block_of, maximal_chain_rep, AdjunctRep, EnumerationTask, Error, Lattice, Oracle};

#[derive(Parser)]
#[command(name = "rclattice", version, about = "Count, build and classify RC-lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of closed-form and/or enumerated counts.
    Census(CensusArgs),
    /// Check every closed form against enumeration.
    Verify(VerifyArgs),
    /// Build a lattice from an adjunct representation (JSON).
    Build(BuildArgs),
    /// Report the invariants of a lattice given as JSON or DOT.
    Classify(ClassifyArgs),
    /// Export the thirty basic blocks.
    Catalog(CatalogArgs),
    /// List every class of a size and nullity, one JSON object per line.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct Run {
    /// Worker threads for enumeration.
    #[arg(long)]
    jobs: Option<usize>,
    /// Enumerate above the size ceiling.
    #[arg(long)]
    force: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeFormat {
    Json,
    Dot,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Basic-block height (r=5, k=3 only).
    #[arg(long)]
    h: Option<usize>,
    /// Sizes, as `A..B` (inclusive) or `A`.
    #[arg(long, value_parser = range)]
    n: Option<std::ops::RangeInclusive<usize>>,
    /// Count maximal blocks of one catalog class instead.
    #[arg(long, value_parser = block_id)]
    class: Option<BasicBlockId>,
    /// Block sizes for `--class`.
    #[arg(long, value_parser = range)]
    j: Option<std::ops::RangeInclusive<usize>>,
    #[arg(long, value_enum, default_value = "formula")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[command(flatten)]
    run: Run,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = range, default_value = "4..11")]
    n: std::ops::RangeInclusive<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_parser = block_id)]
    class: Option<BasicBlockId>,
    #[arg(long, value_parser = range)]
    j: Option<std::ops::RangeInclusive<usize>>,
    #[command(flatten)]
    run: Run,
}

#[derive(Args)]
struct BuildArgs {
    /// Adjunct representation file; `-` reads standard input.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: LatticeFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Lattice JSON or DOT file; `-` reads standard input.
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: LatticeFormat,
    /// Write `catalog.json` and `catalog.dot` into this directory.
    #[arg(long)]
    dir: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long, value_parser = block_id)]
    class: Option<BasicBlockId>,
    /// Only maximal blocks.
    #[arg(long)]
    blocks: bool,
    #[command(flatten)]
    run: Run,
}

fn range(s: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    parse_range(s).map_err(|e| e.to_string())
}

fn block_id(s: &str) -> Result<BasicBlockId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Census(args) => census(args),
        Command::Verify(args) => verify(args),
        Command::Build(args) => build(args),
        Command::Classify(args) => classify(args),
        Command::Catalog(args) => export_catalog(args),
        Command::Enumerate(args) => enumerate(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn oracle(run: &Run) -> Result<Oracle, Failure> {
    let oracle = Oracle::from_env()?;
    Ok(match run.jobs {
        Some(jobs) => oracle.with_jobs(jobs),
        None => oracle,
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        Ok(std::io::read_to_string(std::io::stdin())?)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn census(args: CensusArgs) -> Outcome {
    let queries: Vec<Query> = match args.class {
        Some(id) => {
            let j = args.j.unwrap_or(id.min_size()..=id.min_size() + 4);
            j.map(|j| Query::class(id, j)).collect()
        }
        None => {
            let (Some(r), Some(k)) = (args.r, args.k) else {
                return Err(Failure::Usage("census needs --r and --k, or --class".into()));
            };
            CensusQuery::check_class(r, k, args.h)?;
            let min = CensusQuery::min_n(r, k);
            let n = args.n.unwrap_or(min..=min + 8);
            n.filter(|&n| n >= min).map(|n| Query::lattices(n, r, k, args.h)).collect()
        }
    };
    let mode = match args.mode {
        ModeArg::Formula => Mode::Formula,
        ModeArg::Oracle => Mode::Oracle,
        ModeArg::Both => Mode::Both,
    };
    let rows = report::census_table(&queries, mode, &oracle(&args.run)?, args.run.force)?;
    let text = match args.format {
        TableFormat::Csv => report::to_csv(&rows),
        TableFormat::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
    };
    emit(args.run.out.as_deref(), &text)?;
    Ok(0)
}

fn verify(args: VerifyArgs) -> Outcome {
    let plan = VerifyPlan { n: args.n, r: args.r, k: args.k, class: args.class, j: args.j, force: args.run.force };
    let report = report::verify(&oracle(&args.run)?, &plan)?;
    emit(args.run.out.as_deref(), &(report.to_json() + "\n"))?;
    for c in report.mismatches() {
        let q = c.query;
        eprintln!("mismatch: {:?} n={} r={} k={} h={:?}: formula {} oracle {}", q.scope, q.n, q.r, q.k, q.h, c.formula, c.oracle);
    }
    Ok(report.exit_code() as u8)
}

fn lattice_text(l: &Lattice, format: LatticeFormat, name: &str) -> String {
    match format {
        LatticeFormat::Json => l.to_json() + "\n",
        LatticeFormat::Dot => to_dot(l, name),
    }
}

fn build(args: BuildArgs) -> Outcome {
    let rep = AdjunctRep::from_json(&read_input(&args.input)?)?;
    let lattice = rep.build()?;
    emit(args.out.as_deref(), &lattice_text(&lattice, args.format, "lattice"))?;
    Ok(0)
}

fn parse_lattice(text: &str) -> Result<Lattice, Error> {
    if text.trim_start().starts_with('{') {
        Lattice::from_json(text)
    } else {
        parse_dot(text)
    }
}

fn classify(args: ClassifyArgs) -> Outcome {
    let text = read_input(&args.input)?;
    let result = match parse_lattice(&text) {
        Err(Error::NotLattice) => json!({ "lattice": false, "result": "not a lattice" }),
        Err(e) => return Err(e.into()),
        Ok(l) if !l.is_lattice() => json!({ "lattice": false, "result": "not a lattice", "n": l.size() }),
        Ok(l) => {
            let reducibles = l.reducible_elements()?;
            let rc = l.is_rc()?;
            let mut value = json!({
                "lattice": true,
                "n": l.size(),
                "r": reducibles.len(),
                "k": l.nullity()?,
                "is_rc": rc,
                "reducibles": reducibles,
            });
            if rc {
                let block = basic_block_of(&l)?.block;
                value["h"] = json!(block.height());
                value["block_id"] = json!(catalog::identify(&l).ok().flatten().map(|id| id.to_string()));
                value["rep"] = serde_json::to_value(maximal_chain_rep(&l)?).expect("rep serializes");
                value["basic_block_dot"] = json!(to_dot(&block, "basic_block"));
            }
            value
        }
    };
    emit(args.out.as_deref(), &(serde_json::to_string_pretty(&result).expect("serializes") + "\n"))?;
    Ok(0)
}

fn catalog_json() -> String {
    let entries: Vec<_> = catalog::catalog()
        .iter()
        .map(|e| {
            json!({
                "id": e.id.to_string(),
                "height": e.height,
                "dual_of": e.dual_of.to_string(),
                "rep": e.rep,
                "lattice": serde_json::from_str::<serde_json::Value>(&e.lattice.to_json()).expect("valid JSON"),
            })
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("serializes") + "\n"
}

fn export_catalog(args: CatalogArgs) -> Outcome {
    if let Some(dir) = &args.dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("catalog.json"), catalog_json())?;
        fs::write(dir.join("catalog.dot"), catalog::catalog_dot())?;
        return Ok(0);
    }
    let text = match args.format {
        LatticeFormat::Json => catalog_json(),
        LatticeFormat::Dot => catalog::catalog_dot(),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

fn enumerate(args: EnumerateArgs) -> Outcome {
    let mut task = EnumerationTask::new(args.n, args.k);
    task.r = args.r;
    task.h = args.h;
    task.block = args.class;
    task.blocks_only = args.blocks;
    task.force = args.run.force;
    let mut text = String::new();
    for c in oracle(&args.run)?.enumerate(&task)? {
        let mut line = serde_json::to_value(&c).expect("serializes");
        line["lattice"] = serde_json::from_str(&c.lattice.to_json()).expect("valid JSON");
        text.push_str(&line.to_string());
        text.push('\n');
    }
    emit(args.run.out.as_deref(), &text)?;
    Ok(0)
}
