//! `tk`: embed, count, and enumerate oriented patterns in tournaments, dump
//! the exception catalog, and run the verification sweeps.
//!
//! Vertices are printed 1-based to match the catalog labels; the `t <n>
//! <bits>` serialization is 0-based and bit-exact.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use tourneykit::verify::{self, BuildingLemma, VerificationReport};
use tourneykit::{enumerate, export, parse_cycle_type, parse_path_type, search, Tournament};

#[derive(Parser)]
#[command(
    name = "tk",
    version,
    about = "oriented paths and cycles in tournaments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for one pattern embedding.
    Embed(EmbedArgs),
    /// Print the origin set of a path pattern.
    Origins(OriginsArgs),
    /// Count embeddings of a path pattern.
    Count(CountArgs),
    /// Enumerate tournaments of one order, one per isomorphism class.
    Enum(EnumArgs),
    /// Print the exception catalog as JSON.
    Catalog(CatalogArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Print the canonical form of a tournament.
    Canon(TournamentArg),
}

#[derive(Args)]
struct TournamentArg {
    /// Tournament: a `t <n> <bits>` literal or a path to a file holding one.
    #[arg(long)]
    tournament: String,
}

impl TournamentArg {
    fn load(&self) -> Result<Tournament> {
        let text = if self.tournament.trim_start().starts_with("t ") {
            self.tournament.clone()
        } else {
            std::fs::read_to_string(&self.tournament)
                .with_context(|| format!("reading {:?}", self.tournament))?
        };
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| anyhow!("no tournament line found"))?;
        Ok(Tournament::parse(line)?)
    }
}

#[derive(Args)]
struct EmbedArgs {
    #[command(flatten)]
    tournament: TournamentArg,
    /// Path pattern, e.g. "+(1,2)".
    #[arg(long, conflicts_with = "cycle")]
    path: Option<String>,
    /// Cycle pattern, e.g. "(2,1)".
    #[arg(long)]
    cycle: Option<String>,
    /// Restrict the origin (1-based label; paths only).
    #[arg(long)]
    origin: Option<usize>,
    /// Forbid an end vertex (1-based label; paths only).
    #[arg(long)]
    forbid_end: Option<usize>,
    /// Use the split-based Hamiltonian cycle search.
    #[arg(long)]
    guided: bool,
}

#[derive(Args)]
struct OriginsArgs {
    #[command(flatten)]
    tournament: TournamentArg,
    #[arg(long)]
    path: String,
    /// Allow patterns shorter than the tournament.
    #[arg(long)]
    sub: bool,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    tournament: TournamentArg,
    #[arg(long)]
    path: String,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    order: usize,
    /// Print only the class count.
    #[arg(long)]
    count_only: bool,
    /// Write the stream to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Raise the order cap from 8 to 9.
    #[arg(long)]
    deep: bool,
}

#[derive(Args)]
struct CatalogArgs {
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: catalog, thm2.1, building:2.10 .. building:2.13,
    /// small-lemmas, reversal, corollary.
    #[arg(long)]
    check: String,
    /// Largest tournament order swept (where applicable).
    #[arg(long)]
    max_order: Option<usize>,
    /// Extend the sweeps to order 8 (or set TK_DEEP=1).
    #[arg(long)]
    deep: bool,
    /// Worker threads for the sweep.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// RNG seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the canonical JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success itself
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Canon(args) => {
            let t = args.load()?;
            println!("{}", t.canonical_form().to_line());
        }
        Command::Embed(args) => {
            let t = args.tournament.load()?;
            if let Some(ctext) = &args.cycle {
                let c = parse_cycle_type(ctext)?;
                let found = if args.guided && !c.is_directed() && c.order() == t.order() {
                    search::proof_guided_cycle_embedding(&t, &c)
                } else {
                    search::find_cycle_embedding(&t, &c)
                };
                match found {
                    Some(e) => println!("{}", labels(&e.vertices)),
                    None => println!("ABSENT"),
                }
            } else if let Some(ptext) = &args.path {
                let p = parse_path_type(ptext)?;
                let mut c = search::SearchConstraints::default();
                if let Some(o) = args.origin {
                    ensure_label(o, t.order())?;
                    c.required_origin = Some(tourneykit::VertexSet::single(o - 1));
                }
                if let Some(f) = args.forbid_end {
                    ensure_label(f, t.order())?;
                    c.forbidden_end = Some(tourneykit::VertexSet::single(f - 1));
                }
                match search::find_path_embedding(&t, &p, &c) {
                    Some(e) => println!("{}", labels(&e.vertices)),
                    None => println!("ABSENT"),
                }
            } else {
                bail!("embed needs --path or --cycle");
            }
        }
        Command::Origins(args) => {
            let t = args.tournament.load()?;
            let p = parse_path_type(&args.path)?;
            let set = search::origins(&t, &p, args.sub);
            let items: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
            println!("{{{}}}", items.join(","));
        }
        Command::Count(args) => {
            let t = args.tournament.load()?;
            let p = parse_path_type(&args.path)?;
            println!("{}", search::count_path_embeddings(&t, &p));
        }
        Command::Enum(args) => {
            let reps = enumerate::tournaments_of_order(args.order, args.deep)?;
            if args.count_only {
                emit(&args.out, format!("{}\n", reps.len()))?;
            } else {
                let mut s = String::new();
                for t in &reps {
                    s.push_str(&t.to_line());
                    s.push('\n');
                }
                emit(&args.out, s)?;
            }
        }
        Command::Catalog(args) => {
            emit(&args.out, export::catalog_json())?;
        }
        Command::Verify(args) => {
            let deep = args.deep || std::env::var("TK_DEEP").is_ok_and(|v| v == "1");
            let rep = dispatch_verify(&args, deep)?;
            if let Some(path) = &args.report {
                std::fs::write(path, rep.to_canonical_json())
                    .with_context(|| format!("writing {path:?}"))?;
            }
            println!(
                "{}: {} ({} instances, {} violations, {} found-not-listed, {} listed-not-found) in {} ms",
                rep.check,
                rep.status,
                rep.instances,
                rep.violations.len(),
                rep.found_not_listed.len(),
                rep.listed_not_found.len(),
                rep.wall_time_ms
            );
            for line in rep.violations.iter().take(20) {
                println!("  violation: {line}");
            }
            for line in &rep.found_not_listed {
                println!("  found-not-listed: {line}");
            }
            for line in &rep.listed_not_found {
                println!("  listed-not-found: {line}");
            }
            for line in &rep.notes {
                println!("  note: {line}");
            }
            if !rep.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dispatch_verify(args: &VerifyArgs, deep: bool) -> Result<VerificationReport> {
    let jobs = args.jobs.max(1);
    let default_order = if deep { 8 } else { 7 };
    let max_order = args.max_order.unwrap_or(default_order);
    Ok(match args.check.as_str() {
        "catalog" => verify::verify_exception_catalog(jobs),
        "thm2.1" => verify::verify_theorem_2_1(max_order, jobs)?,
        "small-lemmas" => verify::verify_small_lemmas(max_order, jobs)?,
        "reversal" => {
            verify::verify_reversal_counts(args.max_order.unwrap_or(6), 100, args.seed, jobs)?
        }
        "corollary" => verify::verify_main_corollary(max_order, jobs)?,
        other => match other
            .strip_prefix("building:")
            .and_then(BuildingLemma::parse)
        {
            Some(which) => verify::verify_building_lemmas(which, jobs)?,
            None => bail!("unknown check {other:?}"),
        },
    })
}

fn labels(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn ensure_label(label: usize, order: usize) -> Result<()> {
    if label == 0 || label > order {
        bail!("vertex label {label} out of range 1..={order}");
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, text: String) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {path:?}"))?,
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
