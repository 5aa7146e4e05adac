use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use nakayama_core::text::{parse_algebra, parse_algebra_document, parse_module};
use nakayama_core::verify::{verify, EnumerationBudget, VerifyOptions, DEFAULT_SEED};
use nakayama_core::{Algebra, Kind, Side};

mod render;

#[derive(Parser)]
#[command(
    name = "nakayama",
    version,
    about = "Exact homological invariants of Nakayama algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one algebra and a summary of its epsilon chain.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The syzygy filtered chain, one row per level.
    Reduce {
        #[command(flatten)]
        source: Source,
        /// Stop after this many reductions.
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Minimal projective resolution or injective coresolution of a module.
    Resolve {
        #[command(flatten)]
        source: Source,
        /// The module as top,length.
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value_t = Direction::Proj)]
        direction: Direction,
        /// Stop after this many steps.
        #[arg(long)]
        max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The opposite algebra.
    Op {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// List every algebra in a budget.
    Enumerate {
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check the theorem catalogue and the oracles over a budget.
    Verify {
        #[command(flatten)]
        budget: BudgetArgs,
        /// Comma separated check ids, e.g. T1,T7p.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        /// Worker threads, 0 for one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random algebras checked on top of the enumeration.
        #[arg(long, default_value_t = 0)]
        spot: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Kupisch series, e.g. 5,5,6,6,6 or linear:3,2,1.
    #[arg(long)]
    kupisch: Option<String>,
    /// Relation document (JSON or rel:N:startxarrows,...).
    #[arg(long)]
    relations: Option<PathBuf>,
    /// Algebra document (JSON or any text shorthand).
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Algebra> {
        if let Some(k) = &self.kupisch {
            return Ok(parse_algebra(k)?);
        }
        let path = self
            .relations
            .as_ref()
            .or(self.file.as_ref())
            .expect("clap enforces one source");
        let body =
            fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        parse_algebra_document(&body).with_context(|| format!("in {}", path.display()))
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Only this many vertices.
    #[arg(long, conflicts_with = "max_vertices")]
    vertices: Option<usize>,
    #[arg(long, default_value_t = 4)]
    max_vertices: usize,
    /// Cap on Kupisch entries; defaults to 2N+1.
    #[arg(long)]
    max_length: Option<usize>,
    /// Algebra kinds; enumerate defaults to cyclic, verify to all.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Keep every rotation of a cyclic series.
    #[arg(long)]
    no_dedup: bool,
}

impl BudgetArgs {
    fn budget(&self, default_kind: KindArg) -> EnumerationBudget {
        let max = self.vertices.unwrap_or(self.max_vertices);
        let mut b = EnumerationBudget::up_to(max);
        if let Some(n) = self.vertices {
            b.min_vertices = n;
        }
        if let Some(c) = self.max_length {
            b.max_length = c;
        }
        b.kinds = match self.kind.unwrap_or(default_kind) {
            KindArg::All => vec![Kind::Cyclic, Kind::Linear],
            KindArg::Cyclic => vec![Kind::Cyclic],
            KindArg::Linear => vec![Kind::Linear],
        };
        b.dedup = !self.no_dedup;
        b
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Proj,
    Inj,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    All,
    Cyclic,
    Linear,
}

fn json(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

/// Runs one command; `Ok(false)` means verification found problems.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Analyze { source, format } => {
            let a = source.load()?;
            let analysis = render::Analysis::of(&a)?;
            match format {
                Format::Json => println!("{}", json(&analysis)?),
                Format::Table => print!("{}", analysis.table()),
            }
        }
        Command::Reduce {
            source,
            steps,
            format,
        } => {
            let a = source.load()?;
            if !a.is_cyclic() {
                bail!("reduce needs a cyclic algebra, got {a}");
            }
            let rows = render::chain_rows(&a, steps.unwrap_or(a.n()))?;
            match format {
                Format::Json => println!("{}", json(&rows)?),
                Format::Table => print!("{}", render::chain_table(&rows)),
            }
        }
        Command::Resolve {
            source,
            module,
            direction,
            max,
            format,
        } => {
            let a = source.load()?;
            let m = parse_module(&module)?;
            let m = a.module(m.top, m.length)?;
            let side = match direction {
                Direction::Proj => Side::Projective,
                Direction::Inj => Side::Injective,
            };
            let listing = render::Resolution::of(&a, m, side, max);
            match format {
                Format::Json => println!("{}", json(&listing)?),
                Format::Table => print!("{}", listing.table(&a)),
            }
        }
        Command::Op { source, format } => {
            let op = source.load()?.opposite();
            match format {
                Format::Json => println!("{}", json(&op)?),
                Format::Table => println!("{}", render::plain(&op)),
            }
        }
        Command::Enumerate {
            budget,
            count_only,
            format,
        } => {
            let algebras = nakayama_core::verify::enumerate(&budget.budget(KindArg::Cyclic))?;
            if count_only {
                println!("{}", algebras.len());
            } else {
                match format {
                    Format::Json => println!("{}", json(&algebras)?),
                    Format::Table => algebras
                        .iter()
                        .for_each(|a| println!("{}", render::plain(a))),
                }
            }
        }
        Command::Verify {
            budget,
            theorems,
            jobs,
            seed,
            spot,
            out,
            timing,
            format,
        } => {
            let options = VerifyOptions {
                budget: budget.budget(KindArg::All),
                theorems,
                jobs,
                seed,
                spot,
                timing,
            };
            let report = verify(&options)?;
            let text = match format {
                Format::Json => json(&report)? + "\n",
                Format::Table => render::verify_table(&report),
            };
            match out {
                Some(path) => {
                    fs::write(&path, &text)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    eprint!("{}", render::verify_summary(&report));
                }
                None => print!("{text}"),
            }
            return Ok(report.is_clean());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
