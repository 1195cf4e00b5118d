//! `neutrotrop`: matrix arithmetic, closures, path problems and law checks
//! over neutrosophic min-plus / max-plus numbers.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use neutrotrop::axioms::{check_axioms, AxiomConfig};
use neutrotrop::files::{read_graph, read_matrix, write_matrix};
use neutrotrop::{
    schedule_recurrence, shortest_paths, AlgebraMode, Error, InfinityPolicy, NeutroMatrix,
    NeutroNumber, ReductionOp,
};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DIMENSION: u8 = 3;
const EXIT_DOMAIN: u8 = 4;
const EXIT_AXIOM_FAILURE: u8 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "neutrotrop",
    version,
    about = "Neutrosophic min-plus / max-plus algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Elementwise tropical sum of two matrices.
    Add {
        #[arg(long, value_enum)]
        mode: Mode,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Matrix product with the chosen k-fold.
    Mul {
        #[arg(long, value_enum)]
        reduce: Reduce,
        /// Defaults to min for --reduce min/plus and max for --reduce max.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Multiply every entry by a scalar.
    Scale {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum)]
        mode: Mode,
        a: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// k-th power of a square matrix.
    Power {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Defaults to the reduction matching --mode.
        #[arg(long, value_enum)]
        reduce: Option<TropicalReduce>,
        a: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Kleene closure I ⊕ A ⊕ … ⊕ A^(n-1).
    Closure {
        #[arg(long, value_enum)]
        mode: Mode,
        a: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// All-pairs least costs of a graph file.
    Paths {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Max-plus recurrence x(t+1) = A ⊗ x(t), one matrix block per step.
    Sched {
        #[arg(long)]
        k: usize,
        a: PathBuf,
        x0: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Randomized check of the semiring laws.
    Axioms {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
        range: Option<Vec<i64>>,
        #[arg(long)]
        infinities: bool,
        #[arg(long)]
        strict: bool,
        /// Print the structured report instead of the text summary.
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Min,
    Max,
}

impl From<Mode> for AlgebraMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Min => AlgebraMode::Min,
            Mode::Max => AlgebraMode::Max,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Reduce {
    Min,
    Max,
    Plus,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TropicalReduce {
    Min,
    Max,
}

impl Reduce {
    fn op(self) -> ReductionOp {
        match self {
            Reduce::Min => ReductionOp::TropicalMin,
            Reduce::Max => ReductionOp::TropicalMax,
            Reduce::Plus => ReductionOp::PlusFold,
        }
    }

    fn default_mode(self) -> AlgebraMode {
        match self {
            Reduce::Max => AlgebraMode::Max,
            Reduce::Min | Reduce::Plus => AlgebraMode::Min,
        }
    }
}

impl From<TropicalReduce> for ReductionOp {
    fn from(r: TropicalReduce) -> Self {
        match r {
            TropicalReduce::Min => ReductionOp::TropicalMin,
            TropicalReduce::Max => ReductionOp::TropicalMax,
        }
    }
}

/// Status of a command that ran to completion.
enum Outcome {
    Ok,
    AxiomFailures,
    AxiomDomainErrors,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::AxiomFailures) => ExitCode::from(EXIT_AXIOM_FAILURE),
        Ok(Outcome::AxiomDomainErrors) => ExitCode::from(EXIT_DOMAIN),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Parse(_) => EXIT_PARSE,
                Error::DimensionMismatch(_) => EXIT_DIMENSION,
                Error::Domain(_) => EXIT_DOMAIN,
                Error::Io(_) => EXIT_USAGE,
            })
        }
    }
}

fn load(path: &Path) -> Result<NeutroMatrix, Error> {
    let file = File::open(path)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    read_matrix(io::BufReader::new(file))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Add { mode, a, b, output } => {
            let sum = load(&a)?.tropical_add(&load(&b)?, mode.into())?;
            emit(output.as_deref(), &write_matrix(&sum))?;
        }
        Command::Mul {
            reduce,
            mode,
            a,
            b,
            output,
        } => {
            let mode = mode.map_or(reduce.default_mode(), AlgebraMode::from);
            let product = load(&a)?.product(&load(&b)?, mode, reduce.op())?;
            emit(output.as_deref(), &write_matrix(&product))?;
        }
        Command::Scale {
            alpha,
            mode,
            a,
            output,
        } => {
            let alpha: NeutroNumber = alpha.parse()?;
            let scaled = load(&a)?.scale(alpha, mode.into());
            emit(output.as_deref(), &write_matrix(&scaled))?;
        }
        Command::Power {
            k,
            mode,
            reduce,
            a,
            output,
        } => {
            let mode = AlgebraMode::from(mode);
            let reduce = reduce.map_or(ReductionOp::tropical(mode), ReductionOp::from);
            let power = load(&a)?.power(k, mode, reduce)?;
            emit(output.as_deref(), &write_matrix(&power))?;
        }
        Command::Closure { mode, a, output } => {
            let closure = load(&a)?.closure(mode.into())?;
            emit(output.as_deref(), &write_matrix(&closure.matrix))?;
            if closure.cycle_warning {
                eprintln!(
                    "CYCLE-WARNING: closure diagonal reached by a cycle better than the empty path"
                );
            }
        }
        Command::Paths { graph, output } => {
            let file = File::open(&graph).map_err(|e| {
                Error::Io(io::Error::new(
                    e.kind(),
                    format!("{}: {e}", graph.display()),
                ))
            })?;
            let result = shortest_paths(&read_graph(io::BufReader::new(file))?);
            emit(output.as_deref(), &write_matrix(&result.distances))?;
            if result.cycle_warning {
                eprintln!(
                    "CYCLE-WARNING: graph has a negative-cost cycle; distances are truncated"
                );
            }
        }
        Command::Sched { k, a, x0, output } => {
            let trace = schedule_recurrence(&load(&a)?, &load(&x0)?, k)?;
            let mut text = String::new();
            for (t, state) in trace.states().iter().enumerate() {
                text.push_str(&format!("# t={t}\n"));
                text.push_str(&write_matrix(state));
            }
            emit(output.as_deref(), &text)?;
        }
        Command::Axioms {
            mode,
            samples,
            seed,
            range,
            infinities,
            strict,
            json,
            output,
        } => {
            let mut config = AxiomConfig::new(mode.into());
            config.sample_count = samples;
            config.seed = seed;
            if let Some(r) = range {
                config.component_range = r[0]..=r[1];
            }
            config.include_infinities = infinities;
            if strict {
                config.infinity_policy = InfinityPolicy::Strict;
            }
            let report = check_axioms(&config)?;
            let text = if json {
                report.to_json() + "\n"
            } else {
                report.summary()
            };
            emit(output.as_deref(), &text)?;
            if report.total_failures() > 0 {
                return Ok(Outcome::AxiomFailures);
            }
            if report.total_domain_errors() > 0 {
                return Ok(Outcome::AxiomDomainErrors);
            }
        }
    }
    Ok(Outcome::Ok)
}
