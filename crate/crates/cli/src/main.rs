//! Exit codes: 0 all verified, 1 counterexample or contract failure,
//! 2 inconclusive entries present, 64 usage error.

mod commands;
mod json;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Ctx;
use json::CliError;
use report::{EXIT_COUNTEREXAMPLE, EXIT_USAGE};
use serreq::field::FieldSpec;

#[derive(Parser)]
#[command(
    name = "serreq",
    version,
    about = "Graded modules, Serre quotients and orbit algebras",
    disable_help_subcommand = true
)]
struct Cli {
    /// Coefficient field: fp:P for a prime P, or q for the rationals.
    #[arg(long, global = true, default_value = "fp:101")]
    field: String,

    /// Verification window (verify-lenzing).
    #[arg(long, global = true, allow_negative_numbers = true)]
    window: Option<i64>,

    /// Degree bound: hom truncation (qgr-hom), algebra degree (orbit),
    /// morphism length cap (verify-serre).
    #[arg(long, global = true)]
    nmax: Option<usize>,

    /// Seed for corpus generation and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Also write the report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Worker pool size for corpus batches.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Record wall-clock timings in the report. Reports with timings are
    /// not byte-identical across runs.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of a module over a degree range.
    Hilbert {
        #[arg(long)]
        module: PathBuf,
        /// Lowest and highest degree, inclusive.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        range: Vec<i64>,
    },
    /// Decide finite length and report the length.
    Finlen {
        #[arg(long)]
        module: PathBuf,
    },
    /// Saturation: torsion length and the saturated Hilbert function.
    Saturate {
        #[arg(long)]
        module: PathBuf,
    },
    /// Kernel and cokernel lengths of the map into the saturation,
    /// for one module or for a generated corpus.
    Defect {
        #[arg(long, conflicts_with = "corpus")]
        module: Option<PathBuf>,
        /// Corpus kind; only graded-modules makes sense here.
        #[arg(long)]
        corpus: Option<String>,
        /// Corpus size.
        #[arg(long, default_value_t = 20)]
        size: usize,
        /// Number of polynomial variables for corpus modules.
        #[arg(long, default_value_t = 2)]
        vars: usize,
    },
    /// Hom dimension between two modules in the quotient category.
    QgrHom {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Orbit algebra of a triple, or law check of a structure constant
    /// table.
    Orbit {
        #[arg(long, conflicts_with = "algebra")]
        triple: Option<PathBuf>,
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Auslander-Reiten translate and Kronecker classification.
    Ar {
        #[arg(long)]
        rep: PathBuf,
        /// Apply the inverse translate instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Indecomposable summands with multiplicities.
    Decompose {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Bounded verification of the two ampleness conditions plus an
    /// adjointness grid for a triple.
    VerifySerre {
        #[arg(long)]
        triple: PathBuf,
        /// Random morphisms sampled per object pair.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// Cross-check the two preprojective algebra constructions degree by
    /// degree out to the window.
    VerifyLenzing,
}

fn dispatch(cli: &Cli, ctx: &Ctx) -> Result<report::Report, CliError> {
    match &cli.command {
        Command::Hilbert { module, range } => commands::hilbert(ctx, module, range[0], range[1]),
        Command::Finlen { module } => commands::finlen(ctx, module),
        Command::Saturate { module } => commands::saturate_cmd(ctx, module),
        Command::Defect { module, corpus, size, vars } => {
            commands::defect(ctx, module.as_deref(), corpus.as_deref(), *size, *vars)
        }
        Command::QgrHom { source, target } => commands::qgr_hom_cmd(ctx, source, target),
        Command::Orbit { triple, algebra } => {
            commands::orbit(ctx, triple.as_deref(), algebra.as_deref())
        }
        Command::Ar { rep, inverse } => commands::ar(ctx, rep, *inverse),
        Command::Decompose { rep } => commands::decompose_cmd(ctx, rep),
        Command::VerifySerre { triple, samples } => commands::verify_serre(ctx, triple, *samples),
        Command::VerifyLenzing => commands::verify_lenzing_cmd(ctx),
    }
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let is_usage = e.use_stderr();
            let _ = e.print();
            return if is_usage { EXIT_USAGE } else { 0 };
        }
    };
    let field = match FieldSpec::parse(&cli.field) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("serreq: {e}");
            return EXIT_USAGE;
        }
    };
    let ctx = Ctx {
        field,
        field_label: match field {
            FieldSpec::Fp(p) => format!("fp:{p}"),
            FieldSpec::Q => "q".into(),
        },
        seed: cli.seed,
        window: cli.window,
        nmax: cli.nmax,
        jobs: cli.jobs,
        timings: cli.timings,
    };
    match dispatch(&cli, &ctx) {
        Ok(report) => {
            let text = report.to_json();
            // a closed pipe downstream is not our error
            let _ = writeln!(io::stdout(), "{text}");
            if let Some(path) = &cli.report {
                if let Err(e) = fs::write(path, format!("{text}\n")) {
                    eprintln!("serreq: {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
            report.exit_code()
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("serreq: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("serreq: {msg}");
            EXIT_COUNTEREXAMPLE
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(u8::try_from(run()).unwrap_or(1))
}
