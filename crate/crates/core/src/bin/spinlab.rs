use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spinlab::cli::render::render;
use spinlab::cli::{cmd_check, cmd_classify, cmd_compare, cmd_table2, Format, RunConfig};
use spinlab::{OperatorKind, SpinError};

#[derive(Parser)]
#[command(
    name = "spinlab",
    version,
    about = "Verify relativistic spin operators of the Dirac particle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification suite and compare verdicts with the expected table.
    Check(Common),
    /// Tabulated against computed spin blocks and the property matrix.
    Table2(Common),
    /// Per-sector equivalence of two operators.
    Compare {
        kind_a: String,
        kind_b: String,
        #[command(flatten)]
        common: Common,
    },
    /// Classify an isotropic ansatz α(r,ε)σ + β(r,ε)(p·σ)p.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Md,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Largest momentum component in units of the mass.
    #[arg(long, default_value_t = 10.0)]
    max_momentum: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            mass: self.mass,
            samples: self.samples,
            seed: self.seed,
            tol: self.tol,
            max_momentum: self.max_momentum,
            format: match self.format {
                FormatArg::Json => Format::Json,
                FormatArg::Md => Format::Markdown,
            },
        }
    }
}

fn kind(name: &str) -> Result<OperatorKind, SpinError> {
    name.parse()
}

fn run(cli: Cli) -> Result<(String, u8), SpinError> {
    match cli.command {
        Command::Check(c) => {
            let config = c.config();
            let report = cmd_check(&config)?;
            Ok((render(&report, config.format), report.exit_code() as u8))
        }
        Command::Table2(c) => {
            let config = c.config();
            let report = cmd_table2(&config)?;
            Ok((render(&report, config.format), report.exit_code() as u8))
        }
        Command::Compare { kind_a, kind_b, common } => {
            let config = common.config();
            let report = cmd_compare(kind(&kind_a)?, kind(&kind_b)?, &config)?;
            Ok((render(&report, config.format), 0))
        }
        Command::Classify { alpha, beta, common } => {
            let config = common.config();
            let report = cmd_classify(&alpha, &beta, &config)?;
            Ok((render(&report, config.format), 0))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("spinlab: {e}");
            ExitCode::from(2)
        }
    }
}
