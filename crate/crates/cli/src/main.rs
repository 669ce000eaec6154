use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schur_vertex::commands::{self, Check, Suite, VertexMethod};
use schur_vertex::{CliError, RunReport};

#[derive(Parser)]
#[command(name = "schur-vertex", version, about = "Straightening, p-perp, and vertex operator series on Schur functions")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Straighten an integer sequence, e.g. "[5,3,2,7]"
    Rectify {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Apply p_i^perp to s_alpha
    Perp {
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Coefficients of t^n in the vertex series of s_alpha
    Vertex {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Inclusive range a:b
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Run the cancelling involution on the raw terms of t^n
    Involution {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Gamma_1 applied to s_alpha, split by degree
    Gamma1 {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        max_degree: usize,
    },
    /// Sweep a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "-8:6")]
        n_range: String,
    },
    /// Compare against monomial-level expansions
    Oracle {
        #[arg(long, value_enum)]
        check: CheckArg,
        /// p or p,q
        #[arg(long)]
        vars: String,
        #[arg(long)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Lhs,
    Rhs,
    Lemma,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    StraightenAgree,
    #[value(name = "vertex-3way")]
    Vertex3Way,
    InvolutionSound,
    PerpAgree,
    Gamma1,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    JtVsSsyt,
    SchurDiff,
    Cauchy,
    DualCauchy,
    SigmaAdd,
    NegAlphabet,
    VertexMonomial,
}

fn run(command: Command) -> Result<RunReport, CliError> {
    match command {
        Command::Rectify { seq } => commands::cmd_rectify(&seq),
        Command::Perp { i, alpha } => commands::cmd_perp(i, &alpha),
        Command::Vertex { alpha, n, method } => {
            let method = match method {
                MethodArg::Lhs => VertexMethod::Lhs,
                MethodArg::Rhs => VertexMethod::Rhs,
                MethodArg::Lemma => VertexMethod::Lemma,
                MethodArg::All => VertexMethod::All,
            };
            commands::cmd_vertex(&alpha, &n, method)
        }
        Command::Involution { alpha, n } => commands::cmd_involution(&alpha, n),
        Command::Gamma1 { alpha, max_degree } => commands::cmd_gamma1(&alpha, max_degree),
        Command::Verify {
            suite,
            max_weight,
            n_range,
        } => {
            let suite = match suite {
                SuiteArg::StraightenAgree => Suite::StraightenAgree,
                SuiteArg::Vertex3Way => Suite::Vertex3Way,
                SuiteArg::InvolutionSound => Suite::InvolutionSound,
                SuiteArg::PerpAgree => Suite::PerpAgree,
                SuiteArg::Gamma1 => Suite::Gamma1,
            };
            commands::cmd_verify(suite, max_weight, &n_range)
        }
        Command::Oracle {
            check,
            vars,
            max_degree,
        } => {
            let check = match check {
                CheckArg::JtVsSsyt => Check::JtVsSsyt,
                CheckArg::SchurDiff => Check::SchurDiff,
                CheckArg::Cauchy => Check::Cauchy,
                CheckArg::DualCauchy => Check::DualCauchy,
                CheckArg::SigmaAdd => Check::SigmaAdd,
                CheckArg::NegAlphabet => Check::NegAlphabet,
                CheckArg::VertexMonomial => Check::VertexMonomial,
            };
            commands::cmd_oracle(check, &vars, max_degree)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => format!("{}\n", report.to_json()),
            };
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            eprintln!("elapsed_ms: {}", report.elapsed_ms);
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
