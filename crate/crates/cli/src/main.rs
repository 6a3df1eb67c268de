//! `bombieri` command-line tool.
//!
//! Exit codes: 0 when every verdict passes, 1 when a mathematical verdict
//! fails, 2 on input or usage errors.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bombieri_core::identities::Density;

#[derive(Parser, Debug)]
#[command(
    name = "bombieri",
    version,
    about = "Exact Bombieri norms, differential operators, and identity verification"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Decimal digits for norm approximations.
    #[arg(long, global = true, default_value_t = 3)]
    pub digits: u32,
    /// Ambient dimension for all polynomial arguments (default: the largest
    /// variable index mentioned).
    #[arg(long = "dim", global = true)]
    pub dim: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact squared Bombieri norm and a decimal approximation of the norm.
    Norm { p: String },
    /// Bombieri inner product [P, Q].
    Inner { p: String, q: String },
    /// Product P·Q.
    Multiply { p: String, q: String },
    /// Iterated partial derivative P^(i) for a comma-separated multi-index,
    /// e.g. `diff "x1^3*x2" 2,1`.
    Diff { p: String, order: String },
    /// Apply A(D1, …, Dn) to Q.
    Apply { a: String, q: String },
    /// Decomposition of ‖PQ‖² into top-degree and excess terms.
    Certificate { p: String, q: String },
    /// Check one of the identities or the inequality, inline or by fuzzing.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatementArg {
    Chu,
    IdentityB,
    IdentityC,
    InequalityA,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub statement: StatementArg,
    /// Inline arguments: three integers `r s p` for chu, otherwise
    /// polynomials (2 for identity-b and inequality-a, 4 for identity-c).
    pub args: Vec<String>,
    /// Run seeded random instances instead of inline arguments.
    #[arg(long)]
    pub fuzz: bool,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fixed dimension; unset draws 1..=3 per trial.
    #[arg(long = "n")]
    pub n: Option<usize>,
    /// Maximum degree of each random polynomial.
    #[arg(long, default_value_t = 4)]
    pub degree: u32,
    /// Probability of drawing each candidate monomial, in (0, 1].
    #[arg(long, default_value = "1/2")]
    pub density: Density,
    #[arg(long = "coeff-bound", default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub coeff_bound: u32,
    /// Draw homogeneous polynomials only (implied for inequality-a).
    #[arg(long)]
    pub homogeneous: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli);
    match outcome {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.exit)
        }
        Err(e) => {
            if cli.json {
                let v = serde_json::json!({ "error": e.to_string() });
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
