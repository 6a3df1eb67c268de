use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use bombieri_core::campaign::{run_campaign, FuzzConfig, Summary};
use bombieri_core::identities::{
    chu_vandermonde_check, identity_b_sides, identity_c_sides, inequality_a_check,
    reznick_certificate, Block, Statement, VerificationReport,
};
use bombieri_core::parser::{format_polynomial, parse_many, ParseOptions};
use bombieri_core::rational;
use bombieri_core::{inner_product, norm_approx, norm_squared, MultiIndex, Polynomial};

use crate::{Cli, Command, StatementArg, VerifyArgs};

/// An input or usage problem; always exit code 2.
#[derive(Debug)]
pub struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub struct Output {
    pub text: String,
    pub exit: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, exit: 0 }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("json")
}

/// Reads `@path` arguments from disk; anything else is inline text.
fn source(arg: &str) -> Result<String, InputError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| InputError(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn polynomials(cli: &Cli, args: &[&str]) -> Result<Vec<Polynomial>, InputError> {
    let texts = args
        .iter()
        .map(|a| source(a))
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
    let opts = ParseOptions {
        declared_dimension: cli.dim,
        ..Default::default()
    };
    parse_many(&refs, &opts)
        .map_err(|(k, d)| InputError(format!("polynomial argument {}: {d}", k + 1)))
}

pub fn run(cli: &Cli) -> Result<Output, InputError> {
    match &cli.command {
        Command::Norm { p } => norm(cli, p),
        Command::Inner { p, q } => {
            let v = polynomials(cli, &[p, q])?;
            let ip = inner_product(&v[0], &v[1])?;
            Ok(Output::ok(if cli.json {
                to_json(&json!({ "inner_product": rational::to_string(&ip) }))
            } else {
                format!("[P,Q] = {ip}")
            }))
        }
        Command::Multiply { p, q } => {
            let v = polynomials(cli, &[p, q])?;
            polynomial_result(cli, &v[0].multiply(&v[1])?)
        }
        Command::Diff { p, order } => {
            let v = polynomials(cli, &[p])?;
            let order = parse_order(order)?;
            polynomial_result(cli, &v[0].multi_derivative(&order)?)
        }
        Command::Apply { a, q } => {
            let v = polynomials(cli, &[a, q])?;
            polynomial_result(cli, &v[0].apply_operator(&v[1])?)
        }
        Command::Certificate { p, q } => certificate(cli, p, q),
        Command::Verify(args) => verify(cli, args),
    }
}

fn polynomial_result(cli: &Cli, p: &Polynomial) -> Result<Output, InputError> {
    let text = format_polynomial(p);
    Ok(Output::ok(if cli.json {
        to_json(&json!({ "dimension": p.dimension(), "result": text }))
    } else {
        text
    }))
}

fn parse_order(s: &str) -> Result<MultiIndex, InputError> {
    s.split(',')
        .map(|e| {
            e.trim()
                .parse::<u32>()
                .map_err(|_| InputError(format!("invalid multi-index {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(MultiIndex::new)
}

fn norm(cli: &Cli, p: &str) -> Result<Output, InputError> {
    let v = polynomials(cli, &[p])?;
    let n2 = norm_squared(&v[0]);
    let approx = norm_approx(&v[0], cli.digits);
    Ok(Output::ok(if cli.json {
        to_json(&json!({
            "polynomial": format_polynomial(&v[0]),
            "norm_squared": rational::to_string(n2.value()),
            "norm": approx,
            "digits": cli.digits,
            "rounding": "truncated",
        }))
    } else {
        format!(
            "norm^2 = {n2}\nnorm   ~ {approx} (truncated to {} digits)",
            cli.digits
        )
    }))
}

fn certificate(cli: &Cli, p: &str, q: &str) -> Result<Output, InputError> {
    let v = polynomials(cli, &[p, q])?;
    let (p, q) = (&v[0], &v[1]);
    let cert = reznick_certificate(p, q)?;
    let inequality = (p.is_homogeneous() && q.is_homogeneous()).then(|| {
        let np = norm_squared(p).into_inner();
        let nq = norm_squared(q).into_inner();
        (np, nq)
    });
    if cli.json {
        let mut value = serde_json::to_value(&cert).expect("json");
        if let Some((np, nq)) = &inequality {
            value["inequality"] = json!({
                "norm_p_squared": rational::to_string(np),
                "norm_q_squared": rational::to_string(nq),
                "difference": rational::to_string(&(&cert.lhs - np * nq)),
            });
        }
        return Ok(Output::ok(to_json(&value)));
    }
    let mut out = String::new();
    writeln!(out, "{:<12} {:<11} value", "index", "block").unwrap();
    for t in &cert.terms {
        let block = match t.block {
            Block::TopDegree => "top_degree",
            Block::Excess => "excess",
        };
        writeln!(
            out,
            "{:<12} {:<11} {}",
            t.index.to_string(),
            block,
            t.term_value
        )
        .unwrap();
    }
    writeln!(out, "top_sum    = {}", cert.top_sum).unwrap();
    writeln!(out, "excess_sum = {}", cert.excess_sum).unwrap();
    write!(out, "lhs        = {}", cert.lhs).unwrap();
    if let Some((np, nq)) = inequality {
        let diff = &cert.lhs - &np * &nq;
        write!(
            out,
            "\n‖PQ‖² − ‖P‖²‖Q‖² = excess_sum: {} − {}·{} = {} (excess_sum = {})",
            cert.lhs, np, nq, diff, cert.excess_sum
        )
        .unwrap();
    }
    Ok(Output::ok(out))
}

/// 0 when every verdict passed, 1 otherwise.
fn exit_code(summary: &Summary) -> u8 {
    if summary.all_passed() {
        0
    } else {
        1
    }
}

fn statement_of(arg: StatementArg) -> Statement {
    match arg {
        StatementArg::Chu => Statement::Chu,
        StatementArg::IdentityB => Statement::IdentityB,
        StatementArg::IdentityC => Statement::IdentityC,
        StatementArg::InequalityA => Statement::InequalityA,
    }
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Output, InputError> {
    let statement = statement_of(args.statement);
    if args.fuzz {
        if !args.args.is_empty() {
            return Err(InputError("--fuzz takes no inline arguments".into()));
        }
        let config = FuzzConfig {
            trials: args.trials,
            seed: args.seed,
            dimension: args.n.or(cli.dim),
            max_degree: args.degree,
            density: args.density,
            coefficient_bound: args.coeff_bound,
            homogeneous: args.homogeneous,
        };
        if config.dimension == Some(0) {
            return Err(InputError("dimension must be positive".into()));
        }
        let campaign = run_campaign(statement, &config);
        let exit = exit_code(&campaign.summary);
        let text = if cli.json {
            campaign.to_json()
        } else {
            let failures: Vec<_> = campaign.reports.iter().filter(|r| !r.passes()).collect();
            human_summary(statement, &campaign.summary, Some(config.seed), &failures)
        };
        return Ok(Output { text, exit });
    }

    let report = inline_report(cli, statement, &args.args)?;
    let summary = Summary::of(&report);
    let exit = exit_code(&summary);
    let text = if cli.json {
        to_json(&json!({
            "statement": statement,
            "summary": summary,
            "reports": [report],
        }))
    } else {
        human_report(&report)
    };
    Ok(Output { text, exit })
}

fn inline_report(
    cli: &Cli,
    statement: Statement,
    args: &[String],
) -> Result<VerificationReport, InputError> {
    let arity = match statement {
        Statement::Chu => 3,
        Statement::IdentityC => 4,
        Statement::IdentityB | Statement::InequalityA => 2,
    };
    if args.len() != arity {
        return Err(InputError(format!(
            "{statement} takes {arity} arguments, got {}",
            args.len()
        )));
    }
    if statement == Statement::Chu {
        let n = args
            .iter()
            .map(|a| {
                a.parse::<u32>()
                    .map_err(|_| InputError(format!("expected a nonnegative integer, got {a:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(chu_vandermonde_check(n[0], n[1], n[2]));
    }
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let v = polynomials(cli, &refs)?;
    Ok(match statement {
        Statement::IdentityC => identity_c_sides(&v[0], &v[1], &v[2], &v[3])?,
        Statement::IdentityB => identity_b_sides(&v[0], &v[1])?,
        Statement::InequalityA => inequality_a_check(&v[0], &v[1], true)?,
        Statement::Chu => unreachable!(),
    })
}

fn human_report(r: &VerificationReport) -> String {
    let mut out = format!(
        "{}: {}\n  lhs        = {}\n  rhs        = {}\n  difference = {}",
        r.statement,
        if r.passes() { "PASS" } else { "FAIL" },
        r.lhs,
        r.rhs,
        r.difference
    );
    if let Some(c) = &r.certificate {
        write!(out, "\n  excess_sum = {}", c.excess_sum).unwrap();
    }
    for (name, text) in &r.instance.polynomials {
        write!(out, "\n  {name} = {text}").unwrap();
    }
    if let Some(c) = &r.instance.chu {
        write!(out, "\n  r = {}, s = {}, p = {}", c.r, c.s, c.p).unwrap();
    }
    if let (Some(seed), Some(trial)) = (r.instance.seed, r.instance.trial) {
        write!(out, "\n  seed = {seed}, trial = {trial}").unwrap();
    }
    out
}

fn human_summary(
    statement: Statement,
    summary: &Summary,
    seed: Option<u64>,
    failures: &[&VerificationReport],
) -> String {
    let mut out = format!("{statement}: {}/{} passed", summary.passed, summary.trials);
    if let Some(seed) = seed {
        write!(out, " (seed {seed})").unwrap();
    }
    for f in failures {
        write!(out, "\n{}", human_report(f)).unwrap();
    }
    out
}
