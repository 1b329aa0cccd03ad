//! `qtails`: run identity checks, tabulate partition statistics, expand
//! q-expressions and print asymptotic ratio tables.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 on success,
//! 1 when a check does not meet its expectation, 2 on usage or input errors.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use qtails_core::partitions::{ffw_k, stat_poly, StatVariant};
use qtails_core::qexpr::{self, QexprError};
use qtails_core::verify::{self, Report, Suite, VerifyError};

#[derive(Parser, Debug)]
#[command(
    name = "qtails",
    version,
    about = "Exact q-series identity checker for k-th smallest parts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a suite (default: all) or a single entry.
    Verify {
        #[arg(long, conflicts_with = "id")]
        suite: Option<String>,
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(2..))]
        order: u64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Tabulate a statistic for 1 <= n <= n-max.
    Compute {
        #[arg(value_enum)]
        stat: Stat,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Evaluate the z-polynomial at this integer instead of printing it.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<i64>,
    },
    /// Expand a q-expression to the given order.
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(2..))]
        order: u64,
    },
    /// Run one entry and print its first mismatch with both coefficients.
    Audit {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(2..))]
        order: u64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// FFW_k(n) against its main term at n-max/10, n-max/4, n-max/2, n-max.
    Asym {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(100..))]
        n_max: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Stat {
    /// sum over D(n) of (-1)^# z^(s_k)
    Ffw,
    /// sum over D(n) of (-1)^# s_k
    FfwSk,
}

/// A failure that maps to exit code 2.
struct UsageError(String);

impl From<VerifyError> for UsageError {
    fn from(e: VerifyError) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version to stdout with code 0 and errors to stderr with code 2
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match dispatch(cli.command) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Returns the stdout text and whether every check met its expectation.
fn dispatch(cmd: Command) -> Result<(String, bool), UsageError> {
    match cmd {
        Command::Verify {
            suite,
            id,
            order,
            format,
        } => {
            let order = order as usize;
            let (label, reports) = match id {
                Some(id) => {
                    let r = verify::run(&id, order)?;
                    (id, vec![r])
                }
                None => {
                    let name = suite.unwrap_or_else(|| "all".to_string());
                    let reports = verify::run_suite(Suite::parse(&name)?, order)?;
                    (name, reports)
                }
            };
            let ok = verify::suite_passes(&reports);
            Ok((render_reports(&label, order, &reports, format), ok))
        }
        Command::Audit { id, order, format } => {
            let order = order as usize;
            let r = verify::run(&id, order)?;
            let ok = r.meets_expectation();
            let out = match format {
                Format::Json => render_reports(&id, order, std::slice::from_ref(&r), format),
                Format::Tsv => render_audit(&r),
            };
            Ok((out, ok))
        }
        Command::Compute { stat, k, n_max, z } => {
            Ok((compute(stat, k as usize, n_max as usize, z), true))
        }
        Command::Expand { expr, order } => expand(&expr, order as usize).map(|s| (s, true)),
        Command::Asym { k, n_max } => Ok((asym(k as usize, n_max as usize), true)),
    }
}

fn render_reports(label: &str, order: usize, reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let v = verify::reports_json(label, order, reports);
            let mut s = serde_json::to_string_pretty(&v).expect("serializable");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut s = String::from("id\tstatus\texpected\tmismatch_n\tsides\tlhs\trhs\n");
            for r in reports {
                let (n, sides, lhs, rhs) = match &r.first_mismatch {
                    Some(m) => (
                        m.n.to_string(),
                        format!("{} | {}", m.sides[0], m.sides[1]),
                        m.lhs.to_string(),
                        m.rhs.to_string(),
                    ),
                    None => ("-".into(), "-".into(), "-".into(), "-".into()),
                };
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{n}\t{sides}\t{lhs}\t{rhs}",
                    r.id,
                    r.status.name(),
                    r.expected.name()
                );
            }
            s
        }
    }
}

fn render_audit(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "id\t{}", r.id);
    let _ = writeln!(s, "order\t{}", r.order);
    let _ = writeln!(s, "status\t{}", r.status.name());
    let _ = writeln!(s, "expected\t{}", r.expected.name());
    match &r.first_mismatch {
        Some(m) => {
            let _ = writeln!(s, "mismatch_n\t{}", m.n);
            let _ = writeln!(s, "left\t{}\t{}", m.sides[0], m.lhs);
            let _ = writeln!(s, "right\t{}\t{}", m.sides[1], m.rhs);
        }
        None => {
            let _ = writeln!(s, "mismatch_n\t-");
        }
    }
    s
}

fn compute(stat: Stat, k: usize, n_max: usize, z: Option<i64>) -> String {
    let mut s = String::new();
    match (stat, z) {
        (Stat::FfwSk, _) => {
            s.push_str("n\tvalue\n");
            for n in 1..=n_max {
                let _ = writeln!(s, "{n}\t{}", ffw_k(n, k));
            }
        }
        (Stat::Ffw, None) => {
            s.push_str("n\tpoly\n");
            for n in 1..=n_max {
                let _ = writeln!(s, "{n}\t{}", stat_poly(n, StatVariant::FfwKz(k)));
            }
        }
        (Stat::Ffw, Some(v)) => {
            s.push_str("n\tvalue\n");
            let v = BigInt::from(v);
            for n in 1..=n_max {
                let _ = writeln!(s, "{n}\t{}", stat_poly(n, StatVariant::FfwKz(k)).eval(&v));
            }
        }
    }
    s
}

fn expand(text: &str, order: usize) -> Result<String, UsageError> {
    let expr = qexpr::parse(text).map_err(|e| parse_error(text, &e))?;
    let series = qexpr::eval(&expr, order).map_err(|e| UsageError(e.to_string()))?;
    Ok(series.to_string())
}

/// The message plus the input with a caret under the offending byte.
fn parse_error(text: &str, e: &QexprError) -> UsageError {
    let mut msg = e.to_string();
    if let Some(off) = e.offset() {
        let col = text.get(..off).map_or(off, |p| p.chars().count());
        let _ = write!(msg, "\n  {text}\n  {}^", " ".repeat(col));
    }
    UsageError(msg)
}

fn asym(k: usize, n_max: usize) -> String {
    let mut s = String::from("n\tvalue\tmain_term\tratio\tsingle_factorial_ratio\n");
    for r in verify::asym_table(k, n_max) {
        let _ = writeln!(
            s,
            "{}\t{}\t{:.6}\t{:.6}\t{:.6}",
            r.n, r.value, r.main_term, r.ratio, r.single_factorial_ratio
        );
    }
    s
}
