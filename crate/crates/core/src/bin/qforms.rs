use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qforms::arith::{divisors, factorize};
use qforms::closedform::{self, FORMULA_NAMES};
use qforms::expr::{eval_expr, parse_expr};
use qforms::registry::{self, Report};
use qforms::repcount::{bqf_theta, diag4_theta, BinaryForm, DiagQuaternaryForm};
use qforms::series::format_rational;
use qforms::{Error, LaurentSeries, DEFAULT_ORDER};

#[derive(Parser)]
#[command(name = "qforms", version, about = "Exact q-series expansion and identity verification")]
struct Cli {
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
    /// Expand an expression such as "E(q)^5/E(q^5)".
    Expand {
        #[arg(long)]
        expr: String,
        #[arg(long, env = "QFORMS_ORDER", default_value_t = DEFAULT_ORDER)]
        order: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify one catalog identity or all of them.
    #[command(group(ArgGroup::new("which").required(true).args(["id", "all", "list"])))]
    Verify {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// Print the catalog ids and exit.
        #[arg(long)]
        list: bool,
        /// Defaults to each entry's own order.
        #[arg(long, env = "QFORMS_ORDER")]
        order: Option<i64>,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Evaluate entries one at a time.
        #[arg(long)]
        serial: bool,
    },
    /// Count representations by lattice enumeration.
    #[command(group(ArgGroup::new("shape").required(true).args(["form", "quat"])))]
    Count {
        /// Binary form a,b,c for ax² + bxy + cy².
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        form: Option<Vec<i64>>,
        /// Diagonal quaternary form d1,d2,d3,d4.
        #[arg(long, value_delimiter = ',')]
        quat: Option<Vec<i64>>,
        #[arg(long)]
        upto: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate a closed formula.
    Formula {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(FORMULA_NAMES))]
        name: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Factor a positive integer.
    Factor {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

enum Failure {
    Usage(String),
    MustPass,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn coefficient_strings(s: &LaurentSeries) -> Vec<String> {
    (s.min_exp()..=s.order()).map(|e| format_rational(&s.coeff(e).expect("tracked"))).collect()
}

fn series_json(s: &LaurentSeries) -> serde_json::Value {
    json!({ "min_exp": s.min_exp(), "order": s.order(), "coefficients": coefficient_strings(s) })
}

fn print_counts(s: &LaurentSeries, format: Format) {
    match format {
        Format::Text => {
            for e in 0..=s.order() {
                println!("{e} {}", format_rational(&s.coeff(e).expect("tracked")));
            }
        }
        Format::Json => println!("{}", series_json(s)),
    }
}

fn print_report(report: &Report) {
    for r in &report.results {
        match r.first_mismatch {
            None => println!("{:<17} {} (order {}, {} ms)", r.status.as_str(), r.id, r.order, r.elapsed_ms),
            Some(e) => println!(
                "{:<17} {} (order {}): first mismatch at q^{e}: lhs {} rhs {}",
                r.status.as_str(),
                r.id,
                r.order,
                r.lhs_coeff.as_deref().unwrap_or("?"),
                r.rhs_coeff.as_deref().unwrap_or("?"),
            ),
        }
    }
    let failures = report.must_pass_failures();
    println!("{} entries, {failures} must-pass failure(s)", report.results.len());
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Expand { expr, order, format } => {
            if order < 0 {
                return Err(Failure::Usage("order must be non-negative".into()));
            }
            let s = eval_expr(&parse_expr(&expr)?, order)?;
            match format {
                Format::Text => println!("{s}"),
                Format::Json => {
                    let mut v = series_json(&s);
                    v["expr"] = json!(expr);
                    println!("{v}");
                }
            }
        }
        Command::Verify { id, all, list, order, json, serial } => {
            if list {
                for e in registry::catalog() {
                    println!("{} {:?}", e.id, e.expectation);
                }
                return Ok(());
            }
            if order.is_some_and(|n| n < 0) {
                return Err(Failure::Usage("order must be non-negative".into()));
            }
            let report = match id {
                Some(id) if !all => Report::new(vec![registry::verify(&id, order)?]),
                _ => registry::verify_all(order, !serial)?,
            };
            print_report(&report);
            if let Some(path) = json {
                std::fs::write(&path, report.to_json() + "\n")
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            if report.must_pass_failures() > 0 {
                return Err(Failure::MustPass);
            }
        }
        Command::Count { form, quat, upto, format } => {
            if upto < 0 {
                return Err(Failure::Usage("--upto must be non-negative".into()));
            }
            let s = match (form, quat) {
                (Some(f), _) if f.len() != 3 => return Err(Failure::Usage("--form needs a,b,c".into())),
                (_, Some(d)) if d.len() != 4 => return Err(Failure::Usage("--quat needs d1,d2,d3,d4".into())),
                (Some(f), _) => bqf_theta(BinaryForm::new(f[0], f[1], f[2])?, upto),
                (_, Some(d)) => diag4_theta(DiagQuaternaryForm::new([d[0], d[1], d[2], d[3]])?, upto),
                _ => unreachable!("clap requires one of --form, --quat"),
            };
            print_counts(&s, format);
        }
        Command::Formula { name, n, format } => {
            let r = closedform::evaluate(&name, n)?;
            match format {
                Format::Text => println!("{name}({n}) = {}", r.value),
                Format::Json => println!("{}", serde_json::to_string(&r).expect("serializable")),
            }
        }
        Command::Factor { n } => {
            let f = factorize(n);
            let parts: Vec<String> = f
                .factors
                .iter()
                .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
                .collect();
            let shown = if parts.is_empty() { "1".to_string() } else { parts.join(" * ") };
            println!("{n} = {shown}");
            println!("divisors: {}", divisors(n).iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::MustPass) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
