mod config;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use delannoy_jacobi::exact::parse_rational;
use delannoy_jacobi::identities::{self, IdentityReport, SuiteConfig};
use delannoy_jacobi::paths::{delannoy_weighted, schroder_weighted, WeightTriple};
use delannoy_jacobi::{orthopoly, Error, Polynomial};
use serde_json::{json, Value};

use config::FileConfig;

const EXIT_COMPUTE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "delannoy-jacobi",
    version,
    about = "Exact Delannoy, Schroder and Jacobi computations and identity checks"
)]
#[command(
    after_help = "Exit codes: 0 success, 1 computation error, 2 usage error or unknown identity, 3 verification failure.\n\
Settings are read from ./delannoy-jacobi.conf (or the file named by DJ_CONFIG); flags override them."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute numbers, polynomials and sequences.
    Compute {
        #[command(subcommand)]
        what: Compute,
    },
    /// Verify registered identities.
    #[command(after_help = "CSV columns: id,status,cases_run,millis,counterexample")]
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Weights {
    /// East step weight: an integer, `p/q`, or `x`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    u: String,
    /// North step weight: an integer, `p/q`, or `x`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    v: String,
    /// Northeast step weight: an integer, `p/q`, or `x`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    w: String,
}

#[derive(Subcommand)]
enum Compute {
    /// Weighted Delannoy number d_{m,n}.
    #[command(after_help = "CSV columns: m,n,value")]
    Delannoy {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        weights: Weights,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Weighted Schroder number s_n.
    #[command(after_help = "CSV columns: n,value")]
    Schroder {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        weights: Weights,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// A member of a polynomial family.
    #[command(after_help = "CSV columns: power,coefficient (ascending powers)")]
    Poly {
        #[arg(long, value_enum)]
        family: PolyFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        beta: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The first terms of an integer sequence.
    #[command(after_help = "CSV columns: index,value")]
    Sequence {
        #[arg(long, value_enum)]
        name: SequenceName,
        #[arg(long)]
        count: usize,
        /// Row index for `delannoy-row`.
        #[arg(long, default_value_t = 0)]
        row: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    Jacobi,
    ShiftedJacobi,
    Romanovski,
    Legendre,
    ShiftedLegendre,
    Laguerre,
    LaguerreGen,
    Narayana,
    Schroder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SequenceName {
    CentralDelannoy,
    Schroder,
    DelannoyRow,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to run.
    #[arg(long, conflicts_with = "all", required_unless_present_any = ["all", "list"])]
    id: Option<String>,
    /// Run every registered identity.
    #[arg(long)]
    all: bool,
    /// Print the registered identity ids and exit.
    #[arg(long)]
    list: bool,
    /// Cap the polynomial index of every grid.
    #[arg(long)]
    max_n: Option<usize>,
    /// Run grids on a single thread.
    #[arg(long)]
    sequential: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Compute(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::UnknownIdentity(_) | Error::Parse(_) => Failure::Usage(err.to_string()),
            _ => Failure::Compute(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { what } => compute(what).map(|out| {
            println!("{out}");
            ExitCode::SUCCESS
        }),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_COMPUTE)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn weight(text: &str) -> Result<Polynomial, Failure> {
    if text.trim() == "x" {
        return Ok(Polynomial::x());
    }
    parse_rational(text)
        .map(Polynomial::constant)
        .ok_or_else(|| Failure::Usage(format!("`{text}` is not an integer, p/q or x")))
}

fn weights(w: &Weights) -> Result<WeightTriple, Failure> {
    Ok(WeightTriple::new(
        weight(&w.u)?,
        weight(&w.v)?,
        weight(&w.w)?,
    ))
}

fn coefficients(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn compute(what: Compute) -> Result<String, Failure> {
    match what {
        Compute::Delannoy {
            m,
            n,
            weights: w,
            format,
        } => {
            let value = delannoy_weighted(m, n, &weights(&w)?);
            Ok(match format {
                Format::Text => value.to_string(),
                Format::Json => json!({"m": m, "n": n, "value": value.to_string()}).to_string(),
                Format::Csv => format!("m,n,value\n{m},{n},{}", csv_escape(&value.to_string())),
            })
        }
        Compute::Schroder {
            n,
            weights: w,
            format,
        } => {
            let value = schroder_weighted(n, &weights(&w)?);
            Ok(match format {
                Format::Text => value.to_string(),
                Format::Json => json!({"n": n, "value": value.to_string()}).to_string(),
                Format::Csv => format!("n,value\n{n},{}", csv_escape(&value.to_string())),
            })
        }
        Compute::Poly {
            family,
            n,
            alpha,
            beta,
            format,
        } => {
            let p = match family {
                PolyFamily::Jacobi => orthopoly::jacobi(n, alpha, beta),
                PolyFamily::ShiftedJacobi => orthopoly::shifted_jacobi(n, alpha, beta),
                PolyFamily::Romanovski => orthopoly::romanovski(n, alpha, beta),
                PolyFamily::Legendre => orthopoly::legendre(n),
                PolyFamily::ShiftedLegendre => orthopoly::shifted_legendre(n),
                PolyFamily::Laguerre => orthopoly::laguerre(n),
                PolyFamily::LaguerreGen => {
                    let beta = usize::try_from(beta).map_err(|_| {
                        Failure::Compute(format!("laguerre-gen needs beta >= 0, got {beta}"))
                    })?;
                    orthopoly::laguerre_gen(n, beta)
                }
                PolyFamily::Narayana => orthopoly::narayana(n)?,
                PolyFamily::Schroder => orthopoly::schroder_poly(n),
            };
            Ok(match format {
                Format::Text => p.to_string(),
                Format::Json => json!({
                    "family": format!("{family:?}"),
                    "n": n,
                    "alpha": alpha,
                    "beta": beta,
                    "polynomial": p.to_string(),
                    "coefficients": coefficients(&p),
                })
                .to_string(),
                Format::Csv => {
                    let mut out = String::from("power,coefficient");
                    for (k, c) in coefficients(&p).iter().enumerate() {
                        out.push_str(&format!("\n{k},{c}"));
                    }
                    out
                }
            })
        }
        Compute::Sequence {
            name,
            count,
            row,
            format,
        } => {
            let ones = WeightTriple::ones();
            let values: Vec<String> = (0..count)
                .map(|i| {
                    match name {
                        SequenceName::CentralDelannoy => delannoy_weighted(i, i, &ones),
                        SequenceName::Schroder => schroder_weighted(i, &ones),
                        SequenceName::DelannoyRow => delannoy_weighted(row, i, &ones),
                    }
                    .coeff(0)
                    .to_string()
                })
                .collect();
            Ok(match format {
                Format::Text => values.join(", "),
                Format::Json => json!({"name": format!("{name:?}"), "values": values}).to_string(),
                Format::Csv => {
                    let mut out = String::from("index,value");
                    for (i, v) in values.iter().enumerate() {
                        out.push_str(&format!("\n{i},{v}"));
                    }
                    out
                }
            })
        }
    }
}

fn report_json(report: &IdentityReport) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    if args.list {
        for check in identities::registry() {
            println!("{}\t{}", check.id, check.description);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let mut config: SuiteConfig = FileConfig::load().map_err(Failure::Usage)?.suite_config();
    if args.max_n.is_some() {
        config.max_n = args.max_n;
    }
    if args.sequential {
        config.parallel = false;
    }
    let reports = match &args.id {
        Some(id) => vec![identities::run_identity(id, &config)?],
        None => identities::run_all(&config),
    };

    let document = Value::Array(reports.iter().map(report_json).collect());
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&document).expect("json")),
        Format::Csv => {
            println!("id,status,cases_run,millis,counterexample");
            for r in &reports {
                let ce = r
                    .counterexample
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default();
                println!(
                    "{},{},{},{},{}",
                    r.id,
                    r.status,
                    r.cases_run,
                    r.millis,
                    csv_escape(&ce)
                );
            }
        }
        Format::Text => {
            for r in &reports {
                println!(
                    "{:<4} {:<26} {:>6} cases {:>7} ms",
                    r.status.to_string().to_uppercase(),
                    r.id,
                    r.cases_run,
                    r.millis
                );
                if let Some(ce) = &r.counterexample {
                    println!("     counterexample: {ce}");
                }
                for note in &r.notes {
                    println!("     note: {note}");
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            println!(
                "{} identities, {} passed, {} failed",
                reports.len(),
                reports.len() - failed,
                failed
            );
        }
    }
    if let Some(path) = &args.out {
        let text = serde_json::to_string_pretty(&document).expect("json");
        fs::write(path, text + "\n")
            .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if reports.iter().all(IdentityReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    })
}
