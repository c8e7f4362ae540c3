//! Command-line front end: evaluate polynomials, dump value tables and
//! quadrature rules, and run the verification sweeps. Data (CSV/JSON) goes
//! to stdout or `--out`; human-readable messages go to stderr.
//!
//! Exit codes: 0 success / verification pass, 1 verification fail or
//! computation error, 2 usage or domain error.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gegen::asymptotics::{
    log_spaced_grid, verify_coefficient_growth, verify_jacobi_facts, verify_lemma1,
    verify_theorem1, AsymptoticReport, Verdict, DEFAULT_BAND_TOL, DEFAULT_SLOPE_TOL,
};
use gegen::error::Error;
use gegen::geggen::{gengeg_eval, gengeg_orthonormal_eval};
use gegen::jacobi::jacobi_value;
use gegen::quadrature::gauss_jacobi_rule;
use gegen::report::{emit_report, OutputFormat};
use gegen::{GegenParams, JacobiParams};

#[derive(Parser)]
#[command(name = "gegen", version, about = "Jacobi and generalized Gegenbauer polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Jacobi,
    Gegenbauer,
    Gengeg,
    GengegOrthonormal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Parser)]
struct FamilyParams {
    #[arg(long, value_enum)]
    family: Family,
    /// Jacobi α (families: jacobi)
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// Jacobi β (families: jacobi)
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// λ (families: gegenbauer, gengeg, gengeg-orthonormal)
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    /// μ (families: gengeg, gengeg-orthonormal)
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
}

impl FamilyParams {
    fn require(opt: Option<f64>, name: &str) -> Result<f64, Error> {
        opt.ok_or_else(|| Error::domain(format!("missing required parameter --{name}")))
    }

    fn evaluator(&self) -> Result<Box<dyn Fn(usize, f64) -> Result<f64, Error>>, Error> {
        match self.family {
            Family::Jacobi => {
                let p = JacobiParams::new(
                    Self::require(self.alpha, "alpha")?,
                    Self::require(self.beta, "beta")?,
                )?;
                Ok(Box::new(move |n, t| jacobi_value(p, n, t)))
            }
            Family::Gegenbauer => {
                let p = GegenParams::new(Self::require(self.lambda, "lambda")?, 0.0)?;
                Ok(Box::new(move |n, t| gengeg_eval(p, n, t)))
            }
            Family::Gengeg => {
                let p = GegenParams::new(
                    Self::require(self.lambda, "lambda")?,
                    Self::require(self.mu, "mu")?,
                )?;
                Ok(Box::new(move |n, t| gengeg_eval(p, n, t)))
            }
            Family::GengegOrthonormal => {
                let p = GegenParams::new(
                    Self::require(self.lambda, "lambda")?,
                    Self::require(self.mu, "mu")?,
                )?;
                Ok(Box::new(move |n, t| gengeg_orthonormal_eval(p, n, t)))
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one polynomial at one point
    Eval {
        #[command(flatten)]
        family: FamilyParams,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Dump a CSV/JSON table of values over a t-grid for n = 0..n_max
    Table {
        #[command(flatten)]
        family: FamilyParams,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        t_min: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        t_max: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Print the nodes and weights of a Gauss-Jacobi rule
    Quadrature {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run a verification sweep; exit 0 on pass, 1 on fail
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
    /// Sup-norm sweep of the orthonormal family with exponent fit
    Asymptotics(SweepArgs),
}

#[derive(Parser)]
struct SweepArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: f64,
    #[arg(long, allow_hyphen_values = true)]
    mu: f64,
    #[arg(long, default_value_t = 100)]
    n_min: usize,
    #[arg(long, default_value_t = 2000)]
    n_max: usize,
    #[arg(long, default_value_t = 16)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SLOPE_TOL)]
    slope_tol: f64,
    #[arg(long, default_value_t = DEFAULT_BAND_TOL)]
    band_tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Parser)]
struct JacobiSweepArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    beta: f64,
    #[arg(long, default_value_t = 50)]
    n_min: usize,
    #[arg(long, default_value_t = 1600)]
    n_max: usize,
    #[arg(long, default_value_t = 6)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_BAND_TOL)]
    band_tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum VerifyCheck {
    /// Sup-norm growth of the orthonormal generalized Gegenbauer family
    Theorem1(SweepArgs),
    /// sin(θ/2)-weighted maxima bounds (requires α > 1/2)
    Lemma1(JacobiSweepArgs),
    /// Endpoint, half-segment, special-point, and θ-region facts
    JacobiFacts(JacobiSweepArgs),
    /// Growth band of the orthonormalization coefficients
    CoefficientGrowth {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, default_value_t = 100)]
        n_min: usize,
        #[arg(long, default_value_t = 100_000)]
        n_max: usize,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_BAND_TOL)]
        band_tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// 15 significant digits; exact zero prints as plain 0.
fn fmt15(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v:.14e}")
    }
}

fn pick_format(explicit: Option<Format>, out: &Option<PathBuf>) -> OutputFormat {
    match explicit {
        Some(Format::Csv) => OutputFormat::Csv,
        Some(Format::Json) => OutputFormat::Json,
        None => match out.as_ref().and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("json") => OutputFormat::Json,
            _ => OutputFormat::Csv,
        },
    }
}

fn open_sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    match out {
        Some(path) => File::create(path)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| Error::computation(format!("cannot open {}: {e}", path.display()))),
        None => Ok(Box::new(std::io::stdout())),
    }
}

fn write_report(
    report: &AsymptoticReport,
    out: &Option<PathBuf>,
    format: Option<Format>,
) -> Result<(), Error> {
    let mut sink = open_sink(out)?;
    emit_report(report, pick_format(format, out), &mut sink)?;
    sink.flush().map_err(|e| Error::computation(format!("write failure: {e}")))
}

fn finish_report(
    report: AsymptoticReport,
    out: &Option<PathBuf>,
    format: Option<Format>,
) -> Result<i32, Error> {
    write_report(&report, out, format)?;
    eprintln!(
        "verdict: {} (target exponent {}, fitted {}, ratio band [{}, {}])",
        if report.verdict == Verdict::Pass { "pass" } else { "fail" },
        fmt15(report.target_exponent),
        fmt15(report.fitted_exponent),
        fmt15(report.ratio_min),
        fmt15(report.ratio_max),
    );
    Ok(if report.verdict == Verdict::Pass { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Eval { family, n, t } => {
            let eval = family.evaluator()?;
            println!("{}", fmt15(eval(n, t)?));
            Ok(0)
        }
        Command::Table { family, n_max, t_min, t_max, points, out, format } => {
            if points < 2 || !(t_min < t_max) {
                return Err(Error::domain(
                    "table needs points >= 2 and t_min < t_max".to_string(),
                ));
            }
            let eval = family.evaluator()?;
            let mut rows: Vec<(usize, f64, f64)> = Vec::with_capacity((n_max + 1) * points);
            for n in 0..=n_max {
                for i in 0..points {
                    let t = t_min + (t_max - t_min) * i as f64 / (points - 1) as f64;
                    rows.push((n, t, eval(n, t)?));
                }
            }
            let mut sink = open_sink(&out)?;
            let io_err = |e: std::io::Error| Error::computation(format!("write failure: {e}"));
            match pick_format(format, &out) {
                OutputFormat::Csv => {
                    writeln!(sink, "n,t,value").map_err(io_err)?;
                    for (n, t, v) in rows {
                        writeln!(sink, "{n},{t},{v}").map_err(io_err)?;
                    }
                }
                OutputFormat::Json => {
                    let values: Vec<serde_json::Value> = rows
                        .into_iter()
                        .map(|(n, t, v)| serde_json::json!({"n": n, "t": t, "value": v}))
                        .collect();
                    serde_json::to_writer_pretty(&mut sink, &serde_json::json!({"values": values}))
                        .map_err(|e| Error::computation(format!("serialization failure: {e}")))?;
                    sink.write_all(b"\n").map_err(io_err)?;
                }
            }
            sink.flush().map_err(io_err)?;
            Ok(0)
        }
        Command::Quadrature { alpha, beta, m, out, format } => {
            let rule = gauss_jacobi_rule(JacobiParams::new(alpha, beta)?, m)?;
            let mut sink = open_sink(&out)?;
            let io_err = |e: std::io::Error| Error::computation(format!("write failure: {e}"));
            match pick_format(format, &out) {
                OutputFormat::Csv => {
                    writeln!(sink, "node,weight").map_err(io_err)?;
                    for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
                        writeln!(sink, "{x},{w}").map_err(io_err)?;
                    }
                }
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "alpha": alpha,
                        "beta": beta,
                        "m": m,
                        "nodes": rule.nodes,
                        "weights": rule.weights,
                    });
                    serde_json::to_writer_pretty(&mut sink, &value)
                        .map_err(|e| Error::computation(format!("serialization failure: {e}")))?;
                    sink.write_all(b"\n").map_err(io_err)?;
                }
            }
            sink.flush().map_err(io_err)?;
            Ok(0)
        }
        Command::Verify { check } => match check {
            VerifyCheck::Theorem1(args) => {
                let params = GegenParams::new(args.lambda, args.mu)?;
                let report = verify_theorem1(
                    params,
                    args.n_min,
                    args.n_max,
                    args.samples,
                    args.slope_tol,
                    args.band_tol,
                )?;
                finish_report(report, &args.out, args.format)
            }
            VerifyCheck::Lemma1(args) => {
                let params = JacobiParams::new(args.alpha, args.beta)?;
                let grid = log_spaced_grid(args.n_min, args.n_max, args.samples);
                let report = verify_lemma1(params, &grid, args.band_tol)?;
                finish_report(report, &args.out, args.format)
            }
            VerifyCheck::JacobiFacts(args) => {
                let params = JacobiParams::new(args.alpha, args.beta)?;
                let grid = log_spaced_grid(args.n_min, args.n_max, args.samples);
                let report = verify_jacobi_facts(params, &grid, args.band_tol)?;
                finish_report(report, &args.out, args.format)
            }
            VerifyCheck::CoefficientGrowth {
                lambda,
                mu,
                n_min,
                n_max,
                samples,
                band_tol,
                out,
                format,
            } => {
                let params = GegenParams::new(lambda, mu)?;
                let grid = log_spaced_grid(n_min, n_max, samples);
                let report = verify_coefficient_growth(params, &grid, band_tol)?;
                finish_report(report, &out, format)
            }
        },
        Command::Asymptotics(args) => {
            let params = GegenParams::new(args.lambda, args.mu)?;
            let report = verify_theorem1(
                params,
                args.n_min,
                args.n_max,
                args.samples,
                args.slope_tol,
                args.band_tol,
            )?;
            finish_report(report, &args.out, args.format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Error::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Error::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
