//! Command-line front end. The parsing and dispatch live in the library
//! so the whole surface is testable; `main` is a one-liner around
//! [`run`].

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use serde_json::json;

use crate::bd::bd_poly;
use crate::numeric::{cross_check, ratio_sequence};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{delta, schur, skew_schur, SymPoly, SymbolSpec};
use crate::tw::{tw_poly, tw_poly_auto};

#[derive(Parser)]
#[command(
    name = "toeplitz-minors",
    about = "Toeplitz minor determinant ratios: exact polynomials and numeric cross-checks",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format for every subcommand.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class-sum/Laguerre polynomial for a pair of partitions.
    Bd {
        #[arg(long, value_parser = parse_partition, default_value = "")]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        mu: Partition,
        /// Also evaluate the polynomial at this symbol spec (JSON file).
        #[arg(long)]
        spec: Option<String>,
    },
    /// Print the half-strip determinant polynomial for a pair of partitions.
    Tw {
        #[arg(long, value_parser = parse_partition, default_value = "")]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        mu: Partition,
        /// Matrix dimension; defaults to the smallest admissible one.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        spec: Option<String>,
    },
    /// Verify that the two exact polynomials agree for every pair of
    /// partitions up to the given weight.
    IdentityCheck {
        #[arg(long)]
        max_weight: u32,
    },
    /// Verify both derivative identities and the skew-function expansion
    /// of the cross differential operator, pair by pair.
    DeltaCheck {
        #[arg(long)]
        max_weight: u32,
    },
    /// Print the numeric determinant ratio for each requested matrix size.
    RatioNumeric {
        #[arg(long)]
        spec: String,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        mu: Partition,
        /// Comma-separated matrix sizes, e.g. 8,16,32,64.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
    /// Compare all three computations of the ratio at one matrix size.
    CrossCheck {
        #[arg(long)]
        spec: String,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        mu: Partition,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long, value_parser = parse_tolerance, default_value = "1e-6")]
        tol: f64,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Ok(Partition::empty());
    }
    let parts: Vec<u32> = trimmed
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid partition part {:?}", piece))
        })
        .collect::<Result<_, _>>()?;
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(format!(
            "partition parts must be weakly decreasing, got {:?}",
            trimmed
        ));
    }
    Ok(Partition::new(parts))
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let tol: f64 = s
        .parse()
        .map_err(|_| format!("invalid tolerance {:?}", s))?;
    if tol > 0.0 {
        Ok(tol)
    } else {
        Err("tolerance must be positive".to_string())
    }
}

fn load_spec(path: &str) -> Result<SymbolSpec, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read spec file {:?}: {}", path, e))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse spec file {:?}: {}", path, e))
}

fn complex_pair(z: Complex64) -> serde_json::Value {
    json!([z.re, z.im])
}

/// Parses the arguments (without the binary name) and executes one
/// command, writing the report to `out`. Returns the process exit code:
/// 0 iff the command and every check it ran succeeded, 2 for usage
/// errors.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv =
        std::iter::once(OsString::from("toeplitz-minors")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e);
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {}", e);
            2
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    let format = cli.format;
    match cli.command {
        Command::Bd { lambda, mu, spec } => {
            let poly = bd_poly(&lambda, &mu);
            print_poly("bd", &lambda, &mu, &poly, spec.as_deref(), format, out)
        }
        Command::Tw {
            lambda,
            mu,
            d,
            spec,
        } => {
            let poly = match d {
                Some(d) => tw_poly(&lambda, &mu, d).map_err(|e| e.to_string())?,
                None => tw_poly_auto(&lambda, &mu),
            };
            print_poly("tw", &lambda, &mu, &poly, spec.as_deref(), format, out)
        }
        Command::IdentityCheck { max_weight } => check_identity(max_weight, format, out),
        Command::DeltaCheck { max_weight } => check_delta(max_weight, format, out),
        Command::RatioNumeric {
            spec,
            lambda,
            mu,
            n,
        } => {
            let spec = load_spec(&spec)?;
            let ratios = ratio_sequence(&spec, &lambda, &mu, &n).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    for (&size, ratio) in n.iter().zip(&ratios) {
                        w(out, format_args!("n={} ratio={}", size, ratio))?;
                    }
                }
                Format::Json => {
                    let value = json!({
                        "command": "ratio-numeric",
                        "lambda": lambda,
                        "mu": mu,
                        "n": n,
                        "ratios": ratios.iter().map(|&z| complex_pair(z)).collect::<Vec<_>>(),
                    });
                    w(out, format_args!("{}", value))?;
                }
            }
            Ok(0)
        }
        Command::CrossCheck {
            spec,
            lambda,
            mu,
            n,
            tol,
        } => {
            let spec = load_spec(&spec)?;
            let report = cross_check(&spec, &lambda, &mu, n, tol).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    w(
                        out,
                        format_args!("lambda={} mu={} n={}", report.lambda, report.mu, report.n),
                    )?;
                    w(
                        out,
                        format_args!("ratio_numeric = {}", report.ratio_numeric),
                    )?;
                    w(out, format_args!("bd_value = {}", report.bd_value))?;
                    w(out, format_args!("tw_value = {}", report.tw_value))?;
                    w(
                        out,
                        format_args!("max_discrepancy = {:e}", report.max_discrepancy),
                    )?;
                    w(out, format_args!("converged = {}", report.converged))?;
                }
                Format::Json => {
                    let value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
                    w(out, format_args!("{}", value))?;
                }
            }
            Ok(if report.converged { 0 } else { 1 })
        }
    }
}

fn print_poly(
    name: &str,
    lambda: &Partition,
    mu: &Partition,
    poly: &SymPoly,
    spec_path: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let value = match spec_path {
        Some(path) => Some(poly.evaluate(&load_spec(path)?)),
        None => None,
    };
    match format {
        Format::Text => {
            w(out, format_args!("{}", poly))?;
            if let Some(v) = value {
                w(out, format_args!("value = {}", v))?;
            }
        }
        Format::Json => {
            let mut object = json!({
                "command": name,
                "lambda": lambda,
                "mu": mu,
                "poly": serde_json::to_value(poly).map_err(|e| e.to_string())?,
            });
            if let Some(v) = value {
                object["value"] = complex_pair(v);
            }
            w(out, format_args!("{}", object))?;
        }
    }
    Ok(0)
}

fn weight_pairs(max_weight: u32) -> Vec<(Partition, Partition)> {
    let shapes: Vec<Partition> = (0..=max_weight).flat_map(partitions_of).collect();
    shapes
        .iter()
        .flat_map(|a| shapes.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn check_identity(max_weight: u32, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let mut all_ok = true;
    let mut pairs = Vec::new();
    for (lambda, mu) in weight_pairs(max_weight) {
        let ok = bd_poly(&lambda, &mu) == tw_poly_auto(&lambda, &mu);
        all_ok &= ok;
        if format == Format::Text {
            w(
                out,
                format_args!(
                    "lambda={} mu={} {}",
                    lambda,
                    mu,
                    if ok { "ok" } else { "FAIL" }
                ),
            )?;
        }
        pairs.push((lambda, mu, ok));
    }
    match format {
        Format::Text => {
            let passed = pairs.iter().filter(|(_, _, ok)| *ok).count();
            w(
                out,
                format_args!("identity-check: {}/{} pairs ok", passed, pairs.len()),
            )?;
        }
        Format::Json => {
            let value = json!({
                "command": "identity-check",
                "max_weight": max_weight,
                "pairs": pairs
                    .iter()
                    .map(|(l, m, ok)| json!({"lambda": l, "mu": m, "ok": ok}))
                    .collect::<Vec<_>>(),
                "all_ok": all_ok,
            });
            w(out, format_args!("{}", value))?;
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn check_delta(max_weight: u32, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let empty = Partition::empty();
    let mut all_ok = true;
    let mut records = Vec::new();
    for (lambda, mu) in weight_pairs(max_weight) {
        let bd_ok =
            delta(&(&bd_poly(&lambda, &empty) * &bd_poly(&empty, &mu))) == bd_poly(&lambda, &mu);
        let tw_ok = delta(&(&tw_poly_auto(&lambda, &empty) * &tw_poly_auto(&empty, &mu)))
            == tw_poly_auto(&lambda, &mu);
        let skew_ok =
            delta(&(&schur(&lambda, false) * &schur(&mu, true))) == skew_expansion(&lambda, &mu);
        for (check, ok) in [
            ("bd-derivative", bd_ok),
            ("tw-derivative", tw_ok),
            ("skew-expansion", skew_ok),
        ] {
            all_ok &= ok;
            if format == Format::Text {
                w(
                    out,
                    format_args!(
                        "{} lambda={} mu={} {}",
                        check,
                        lambda,
                        mu,
                        if ok { "ok" } else { "FAIL" }
                    ),
                )?;
            }
            records.push(json!({
                "check": check,
                "lambda": lambda,
                "mu": mu,
                "ok": ok,
            }));
        }
    }
    match format {
        Format::Text => {
            w(
                out,
                format_args!(
                    "delta-check: {}/{} checks ok",
                    records.iter().filter(|r| r["ok"] == json!(true)).count(),
                    records.len()
                ),
            )?;
        }
        Format::Json => {
            let value = json!({
                "command": "delta-check",
                "max_weight": max_weight,
                "checks": records,
                "all_ok": all_ok,
            });
            w(out, format_args!("{}", value))?;
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

// sum over nu of s_{lambda/nu} * st_{mu/nu}; only nu inside both
// partitions contribute.
fn skew_expansion(lambda: &Partition, mu: &Partition) -> SymPoly {
    let bound = lambda.weight().min(mu.weight());
    let mut total = SymPoly::zero();
    for nu_weight in 0..=bound {
        for nu in partitions_of(nu_weight) {
            if !(lambda.contains(&nu) && mu.contains(&nu)) {
                continue;
            }
            total = &total + &(&skew_schur(lambda, &nu, false) * &skew_schur(mu, &nu, true));
        }
    }
    total
}

fn w(out: &mut dyn Write, args: std::fmt::Arguments<'_>) -> Result<(), String> {
    writeln!(out, "{}", args).map_err(|e| format!("write failed: {}", e))
}
