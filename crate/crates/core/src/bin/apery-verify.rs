//! Command-line front end: run checks, list the registry, evaluate functions
//! and check functional-equation files.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rug::Float;
use serde_json::json;

use apery_verify::logsine::{lsc, lshch};
use apery_verify::numkernel::{constant, parse_real, ConstantName, PrecComplex};
use apery_verify::polylog::li;
use apery_verify::runner::{self, CheckReport, Status, EXACT_PRECISION, EXACT_ZERO};
use apery_verify::series::{apery_sum, SeriesVariant};
use apery_verify::svpolylog::{d_classic, d_tilde};
use apery_verify::symtensor::check_fe;
use apery_verify::{Error, Result};

/// `println!` that ignores a closed stdout (e.g. output piped into `head`).
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "apery-verify", version, about = "Verify Apéry-like series evaluations and the identities behind them")]
struct Cli {
    /// Working precision in decimal digits (overrides --precision-bits).
    #[arg(long, global = true)]
    digits: Option<u32>,
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = 256)]
    precision_bits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Run checks in parallel.
    #[arg(long, global = true)]
    parallel: bool,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = runner::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check by id, or every check matching a glob such as 'TBP-*'.
    Verify { pattern: String },
    /// List registered checks.
    List,
    /// Evaluate a function: li J Z | d M X | d_tilde M X | lsc J K THETA |
    /// lshch J K X | apery_sum VARIANT [DIGITS] | const NAME.
    /// Complex arguments are written a+bi; put `--` before an argument that
    /// starts with '-' and is not a plain number.
    Eval {
        function: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// Compute the tensor invariant of a functional-equation file.
    CheckFe { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let p = match cli.digits {
        Some(d) => (f64::from(d) / std::f64::consts::LOG10_2).ceil() as u32 + 10,
        None => cli.precision_bits,
    };
    let result = match &cli.command {
        Command::Verify { pattern } => Ok(verify(&cli, pattern, p)),
        Command::List => {
            list(cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { function, args } => eval(cli.format, function, args, p),
        Command::CheckFe { file } => fe(cli.format, file),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn verify(cli: &Cli, pattern: &str, p: u32) -> ExitCode {
    let is_glob = pattern.contains(['*', '?']);
    let reports = if is_glob {
        runner::run_suite_seeded(pattern, p, cli.parallel, cli.seed)
    } else {
        vec![runner::run_check_seeded(pattern, p, cli.seed)]
    };
    if reports.is_empty() {
        eprintln!("error: no checks match '{pattern}'");
        return ExitCode::from(2);
    }
    match cli.format {
        Format::Json => say!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize")),
        Format::Table => print_table(&reports),
    }
    if reports.iter().any(|r| r.status == Status::Error) {
        ExitCode::from(2)
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_table(reports: &[CheckReport]) {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    say!("{:<width$}  {:<6} {:>9} {:>6} {:>8}  statement", "id", "status", "log10 res", "bits", "ms");
    for r in reports {
        let res = if r.residual_log10 == EXACT_ZERO { "exact".to_string() } else { r.residual_log10.to_string() };
        let bits = if r.precision_bits == EXACT_PRECISION { "exact".to_string() } else { r.precision_bits.to_string() };
        say!("{:<width$}  {:<6} {:>9} {:>6} {:>8}  {}", r.id, r.status, res, bits, r.elapsed_ms, r.reference);
        if let Some(m) = &r.message {
            say!("{:<width$}  {m}", "");
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    say!("{passed}/{} passed", reports.len());
}

fn list(format: Format) {
    let checks = runner::list_checks();
    match format {
        Format::Json => say!("{}", serde_json::to_string_pretty(&checks).expect("listing serializes")),
        Format::Table => {
            let width = checks.iter().map(|c| c.id.len()).max().unwrap_or(2);
            for c in &checks {
                say!("{:<width$}  {:<8}  {}", c.id, c.kind, c.reference);
            }
        }
    }
}

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.parse().map_err(|_| Error::InvalidArgument(format!("{what} must be a nonnegative integer, got '{s}'")))
}

/// Parse `a`, `bi`, `a+bi` or `a-bi` (`i` alone means the imaginary unit).
fn parse_complex(s: &str, p: u32) -> Result<PrecComplex> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(PrecComplex::from_real(&parse_real(&t, p)?));
    };
    // split at the last sign that is not an exponent sign or the leading one
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let im = im.strip_prefix('+').unwrap_or(im);
    Ok(PrecComplex::new(parse_real(re, p)?, parse_real(im, p)?))
}

fn args_exact<'a>(args: &'a [String], n: usize, usage: &str) -> Result<&'a [String]> {
    if args.len() != n {
        return Err(Error::InvalidArgument(format!("usage: eval {usage}")));
    }
    Ok(args)
}

fn eval(format: Format, function: &str, args: &[String], p: u32) -> Result<ExitCode> {
    let digits = runner::digits_for_bits(p) as usize;
    let show = |x: &Float| x.to_string_radix(10, Some(digits));
    let (value, extra): (String, Option<String>) = match function {
        "li" => {
            let a = args_exact(args, 2, "li J Z")?;
            let v = li(parse_u32(&a[0], "J")?, &parse_complex(&a[1], p)?, p)?;
            let sign = if v.im.is_sign_negative() { "-" } else { "+" };
            (format!("{} {sign} {}i", show(&v.re), show(&Float::with_val(p, v.im.abs_ref()))), None)
        }
        "d" | "d_tilde" => {
            let a = args_exact(args, 2, &format!("{function} M X"))?;
            let (m, x) = (parse_u32(&a[0], "M")?, parse_complex(&a[1], p)?);
            let v = if function == "d" { d_classic(m, &x, p)? } else { d_tilde(m, &x, p)? };
            (show(&v), None)
        }
        "lsc" | "lshch" => {
            let a = args_exact(args, 3, &format!("{function} J K ARG"))?;
            let (j, k, x) = (parse_u32(&a[0], "J")?, parse_u32(&a[1], "K")?, parse_real(&a[2], p)?);
            let q = if function == "lsc" { lsc(j, k, &x, p)? } else { lshch(j, k, &x, p)? };
            (show(&q.value), Some(format!("error estimate {:.3e}", q.error_estimate.to_f64())))
        }
        "apery_sum" => {
            if args.is_empty() || args.len() > 2 {
                return Err(Error::InvalidArgument("usage: eval apery_sum VARIANT [DIGITS]".into()));
            }
            let variant: SeriesVariant = args[0].parse()?;
            let t = match args.get(1) {
                Some(d) => parse_u32(d, "DIGITS")?,
                None => (digits as u32).max(10),
            };
            // the summation needs about 3.33 bits per certified digit plus guard bits
            let work = p.max((3.33 * f64::from(t)).ceil() as u32 + 64);
            let (v, tail) = apery_sum(variant, work, t)?;
            let shown = v.to_string_radix(10, Some(t as usize));
            (shown, Some(format!("{} terms, tail bound {:.3e}", tail.terms, tail.bound.to_f64())))
        }
        "const" => {
            let a = args_exact(args, 1, "const NAME")?;
            let name: ConstantName = a[0].parse()?;
            (show(&constant(name, p)?), None)
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown function '{other}'; expected li, d, d_tilde, lsc, lshch, apery_sum or const"
            )))
        }
    };
    match format {
        Format::Json => say!(
            "{}",
            json!({"function": function, "args": args, "precision_bits": p, "value": value, "note": extra})
        ),
        Format::Table => {
            say!("{value}");
            if let Some(e) = extra {
                say!("({e})");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn fe(format: Format, file: &PathBuf) -> Result<ExitCode> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", file.display())))?;
    let out = check_fe(&text)?;
    let components: Vec<String> = out.tensor.render(&out.var).lines().map(str::to_string).collect();
    match format {
        Format::Json => say!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "file": file.display().to_string(),
                "m": out.m,
                "var": out.var,
                "terms": out.terms,
                "merged_terms": out.merged_terms,
                "zero": out.is_zero(),
                "components": if out.is_zero() { Vec::new() } else { components },
            }))
            .expect("json")
        ),
        Format::Table => {
            say!("m = {}, {} terms ({} after merging equal arguments)", out.m, out.terms, out.merged_terms);
            if out.is_zero() {
                say!("tensor invariant: 0 (D̃_{} of the combination is constant)", out.m);
            } else {
                say!("tensor invariant: {} nonzero components", out.tensor.len());
                for c in components {
                    say!("  {c}");
                }
            }
        }
    }
    Ok(if out.is_zero() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
