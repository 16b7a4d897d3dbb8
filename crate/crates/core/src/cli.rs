//! Command-line front end.
//!
//! All logic lives here so it can be driven from tests; the `commutant`
//! binary only forwards `std::env::args` and exits with the returned code.
//!
//! Exit codes:
//!
//! | code | meaning                                             |
//! |------|-----------------------------------------------------|
//! | 0    | success                                             |
//! | 1    | malformed flags, non-prime `p`, unreadable budget   |
//! | 2    | invalid `f` (identity, `a = 0`, coefficient ≥ p)    |
//! | 3    | degree or orbit index outside the supported range   |
//! | 4    | `verify`: construction, formula and oracle disagree |
//! | 5    | oracle search exceeds the candidate budget          |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::commutant::{count, enumerate, CommutantSpec};
use crate::error::Error;
use crate::ff::FieldContext;
use crate::oracle::{brute_force_commutant, check_budget, compare_sets, OracleBudget};
use crate::orbits::{build_orbits, OrbitTriple};
use crate::poly::DensePolynomial;
use crate::similarity::LinearPolynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_F: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_ORACLE_TOO_LARGE: i32 = 5;

/// Overrides the oracle's default candidate budget.
pub const BUDGET_ENV: &str = "COMMUTANT_ORACLE_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "commutant",
    version,
    about = "Polynomials over F_p that commute with a linear polynomial"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form size of C_d(f)
    Count(SpecArgs),
    /// List C_d(f) by construction
    Enumerate(SpecArgs),
    /// Print the T_k / R_k / S_k table for 0..=k
    Orbits(OrbitArgs),
    /// List C_d(f) by exhaustive search
    Oracle(SpecArgs),
    /// Compare construction, formula and exhaustive search
    Verify(SpecArgs),
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Odd prime modulus
    #[arg(long)]
    p: u64,
    /// f = ax + b given as "a,b"
    #[arg(long, value_parser = parse_pair)]
    f: (u64, u64),
    /// Degree d of the commuting polynomials
    #[arg(long)]
    degree: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OrbitArgs {
    #[arg(long)]
    p: u64,
    /// Largest orbit index, 0 <= k <= p
    #[arg(long)]
    k: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to FILE (atomically) instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"a,b\", got {s:?}"))?;
    let parse = |v: &str| {
        v.trim()
            .parse::<u64>()
            .map_err(|e| format!("bad coefficient {v:?}: {e}"))
    };
    Ok((parse(a)?, parse(b)?))
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::IdentityPolynomial | Error::ZeroLeadingCoefficient => EXIT_INVALID_F,
            Error::UnsupportedDegree { .. } | Error::OrbitOutOfRange { .. } => EXIT_UNSUPPORTED,
            Error::OracleTooLarge { .. } => EXIT_ORACLE_TOO_LARGE,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_USAGE, format!("i/o error: {e}"))
    }
}

/// Runs the CLI with the budget taken from `COMMUTANT_ORACLE_BUDGET`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let budget = std::env::var(BUDGET_ENV).ok();
    run_with_budget(args, budget.as_deref(), stdout, stderr)
}

/// Runs the CLI with an explicit budget override (the raw env-var value).
pub fn run_with_budget<I, T>(
    args: I,
    budget: Option<&str>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, budget, stdout) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(
    command: Command,
    budget: Option<&str>,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Count(args) => {
            let spec = resolve_spec(&args)?;
            let c = count(&spec)?;
            let body = render_count(&spec, &c.count, c.branch.as_str(), args.output.format);
            emit(&body, &args.output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate(args) => {
            let spec = resolve_spec(&args)?;
            let members = enumerate(&spec)?;
            let body = render_members(&members, spec.d(), args.output.format);
            emit(&body, &args.output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Orbits(args) => {
            let ctx = field(args.p)?;
            if args.k > ctx.p() {
                return Err(Error::OrbitOutOfRange {
                    k: args.k,
                    p: ctx.p(),
                }
                .into());
            }
            let rows = (0..=args.k)
                .map(|k| build_orbits(&ctx, k))
                .collect::<Result<Vec<_>, _>>()?;
            emit(
                &render_orbits(&rows, args.output.format),
                &args.output,
                stdout,
            )?;
            Ok(EXIT_OK)
        }
        Command::Oracle(args) => {
            let spec = resolve_spec(&args)?;
            let budget = parse_budget(budget)?;
            let members = brute_force_commutant(&spec.f().to_poly(), spec.d(), &budget)?;
            let body = render_members(&members, spec.d(), args.output.format);
            emit(&body, &args.output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let spec = resolve_spec(&args)?;
            let budget = parse_budget(budget)?;
            let formula = count(&spec)?.count;
            check_budget(spec.context().p(), spec.d(), &budget)?;
            let constructed = enumerate(&spec)?;
            let oracle = brute_force_commutant(&spec.f().to_poly(), spec.d(), &budget)?;
            let report = compare_sets(&constructed, &oracle);
            let agree = report.passed() && formula == BigUint::from(oracle.len());
            let body = render_verify(&spec, &formula, &report, agree, args.output.format);
            emit(&body, &args.output, stdout)?;
            Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn field(p: u64) -> Result<FieldContext, Failure> {
    FieldContext::new(p).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))
}

fn resolve_spec(args: &SpecArgs) -> Result<CommutantSpec, Failure> {
    let ctx = field(args.p)?;
    let (a, b) = args.f;
    let p = ctx.p();
    if a == 0 || a >= p || b >= p {
        return Err(Failure::new(
            EXIT_INVALID_F,
            format!("f = {a},{b} must satisfy 0 < a < {p} and 0 <= b < {p}"),
        ));
    }
    let f = LinearPolynomial::from_ints(ctx, a, b)?;
    Ok(CommutantSpec::new(f, args.degree)?)
}

fn parse_budget(raw: Option<&str>) -> Result<OracleBudget, Failure> {
    match raw {
        None => Ok(OracleBudget::default()),
        Some(v) => v
            .trim()
            .parse::<u128>()
            .ok()
            .filter(|&n| n > 0)
            .map(OracleBudget::new)
            .ok_or_else(|| {
                Failure::new(
                    EXIT_USAGE,
                    format!("{BUDGET_ENV} must be a positive integer, got {v:?}"),
                )
            }),
    }
}

/// Writes to `--out` via a temp file in the same directory and a rename, or
/// to stdout.
fn emit(body: &str, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &output.out {
        Some(path) => write_atomically(path, body.as_bytes()),
        None => {
            stdout.write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Failure::from(e.error))?;
    Ok(())
}

fn count_value(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn render_count(spec: &CommutantSpec, n: &BigUint, branch: &str, format: Format) -> String {
    let (p, a, b) = spec_ints(spec);
    match format {
        Format::Text => format!("{n}\n"),
        Format::Json => {
            let v = json!({
                "p": p,
                "f": [a, b],
                "d": spec.d(),
                "count": count_value(n),
                "branch": branch,
            });
            format!("{v}\n")
        }
        Format::Csv => format!(
            "p,a,b,d,count,branch\n{p},{a},{b},{},{n},{branch}\n",
            spec.d()
        ),
    }
}

fn spec_ints(spec: &CommutantSpec) -> (u64, u64, u64) {
    let f = spec.f();
    (spec.context().p(), f.a().value(), f.b().value())
}

fn padded(g: &DensePolynomial, d: u64) -> Vec<u64> {
    let mut v = g.coeffs().to_vec();
    v.resize((d as usize + 1).max(v.len()), 0);
    v
}

fn render_members(members: &[DensePolynomial], d: u64, format: Format) -> String {
    match format {
        Format::Text => members.iter().map(|g| format!("{g}\n")).collect(),
        Format::Json => {
            let arrays: Vec<&[u64]> = members.iter().map(|g| g.coeffs()).collect();
            format!("{}\n", json!(arrays))
        }
        Format::Csv => {
            let header: Vec<String> = (0..=d).map(|i| format!("c{i}")).collect();
            let mut out = header.join(",");
            out.push('\n');
            for g in members {
                let row: Vec<String> = padded(g, d).iter().map(u64::to_string).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
    }
}

fn brace(set: &[u64]) -> String {
    let items: Vec<String> = set.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn render_orbits(rows: &[OrbitTriple], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::from("k | T_k | R_k | S_k\n");
            for o in rows {
                out.push_str(&format!(
                    "{} | {} | {} | {}\n",
                    o.k(),
                    brace(o.t()),
                    brace(o.r()),
                    brace(o.s())
                ));
            }
            out
        }
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|o| json!({"k": o.k(), "T": o.t(), "R": o.r(), "S": o.s()}))
                .collect();
            format!("{}\n", Value::Array(v))
        }
        Format::Csv => {
            let join = |s: &[u64]| s.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            let mut out = String::from("k,T,R,S\n");
            for o in rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    o.k(),
                    join(o.t()),
                    join(o.r()),
                    join(o.s())
                ));
            }
            out
        }
    }
}

fn render_verify(
    spec: &CommutantSpec,
    formula: &BigUint,
    report: &crate::oracle::ComparisonReport,
    agree: bool,
    format: Format,
) -> String {
    let (p, a, b) = spec_ints(spec);
    let verdict = if agree { "agree" } else { "MISMATCH" };
    match format {
        Format::Text => format!(
            "p: {p}\nf: {}\ndegree: {}\nformula: {formula}\n{report}result: {verdict}\n",
            spec.f(),
            spec.d()
        ),
        Format::Json => {
            let list = |v: &[DensePolynomial]| -> Vec<Vec<u64>> {
                v.iter().map(|g| g.coeffs().to_vec()).collect()
            };
            let v = json!({
                "p": p,
                "f": [a, b],
                "d": spec.d(),
                "formula": count_value(formula),
                "constructed": report.constructed_len,
                "oracle": report.oracle_len,
                "missing": list(&report.missing),
                "extra": list(&report.extra),
                "duplicates": report.duplicates,
                "agree": agree,
            });
            format!("{v}\n")
        }
        Format::Csv => format!(
            "p,a,b,d,formula,constructed,oracle,missing,extra,agree\n{p},{a},{b},{},{formula},{},{},{},{},{agree}\n",
            spec.d(),
            report.constructed_len,
            report.oracle_len,
            report.missing.len(),
            report.extra.len(),
        ),
    }
}
