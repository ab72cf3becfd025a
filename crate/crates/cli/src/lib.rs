//! Command-line front end: argument parsing, dispatch to `hbound-core`, and
//! reports in text or structured (JSON) form.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

mod commands;
pub mod report;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use hbound_core::algebra::Rational;

pub use hbound_core::parse::{parse_poly, PolyExpression};
pub use report::{ErrorInfo, Format, Report, Value};

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

#[derive(Debug, Parser)]
#[command(name = "hbound", version, about = "Height bounds and bounded searches for Diophantine equations over function fields")]
pub(crate) struct Cli {
    /// Output form.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: FormatArg,
    /// Comma-separated assumptions to record as asserted:
    /// minimal, ks-full-rank, semistable, non-isotrivial, stable.
    #[arg(long, global = true, value_delimiter = ',')]
    pub assert_flags: Vec<String>,
    /// Names used in polynomial input for the roles x, y, t (comma-separated).
    #[arg(long, global = true, default_value = "x,y,t")]
    pub vars: String,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub(crate) enum FormatArg {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub(crate) struct PolyArgs {
    /// Polynomial text, e.g. "y^3 - x^4 + 6*t*x^3".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// File holding the polynomial text.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub(crate) enum MethodArg {
    Divisor,
    Bruteforce,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub(crate) enum ModeArg {
    Polynomial,
    Rational,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Cmd {
    /// Integer solutions of x^3 + y^3 = m.
    SolveInteger {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_z)]
        m: BigInt,
        #[arg(long, value_enum, default_value = "divisor")]
        method: MethodArg,
    },
    /// Smallest number that is a sum of two positive cubes in `ways` ways.
    Taxicab {
        #[arg(long, default_value_t = 2)]
        ways: u32,
    },
    /// Height of a rational point (x, y), and whether x^3 + y^3 = m.
    Height {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        x: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        y: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_z)]
        m: Option<BigInt>,
    },
    /// Invariants d, e, g, s, k, omega^2 of a family f(x, y, t).
    Invariants {
        #[command(flatten)]
        poly: PolyArgs,
        /// Use this k instead of computing it.
        #[arg(long)]
        k: Option<u64>,
        /// Use this s instead of computing it.
        #[arg(long)]
        s: Option<u64>,
    },
    /// Height bounds.
    Bound {
        #[command(subcommand)]
        which: BoundCmd,
    },
    /// Points over Q(t) of height at most n.
    Search {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "polynomial")]
        mode: ModeArg,
        /// Cap on S-polynomial reductions per Gröbner computation.
        #[arg(long)]
        max_reductions: Option<usize>,
    },
    /// Canonical class equalities and inequalities.
    Check {
        #[command(subcommand)]
        which: CheckCmd,
    },
    /// Surface geography rules on an integer grid, as CSV.
    GeographyRegion {
        #[arg(long, allow_hyphen_values = true)]
        c1_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1_max: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2_max: i64,
    },
    /// Frobenius twist of a polynomial over F_p, and optionally of a point.
    Twist {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        /// Numerator of x, a polynomial in t.
        #[arg(long, allow_hyphen_values = true)]
        px: Option<String>,
        /// Numerator of y, a polynomial in t.
        #[arg(long, allow_hyphen_values = true)]
        py: Option<String>,
        /// Common denominator, a polynomial in t.
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        pr: String,
    },
}

#[derive(Debug, Args)]
pub(crate) struct PointHeight {
    /// Height of a point to compare with the bound.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
    pub h: Option<Rational>,
}

#[derive(Debug, Subcommand)]
pub(crate) enum BoundCmd {
    /// ((d^2 - 3d + 1)(s - 1) + k) / (d - 3), from numbers or a polynomial.
    TanPlane {
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        point: PointHeight,
    },
    /// (2g - 1)(d(P) + 3s) - omega^2.
    TanGeneral {
        #[arg(long)]
        g: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q, default_value = "-2")]
        dp: Rational,
        #[arg(long)]
        s: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        omega2: Rational,
        #[command(flatten)]
        point: PointHeight,
    },
    /// 4d(P) + 4c2 - c1^2 - 4(g_B - 1).
    Moriwaki {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q, default_value = "-2")]
        dp: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        c1sq: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        c2: Rational,
        #[arg(long)]
        gb: u64,
        #[command(flatten)]
        point: PointHeight,
    },
    /// (2 + epsilon) d(P) + C.
    Vojta {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q, default_value = "-2")]
        dp: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        epsilon: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        constant: Rational,
        #[command(flatten)]
        point: PointHeight,
    },
    /// p^e (2g - 2) d(P), leading term.
    CharP {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        dp: Rational,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        #[command(flatten)]
        point: PointHeight,
    },
    /// 2g_B - 2 + s.
    Inseparable {
        #[arg(long)]
        gb: u64,
        #[arg(long)]
        s: u64,
        #[command(flatten)]
        point: PointHeight,
    },
}

#[derive(Debug, Args)]
pub(crate) struct FamilyNumbers {
    #[arg(long)]
    pub g: Option<u64>,
    #[arg(long)]
    pub gb: Option<u64>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
    pub omega2: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
    pub delta: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
    pub lambda: Option<Rational>,
}

#[derive(Debug, Subcommand)]
pub(crate) enum CheckCmd {
    /// 12 lambda = omega^2 + delta (and c1^2 + c2 = 12 chi when g, g_B are given).
    Noether {
        #[command(flatten)]
        n: FamilyNumbers,
    },
    /// (1 - 1/g) delta <= (2 + 1/g) omega^2.
    Chx {
        #[command(flatten)]
        n: FamilyNumbers,
    },
    /// omega^2 <= (2g - 2)(2g_B - 2) + 3 delta.
    My {
        #[command(flatten)]
        n: FamilyNumbers,
    },
    /// delta <= 5 omega^2 + 9(2g - 2)(2g_B - 2) + 36.
    NoetherIneq {
        #[command(flatten)]
        n: FamilyNumbers,
    },
    /// Miyaoka-Yau, mod 12, positivity and Noether's line for (c1^2, c2).
    Geography {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_z)]
        c1sq: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_z)]
        c2: BigInt,
    },
    /// delta <= (1 + o) omega^2.
    Ehm {
        #[command(flatten)]
        n: FamilyNumbers,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        o_term: Rational,
    },
    /// Log surface numbers of a section and both forms of the height bound.
    LogMy {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        gb: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        omega2: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        omega_p: Rational,
    },
}

fn parse_q(s: &str) -> std::result::Result<Rational, String> {
    let p = hbound_core::parse::parse_rational(s, &[]).map_err(|e| e.to_string())?;
    if !p.is_constant() {
        return Err(format!("`{s}` is not a number"));
    }
    Ok(p.constant_term())
}

fn parse_z(s: &str) -> std::result::Result<BigInt, String> {
    s.trim().parse::<BigInt>().map_err(|_| format!("`{s}` is not an integer"))
}

/// Errors from a command handler.
#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Domain(hbound_core::Error),
}

impl From<hbound_core::Error> for CliError {
    fn from(e: hbound_core::Error) -> Self {
        CliError::Domain(e)
    }
}

fn requested_format(args: &[String]) -> Format {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let v = if a == "--format" {
            it.next().map(|s| s.as_str())
        } else {
            a.strip_prefix("--format=")
        };
        if v == Some("structured") {
            return Format::Structured;
        }
    }
    Format::Text
}

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let argv = std::iter::once("hbound".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                let code = if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 };
                return Outcome { code, stdout: e.to_string(), stderr: String::new(), report: None };
            }
            let mut report = Report::new(&args.first().cloned().unwrap_or_default());
            let message = e.to_string();
            let first_line = message.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            report.error = Some(ErrorInfo { code: "usage".into(), message: first_line });
            return Outcome { code: 2, stdout: report.render(requested_format(&args)), stderr: message, report: Some(report) };
        }
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    let mut report = Report::new(&commands::command_name(&cli.cmd));
    let code = match commands::dispatch(&cli, &mut report) {
        Ok(()) => 0,
        Err(CliError::Usage(m)) => {
            report.error = Some(ErrorInfo { code: "usage".into(), message: m });
            2
        }
        Err(CliError::Domain(e)) => {
            report.error = Some(ErrorInfo { code: e.code().into(), message: e.to_string() });
            1
        }
    };
    let stderr = report.error.as_ref().map(|e| format!("hbound: {}\n", e.message)).unwrap_or_default();
    if report.error.is_some() {
        report.raw_text = None;
    }
    Outcome { code, stdout: report.render(format), stderr, report: Some(report) }
}
