//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fockwc_core::dynamics::{
    hull_distance, orbit, ratio_experiment, route_agreement, OrbitRecord, Route, ZeroFree,
};
use fockwc_core::fock::build_matrix;
use fockwc_core::{
    check_bounded, classify_full, AffineMap, CoeffVector, Complex, Error as CoreError,
    ExactAngle, Irrational, Multiplier, OperatorSymbol, Scalar, TruncationParams,
};
use serde_json::json;

use crate::format::{self, parse_rational, FormatError, SCHEMA};
use crate::verify::{verify, verify_csv, verify_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_UNBOUNDED: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

/// Largest truncation accepted when `FOCKWC_MAX_N` is unset.
pub const DEFAULT_MAX_N: usize = 4096;

#[derive(Debug, Parser)]
#[command(name = "fockwc", version, about = "Weighted composition operators on the Fock space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide boundedness, cyclicity, convex-cyclicity and supercyclicity.
    Classify(CommonArgs),
    /// Write the truncated matrix.
    Matrix(CommonArgs),
    /// Run the numerical self-checks at N and 2N.
    Verify(VerifyArgs),
    /// Compute an orbit by both routes, optionally with a hull-distance curve.
    Orbit(OrbitArgs),
    /// Bounded-ratio experiment on an invariant disk.
    Ratio(RatioArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct SymbolArgs {
    /// Symbol JSON file; excludes the inline flags.
    #[arg(long, conflicts_with_all = ["a_mod", "a_turns", "a_re", "a_im", "b", "c", "d", "p"])]
    pub file: Option<PathBuf>,
    /// Exact modulus of a (default 1 with --a-turns).
    #[arg(long)]
    pub a_mod: Option<f64>,
    /// Exact angle of a in turns: p/q, or [r*]name with name in sqrt2, sqrt3, sqrt5, golden.
    #[arg(long, allow_hyphen_values = true)]
    pub a_turns: Option<String>,
    /// Real part of a (inexact mode).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a_mod", "a_turns"])]
    pub a_re: Option<f64>,
    /// Imaginary part of a (inexact mode).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a_mod", "a_turns"])]
    pub a_im: Option<f64>,
    /// Translation b, e.g. 1, 1+1i, -0.5i.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Exponent c of the multiplier, or `kernel` for c = -a conj(b).
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// Leading scalar d of the multiplier.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// Polynomial factor, constant term first, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file (default standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    /// Truncation N.
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Eigen-residual tolerance.
    #[arg(long, default_value_t = 1e-8)]
    pub residual_tol: f64,
    /// Relative-change stopping tolerance of the singular-value iteration.
    #[arg(long, default_value_t = 1e-10)]
    pub sv_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Matrix,
    Closed,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct OrbitArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    /// Number of steps: the orbit holds f, W f, ..., W^n f.
    #[arg(long, default_value_t = 5)]
    pub n: u32,
    /// Truncation N.
    #[arg(long, default_value_t = 96)]
    pub dim: usize,
    #[arg(long, value_enum, default_value = "both")]
    pub route: RouteArg,
    /// Starting vector as monomial coefficients, constant term first.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub f: String,
    /// Target for the hull-distance curve, as basis coefficients.
    #[arg(long, allow_hyphen_values = true)]
    pub hull_target: Option<String>,
    #[arg(long, default_value_t = 200)]
    pub hull_iterations: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RatioArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    /// Radius of the fixed-point disk.
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = 200)]
    pub nmax: u32,
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    /// Test function exp(sigma z).
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub sigma: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(c) => c.into(),
            other => Failure::input(other.to_string()),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::Unbounded(_) | CoreError::TruncationOverflow { .. } => EXIT_UNBOUNDED,
            CoreError::NoConvergence { .. } => EXIT_CHECK_FAILED,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// `x`, `x+yi`, `x-yi`, `yi`, `i`, `-i`.
pub fn parse_complex(text: &str) -> Result<Complex, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex number".into());
    }
    let bad = || format!("cannot parse complex number {text:?}");
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|x| Complex::new(x, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex::new(re, im))
}

fn parse_complex_list(text: &str) -> Result<Vec<Complex>, String> {
    text.split(',').map(parse_complex).collect()
}

/// `p/q` or `[r*]name`.
pub fn parse_turns(text: &str) -> Result<ExactAngle, String> {
    let s = text.trim();
    let (coef, name) = match s.rsplit_once('*') {
        Some((r, name)) => (Some(r), name),
        None => (None, s),
    };
    let name_trim = name.trim_start_matches('-');
    if let Some(kappa) = Irrational::from_name(name_trim) {
        let mut r = match coef {
            Some(r) => parse_rational(r)?,
            None => fockwc_core::Rational::from_integer(1),
        };
        if name.starts_with('-') {
            r = -r;
        }
        return ExactAngle::irrational_turns(r, kappa).map_err(|e| e.to_string());
    }
    if coef.is_some() {
        return Err(format!("unknown irrational constant in {text:?}"));
    }
    Ok(ExactAngle::from_rational(parse_rational(s)?))
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var("FOCKWC_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("FOCKWC_MAX_N is not an integer: {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn truncation(dim: usize) -> Result<TruncationParams, Failure> {
    let cap = max_n()?;
    if dim > cap {
        return Err(Failure::input(format!(
            "truncation {dim} exceeds the cap {cap} (FOCKWC_MAX_N)"
        )));
    }
    let t = TruncationParams::with_dim(dim);
    t.validate()?;
    Ok(t)
}

pub fn load_symbol(args: &SymbolArgs) -> Result<OperatorSymbol, Failure> {
    if let Some(path) = &args.file {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
        return Ok(format::parse_symbol(&text)?);
    }
    let a = match (&args.a_turns, args.a_re, args.a_im) {
        (Some(t), None, None) => {
            let angle = parse_turns(t).map_err(Failure::input)?;
            Scalar::polar(args.a_mod.unwrap_or(1.0), angle)?
        }
        (None, re, im) if re.is_some() || im.is_some() => {
            if args.a_mod.is_some() {
                return Err(Failure::input("--a-mod needs --a-turns"));
            }
            Scalar::new(re.unwrap_or(0.0), im.unwrap_or(0.0))
        }
        (None, None, None) => match args.a_mod {
            Some(m) => Scalar::polar(m, ExactAngle::zero())?,
            None => return Err(Failure::input("missing a: give --a-turns/--a-mod or --a-re/--a-im (or --file)")),
        },
        _ => return Err(Failure::input("give a either in polar or in cartesian form")),
    };
    let b = args
        .b
        .as_deref()
        .ok_or_else(|| Failure::input("missing --b (or --file)"))?;
    let b = Scalar::from_complex(parse_complex(b).map_err(Failure::input)?);
    let d = match &args.d {
        Some(d) => Scalar::from_complex(parse_complex(d).map_err(Failure::input)?),
        None => Scalar::one(),
    };
    let c = match args.c.as_deref() {
        None => Scalar::zero(),
        Some("kernel") => Scalar::from_complex(-a.value() * b.value().conj()),
        Some(c) => Scalar::from_complex(parse_complex(c).map_err(Failure::input)?),
    };
    let p = match &args.p {
        Some(p) => parse_complex_list(p)
            .map_err(Failure::input)?
            .into_iter()
            .map(Scalar::from_complex)
            .collect(),
        None => vec![Scalar::one()],
    };
    let u = Multiplier::new(d, c, p)?;
    Ok(OperatorSymbol::new(u, AffineMap::new(a, b)))
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::input(format!("cannot write output: {e}")))
        }
    }
}

fn cmd_classify(args: &CommonArgs) -> Result<i32, Failure> {
    let trunc = truncation(args.n)?;
    let op = load_symbol(&args.symbol)?;
    let report = classify_full(&op);
    let text = match args.output.format {
        Format::Json => format::to_text(&format::report_json(&op, &report, &trunc)),
        Format::Csv => format::report_csv(&report),
    };
    emit(&args.output, &text)?;
    Ok(if report.has_unknown() { EXIT_UNKNOWN } else { EXIT_OK })
}

fn cmd_matrix(args: &CommonArgs) -> Result<i32, Failure> {
    let trunc = truncation(args.n)?;
    let op = load_symbol(&args.symbol)?;
    let m = build_matrix(&op, &trunc)?;
    let text = match args.output.format {
        Format::Json => format::to_text(&format::matrix_json(&m, &trunc)),
        Format::Csv => format::matrix_csv(&m),
    };
    emit(&args.output, &text)?;
    Ok(EXIT_OK)
}

fn require_bounded(op: &OperatorSymbol) -> Result<(), Failure> {
    let v = check_bounded(op);
    if v.is_yes() {
        Ok(())
    } else if v.is_unknown() {
        Err(Failure {
            code: EXIT_UNKNOWN,
            message: format!("boundedness undecided: {}", v.reason),
        })
    } else {
        Err(Failure {
            code: EXIT_UNBOUNDED,
            message: format!("operator is not bounded: {}", v.reason),
        })
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, Failure> {
    let mut trunc = truncation(args.common.n)?;
    truncation(2 * args.common.n)?;
    trunc.residual_tol = args.residual_tol;
    trunc.sv_tol = args.sv_tol;
    trunc.validate()?;
    let op = load_symbol(&args.common.symbol)?;
    require_bounded(&op)?;
    let report = verify(&op, &trunc);
    let text = match args.common.output.format {
        Format::Json => format::to_text(&verify_json(&op, &trunc, &report)),
        Format::Csv => verify_csv(&report),
    };
    emit(&args.common.output, &text)?;
    if report.all_passed() {
        Ok(EXIT_OK)
    } else {
        let names: Vec<&str> = report.failed().map(|c| c.name.as_str()).collect();
        eprintln!("failed checks: {}", names.join(", "));
        Ok(EXIT_CHECK_FAILED)
    }
}

fn orbit_norms(rec: &OrbitRecord) -> Vec<f64> {
    rec.vectors.iter().map(CoeffVector::norm).collect()
}

fn cmd_orbit(args: &OrbitArgs) -> Result<i32, Failure> {
    let trunc = truncation(args.dim)?;
    let op = load_symbol(&args.symbol)?;
    require_bounded(&op)?;
    let f_monomials = parse_complex_list(&args.f).map_err(Failure::input)?;
    if f_monomials.len() > trunc.dim {
        return Err(Failure::input("--f has more coefficients than the truncation"));
    }
    let f = CoeffVector::from_monomials(&f_monomials, trunc.dim);
    let routes: &[Route] = match args.route {
        RouteArg::Matrix => &[Route::MatrixIteration],
        RouteArg::Closed => &[Route::ClosedForm],
        RouteArg::Both => &[Route::MatrixIteration, Route::ClosedForm],
    };
    let records = routes
        .iter()
        .map(|r| orbit(&op, &f, args.n, *r, &trunc))
        .collect::<Result<Vec<_>, _>>()?;
    let agreement = match records.as_slice() {
        [x, y] => Some(route_agreement(x, y)?),
        _ => None,
    };
    let agree = agreement.map(|g| g <= crate::verify::ROUTE_TOL);
    let curve = match &args.hull_target {
        Some(t) => {
            let coeffs = parse_complex_list(t).map_err(Failure::input)?;
            if coeffs.len() > trunc.dim {
                return Err(Failure::input("--hull-target has more coefficients than the truncation"));
            }
            let mut v = coeffs;
            v.resize(trunc.dim, Complex::new(0.0, 0.0));
            Some(hull_distance(&records[0], &CoeffVector::new(v), args.hull_iterations)?)
        }
        None => None,
    };
    let text = match args.output.format {
        Format::Csv => match &curve {
            Some(c) => format::curve_csv(c),
            None => {
                let mut out = String::from("n");
                for r in &records {
                    out.push_str(&format!(",norm_{}", r.route.as_str()));
                }
                out.push('\n');
                let norms: Vec<Vec<f64>> = records.iter().map(orbit_norms).collect();
                for k in 0..=args.n as usize {
                    out.push_str(&k.to_string());
                    for col in &norms {
                        out.push_str(&format!(",{}", col[k]));
                    }
                    out.push('\n');
                }
                out
            }
        },
        Format::Json => {
            let routes: Vec<_> = records
                .iter()
                .map(|r| {
                    json!({
                        "route": r.route.as_str(),
                        "vectors": r.vectors.iter().map(format::vector_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            format::to_text(&json!({
                "schema": SCHEMA,
                "command": "orbit",
                "symbol": format::symbol_json(&op),
                "truncation": format::truncation_json(&trunc),
                "steps": args.n,
                "routes": routes,
                "route_agreement": agreement.map(format::num),
                "routes_agree": agree,
                "hull": curve.as_ref().map(format::curve_json),
            }))
        }
    };
    emit(&args.output, &text)?;
    Ok(if agree == Some(false) { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn cmd_ratio(args: &RatioArgs) -> Result<i32, Failure> {
    let op = load_symbol(&args.symbol)?;
    require_bounded(&op)?;
    let sigma = parse_complex(&args.sigma).map_err(Failure::input)?;
    let rep = ratio_experiment(&op, &ZeroFree::new(sigma), args.r, args.nmax, args.grid)?;
    let text = match args.output.format {
        Format::Json => format::to_text(&format::ratio_json(&op, &rep, sigma)),
        Format::Csv => format!(
            "M,max_ratio_observed,n_max,grid,samples,invariance_ok,ratio_ok\n{},{},{},{},{},{},{}\n",
            rep.m_bound, rep.max_ratio_observed, rep.n_max, rep.grid, rep.samples, rep.invariance_ok, rep.ratio_ok
        ),
    };
    emit(&args.output, &text)?;
    Ok(if rep.invariance_ok && rep.ratio_ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn dispatch(cli: &Cli) -> Result<i32, Failure> {
    match &cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Matrix(a) => cmd_matrix(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Orbit(a) => cmd_orbit(a),
        Command::Ratio(a) => cmd_ratio(a),
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("fockwc: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let cases = [
            ("0", (0.0, 0.0)),
            ("1+1i", (1.0, 1.0)),
            ("0+2i", (0.0, 2.0)),
            ("-0.5-1.5i", (-0.5, -1.5)),
            ("2i", (0.0, 2.0)),
            ("i", (0.0, 1.0)),
            ("-i", (0.0, -1.0)),
            ("1e-3-2e+1i", (1e-3, -20.0)),
            (" 3 ", (3.0, 0.0)),
        ];
        for (s, (re, im)) in cases {
            assert_eq!(parse_complex(s).unwrap(), Complex::new(re, im), "{s}");
        }
        assert!(parse_complex("1+").is_err());
        assert!(parse_complex("x").is_err());
    }

    #[test]
    fn turns_forms() {
        assert_eq!(parse_turns("1/3").unwrap(), ExactAngle::rational_turns(1, 3).unwrap());
        let g = parse_turns("golden").unwrap();
        assert!(!g.is_rational());
        let half = parse_turns("1/2*sqrt2").unwrap();
        assert!((half.turns() - (0.5 * 2f64.sqrt()).fract()).abs() < 1e-12);
        assert!(parse_turns("2*pi").is_err());
    }
}
