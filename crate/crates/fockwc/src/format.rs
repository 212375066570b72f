//! JSON and CSV formats: symbol input files, classification reports,
//! matrices, vectors and curves.

use std::fmt::Write as _;

use fockwc_core::dynamics::{HullDistanceCurve, RatioExperimentReport, Region};
use fockwc_core::fock::TruncationParams;
use fockwc_core::{
    AffineMap, ClassificationReport, CoeffVector, Complex, EigenSystem, ExactAngle, Irrational,
    Multiplier, NormBounds, OperatorMatrix, OperatorSymbol, Rational, Scalar, Verdict,
};
use serde::Deserialize;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "fockwc-report-1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid {field}: {reason}")]
    Field { field: &'static str, reason: String },
    #[error(transparent)]
    Core(#[from] fockwc_core::Error),
}

fn field_err(field: &'static str, reason: impl Into<String>) -> FormatError {
    FormatError::Field {
        field,
        reason: reason.into(),
    }
}

/// `p/q`, an integer, or a JSON number that is an integer.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RationalRepr {
    Int(i64),
    Text(String),
}

impl RationalRepr {
    pub fn to_rational(&self) -> Result<Rational, String> {
        match self {
            RationalRepr::Int(n) => Ok(Rational::from_integer(*n as i128)),
            RationalRepr::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: i128 = p.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let q: i128 = q.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if q == 0 {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(p, q))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TurnsRepr {
    Rational { p: i64, q: i64 },
    Irrational { r: RationalRepr, kappa: String },
}

impl TurnsRepr {
    pub fn to_angle(&self) -> Result<ExactAngle, String> {
        match self {
            TurnsRepr::Rational { p, q } => {
                ExactAngle::rational_turns(*p, *q).map_err(|e| e.to_string())
            }
            TurnsRepr::Irrational { r, kappa } => {
                let kappa = Irrational::from_name(kappa)
                    .ok_or_else(|| format!("unknown irrational constant {kappa:?}"))?;
                ExactAngle::irrational_turns(r.to_rational()?, kappa).map_err(|e| e.to_string())
            }
        }
    }
}

/// A scalar written as `{"mod", "turns"}`, `{"re", "im"}` or a bare number.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Polar(PolarRepr),
    Cartesian(CartesianRepr),
    Real(f64),
}

/// `re`/`im` may accompany the polar form (reports emit both); they are
/// ignored on input.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarRepr {
    #[serde(rename = "mod")]
    pub modulus: f64,
    pub turns: TurnsRepr,
    #[serde(default)]
    pub re: Option<f64>,
    #[serde(default)]
    pub im: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartesianRepr {
    #[serde(default)]
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

impl ScalarRepr {
    pub fn to_scalar(&self) -> Result<Scalar, String> {
        match self {
            ScalarRepr::Polar(p) => {
                Scalar::polar(p.modulus, p.turns.to_angle()?).map_err(|e| e.to_string())
            }
            ScalarRepr::Cartesian(c) => Ok(Scalar::new(c.re, c.im)),
            ScalarRepr::Real(x) => Ok(Scalar::real(*x)),
        }
    }
}

/// `c` may be the keyword `"kernel"`, meaning `c = -a conj(b)`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ExponentRepr {
    Keyword(String),
    Value(ScalarRepr),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolFile {
    pub a: ScalarRepr,
    pub b: ScalarRepr,
    #[serde(default)]
    pub d: Option<ScalarRepr>,
    #[serde(default)]
    pub c: Option<ExponentRepr>,
    #[serde(default)]
    pub p: Option<Vec<ScalarRepr>>,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub note: Option<String>,
}

impl SymbolFile {
    pub fn to_symbol(&self) -> Result<OperatorSymbol, FormatError> {
        let a = self.a.to_scalar().map_err(|e| field_err("a", e))?;
        let b = self.b.to_scalar().map_err(|e| field_err("b", e))?;
        let d = match &self.d {
            Some(d) => d.to_scalar().map_err(|e| field_err("d", e))?,
            None => Scalar::one(),
        };
        let c = match &self.c {
            None => Scalar::zero(),
            Some(ExponentRepr::Keyword(k)) if k == "kernel" => {
                Scalar::from_complex(-a.value() * b.value().conj())
            }
            Some(ExponentRepr::Keyword(k)) => {
                return Err(field_err("c", format!("unknown keyword {k:?}")))
            }
            Some(ExponentRepr::Value(v)) => v.to_scalar().map_err(|e| field_err("c", e))?,
        };
        let p = match &self.p {
            None => vec![Scalar::one()],
            Some(p) => p
                .iter()
                .map(ScalarRepr::to_scalar)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| field_err("p", e))?,
        };
        let u = Multiplier::new(d, c, p)?;
        Ok(OperatorSymbol::new(u, AffineMap::new(a, b)))
    }
}

pub fn parse_symbol(text: &str) -> Result<OperatorSymbol, FormatError> {
    let file: SymbolFile = serde_json::from_str(text)?;
    file.to_symbol()
}

/// Finite numbers as JSON numbers, others as `"inf"`, `"-inf"` or `"nan"`.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else if x.is_nan() {
        json!("nan")
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

pub fn complex_json(z: Complex) -> Value {
    json!({"re": num(z.re), "im": num(z.im)})
}

fn angle_json(angle: &ExactAngle) -> Value {
    match angle.as_single_tag() {
        Some((r, kappa)) => json!({
            "kind": "irrational",
            "r": format!("{}/{}", r.numer(), r.denom()),
            "kappa": kappa.name(),
        }),
        None => match angle.as_rational() {
            Some(q) => json!({"kind": "rational", "p": *q.numer() as i64, "q": *q.denom() as i64}),
            None => json!({"kind": "combination", "text": angle.to_string()}),
        },
    }
}

pub fn scalar_json(s: &Scalar) -> Value {
    match s.polar_annotation() {
        Some(p) => json!({
            "mod": num(p.modulus),
            "turns": angle_json(&p.angle),
            "re": num(s.re()),
            "im": num(s.im()),
        }),
        None => complex_json(s.value()),
    }
}

pub fn symbol_json(op: &OperatorSymbol) -> Value {
    let u = op.u();
    json!({
        "a": scalar_json(op.a()),
        "b": scalar_json(op.b()),
        "d": scalar_json(u.d()),
        "c": scalar_json(u.c()),
        "p": u.p().iter().map(scalar_json).collect::<Vec<_>>(),
        "exact": op.is_exact(),
    })
}

pub fn truncation_json(t: &TruncationParams) -> Value {
    json!({
        "dim": t.dim,
        "buffered_rows": t.buffered_rows(),
        "residual_tol": t.residual_tol,
        "sv_tol": t.sv_tol,
        "log_cap": t.log_cap,
        "max_iterations": t.max_iterations,
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "value": v.value.as_str(),
        "reason": v.reason,
        "margin": v.margin.map(num),
    })
}

pub fn norm_json(n: &NormBounds) -> Value {
    json!({"lower": num(n.lower), "upper": num(n.upper), "exact": n.exact})
}

pub fn eigen_json(e: &EigenSystem) -> Value {
    json!({
        "beta": complex_json(e.beta),
        "z0": complex_json(e.z0),
        "lambda": complex_json(e.lambda),
        "distinct": e.distinct,
        "pairs": e.pairs.iter().map(|(m, mu)| json!({"m": m, "eigenvalue": complex_json(*mu)})).collect::<Vec<_>>(),
    })
}

pub fn report_json(op: &OperatorSymbol, r: &ClassificationReport, trunc: &TruncationParams) -> Value {
    let mut verdicts = Map::new();
    for (name, v) in r.verdicts() {
        verdicts.insert(name.to_string(), verdict_json(v));
    }
    json!({
        "schema": SCHEMA,
        "command": "classify",
        "symbol": symbol_json(op),
        "truncation": truncation_json(trunc),
        "verdicts": verdicts,
        "norm": norm_json(&r.norm),
        "eigen": r.eigen.as_ref().map(eigen_json),
        "adjoint_symbol": r.adjoint_symbol.as_ref().map(symbol_json),
        "has_unknown": r.has_unknown(),
        "consistency_violations": r.consistency_violations(),
    })
}

pub fn report_csv(r: &ClassificationReport) -> String {
    let mut out = String::from("verdict,value,margin,reason\n");
    for (name, v) in r.verdicts() {
        let margin = v.margin.map(|m| m.to_string()).unwrap_or_default();
        let _ = writeln!(out, "{name},{},{margin},{}", v.value.as_str(), csv_quote(&v.reason));
    }
    out
}

pub fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `re+imi` with Rust's shortest round-trip formatting.
pub fn complex_text(z: Complex) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

pub fn matrix_csv(m: &OperatorMatrix) -> String {
    let n = m.dim();
    let mut out = String::new();
    for r in 0..n {
        let row: Vec<String> = (0..n).map(|c| complex_text(m.get(r, c))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_json(m: &OperatorMatrix, trunc: &TruncationParams) -> Value {
    let n = m.dim();
    let rows: Vec<Value> = (0..n)
        .map(|r| {
            Value::Array(
                (0..n)
                    .map(|c| {
                        let z = m.get(r, c);
                        json!([num(z.re), num(z.im)])
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "command": "matrix",
        "truncation": truncation_json(trunc),
        "bounded": m.bounded,
        "dim": n,
        "entries": rows,
    })
}

pub fn vector_json(v: &CoeffVector) -> Value {
    Value::Array(v.as_slice().iter().map(|z| json!([num(z.re), num(z.im)])).collect())
}

/// `n,error` with `n` the orbit length.
pub fn curve_csv(curve: &HullDistanceCurve) -> String {
    let mut out = String::from("n,error\n");
    for (i, e) in curve.errors.iter().enumerate() {
        let _ = writeln!(out, "{},{}", i + 1, e);
    }
    out
}

pub fn curve_json(curve: &HullDistanceCurve) -> Value {
    json!({
        "iterations": curve.iterations,
        "target": vector_json(&curve.target),
        "errors": curve.errors.iter().copied().map(num).collect::<Vec<_>>(),
        "gaps": curve.gaps.iter().copied().map(num).collect::<Vec<_>>(),
    })
}

pub fn ratio_json(op: &OperatorSymbol, rep: &RatioExperimentReport, sigma: Complex) -> Value {
    let region = match rep.region {
        Region::FixedPointDisk { center, radius } => {
            json!({"kind": "fixed-point-disk", "center": complex_json(center), "radius": num(radius)})
        }
        Region::TranslationDisk { center, radius } => {
            json!({"kind": "translation-disk", "center": complex_json(center), "radius": num(radius)})
        }
    };
    json!({
        "schema": SCHEMA,
        "command": "ratio",
        "symbol": symbol_json(op),
        "test_function": {"kind": "exp", "sigma": complex_json(sigma)},
        "region": region,
        "M": num(rep.m_bound),
        "max_ratio_observed": num(rep.max_ratio_observed),
        "slack": fockwc_core::dynamics::RATIO_SLACK,
        "n_max": rep.n_max,
        "grid": rep.grid,
        "samples": rep.samples,
        "max_invariance_excess": num(rep.max_invariance_excess),
        "invariance_ok": rep.invariance_ok,
        "ratio_ok": rep.ratio_ok,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
