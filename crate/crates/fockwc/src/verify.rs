//! Numerical self-checks of a single symbol at truncation `N` and `2N`.

use fockwc_core::classify::eigen_exponent;
use fockwc_core::dynamics::{orbit, route_agreement, Route};
use fockwc_core::fock::{
    adjoint_consistency, build_matrix, dominant_singular_value_from, eigen_residual,
    expand_eigenvector, kernel_covariance_check,
};
use fockwc_core::{
    adjoint_symbol, check_bounded, eigen_system, operator_norm, CoeffVector, Complex,
    OperatorSymbol, TruncationParams,
};
use serde_json::{json, Value};

use crate::format::{csv_quote, num, symbol_json, truncation_json, SCHEMA};

/// Eigen-vector powers checked.
pub const EIGEN_POWERS: u32 = 5;
/// Orbit length for the route comparison.
pub const ORBIT_STEPS: u32 = 5;
pub const ROUTE_TOL: f64 = 1e-8;
pub const ADJOINT_TOL: f64 = 1e-10;
pub const KERNEL_TOL: f64 = 1e-8;
/// Relative tolerance of the singular value against an exact norm.
pub const NORM_REL_TOL: f64 = 0.01;
/// Relative inflation of a norm bracket.
pub const BRACKET_SLACK: f64 = 1e-6;
/// Residuals below this are rounding noise and count as converged.
pub const RESIDUAL_FLOOR: f64 = 1e-12;
/// Relative rounding allowance when comparing the `N` and `2N` estimates.
pub const MONOTONE_SLACK: f64 = 1e-12;

const KERNEL_POINTS: [(f64, f64); 4] = [(0.0, 0.0), (0.5, 0.0), (0.0, -0.7), (-0.3, 0.4)];

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub value: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, value: f64, tolerance: f64, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            value,
            tolerance,
            detail: detail.into(),
        }
    }

    fn error(name: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self::new(name, f64::NAN, f64::NAN, false, format!("error: {err}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs every applicable check. The caller is expected to have confirmed
/// boundedness.
pub fn verify(op: &OperatorSymbol, trunc: &TruncationParams) -> VerifyReport {
    let fine = TruncationParams {
        dim: 2 * trunc.dim,
        ..*trunc
    };
    let mut checks = Vec::new();
    eigen_checks(op, trunc, &fine, &mut checks);
    checks.push(norm_check(op, trunc, &fine));
    if let Some(c) = adjoint_check(op, trunc) {
        checks.push(c);
    }
    checks.push(kernel_check(op, trunc));
    checks.push(route_check(op, trunc));
    VerifyReport { checks }
}

fn eigen_checks(
    op: &OperatorSymbol,
    trunc: &TruncationParams,
    fine: &TruncationParams,
    out: &mut Vec<Check>,
) {
    if eigen_exponent(op).is_err() {
        return;
    }
    let system = match eigen_system(op, EIGEN_POWERS) {
        Ok(s) => s,
        Err(e) => return out.push(Check::error("eigen", e)),
    };
    let (coarse_m, fine_m) = match (build_matrix(op, trunc), build_matrix(op, fine)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return out.push(Check::error("eigen", e)),
    };
    for (m, mu) in &system.pairs {
        let name = format!("eigen_residual_m{m}");
        let res = (|| -> fockwc_core::Result<(f64, f64)> {
            let v = expand_eigenvector(op, *m, trunc)?;
            let w = expand_eigenvector(op, *m, fine)?;
            Ok((
                eigen_residual(&coarse_m, &v.vector, *mu)?,
                eigen_residual(&fine_m, &w.vector, *mu)?,
            ))
        })();
        match res {
            Ok((r1, r2)) => {
                let converging = r2 <= (r1 / 10.0).max(RESIDUAL_FLOOR);
                out.push(Check::new(
                    name,
                    r1,
                    trunc.residual_tol,
                    r1 <= trunc.residual_tol && converging,
                    format!("residual N={} {r1:e}, 2N={} {r2:e}", trunc.dim, fine.dim),
                ));
            }
            Err(e) => out.push(Check::error(name, e)),
        }
    }
}

fn norm_check(op: &OperatorSymbol, trunc: &TruncationParams, fine: &TruncationParams) -> Check {
    let name = "norm";
    let bounds = match operator_norm(op) {
        Ok(b) => b,
        Err(e) => return Check::error(name, e),
    };
    let measure = || -> fockwc_core::Result<(f64, f64)> {
        let coarse = build_matrix(op, trunc)?;
        let start = CoeffVector::new(vec![Complex::new(1.0, 0.0); trunc.dim]);
        let (s1, v) = dominant_singular_value_from(&coarse, &start, trunc.sv_tol, trunc.max_iterations)?;
        let fine_m = build_matrix(op, fine)?;
        let (s2, _) = dominant_singular_value_from(&fine_m, &v, fine.sv_tol, fine.max_iterations)?;
        Ok((s1.value, s2.value))
    };
    let (s1, s2) = match measure() {
        Ok(x) => x,
        Err(e) => return Check::error(name, e),
    };
    let detail = format!(
        "sigma N={} {s1}, 2N={} {s2}; bounds [{}, {}]",
        trunc.dim, fine.dim, bounds.lower, bounds.upper
    );
    if bounds.lower == bounds.upper {
        let target = bounds.lower;
        let rel = (target - s2).abs() / target;
        let from_below = s1 <= s2 * (1.0 + MONOTONE_SLACK) && s2 <= target * (1.0 + BRACKET_SLACK);
        Check::new(name, rel, NORM_REL_TOL, rel <= NORM_REL_TOL && from_below, detail)
    } else {
        let lo = bounds.lower * (1.0 - BRACKET_SLACK);
        let hi = bounds.upper * (1.0 + BRACKET_SLACK);
        let inside = (lo..=hi).contains(&s2);
        let excess = (lo - s2).max(s2 - hi).max(0.0) / bounds.lower;
        Check::new(name, excess, BRACKET_SLACK, inside, detail)
    }
}

fn adjoint_check(op: &OperatorSymbol, trunc: &TruncationParams) -> Option<Check> {
    let adj = adjoint_symbol(op).ok().flatten()?;
    Some(match adjoint_consistency(op, &adj, trunc) {
        Ok(gap) => Check::new(
            "adjoint",
            gap,
            ADJOINT_TOL,
            gap <= ADJOINT_TOL,
            "max |matrix(adjoint symbol) - matrix^H|",
        ),
        Err(e) => Check::error("adjoint", e),
    })
}

fn kernel_check(op: &OperatorSymbol, trunc: &TruncationParams) -> Check {
    let mut worst = 0.0f64;
    for (x, y) in KERNEL_POINTS {
        match kernel_covariance_check(op, Complex::new(x, y), trunc) {
            Ok(v) => worst = worst.max(v),
            Err(e) => return Check::error("kernel_covariance", e),
        }
    }
    Check::new(
        "kernel_covariance",
        worst,
        KERNEL_TOL,
        worst <= KERNEL_TOL,
        format!("W^* K_w = conj(u(w)) K_psi(w) at {} points", KERNEL_POINTS.len()),
    )
}

fn route_check(op: &OperatorSymbol, trunc: &TruncationParams) -> Check {
    let f = CoeffVector::basis(trunc.dim, 0);
    let res = orbit(op, &f, ORBIT_STEPS, Route::MatrixIteration, trunc).and_then(|x| {
        let y = orbit(op, &f, ORBIT_STEPS, Route::ClosedForm, trunc)?;
        route_agreement(&x, &y)
    });
    match res {
        Ok(gap) => Check::new(
            "orbit_routes",
            gap,
            ROUTE_TOL,
            gap <= ROUTE_TOL,
            format!("f = 1, n = {ORBIT_STEPS}"),
        ),
        Err(e) => Check::error("orbit_routes", e),
    }
}

pub fn verify_json(op: &OperatorSymbol, trunc: &TruncationParams, report: &VerifyReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed,
                "value": num(c.value),
                "tolerance": num(c.tolerance),
                "detail": c.detail,
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "command": "verify",
        "symbol": symbol_json(op),
        "bounded": check_bounded(op).reason,
        "truncation": truncation_json(trunc),
        "checks": checks,
        "all_passed": report.all_passed(),
    })
}

pub fn verify_csv(report: &VerifyReport) -> String {
    let mut out = String::from("check,passed,value,tolerance,detail\n");
    for c in &report.checks {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            c.name,
            c.passed,
            c.value,
            c.tolerance,
            csv_quote(&c.detail)
        ));
    }
    out
}
