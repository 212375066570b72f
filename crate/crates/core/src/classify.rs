//! Decision procedures for boundedness, norm bounds, cyclicity,
//! convex-cyclicity, the supercyclicity family, eigen-data and adjoints.
//!
//! Every verdict carries a textual reason naming the criterion it applied.
//! Definite verdicts on exact symbols are `Yes`/`No`; on inexact symbols
//! they are downgraded to the `*WithMargin` variants.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;


#[allow(unused_imports)] // needed without std
use num_traits::Float;

use crate::angle::{is_half_integer_combination, ExactAngle};
use crate::error::{Error, Result};
use crate::fock;
use crate::scalar::{complex_powi, Complex, ModulusClass, Scalar};
use crate::symbols::{power_equals_base, AffineMap, EigenSystem, Multiplier, OperatorSymbol};

/// Tolerance on `|c + a conj(b)|` for the kernel-form test on the unit circle.
pub const KERNEL_FORM_TOL: f64 = 1e-12;
/// `|ln|lambda||` below this is treated as the boundary `|lambda| = 1`.
pub const MODULUS_BOUNDARY_TOL: f64 = 1e-12;
/// Number of powers scanned by the inexact convex-cyclicity check.
pub const INEXACT_SCAN_LENGTH: u32 = 10_000;
/// Below this `|sin|` an inexact scan reports a real eigenvalue.
pub const INEXACT_REAL_TOL: f64 = 1e-9;
/// Default number of eigenpairs listed in a report.
pub const DEFAULT_EIGEN_COUNT: u32 = 5;

const CYCLIC_CRITERION: &str =
    "cyclicity criterion (u zero-free and a^k != a for all k >= 2; same verdict for the adjoint)";
const CONVEX_CRITERION: &str =
    "convex-cyclicity criterion (cyclic, |a| = 1, |u(z0)| > 1, Im(u(z0) a^m) != 0 for all m >= 0)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictValue {
    Yes,
    No,
    YesWithMargin,
    NoWithMargin,
    Unknown,
}

impl VerdictValue {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictValue::Yes => "Yes",
            VerdictValue::No => "No",
            VerdictValue::YesWithMargin => "YesWithMargin",
            VerdictValue::NoWithMargin => "NoWithMargin",
            VerdictValue::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub value: VerdictValue,
    pub reason: String,
    /// Distance to the nearest verdict-flipping input, where computable.
    pub margin: Option<f64>,
}

impl Verdict {
    pub fn decided(holds: bool, exact: bool, margin: Option<f64>, reason: impl Into<String>) -> Self {
        let value = match (holds, exact) {
            (true, true) => VerdictValue::Yes,
            (false, true) => VerdictValue::No,
            (true, false) => VerdictValue::YesWithMargin,
            (false, false) => VerdictValue::NoWithMargin,
        };
        Self {
            value,
            reason: reason.into(),
            margin: if exact { None } else { margin },
        }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        Self {
            value: VerdictValue::Unknown,
            reason: reason.into(),
            margin: None,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self.value, VerdictValue::Yes | VerdictValue::YesWithMargin)
    }

    pub fn is_no(&self) -> bool {
        matches!(self.value, VerdictValue::No | VerdictValue::NoWithMargin)
    }

    pub fn is_unknown(&self) -> bool {
        self.value == VerdictValue::Unknown
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.value, VerdictValue::Yes | VerdictValue::No)
    }

    fn with_reason(&self, reason: impl Into<String>) -> Self {
        Self {
            reason: reason.into(),
            ..self.clone()
        }
    }
}

/// `lower <= ||W|| <= upper`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormBounds {
    pub lower: f64,
    pub upper: f64,
    pub exact: bool,
}

impl NormBounds {
    pub fn exact(value: f64) -> Self {
        Self {
            lower: value,
            upper: value,
            exact: true,
        }
    }

    pub fn unbounded() -> Self {
        Self {
            lower: f64::INFINITY,
            upper: f64::INFINITY,
            exact: true,
        }
    }

    pub fn contains(&self, x: f64, rel_slack: f64) -> bool {
        x >= self.lower * (1.0 - rel_slack) && x <= self.upper * (1.0 + rel_slack)
    }
}

/// Boundedness of `W(u, psi)` on F2.
pub fn check_bounded(op: &OperatorSymbol) -> Verdict {
    let exact = op.is_exact();
    let a = op.a();
    let modulus = a.abs();
    match a.modulus_class() {
        ModulusClass::Outside => Verdict::decided(
            false,
            exact,
            Some(modulus - 1.0),
            "|a| > 1: exp((|az+b|^2 - |z|^2)/2) grows like a Gaussian and no multiplier compensates",
        ),
        ModulusClass::Zero => Verdict::decided(
            true,
            exact,
            None,
            "a = 0: rank-one operator f -> f(b) u with u in F2",
        ),
        ModulusClass::Inside => Verdict::decided(
            true,
            exact,
            Some(modulus.min(1.0 - modulus)),
            "0 < |a| < 1: the weight exponent is a negative-definite quadratic, so the sup is finite for d exp(cz) p(z)",
        ),
        ModulusClass::Unit => unit_circle_bounded(op, true),
        ModulusClass::Unresolved => {
            let r = a.value().norm();
            if r > 1.0 {
                Verdict::decided(
                    false,
                    false,
                    Some(r - 1.0),
                    "|a| > 1 in floating point: exponent grows like a Gaussian",
                )
            } else {
                let v = unit_circle_bounded(op, false);
                if v.is_yes() {
                    v
                } else {
                    Verdict::unknown(
                        "|a| within 1e-9 of 1: u is not of kernel form, so boundedness depends on whether |a| < 1 exactly",
                    )
                }
            }
        }
    }
}

fn unit_circle_bounded(op: &OperatorSymbol, exact: bool) -> Verdict {
    if op.u().degree() > 0 {
        return Verdict::decided(
            false,
            exact,
            None,
            "|a| = 1 forces u = u(0) K_{-conj(a) b}; a nonconstant polynomial factor is unbounded",
        );
    }
    let defect = op.kernel_defect();
    let scale = 1.0 + op.b().value().norm() + op.u().c().value().norm();
    let holds = defect <= KERNEL_FORM_TOL * scale;
    let reason = if holds {
        "|a| = 1 and u = u(0) K_{-conj(a) b} (c = -a conj(b))"
    } else {
        "|a| = 1 requires c = -a conj(b); exp((c + a conj(b)) z) is unbounded against the weight"
    };
    Verdict::decided(holds, exact, Some(defect), reason)
}

fn modulus_of(s: &Scalar) -> f64 {
    s.exact_polar().map_or_else(|| s.value().norm(), |p| p.modulus)
}

/// `w = c + a conj(b)` and `alpha = 1 - |a|^2` of the completed square.
fn completed_square(op: &OperatorSymbol) -> (Complex, f64) {
    let a = op.a().value();
    let w = op.u().c().value() + a * op.b().value().conj();
    (w, 1.0 - a.norm_sqr())
}

/// `ln sup_z |u(z)| exp((|az+b|^2 - |z|^2)/2)` for `0 < |a| < 1`.
fn sup_log_weight(op: &OperatorSymbol) -> f64 {
    let (w, alpha) = completed_square(op);
    let u = op.u();
    let b2 = op.b().value().norm_sqr();
    if u.degree() == 0 {
        return modulus_of(&u.at_origin()).ln() + w.norm_sqr() / (2.0 * alpha) + b2 / 2.0;
    }
    let psi = *op.psi();
    let g = move |z: Complex| u.ln_abs(z) + (psi.apply(z).norm_sqr() - z.norm_sqr()) / 2.0;
    maximize_2d(&g, w.norm(), alpha, u.degree())
}

/// Grid search plus compass refinement for a function dominated at infinity
/// by `-alpha |z|^2 / 2`.
fn maximize_2d(g: &dyn Fn(Complex) -> f64, slope: f64, alpha: f64, degree: usize) -> f64 {
    const GRID: usize = 161;
    let mut radius = 2.0 * (slope + 1.0) / alpha + 2.0 * ((degree as f64 + 1.0) / alpha).sqrt() + 2.0;
    let mut best = (f64::NEG_INFINITY, Complex::new(0.0, 0.0));
    for _ in 0..8 {
        best = (f64::NEG_INFINITY, Complex::new(0.0, 0.0));
        for i in 0..GRID {
            for j in 0..GRID {
                let x = -radius + 2.0 * radius * i as f64 / (GRID - 1) as f64;
                let y = -radius + 2.0 * radius * j as f64 / (GRID - 1) as f64;
                let z = Complex::new(x, y);
                let v = g(z);
                if v > best.0 {
                    best = (v, z);
                }
            }
        }
        // escape check: a maximizer near the box edge means the box is too small
        if best.1.re.abs().max(best.1.im.abs()) < 0.9 * radius {
            break;
        }
        radius *= 2.0;
    }
    let (mut value, mut z) = best;
    let mut step = 2.0 * radius / (GRID - 1) as f64;
    let dirs = [
        Complex::new(1.0, 0.0),
        Complex::new(-1.0, 0.0),
        Complex::new(0.0, 1.0),
        Complex::new(0.0, -1.0),
    ];
    while step > 1e-12 * (1.0 + z.norm()) {
        let mut moved = false;
        for dir in dirs {
            let cand = z + dir * step;
            let v = g(cand);
            if v > value {
                value = v;
                z = cand;
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    value
}

/// Bounds on the operator norm.
pub fn operator_norm(op: &OperatorSymbol) -> Result<NormBounds> {
    if !check_bounded(op).is_yes() {
        return Err(Error::Unbounded("norm requested for an operator not known to be bounded"));
    }
    let u = op.u();
    let b2 = op.b().value().norm_sqr();
    let a_mod = op.a().abs();
    match op.a().modulus_class() {
        ModulusClass::Zero => {
            // W f = f(b) u, so ||W|| = ||u|| ||K_b||
            if u.degree() == 0 {
                let c2 = u.c().value().norm_sqr();
                let v = modulus_of(&u.at_origin()) * (c2 / 2.0 + b2 / 2.0).exp();
                Ok(NormBounds::exact(v))
            } else {
                let v = fock::multiplier_norm(u) * (b2 / 2.0).exp();
                Ok(NormBounds {
                    lower: v,
                    upper: v,
                    exact: false,
                })
            }
        }
        ModulusClass::Inside => {
            let s = sup_log_weight(op).exp();
            Ok(NormBounds {
                lower: s,
                upper: s / a_mod,
                exact: false,
            })
        }
        ModulusClass::Unit | ModulusClass::Unresolved => {
            let v = modulus_of(&u.at_origin()) * (b2 / 2.0).exp();
            Ok(NormBounds {
                lower: v,
                upper: v,
                exact: op.is_exact(),
            })
        }
        ModulusClass::Outside => unreachable!("bounded verdict excludes |a| > 1"),
    }
}

/// Cyclicity of `W`; the adjoint has the same verdict.
pub fn check_cyclic(op: &OperatorSymbol) -> Verdict {
    let bounded = check_bounded(op);
    if bounded.is_unknown() {
        return Verdict::unknown(format!("boundedness undecided: {}", bounded.reason));
    }
    let exact = op.is_exact();
    if bounded.is_no() {
        return Verdict::decided(false, exact, None, "not a bounded operator on F2");
    }
    if !op.u().is_zero_free() {
        return Verdict::decided(
            false,
            exact,
            None,
            format!("{CYCLIC_CRITERION}: u vanishes at the zeros of its polynomial factor"),
        );
    }
    let a = op.a();
    match power_equals_base(a) {
        Err(e) => Verdict::unknown(format!("{CYCLIC_CRITERION}: {e}")),
        Ok(true) => {
            let why = if a.modulus_class() == ModulusClass::Zero {
                "a = 0, so a^k = a"
            } else {
                "a is a root of unity, so a^k = a for some k >= 2"
            };
            Verdict::decided(false, exact, None, format!("{CYCLIC_CRITERION}: {why}"))
        }
        Ok(false) => {
            let r = a.value().norm();
            Verdict::decided(
                true,
                exact,
                Some(r.min((1.0 - r).abs())),
                format!("{CYCLIC_CRITERION}: u zero-free and a is neither 0 nor a root of unity"),
            )
        }
    }
}

/// Exact turns of `u(z0)` when they are available: requires `b = 0` (so
/// `z0 = 0` and `u(z0) = d p0`) and exact angles of `d` and `p0`.
fn exact_lambda_turns(op: &OperatorSymbol) -> Option<ExactAngle> {
    if !op.is_exact() || !op.b().is_zero() || op.u().degree() != 0 {
        return None;
    }
    op.u().at_origin().exact_polar().map(|p| p.angle)
}

/// Convex-cyclicity of `W`; the same verdict holds for the adjoint and for
/// the property that every invariant closed convex set is a subspace.
pub fn check_convex_cyclic(op: &OperatorSymbol) -> Verdict {
    let cyclic = check_cyclic(op);
    if !cyclic.is_yes() {
        return cyclic.with_reason(format!("{CONVEX_CRITERION}: not cyclic ({})", cyclic.reason));
    }
    let exact = op.is_exact();
    if op.a().modulus_class() != ModulusClass::Unit {
        return Verdict::decided(
            false,
            exact,
            Some(1.0 - op.a().abs()),
            format!("{CONVEX_CRITERION}: |a| < 1, so the eigenvalues a^m u(z0) enter the closed unit disc"),
        );
    }
    // On the unit circle the bounded symbol has p constant and c = -a conj(b),
    // hence |u(z0)| = |d p0| exp(|b|^2 / 2) exactly.
    let u0 = op.u().at_origin();
    let u0_mod = modulus_of(&u0);
    let b2 = op.b().value().norm_sqr();
    let log_mod = u0_mod.ln() + b2 / 2.0;
    if log_mod.abs() <= MODULUS_BOUNDARY_TOL {
        if op.b().is_zero() && u0.exact_polar().is_some() && u0_mod == 1.0 {
            return Verdict::decided(
                false,
                exact,
                None,
                format!("{CONVEX_CRITERION}: |u(z0)| = 1 exactly"),
            );
        }
        return Verdict::unknown(format!(
            "{CONVEX_CRITERION}: |u(z0)| is within 1e-12 of 1 in floating point"
        ));
    }
    if log_mod < 0.0 {
        return Verdict::decided(
            false,
            exact,
            Some(-log_mod),
            format!(
                "{CONVEX_CRITERION}: |u(z0)| = {} <= 1",
                log_mod.exp()
            ),
        );
    }

    let s = op
        .a()
        .exact_polar()
        .expect("unit modulus class implies exact polar data")
        .angle;
    if let Some(t) = exact_lambda_turns(op) {
        if let Ok(witness) = is_half_integer_combination(&t, &s) {
            return match witness {
                Some(m) => Verdict::decided(
                    false,
                    exact,
                    None,
                    format!("{CONVEX_CRITERION}: u(z0) a^m is real at m = {m}"),
                ),
                None => Verdict::decided(
                    true,
                    exact,
                    None,
                    format!(
                        "{CONVEX_CRITERION}: cyclic, |a| = 1, |u(z0)| = {} > 1, u(z0) a^m never real (exact angle arithmetic)",
                        log_mod.exp()
                    ),
                ),
            };
        }
    }

    // arg(u(z0)) is not exactly representable: scan finitely many powers
    let lambda = op.lambda().unwrap_or_else(|| u0.value());
    let t = lambda.arg() / core::f64::consts::TAU;
    let s = s.turns();
    let (mut margin, mut at) = (f64::INFINITY, 0u32);
    for m in 0..=INEXACT_SCAN_LENGTH {
        let phase = (t + m as f64 * s) * core::f64::consts::TAU;
        let v = phase.sin().abs();
        if v < margin {
            margin = v;
            at = m;
        }
    }
    if margin < INEXACT_REAL_TOL {
        Verdict::decided(
            false,
            false,
            Some(margin),
            format!("{CONVEX_CRITERION}: Im(u(z0) a^m) numerically zero at m = {at} (non-exhaustive scan, m <= {INEXACT_SCAN_LENGTH})"),
        )
    } else {
        Verdict::decided(
            true,
            false,
            Some(margin),
            format!("{CONVEX_CRITERION}: min |sin arg(u(z0) a^m)| = {margin:e} at m = {at}; non-exhaustive scan over m <= {INEXACT_SCAN_LENGTH}"),
        )
    }
}

/// `(supercyclic, weakly supercyclic, pointwise-topology supercyclic)`.
pub fn check_supercyclic_family(op: &OperatorSymbol) -> (Verdict, Verdict, Verdict) {
    let exact = op.is_exact();
    let tpt = Verdict::decided(
        false,
        exact,
        None,
        "no bounded weighted composition operator on F2 is supercyclic for the pointwise-convergence topology: \
         on a psi-invariant compact set the ratios u_n(z) f(psi^n z) / u_n(w) f(psi^n w) stay bounded",
    );
    let weak = Verdict::decided(
        false,
        exact,
        None,
        "weak supercyclicity implies pointwise-topology supercyclicity, which fails",
    );
    let norm = Verdict::decided(
        false,
        exact,
        None,
        "norm supercyclicity implies weak supercyclicity, which fails",
    );
    (norm, weak, tpt)
}

/// Exponent `beta` of the eigenvectors `(z - z0)^m exp(beta z)`.
///
/// `beta = c / (1 - a)`; for kernel-form multipliers (`c = -a conj(b)`) this
/// is `a conj(b) / (a - 1)`.
pub fn eigen_exponent(op: &OperatorSymbol) -> Result<(Complex, Complex)> {
    let a = op.a();
    if a.is_zero() || op.psi().is_translation() {
        return Err(Error::DegenerateMap);
    }
    if op.u().degree() != 0 {
        return Err(Error::UnsupportedMultiplier);
    }
    let one = Complex::new(1.0, 0.0);
    let beta = op.u().c().value() / (one - a.value());
    let z0 = op.z0().ok_or(Error::DegenerateMap)?;
    Ok((beta, z0))
}

/// Eigenvalues `a^m u(z0)`, `m = 0..=m_max`.
pub fn eigen_system(op: &OperatorSymbol, m_max: u32) -> Result<EigenSystem> {
    let (beta, z0) = eigen_exponent(op)?;
    if !check_bounded(op).is_yes() {
        return Err(Error::Unbounded("eigen-system requested for an unbounded symbol"));
    }
    let lambda = op.lambda().ok_or(Error::DegenerateMap)?;
    let a = op.a().value();
    let pairs = (0..=m_max).map(|m| (m, complex_powi(a, m) * lambda)).collect();
    Ok(EigenSystem {
        beta,
        z0,
        lambda,
        pairs,
        distinct: power_equals_base(op.a()).ok().map(|p| !p),
    })
}

/// The symbol `(u2, psi2)` with `W(u2, psi2) = W(u, psi)^*`, when the
/// adjoint is again a weighted composition operator.
///
/// With `u = d exp(c z)` and `psi = a z + b` the kernel rule
/// `W^* K_w = conj(u(w)) K_{psi(w)}` forces `psi2(z) = conj(a) z + conj(c)`
/// and `u2 = conj(d) K_b = conj(d) exp(conj(b) z)`.
pub fn adjoint_symbol(op: &OperatorSymbol) -> Result<Option<OperatorSymbol>> {
    let u = op.u();
    if u.degree() != 0 {
        return Err(Error::UnsupportedMultiplier);
    }
    let admissible = match op.a().modulus_class() {
        // rank-one case: described by the kernel rule only
        ModulusClass::Zero | ModulusClass::Outside => false,
        ModulusClass::Inside => true,
        ModulusClass::Unit | ModulusClass::Unresolved => {
            let scale = 1.0 + op.b().value().norm() + u.c().value().norm();
            op.kernel_defect() <= KERNEL_FORM_TOL * scale
        }
    };
    if !admissible {
        return Ok(None);
    }
    let psi2 = AffineMap::new(
        op.a().conj(),
        Scalar::from_complex(u.c().value().conj()),
    );
    let u2 = Multiplier::exponential(
        u.at_origin().conj(),
        Scalar::from_complex(op.b().value().conj()),
    )?;
    Ok(Some(OperatorSymbol::new(u2, psi2)))
}

/// The full verdict vector of a symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub bounded: Verdict,
    pub norm: NormBounds,
    pub cyclic: Verdict,
    pub adjoint_cyclic: Verdict,
    pub convex_cyclic: Verdict,
    pub adjoint_convex_cyclic: Verdict,
    pub invariant_convex_property: Verdict,
    pub supercyclic: Verdict,
    pub weakly_supercyclic: Verdict,
    pub tpt_supercyclic: Verdict,
    pub weakly_cyclic: Verdict,
    pub eigen: Option<EigenSystem>,
    pub adjoint_symbol: Option<OperatorSymbol>,
}

impl ClassificationReport {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 10] {
        [
            ("bounded", &self.bounded),
            ("cyclic", &self.cyclic),
            ("adjoint_cyclic", &self.adjoint_cyclic),
            ("convex_cyclic", &self.convex_cyclic),
            ("adjoint_convex_cyclic", &self.adjoint_convex_cyclic),
            ("invariant_convex_property", &self.invariant_convex_property),
            ("supercyclic", &self.supercyclic),
            ("weakly_supercyclic", &self.weakly_supercyclic),
            ("tpt_supercyclic", &self.tpt_supercyclic),
            ("weakly_cyclic", &self.weakly_cyclic),
        ]
    }

    pub fn has_unknown(&self) -> bool {
        self.verdicts().iter().any(|(_, v)| v.is_unknown())
    }

    /// Checks the implication and equivalence invariants between verdicts.
    pub fn consistency_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.convex_cyclic.is_yes() && !self.cyclic.is_yes() {
            out.push("convex-cyclic without cyclic");
        }
        if self.supercyclic.is_yes() && !self.weakly_supercyclic.is_yes() {
            out.push("supercyclic without weakly supercyclic");
        }
        if self.weakly_supercyclic.is_yes() && !self.tpt_supercyclic.is_yes() {
            out.push("weakly supercyclic without pointwise supercyclic");
        }
        if self.cyclic.value != self.weakly_cyclic.value {
            out.push("cyclic differs from weakly cyclic");
        }
        if self.cyclic.value != self.adjoint_cyclic.value {
            out.push("cyclic differs from adjoint cyclic");
        }
        if self.convex_cyclic.value != self.adjoint_convex_cyclic.value
            || self.convex_cyclic.value != self.invariant_convex_property.value
        {
            out.push("convex-cyclicity equivalence class split");
        }
        if self.norm.lower > self.norm.upper || (self.norm.exact && self.norm.lower != self.norm.upper) {
            out.push("inconsistent norm bounds");
        }
        out
    }
}

/// Runs every check and assembles the report.
pub fn classify_full(op: &OperatorSymbol) -> ClassificationReport {
    let bounded = check_bounded(op);
    let norm = if bounded.is_no() {
        NormBounds::unbounded()
    } else {
        operator_norm(op).unwrap_or(NormBounds {
            lower: 0.0,
            upper: f64::INFINITY,
            exact: false,
        })
    };
    let cyclic = check_cyclic(op);
    let adjoint_cyclic = cyclic.with_reason(format!("adjoint shares the verdict: {}", cyclic.reason));
    let weakly_cyclic = cyclic.with_reason(format!(
        "weak and norm closures of span Orb(W, f) coincide: {}",
        cyclic.reason
    ));
    let convex_cyclic = check_convex_cyclic(op);
    let adjoint_convex_cyclic =
        convex_cyclic.with_reason(format!("adjoint shares the verdict: {}", convex_cyclic.reason));
    let invariant_convex_property = convex_cyclic.with_reason(format!(
        "every invariant closed convex set is a subspace iff convex-cyclic: {}",
        convex_cyclic.reason
    ));
    let (supercyclic, weakly_supercyclic, tpt_supercyclic) = check_supercyclic_family(op);
    let eigen = eigen_system(op, DEFAULT_EIGEN_COUNT).ok();
    let adjoint_symbol = if bounded.is_yes() {
        adjoint_symbol(op).ok().flatten()
    } else {
        None
    };
    let report = ClassificationReport {
        bounded,
        norm,
        cyclic,
        adjoint_cyclic,
        convex_cyclic,
        adjoint_convex_cyclic,
        invariant_convex_property,
        supercyclic,
        weakly_supercyclic,
        tpt_supercyclic,
        weakly_cyclic,
        eigen,
        adjoint_symbol,
    };
    debug_assert!(report.consistency_violations().is_empty());
    report
}
