//! Orbits of `W(u, psi)`, distances from a target to the convex hull of an
//! orbit, and the bounded-ratio experiment that rules out supercyclicity in
//! the pointwise topology.

use alloc::vec;
use alloc::vec::Vec;


#[allow(unused_imports)] // needed without std
use num_traits::Float;

use crate::classify::check_bounded;
use crate::error::{Error, Result};
use crate::fock::{apply, build_matrix, buffered_rows, CoeffVector, TruncationParams};
use crate::scalar::Complex;
use crate::symbols::{iterate_map, iterated_multiplier, OperatorSymbol};

/// Longest orbit accepted by [`orbit`].
pub const MAX_ORBIT_STEPS: u32 = 10_000;
/// Relative slack allowed on the grid estimate of the ratio bound.
pub const RATIO_SLACK: f64 = 0.05;
/// Slack on the forward-invariance test `|psi(z) - center| <= radius`.
pub const INVARIANCE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Repeated application of the matrix of `W`.
    MatrixIteration,
    /// One application of the matrix of `W^n = W(u_n, psi^n)` per power.
    ClosedForm,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::MatrixIteration => "matrix-iteration",
            Route::ClosedForm => "closed-form",
        }
    }
}

/// `vectors[k]` holds `W^k f` for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitRecord {
    pub vectors: Vec<CoeffVector>,
    pub route: Route,
}

fn require_bounded(op: &OperatorSymbol) -> Result<()> {
    if check_bounded(op).is_yes() {
        Ok(())
    } else {
        Err(Error::Unbounded("orbits are only computed for bounded symbols"))
    }
}

/// `f, W f, ..., W^n f` in the truncated basis.
pub fn orbit(
    op: &OperatorSymbol,
    f: &CoeffVector,
    n: u32,
    route: Route,
    trunc: &TruncationParams,
) -> Result<OrbitRecord> {
    require_bounded(op)?;
    if n > MAX_ORBIT_STEPS {
        return Err(Error::BudgetExceeded {
            requested: n as usize,
            budget: MAX_ORBIT_STEPS as usize,
        });
    }
    trunc.validate()?;
    if f.len() != trunc.dim {
        return Err(Error::DimensionMismatch {
            expected: trunc.dim,
            found: f.len(),
        });
    }
    let mut vectors = Vec::with_capacity(n as usize + 1);
    vectors.push(f.clone());
    match route {
        Route::MatrixIteration => {
            let m = build_matrix(op, trunc)?;
            for _ in 0..n {
                let next = apply(&m, vectors.last().expect("orbit starts nonempty"))?;
                vectors.push(next);
            }
        }
        Route::ClosedForm => {
            for k in 1..=n {
                let psi_k = iterate_map(op.psi(), k);
                let next = match iterated_multiplier(op, k) {
                    Ok(u_k) => {
                        let m = build_matrix(&OperatorSymbol::new(u_k, psi_k), trunc)?;
                        apply(&m, f)?
                    }
                    Err(Error::InvalidMultiplier(_)) => CoeffVector::zeros(trunc.dim),
                    Err(e) => return Err(e),
                };
                vectors.push(next);
            }
        }
    }
    Ok(OrbitRecord { vectors, route })
}

/// Largest coordinate gap between two orbits on the buffered rows, each
/// step measured relative to `max(1, ||v||)`.
pub fn route_agreement(x: &OrbitRecord, y: &OrbitRecord) -> Result<f64> {
    if x.vectors.len() != y.vectors.len() {
        return Err(Error::DimensionMismatch {
            expected: x.vectors.len(),
            found: y.vectors.len(),
        });
    }
    let mut worst = 0.0f64;
    for (u, v) in x.vectors.iter().zip(&y.vectors) {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: u.len(),
                found: v.len(),
            });
        }
        let rows = buffered_rows(u.len());
        let scale = u.norm().max(1.0);
        worst = worst.max(u.max_abs_diff_upto(v, rows) / scale);
    }
    Ok(worst)
}

/// `errors[n - 1]` is the distance from `target` to the hull of the first
/// `n` orbit vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct HullDistanceCurve {
    pub errors: Vec<f64>,
    /// Frank-Wolfe duality gap at the last iterate of each prefix.
    pub gaps: Vec<f64>,
    pub target: CoeffVector,
    pub iterations: usize,
}

fn re_inner(x: &[Complex], y: &[Complex]) -> f64 {
    x.iter().zip(y).map(|(p, q)| p.re * q.re + p.im * q.im).sum()
}

fn norm(x: &[Complex]) -> f64 {
    re_inner(x, x).sqrt()
}

/// Conditional-gradient distance to the convex hull of each orbit prefix.
///
/// Each prefix is warm-started from the optimum of the previous one, and a
/// step never exceeds the exact line-search step, so the curve is
/// nonincreasing.
pub fn hull_distance(
    orbit: &OrbitRecord,
    target: &CoeffVector,
    iterations: usize,
) -> Result<HullDistanceCurve> {
    let verts = &orbit.vectors;
    let Some(first) = verts.first() else {
        return Err(Error::ZeroVector);
    };
    let dim = target.len();
    for v in verts {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
    }
    let t = target.as_slice();
    let mut x: Vec<Complex> = first.as_slice().to_vec();
    let mut r: Vec<Complex> = x.iter().zip(t).map(|(p, q)| p - q).collect();
    let mut errors = Vec::with_capacity(verts.len());
    let mut gaps = Vec::with_capacity(verts.len());
    // grad[i] = Re <v_i, r>
    let mut grad: Vec<f64> = Vec::with_capacity(verts.len());
    let mut dir = vec![Complex::new(0.0, 0.0); dim];

    for n in 1..=verts.len() {
        let newest = verts[n - 1].as_slice();
        // Jumping to the new vertex is a valid warm start when it is closer.
        let jump: Vec<Complex> = newest.iter().zip(t).map(|(p, q)| p - q).collect();
        if norm(&jump) < norm(&r) {
            x.copy_from_slice(newest);
            r = jump;
        }
        grad.clear();
        grad.extend(verts[..n].iter().map(|v| re_inner(v.as_slice(), &r)));

        let mut gap = 0.0;
        for k in 0..iterations {
            let (s, _) = grad
                .iter()
                .enumerate()
                .fold((0, f64::INFINITY), |best, (i, &g)| if g < best.1 { (i, g) } else { best });
            let vs = verts[s].as_slice();
            for ((d, p), q) in dir.iter_mut().zip(vs).zip(&x) {
                *d = p - q;
            }
            // gap = -<grad f / 2, s - x>
            let slope = re_inner(&r, &dir);
            gap = (-2.0 * slope).max(0.0);
            let dd = re_inner(&dir, &dir);
            if slope >= 0.0 || dd == 0.0 {
                break;
            }
            let line = (-slope / dd).min(1.0);
            let gamma = line.min(2.0 / (k as f64 + 2.0));
            for ((xi, ri), di) in x.iter_mut().zip(r.iter_mut()).zip(&dir) {
                *xi += di * gamma;
                *ri += di * gamma;
            }
            for (g, v) in grad.iter_mut().zip(&verts[..n]) {
                *g = re_inner(v.as_slice(), &r);
            }
        }
        errors.push(norm(&r));
        gaps.push(gap);
    }
    Ok(HullDistanceCurve {
        errors,
        gaps,
        target: target.clone(),
        iterations,
    })
}

/// The zero-free test function `f(z) = exp(sigma z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroFree {
    pub sigma: Complex,
}

impl ZeroFree {
    pub fn new(sigma: Complex) -> Self {
        Self { sigma }
    }

    pub fn ln_abs(&self, z: Complex) -> f64 {
        (self.sigma * z).re
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    /// Disk around the fixed point, used when `a != 1`.
    FixedPointDisk { center: Complex, radius: f64 },
    /// Disk `|z - b| <= 2|b|`, used for translations.
    TranslationDisk { center: Complex, radius: f64 },
}

impl Region {
    pub fn center(&self) -> Complex {
        match *self {
            Region::FixedPointDisk { center, .. } | Region::TranslationDisk { center, .. } => center,
        }
    }

    pub fn radius(&self) -> f64 {
        match *self {
            Region::FixedPointDisk { radius, .. } | Region::TranslationDisk { radius, .. } => radius,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioExperimentReport {
    pub region: Region,
    /// `max|u| max|f| / (min|u| min|f|)` over the grid points in the region.
    pub m_bound: f64,
    pub max_ratio_observed: f64,
    pub n_max: u32,
    pub samples: usize,
    pub grid: usize,
    /// Largest `|psi(z) - center| - radius` over the samples.
    pub max_invariance_excess: f64,
    pub invariance_ok: bool,
    /// `max_ratio_observed <= m_bound * (1 + RATIO_SLACK)`.
    pub ratio_ok: bool,
}

/// Samples `|u_n(z) f(psi^n z)| / |u_n(w) f(psi^n w)|` with `w = psi(z)` for
/// `z` on a `grid x grid` lattice of the invariant disk, `n = 0..=n_max`.
pub fn ratio_experiment(
    op: &OperatorSymbol,
    f: &ZeroFree,
    r: f64,
    n_max: u32,
    grid: usize,
) -> Result<RatioExperimentReport> {
    require_bounded(op)?;
    if !op.u().is_zero_free() {
        return Err(Error::UnsupportedMultiplier);
    }
    let psi = *op.psi();
    let region = if psi.is_translation() {
        if psi.b.is_zero() {
            return Err(Error::RegionInvalid);
        }
        let b = psi.b.value();
        Region::TranslationDisk {
            center: b,
            radius: 2.0 * b.norm(),
        }
    } else {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidTruncation("region radius must be positive"));
        }
        Region::FixedPointDisk {
            center: op.z0().ok_or(Error::DegenerateMap)?,
            radius: r,
        }
    };
    let (center, radius) = (region.center(), region.radius());
    let grid = grid.max(2);
    let step = 2.0 * radius / (grid - 1) as f64;
    let points: Vec<Complex> = (0..grid)
        .flat_map(|i| (0..grid).map(move |j| (i, j)))
        .map(|(i, j)| {
            center + Complex::new(-radius + step * i as f64, -radius + step * j as f64)
        })
        .filter(|z| (z - center).norm() <= radius)
        .collect();

    let u = op.u();
    let (mut u_lo, mut u_hi, mut f_lo, mut f_hi) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &z in &points {
        let lu = u.ln_abs(z);
        let lf = f.ln_abs(z);
        u_lo = u_lo.min(lu);
        u_hi = u_hi.max(lu);
        f_lo = f_lo.min(lf);
        f_hi = f_hi.max(lf);
    }
    let ln_m = (u_hi - u_lo) + (f_hi - f_lo);

    let mut excess = f64::NEG_INFINITY;
    let mut ln_ratio_max = f64::NEG_INFINITY;
    for &z in &points {
        let w = psi.apply(z);
        excess = excess.max((w - center).norm() - radius);
        let (mut zn, mut wn) = (z, w);
        // ln |u_n| along each orbit, with the empty product at n = 0
        let (mut lz, mut lw) = (0.0, 0.0);
        for _ in 0..=n_max {
            let ratio = lz + f.ln_abs(zn) - lw - f.ln_abs(wn);
            ln_ratio_max = ln_ratio_max.max(ratio);
            lz += u.ln_abs(zn);
            lw += u.ln_abs(wn);
            zn = psi.apply(zn);
            wn = psi.apply(wn);
        }
    }
    let m_bound = ln_m.exp();
    let max_ratio_observed = ln_ratio_max.exp();
    Ok(RatioExperimentReport {
        region,
        m_bound,
        max_ratio_observed,
        n_max,
        samples: points.len(),
        grid,
        max_invariance_excess: excess,
        invariance_ok: excess <= INVARIANCE_TOL * (1.0 + radius),
        ratio_ok: ln_ratio_max <= ln_m + (1.0 + RATIO_SLACK).ln(),
    })
}
