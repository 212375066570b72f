//! Truncated model of F2 in the orthonormal basis `e_n(z) = z^n / sqrt(n!)`.
//!
//! Multiplication by `z` acts as the weighted shift `z e_k = sqrt(k+1) e_{k+1}`,
//! so the expansion of `u (az+b)^n / sqrt(n!)` follows column by column from
//! `col_{n+1} = (a S + b) col_n / sqrt(n+1)`. Since `S` only moves mass
//! upwards, the first `N` coordinates of every column are the exact leading
//! coefficients of the infinite expansion; truncation never feeds back into
//! the retained rows. No factorial is ever formed.

use alloc::vec;
use alloc::vec::Vec;


#[allow(unused_imports)] // needed without std
use num_traits::Float;

use crate::classify::{check_bounded, eigen_exponent};
use crate::error::{Error, Result};
use crate::scalar::Complex;
use crate::symbols::{Multiplier, OperatorSymbol};

const ZERO: Complex = Complex::new(0.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationParams {
    /// Basis size `N`.
    pub dim: usize,
    pub residual_tol: f64,
    pub sv_tol: f64,
    /// Largest allowed `ln |entry|` before a matrix is declared divergent.
    pub log_cap: f64,
    /// Iteration cap for the singular-value power method.
    pub max_iterations: usize,
}

impl Default for TruncationParams {
    fn default() -> Self {
        Self {
            dim: 64,
            residual_tol: 1e-8,
            sv_tol: 1e-10,
            log_cap: 600.0,
            max_iterations: 50_000,
        }
    }
}

impl TruncationParams {
    pub fn with_dim(dim: usize) -> Self {
        Self {
            dim,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim < 8 {
            return Err(Error::InvalidTruncation("basis size must be at least 8"));
        }
        if !(self.residual_tol > 0.0 && self.sv_tol > 0.0 && self.log_cap > 0.0) {
            return Err(Error::InvalidTruncation("tolerances must be positive"));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidTruncation("iteration cap must be positive"));
        }
        Ok(())
    }

    /// Rows kept by residual checks: the last `ceil(N/8)` are a buffer.
    pub fn buffered_rows(&self) -> usize {
        buffered_rows(self.dim)
    }
}

pub fn buffered_rows(dim: usize) -> usize {
    dim - dim.div_ceil(8)
}

/// Coefficients against `e_n`: `f(z) = sum v_n z^n / sqrt(n!)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector(Vec<Complex>);

impl CoeffVector {
    pub fn new(v: Vec<Complex>) -> Self {
        Self(v)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![ZERO; dim])
    }

    /// The basis vector `e_k`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[k] = Complex::new(1.0, 0.0);
        v
    }

    /// Coefficients from ordinary monomial coefficients `f = sum m_k z^k`.
    pub fn from_monomials(monomials: &[Complex], dim: usize) -> Self {
        let mut v = Self::zeros(dim);
        let mut sqrt_fact = 1.0;
        for (k, slot) in v.0.iter_mut().enumerate() {
            if k > 0 {
                sqrt_fact *= (k as f64).sqrt();
            }
            if let Some(m) = monomials.get(k) {
                *slot = *m * sqrt_fact;
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Complex> {
        self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `<self, other> = sum self_n conj(other_n)`.
    pub fn inner(&self, other: &Self) -> Complex {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| x * y.conj())
            .sum()
    }

    /// Point evaluation `f(w)`.
    pub fn evaluate(&self, w: Complex) -> Complex {
        let mut term = Complex::new(1.0, 0.0);
        let mut acc = ZERO;
        for (n, v) in self.0.iter().enumerate() {
            if n > 0 {
                term = term * w / (n as f64).sqrt();
            }
            acc += v * term;
        }
        acc
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self(self.0.iter().map(|z| z * s).collect())
    }

    pub fn add_scaled(&mut self, s: Complex, other: &Self) {
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            *x += y * s;
        }
    }

    /// Euclidean norm of `self - other` over the first `rows` coordinates.
    pub fn distance_upto(&self, other: &Self, rows: usize) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .take(rows)
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest coordinate difference over the first `rows` coordinates.
    pub fn max_abs_diff_upto(&self, other: &Self, rows: usize) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .take(rows)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn truncated(&self, dim: usize) -> Self {
        let mut v: Vec<Complex> = self.0.iter().copied().take(dim).collect();
        v.resize(dim, ZERO);
        Self(v)
    }
}

/// `S v`: multiplication by `z` in the orthonormal basis, truncated.
fn shift(v: &[Complex]) -> Vec<Complex> {
    let mut out = vec![ZERO; v.len()];
    for k in 1..v.len() {
        out[k] = v[k - 1] * (k as f64).sqrt();
    }
    out
}

/// `v_n = w^n / sqrt(n!)`: the function `exp(w z)`.
fn exponential_vector(w: Complex, dim: usize) -> Vec<Complex> {
    let mut out = Vec::with_capacity(dim);
    let mut term = Complex::new(1.0, 0.0);
    for n in 0..dim {
        if n > 0 {
            term = term * w / (n as f64).sqrt();
        }
        out.push(term);
    }
    out
}

/// The kernel `K_w(z) = exp(z conj(w))`.
pub fn kernel_vector(w: Complex, trunc: &TruncationParams) -> CoeffVector {
    CoeffVector(exponential_vector(w.conj(), trunc.dim))
}

/// Coefficients of `u = d exp(cz) p(z)`.
pub fn multiplier_vector(u: &Multiplier, dim: usize) -> Vec<Complex> {
    let g = exponential_vector(u.c().value(), dim);
    let p = u.p_values();
    let mut acc: Vec<Complex> = g.iter().map(|x| x * p[p.len() - 1]).collect();
    for &coef in p.iter().rev().skip(1) {
        acc = shift(&acc);
        for (x, y) in acc.iter_mut().zip(&g) {
            *x += y * coef;
        }
    }
    let d = u.d().value();
    acc.iter_mut().for_each(|x| *x *= d);
    acc
}

/// `||u||` in F2, summing coefficients until the tail is negligible.
pub fn multiplier_norm(u: &Multiplier) -> f64 {
    let mut dim = 64;
    loop {
        let v = multiplier_vector(u, dim);
        let total: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        let tail: f64 = v[dim - dim / 4..].iter().map(|z| z.norm_sqr()).sum();
        if tail <= 1e-28 * total || dim >= 4096 {
            return total.sqrt();
        }
        dim *= 2;
    }
}

/// `N x N` compression of `W`; `entries[m * N + n] = <W e_n, e_m>`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<Complex>,
    /// `false` when the symbol is not known to be bounded: norms computed
    /// from this matrix then diverge with `N`.
    pub bounded: bool,
}

impl OperatorMatrix {
    pub fn from_rows(dim: usize, entries: Vec<Complex>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(Self {
            dim,
            entries,
            bounded: true,
        })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![ZERO; dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = Complex::new(1.0, 0.0);
        }
        Self {
            dim,
            entries,
            bounded: true,
        }
    }

    pub fn diagonal(diag: &[Complex]) -> Self {
        let dim = diag.len();
        let mut m = Self::identity(dim);
        for (k, d) in diag.iter().enumerate() {
            m.entries[k * dim + k] = *d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.entries[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn column(&self, col: usize) -> CoeffVector {
        CoeffVector((0..self.dim).map(|r| self.get(r, col)).collect())
    }

    pub fn conjugate_transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.entries[r * n + c].conj();
            }
        }
        Self {
            dim: n,
            entries,
            bounded: self.bounded,
        }
    }

    /// `max |self - other|` over entries.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max))
    }

    fn check_dim(&self, f: &CoeffVector) -> Result<()> {
        if f.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: f.len(),
            });
        }
        Ok(())
    }

    /// `M^H f`.
    pub fn apply_adjoint(&self, f: &CoeffVector) -> Result<CoeffVector> {
        self.check_dim(f)?;
        let n = self.dim;
        let mut out = vec![ZERO; n];
        for (r, fr) in f.0.iter().enumerate() {
            let row = &self.entries[r * n..(r + 1) * n];
            for (o, m) in out.iter_mut().zip(row) {
                *o += m.conj() * fr;
            }
        }
        Ok(CoeffVector(out))
    }
}

/// `M f`.
pub fn apply(m: &OperatorMatrix, f: &CoeffVector) -> Result<CoeffVector> {
    m.check_dim(f)?;
    let n = m.dim;
    let out = (0..n)
        .map(|r| {
            m.entries[r * n..(r + 1) * n]
                .iter()
                .zip(&f.0)
                .map(|(x, y)| x * y)
                .sum()
        })
        .collect();
    Ok(CoeffVector(out))
}

/// Matrix of `W(u, psi)` in the first `N` basis vectors.
///
/// Unbounded symbols are accepted; the `bounded` flag on the result is
/// cleared and entries that exceed `exp(log_cap)` raise
/// [`Error::TruncationOverflow`].
pub fn build_matrix(op: &OperatorSymbol, trunc: &TruncationParams) -> Result<OperatorMatrix> {
    trunc.validate()?;
    let dim = trunc.dim;
    let cap = trunc.log_cap.exp();
    let a = op.a().value();
    let b = op.b().value();
    let mut entries = vec![ZERO; dim * dim];
    let mut col = multiplier_vector(op.u(), dim);
    for n in 0..dim {
        if n > 0 {
            let scale = 1.0 / (n as f64).sqrt();
            let shifted = shift(&col);
            for (x, s) in col.iter_mut().zip(shifted) {
                *x = (a * s + b * *x) * scale;
            }
        }
        for (m, v) in col.iter().enumerate() {
            let size = v.norm();
            if size.is_nan() || size > cap {
                return Err(Error::TruncationOverflow { row: m, column: n });
            }
            entries[m * dim + n] = *v;
        }
    }
    Ok(OperatorMatrix {
        dim,
        entries,
        bounded: check_bounded(op).is_yes(),
    })
}

/// Truncated coefficients together with the norm of the discarded tail.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedExpansion {
    pub vector: CoeffVector,
    /// Norm of coordinates `N..2N` of the expansion.
    pub tail_norm: f64,
}

/// Coefficients of the eigenvector `(z - z0)^m exp(beta z)`.
pub fn expand_eigenvector(
    op: &OperatorSymbol,
    m: u32,
    trunc: &TruncationParams,
) -> Result<TruncatedExpansion> {
    let (beta, z0) = eigen_exponent(op)?;
    let ext = 2 * trunc.dim;
    let mut v = exponential_vector(beta, ext);
    for _ in 0..m {
        let shifted = shift(&v);
        for (x, s) in v.iter_mut().zip(shifted) {
            *x = s - z0 * *x;
        }
    }
    let tail_norm = v[trunc.dim..].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.truncate(trunc.dim);
    Ok(TruncatedExpansion {
        vector: CoeffVector(v),
        tail_norm,
    })
}

/// `||M v - mu v|| / ||v||` over the buffered leading rows.
pub fn eigen_residual(m: &OperatorMatrix, v: &CoeffVector, mu: Complex) -> Result<f64> {
    let norm = v.norm();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mv = apply(m, v)?;
    let rows = buffered_rows(m.dim);
    let scaled = v.scale(mu);
    Ok(mv.distance_upto(&scaled, rows) / norm)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularValueEstimate {
    pub value: f64,
    pub iterations: usize,
    /// Relative change at the last step.
    pub gap: f64,
    /// Copied from the matrix: `false` means the estimate diverges with `N`.
    pub bounded: bool,
}

/// Largest singular value by power steps on `M^H M`, started from the
/// normalized all-ones vector. The estimate `||M v||` never exceeds the
/// true value.
pub fn dominant_singular_value(
    m: &OperatorMatrix,
    tol: f64,
    max_iterations: usize,
) -> Result<SingularValueEstimate> {
    let n = m.dim;
    let start = CoeffVector(vec![Complex::new(1.0, 0.0); n]);
    dominant_singular_value_from(m, &start, tol, max_iterations).map(|(est, _)| est)
}

/// Power steps on `M^H M` from `start`, returning the estimate and the final
/// unit vector. `||M v||` is nondecreasing along the iteration, so starting
/// from the zero-padded vector of a smaller truncation gives an estimate at
/// least as large as the smaller one.
pub fn dominant_singular_value_from(
    m: &OperatorMatrix,
    start: &CoeffVector,
    tol: f64,
    max_iterations: usize,
) -> Result<(SingularValueEstimate, CoeffVector)> {
    let n = m.dim;
    let norm = start.norm();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut v = start.truncated(n).scale(Complex::new(1.0 / norm, 0.0));
    let mut sigma = 0.0;
    let mut gap = f64::INFINITY;
    for it in 1..=max_iterations {
        let mv = apply(m, &v)?;
        let next = mv.norm();
        if next == 0.0 {
            let est = SingularValueEstimate {
                value: 0.0,
                iterations: it,
                gap: 0.0,
                bounded: m.bounded,
            };
            return Ok((est, v));
        }
        gap = (next - sigma).abs() / next;
        sigma = next;
        if gap <= tol {
            let est = SingularValueEstimate {
                value: sigma,
                iterations: it,
                gap,
                bounded: m.bounded,
            };
            return Ok((est, v));
        }
        let w = m.apply_adjoint(&mv)?;
        let wn = w.norm();
        v = w.scale(Complex::new(1.0 / wn, 0.0));
    }
    Err(Error::NoConvergence {
        iterations: max_iterations,
        estimate: sigma,
        gap,
    })
}

/// `max |matrix(candidate) - matrix(op)^H|`; zero (up to rounding) exactly
/// when `candidate` is the adjoint symbol.
pub fn adjoint_consistency(
    op: &OperatorSymbol,
    candidate: &OperatorSymbol,
    trunc: &TruncationParams,
) -> Result<f64> {
    let m = build_matrix(op, trunc)?;
    let c = build_matrix(candidate, trunc)?;
    c.max_abs_diff(&m.conjugate_transpose())
}

/// `||M^H K_w - conj(u(w)) K_{psi(w)}|| / ||K_w||`.
pub fn kernel_covariance_check(
    op: &OperatorSymbol,
    w: Complex,
    trunc: &TruncationParams,
) -> Result<f64> {
    let m = build_matrix(op, trunc)?;
    let k = kernel_vector(w, trunc);
    let lhs = m.apply_adjoint(&k)?;
    let rhs = kernel_vector(op.psi().apply(w), trunc).scale(op.u().eval(w).conj());
    Ok(lhs.distance_upto(&rhs, trunc.dim) / k.norm())
}
