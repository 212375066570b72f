//! Symbol data of a weighted composition operator `f -> u * (f o psi)`:
//! affine self-maps `psi(z) = a z + b` and multipliers
//! `u(z) = d * exp(c z) * p(z)`.

use alloc::vec;
use alloc::vec::Vec;


#[allow(unused_imports)] // needed without std
use num_traits::Float;

use crate::angle::AngleKind;
use crate::error::{Error, Result};
use crate::scalar::{Complex, ModulusClass, Scalar};

/// `psi(z) = a z + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    pub a: Scalar,
    pub b: Scalar,
}

impl AffineMap {
    pub fn new(a: Scalar, b: Scalar) -> Self {
        Self { a, b }
    }

    pub fn identity() -> Self {
        Self::new(Scalar::one(), Scalar::zero())
    }

    #[inline]
    pub fn apply(&self, z: Complex) -> Complex {
        self.a.value() * z + self.b.value()
    }

    /// `self o inner`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap {
            a: self.a.mul(&inner.a),
            b: Scalar::from_complex(self.a.value() * inner.b.value() + self.b.value()),
        }
    }

    pub fn is_translation(&self) -> bool {
        self.a.value() == Complex::new(1.0, 0.0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_translation() && self.b.is_zero()
    }
}

/// `b / (1 - a)`. For the identity map every point is fixed and `0` is
/// returned by convention.
pub fn fixed_point(psi: &AffineMap) -> Result<Complex> {
    if psi.is_translation() {
        return if psi.b.is_zero() {
            Ok(Complex::new(0.0, 0.0))
        } else {
            Err(Error::DegenerateMap)
        };
    }
    Ok(psi.b.value() / (Complex::new(1.0, 0.0) - psi.a.value()))
}

/// The n-th iterate `(a^n, b (1 + a + ... + a^{n-1}))`, computed by binary
/// powering of the composition.
pub fn iterate_map(psi: &AffineMap, mut n: u32) -> AffineMap {
    let mut acc = AffineMap::identity();
    let mut base = *psi;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.compose(&base);
        }
        base = base.compose(&base);
        n >>= 1;
    }
    acc
}

pub fn poly_eval(p: &[Complex], z: Complex) -> Complex {
    p.iter().rev().fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
}

pub fn poly_mul(p: &[Complex], q: &[Complex]) -> Vec<Complex> {
    let mut out = vec![Complex::new(0.0, 0.0); p.len() + q.len() - 1];
    for (i, &x) in p.iter().enumerate() {
        for (j, &y) in q.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `p(alpha z + beta)`.
pub fn poly_compose_affine(p: &[Complex], alpha: Complex, beta: Complex) -> Vec<Complex> {
    // Horner in the polynomial ring: acc = acc * (alpha z + beta) + p_k
    let mut acc = vec![Complex::new(0.0, 0.0)];
    for &coef in p.iter().rev() {
        acc = poly_mul(&acc, &[beta, alpha]);
        acc[0] += coef;
    }
    while acc.len() > 1 && acc.last().is_some_and(|c| c.norm() == 0.0) {
        acc.pop();
    }
    acc
}

/// `u(z) = d * exp(c z) * p(z)`, `p` listed constant term first.
#[derive(Debug, Clone, PartialEq)]
pub struct Multiplier {
    d: Scalar,
    c: Scalar,
    p: Vec<Scalar>,
}

impl Multiplier {
    pub fn new(d: Scalar, c: Scalar, p: Vec<Scalar>) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InvalidMultiplier("leading scalar d must be nonzero"));
        }
        match p.last() {
            None => return Err(Error::InvalidMultiplier("polynomial factor is empty")),
            Some(last) if last.is_zero() => {
                return Err(Error::InvalidMultiplier(
                    "last polynomial coefficient must be nonzero",
                ))
            }
            _ => {}
        }
        Ok(Self { d, c, p })
    }

    /// `d * exp(c z)`.
    pub fn exponential(d: Scalar, c: Scalar) -> Result<Self> {
        Self::new(d, c, vec![Scalar::one()])
    }

    pub fn constant(d: Scalar) -> Result<Self> {
        Self::exponential(d, Scalar::zero())
    }

    pub fn d(&self) -> &Scalar {
        &self.d
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn p(&self) -> &[Scalar] {
        &self.p
    }

    pub fn p_values(&self) -> Vec<Complex> {
        self.p.iter().map(Scalar::value).collect()
    }

    pub fn degree(&self) -> usize {
        self.p.len() - 1
    }

    /// `u` has no zeros in the plane.
    pub fn is_zero_free(&self) -> bool {
        self.degree() == 0
    }

    /// `d * p[0]`, the value `u(0)`.
    pub fn at_origin(&self) -> Scalar {
        self.d.mul(&self.p[0])
    }

    fn poly_at(&self, z: Complex) -> Complex {
        self.p
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, c| acc * z + c.value())
    }

    pub fn eval(&self, z: Complex) -> Complex {
        let poly = self.poly_at(z);
        self.d.value() * (self.c.value() * z).exp() * poly
    }

    /// `ln |u(z)|`, finite away from the zeros of `p`.
    pub fn ln_abs(&self, z: Complex) -> f64 {
        let poly = self.poly_at(z);
        self.d.value().norm().ln() + (self.c.value() * z).re + poly.norm().ln()
    }
}

/// The pair `(u, psi)` with its fixed point `z0` and `lambda = u(z0)` cached
/// whenever `a != 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSymbol {
    u: Multiplier,
    psi: AffineMap,
    z0: Option<Complex>,
    lambda: Option<Complex>,
}

impl OperatorSymbol {
    pub fn new(u: Multiplier, psi: AffineMap) -> Self {
        let z0 = if psi.is_translation() {
            None
        } else {
            fixed_point(&psi).ok()
        };
        let lambda = z0.map(|z| u.eval(z));
        Self { u, psi, z0, lambda }
    }

    pub fn u(&self) -> &Multiplier {
        &self.u
    }

    pub fn psi(&self) -> &AffineMap {
        &self.psi
    }

    pub fn a(&self) -> &Scalar {
        &self.psi.a
    }

    pub fn b(&self) -> &Scalar {
        &self.psi.b
    }

    pub fn z0(&self) -> Option<Complex> {
        self.z0
    }

    pub fn lambda(&self) -> Option<Complex> {
        self.lambda
    }

    /// Exact symbols carry exact polar data for `a`, so every modulus and
    /// root-of-unity question about `a` is decidable.
    pub fn is_exact(&self) -> bool {
        self.psi.a.is_exact()
    }

    /// `u(z) * f(psi(z))` for a pointwise-defined `f`.
    pub fn apply_pointwise(&self, f: impl Fn(Complex) -> Complex, z: Complex) -> Complex {
        self.u.eval(z) * f(self.psi.apply(z))
    }

    /// `|c + a conj(b)|`: vanishes exactly when `u` is a multiple of the
    /// kernel `K_{-conj(a) b}`.
    pub fn kernel_defect(&self) -> f64 {
        (self.u.c.value() + self.psi.a.value() * self.psi.b.value().conj()).norm()
    }
}

/// Multiplier `u_n = prod_{j<n} u o psi^j` of the n-th power of the operator,
/// returned again in the `d * exp(c z) * p(z)` family. `n = 0` gives `1`.
///
/// Fails only when `u_n` vanishes identically (`a = 0` and `p(b) = 0`).
pub fn iterated_multiplier(op: &OperatorSymbol, n: u32) -> Result<Multiplier> {
    let u = op.u();
    let mut sum_a = Complex::new(0.0, 0.0);
    let mut sum_b = Complex::new(0.0, 0.0);
    let mut poly = vec![Complex::new(1.0, 0.0)];
    let mut step = AffineMap::identity();
    let p = u.p_values();
    for _ in 0..n {
        sum_a += step.a.value();
        sum_b += step.b.value();
        if u.degree() > 0 {
            poly = poly_mul(&poly, &poly_compose_affine(&p, step.a.value(), step.b.value()));
        } else {
            poly[0] *= p[0];
        }
        step = op.psi().compose(&step);
    }
    let c = u.c().value();
    let d = u.d().powi(n).value() * (c * sum_b).exp();
    while poly.len() > 1 && poly.last().is_some_and(|v| v.norm() == 0.0) {
        poly.pop();
    }
    if poly[0].norm() == 0.0 && poly.len() == 1 {
        return Err(Error::InvalidMultiplier("iterated multiplier vanishes identically"));
    }
    let p = poly.into_iter().map(Scalar::from_complex).collect();
    Multiplier::new(Scalar::from_complex(d), Scalar::from_complex(c * sum_a), p)
}

/// `true` when `a^k = a` for some `k >= 2`, i.e. `a = 0` or `a` is a root of
/// unity.
pub fn power_equals_base(a: &Scalar) -> Result<bool> {
    match a.modulus_class() {
        ModulusClass::Zero => Ok(true),
        ModulusClass::Inside | ModulusClass::Outside => Ok(false),
        ModulusClass::Unit => {
            let polar = a.exact_polar().expect("unit class implies exact polar data");
            Ok(polar.angle.kind() == AngleKind::RationalTurns)
        }
        ModulusClass::Unresolved => Err(Error::InexactInput(
            "|a| is within 1e-9 of 1 and a has no exact polar form",
        )),
    }
}

/// Eigen-data `{(m, a^m lambda)}` with eigenvectors
/// `(z - z0)^m exp(beta z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    /// Exponent of the eigenvector family.
    pub beta: Complex,
    pub z0: Complex,
    pub lambda: Complex,
    pub pairs: Vec<(u32, Complex)>,
    /// `Some(true)` when the listed eigenvalues are provably distinct.
    pub distinct: Option<bool>,
}
