//! Exact angles measured in turns (fractions of a full rotation).
//!
//! An angle is stored as an element of the Q-vector space spanned by
//! `1, sqrt2, sqrt3, sqrt5`. These four numbers are linearly independent over
//! the rationals, so equality of angles modulo whole turns reduces to exact
//! rational comparisons. The golden ratio is `1/2 + sqrt5/2` in this basis.

use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational used throughout the angle arithmetic.
pub type Rational = Ratio<i128>;

/// Catalog of provably irrational constants an angle may be built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Irrational {
    Sqrt2,
    Sqrt3,
    Sqrt5,
    Golden,
}

impl Irrational {
    pub const ALL: [Irrational; 4] = [
        Irrational::Sqrt2,
        Irrational::Sqrt3,
        Irrational::Sqrt5,
        Irrational::Golden,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Irrational::Sqrt2 => "sqrt2",
            Irrational::Sqrt3 => "sqrt3",
            Irrational::Sqrt5 => "sqrt5",
            Irrational::Golden => "golden",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn value(self) -> f64 {
        match self {
            Irrational::Sqrt2 => core::f64::consts::SQRT_2,
            Irrational::Sqrt3 => 1.732_050_807_568_877_2,
            Irrational::Sqrt5 => 2.236_067_977_499_79,
            Irrational::Golden => 1.618_033_988_749_895,
        }
    }

    /// Coordinates `(rational, [sqrt2, sqrt3, sqrt5])` of the constant.
    fn coordinates(self) -> (Rational, [Rational; 3]) {
        let zero = Rational::zero();
        let one = Rational::one();
        let half = Rational::new(1, 2);
        match self {
            Irrational::Sqrt2 => (zero, [one, zero, zero]),
            Irrational::Sqrt3 => (zero, [zero, one, zero]),
            Irrational::Sqrt5 => (zero, [zero, zero, one]),
            Irrational::Golden => (half, [zero, zero, half]),
        }
    }
}

impl fmt::Display for Irrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coarse shape of an angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleKind {
    RationalTurns,
    IrrationalTurns,
}

/// An angle in turns, exact modulo one full turn.
///
/// The rational coordinate is kept reduced into `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactAngle {
    rational: Rational,
    irrational: [Rational; 3],
}

fn reduce_mod_one(q: Rational) -> Rational {
    q - q.floor()
}

fn checked_sum(x: &Rational, y: &Rational) -> Result<Rational> {
    x.checked_add(y).ok_or(Error::UnsupportedCombination)
}

fn checked_product(x: &Rational, y: &Rational) -> Result<Rational> {
    x.checked_mul(y).ok_or(Error::UnsupportedCombination)
}

impl ExactAngle {
    pub fn zero() -> Self {
        Self {
            rational: Rational::zero(),
            irrational: [Rational::zero(); 3],
        }
    }

    /// `p/q` turns, reduced to lowest terms and into `[0, 1)`.
    pub fn rational_turns(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidAngle("denominator must be nonzero"));
        }
        Ok(Self::from_rational(Rational::new(p as i128, q as i128)))
    }

    pub fn from_rational(turns: Rational) -> Self {
        Self {
            rational: reduce_mod_one(turns),
            irrational: [Rational::zero(); 3],
        }
    }

    /// `r * kappa` turns with `r` a nonzero rational.
    pub fn irrational_turns(r: Rational, kappa: Irrational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::InvalidAngle("irrational multiplier must be nonzero"));
        }
        let (q0, qs) = kappa.coordinates();
        let mut irrational = [Rational::zero(); 3];
        for (slot, q) in irrational.iter_mut().zip(qs) {
            *slot = checked_product(&r, &q)?;
        }
        Ok(Self {
            rational: reduce_mod_one(checked_product(&r, &q0)?),
            irrational,
        })
    }

    pub fn kind(&self) -> AngleKind {
        if self.irrational.iter().all(Zero::is_zero) {
            AngleKind::RationalTurns
        } else {
            AngleKind::IrrationalTurns
        }
    }

    pub fn is_rational(&self) -> bool {
        self.kind() == AngleKind::RationalTurns
    }

    /// The angle as a reduced fraction of a turn, when it is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then_some(self.rational)
    }

    pub fn rational_part(&self) -> Rational {
        self.rational
    }

    /// Coefficients on `sqrt2`, `sqrt3`, `sqrt5`.
    pub fn irrational_part(&self) -> [Rational; 3] {
        self.irrational
    }

    /// Expresses the angle as `r * kappa` for a single catalog constant, if
    /// that is possible.
    pub fn as_single_tag(&self) -> Option<(Rational, Irrational)> {
        let nonzero: usize = self.irrational.iter().filter(|q| !q.is_zero()).count();
        if nonzero != 1 {
            return None;
        }
        for kappa in Irrational::ALL {
            let (_, qs) = kappa.coordinates();
            let idx = qs.iter().position(|q| !q.is_zero())?;
            if self.irrational[idx].is_zero() {
                continue;
            }
            let r = self.irrational[idx] / qs[idx];
            if let Ok(candidate) = Self::irrational_turns(r, kappa) {
                if candidate == *self {
                    return Some((r, kappa));
                }
            }
        }
        None
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut irrational = [Rational::zero(); 3];
        for (i, slot) in irrational.iter_mut().enumerate() {
            *slot = checked_sum(&self.irrational[i], &other.irrational[i])?;
        }
        Ok(Self {
            rational: reduce_mod_one(checked_sum(&self.rational, &other.rational)?),
            irrational,
        })
    }

    /// `m` times the angle.
    pub fn checked_scale(&self, m: i64) -> Result<Self> {
        let m = Rational::from_integer(m as i128);
        let mut irrational = [Rational::zero(); 3];
        for (i, slot) in irrational.iter_mut().enumerate() {
            *slot = checked_product(&self.irrational[i], &m)?;
        }
        Ok(Self {
            rational: reduce_mod_one(checked_product(&self.rational, &m)?),
            irrational,
        })
    }

    pub fn neg(&self) -> Self {
        let mut irrational = self.irrational;
        for q in irrational.iter_mut() {
            *q = -*q;
        }
        Self {
            rational: reduce_mod_one(-self.rational),
            irrational,
        }
    }

    /// Floating-point value in turns, reduced into `[0, 1)`.
    pub fn turns(&self) -> f64 {
        let roots = [
            Irrational::Sqrt2.value(),
            Irrational::Sqrt3.value(),
            Irrational::Sqrt5.value(),
        ];
        let mut acc = ratio_to_f64(&self.rational);
        for (q, root) in self.irrational.iter().zip(roots) {
            if !q.is_zero() {
                // reduce each product separately to keep the fractional part accurate
                let v = ratio_to_f64(q) * root;
                acc += v - libm::floor(v);
            }
        }
        let r = acc - libm::floor(acc);
        if r >= 1.0 {
            0.0
        } else {
            r
        }
    }

    pub fn radians(&self) -> f64 {
        self.turns() * core::f64::consts::TAU
    }
}

impl fmt::Display for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational)?;
        for (q, name) in self.irrational.iter().zip(["sqrt2", "sqrt3", "sqrt5"]) {
            if !q.is_zero() {
                write!(f, " + ({q})*{name}")?;
            }
        }
        f.write_str(" turns")
    }
}

pub(crate) fn ratio_to_f64(q: &Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Smallest `m >= 0` with `a*m = b (mod modulus)`, if any.
fn solve_congruence(a: i128, b: i128, modulus: i128) -> Option<i128> {
    let a = a.rem_euclid(modulus);
    let b = b.rem_euclid(modulus);
    let g = a.gcd(&modulus);
    if b % g != 0 {
        return None;
    }
    let reduced = modulus / g;
    if reduced == 1 {
        return Some(0);
    }
    let (_, inv, _) = ext_gcd(a / g, reduced);
    let inv = inv.rem_euclid(reduced);
    // (b/g) * inv mod reduced, done in two reductions to limit growth
    Some(((b / g) % reduced).checked_mul(inv)?.rem_euclid(reduced))
}

fn is_half_integer(q: &Rational) -> Result<bool> {
    let doubled = checked_product(q, &Rational::from_integer(2))?;
    Ok(doubled.is_integer())
}

/// Smallest `m >= 0` with `t + m*s` congruent to `0` or `1/2` modulo one
/// turn, or `None` if no such `m` exists.
///
/// With `t = arg(lambda)/2pi` and `s = arg(a)/2pi` this is the first index at
/// which `lambda * a^m` is real.
pub fn is_half_integer_combination(t: &ExactAngle, s: &ExactAngle) -> Result<Option<u64>> {
    let s_irrational = s.irrational.iter().any(|q| !q.is_zero());
    if !s_irrational {
        if !t.is_rational() {
            // t + m s keeps t's irrational coordinates for every m
            return Ok(None);
        }
        let (tp, tq) = (*t.rational.numer(), *t.rational.denom());
        let (sp, sq) = (*s.rational.numer(), *s.rational.denom());
        let lcm = tq.lcm(&sq);
        let a = 2i128
            .checked_mul(sp)
            .and_then(|v| v.checked_mul(lcm / sq))
            .ok_or(Error::UnsupportedCombination)?;
        let b = (-2i128)
            .checked_mul(tp)
            .and_then(|v| v.checked_mul(lcm / tq))
            .ok_or(Error::UnsupportedCombination)?;
        return match solve_congruence(a, b, lcm) {
            Some(m) => u64::try_from(m)
                .map(Some)
                .map_err(|_| Error::UnsupportedCombination),
            None => Ok(None),
        };
    }

    // The irrational coordinates pin down m uniquely.
    let idx = s
        .irrational
        .iter()
        .position(|q| !q.is_zero())
        .expect("checked above");
    let m = -t.irrational[idx] / s.irrational[idx];
    if !m.is_integer() || m.is_negative() {
        return Ok(None);
    }
    for i in 0..3 {
        let residual = checked_sum(&t.irrational[i], &checked_product(&m, &s.irrational[i])?)?;
        if !residual.is_zero() {
            return Ok(None);
        }
    }
    let rational = checked_sum(&t.rational, &checked_product(&m, &s.rational)?)?;
    if is_half_integer(&rational)? {
        u64::try_from(m.to_integer())
            .map(Some)
            .map_err(|_| Error::UnsupportedCombination)
    } else {
        Ok(None)
    }
}
