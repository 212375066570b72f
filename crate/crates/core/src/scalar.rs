//! Complex scalars with an optional exact polar form.

use num_complex::Complex64;


#[allow(unused_imports)] // needed without std
use num_traits::Float;

use crate::angle::ExactAngle;
use crate::error::{Error, Result};

pub type Complex = Complex64;

/// Within this distance of the unit circle a cartesian modulus is not trusted.
pub const UNIT_CIRCLE_GUARD: f64 = 1e-9;

/// Exact polar data: the modulus is taken at face value and the angle is
/// exact in turns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polar {
    pub modulus: f64,
    pub angle: ExactAngle,
}

/// Where a modulus sits relative to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModulusClass {
    Zero,
    Inside,
    Unit,
    Outside,
    /// Cartesian input too close to the unit circle to decide.
    Unresolved,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scalar {
    value: Complex,
    polar: Option<Polar>,
}

/// `e^{2 pi i angle}`, exact on the axes.
pub fn unit(angle: &ExactAngle) -> Complex {
    if let Some(q) = angle.as_rational() {
        let (p, d) = (*q.numer(), *q.denom());
        match (p, d) {
            (0, _) => return Complex::new(1.0, 0.0),
            (1, 4) => return Complex::new(0.0, 1.0),
            (1, 2) => return Complex::new(-1.0, 0.0),
            (3, 4) => return Complex::new(0.0, -1.0),
            _ => {}
        }
    }
    Complex::from_polar(1.0, angle.radians())
}

impl Scalar {
    pub fn new(re: f64, im: f64) -> Self {
        Self {
            value: Complex::new(re, im),
            polar: None,
        }
    }

    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0)
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0)
    }

    pub fn one() -> Self {
        Self::new(1.0, 0.0)
    }

    pub fn from_complex(value: Complex) -> Self {
        Self { value, polar: None }
    }

    pub fn polar(modulus: f64, angle: ExactAngle) -> Result<Self> {
        if !modulus.is_finite() || modulus < 0.0 {
            return Err(Error::InvalidAngle("modulus must be finite and nonnegative"));
        }
        Ok(Self {
            value: unit(&angle) * modulus,
            polar: Some(Polar { modulus, angle }),
        })
    }

    #[inline]
    pub fn value(&self) -> Complex {
        self.value
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn abs(&self) -> f64 {
        match self.polar {
            Some(p) => p.modulus,
            None => self.value.norm(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.re == 0.0 && self.value.im == 0.0
    }

    /// The annotation supplied at construction, if any.
    pub fn polar_annotation(&self) -> Option<Polar> {
        self.polar
    }

    /// Exact polar data: the annotation, or the obvious one for cartesian
    /// values lying on a coordinate axis.
    pub fn exact_polar(&self) -> Option<Polar> {
        if self.polar.is_some() {
            return self.polar;
        }
        let Complex { re, im } = self.value;
        let (modulus, p, q) = match (re == 0.0, im == 0.0) {
            (true, true) => (0.0, 0, 1),
            (_, true) if re > 0.0 => (re, 0, 1),
            (_, true) => (-re, 1, 2),
            (true, _) if im > 0.0 => (im, 1, 4),
            (true, _) => (-im, 3, 4),
            _ => return None,
        };
        Some(Polar {
            modulus,
            angle: ExactAngle::rational_turns(p, q).expect("nonzero denominator"),
        })
    }

    pub fn is_exact(&self) -> bool {
        self.exact_polar().is_some()
    }

    pub fn modulus_class(&self) -> ModulusClass {
        match self.exact_polar() {
            Some(p) if p.modulus == 0.0 => ModulusClass::Zero,
            Some(p) if p.modulus < 1.0 => ModulusClass::Inside,
            Some(p) if p.modulus == 1.0 => ModulusClass::Unit,
            Some(_) => ModulusClass::Outside,
            None => {
                let r = self.value.norm();
                if (r - 1.0).abs() <= UNIT_CIRCLE_GUARD {
                    ModulusClass::Unresolved
                } else if r < 1.0 {
                    ModulusClass::Inside
                } else {
                    ModulusClass::Outside
                }
            }
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            value: self.value.conj(),
            polar: self.polar.map(|p| Polar {
                modulus: p.modulus,
                angle: p.angle.neg(),
            }),
        }
    }

    /// Product, keeping exact polar data when both factors have it.
    pub fn mul(&self, other: &Self) -> Self {
        let value = self.value * other.value;
        let polar = match (self.exact_polar(), other.exact_polar()) {
            (Some(x), Some(y)) => x.angle.checked_add(&y.angle).ok().map(|angle| Polar {
                modulus: x.modulus * y.modulus,
                angle,
            }),
            _ => None,
        };
        // Cartesian axis values stay cartesian so equality with literals is kept.
        match polar {
            Some(p) if self.polar.is_some() || other.polar.is_some() => Self {
                value,
                polar: Some(p),
            },
            _ => Self { value, polar: None },
        }
    }

    pub fn powi(&self, n: u32) -> Self {
        let value = complex_powi(self.value, n);
        let polar = self.polar.and_then(|p| {
            p.angle.checked_scale(n as i64).ok().map(|angle| Polar {
                modulus: p.modulus.powi(n as i32),
                angle,
            })
        });
        Self { value, polar }
    }
}

impl From<Complex> for Scalar {
    fn from(value: Complex) -> Self {
        Self::from_complex(value)
    }
}

/// Integer power by repeated squaring.
pub fn complex_powi(z: Complex, mut n: u32) -> Complex {
    let mut base = z;
    let mut acc = Complex::new(1.0, 0.0);
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::{Irrational, Rational};

    #[test]
    fn polar_agrees_with_cartesian() {
        let angle = ExactAngle::irrational_turns(Rational::new(1, 1), Irrational::Golden).unwrap();
        let s = Scalar::polar(2.0, angle).unwrap();
        let expect = Complex::from_polar(2.0, angle.radians());
        assert!((s.value() - expect).norm() <= 1e-12 * 2.0);
        assert_eq!(s.modulus_class(), ModulusClass::Outside);
    }

    #[test]
    fn axis_values_are_exact() {
        let i2 = Scalar::new(0.0, 2.0);
        let p = i2.exact_polar().unwrap();
        assert_eq!(p.modulus, 2.0);
        assert_eq!(p.angle, ExactAngle::rational_turns(1, 4).unwrap());
        assert_eq!(Scalar::new(-1.0, 0.0).modulus_class(), ModulusClass::Unit);
        assert!(Scalar::new(0.6, 0.8).exact_polar().is_none());
        assert_eq!(Scalar::new(0.6, 0.8).modulus_class(), ModulusClass::Unresolved);
        assert_eq!(Scalar::new(0.3, 0.4).modulus_class(), ModulusClass::Inside);
    }

    #[test]
    fn quarter_turn_units_are_exact() {
        let q = ExactAngle::rational_turns(1, 4).unwrap();
        assert_eq!(unit(&q), Complex::new(0.0, 1.0));
        assert_eq!(Scalar::polar(3.0, q).unwrap().value(), Complex::new(0.0, 3.0));
    }

    #[test]
    fn product_keeps_exact_angle() {
        let a = Scalar::polar(1.0, ExactAngle::rational_turns(1, 3).unwrap()).unwrap();
        let d = Scalar::new(0.0, 2.0);
        let prod = a.mul(&d);
        let p = prod.polar_annotation().unwrap();
        assert_eq!(p.angle, ExactAngle::rational_turns(7, 12).unwrap());
        assert!((prod.value() - a.value() * d.value()).norm() < 1e-15);
    }

    #[test]
    fn powi_matches_repeated_product() {
        let z = Complex::new(0.3, -0.7);
        let mut acc = Complex::new(1.0, 0.0);
        for n in 0..20u32 {
            assert!((complex_powi(z, n) - acc).norm() < 1e-14);
            acc *= z;
        }
    }
}
