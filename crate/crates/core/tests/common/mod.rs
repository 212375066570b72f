#![allow(dead_code)]

use fockwc_core::{
    AffineMap, Complex, ExactAngle, Irrational, Multiplier, OperatorSymbol, Rational, Scalar,
};
use proptest::prelude::*;

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn turns(p: i64, q: i64) -> ExactAngle {
    ExactAngle::rational_turns(p, q).unwrap()
}

pub fn irrational(num: i64, den: i64, kappa: Irrational) -> ExactAngle {
    ExactAngle::irrational_turns(Rational::new(num as i128, den as i128), kappa).unwrap()
}

pub fn golden() -> ExactAngle {
    irrational(1, 1, Irrational::Golden)
}

pub fn polar(modulus: f64, angle: ExactAngle) -> Scalar {
    Scalar::polar(modulus, angle).unwrap()
}

pub fn cart(z: Complex) -> Scalar {
    Scalar::from_complex(z)
}

/// `u = d exp(c z)`, `psi = a z + b`.
pub fn symbol(d: Scalar, cc: Complex, a: Scalar, b: Complex) -> OperatorSymbol {
    OperatorSymbol::new(
        Multiplier::exponential(d, cart(cc)).unwrap(),
        AffineMap::new(a, cart(b)),
    )
}

/// Same as [`symbol`] with `c = -a conj(b)`.
pub fn kernel_symbol(d: Scalar, a: Scalar, b: Complex) -> OperatorSymbol {
    symbol(d, -a.value() * b.conj(), a, b)
}

pub fn with_poly(d: Scalar, cc: Complex, p: &[Complex], a: Scalar, b: Complex) -> OperatorSymbol {
    OperatorSymbol::new(
        Multiplier::new(d, cart(cc), p.iter().copied().map(cart).collect()).unwrap(),
        AffineMap::new(a, cart(b)),
    )
}

pub fn arb_angle() -> impl Strategy<Value = ExactAngle> {
    prop_oneof![
        (0i64..24, 1i64..13).prop_map(|(p, q)| turns(p, q)),
        (
            prop_oneof![-5i64..0, 1i64..6],
            1i64..7,
            prop::sample::select(Irrational::ALL.to_vec())
        )
            .prop_map(|(n, d, k)| irrational(n, d, k)),
    ]
}

pub fn arb_modulus() -> impl Strategy<Value = f64> {
    prop::sample::select(vec![0.0, 0.25, 0.5, 0.75, 0.9, 1.0, 1.0, 1.0, 1.5])
}

pub fn arb_complex(r: f64) -> impl Strategy<Value = Complex> {
    (-r..r, -r..r).prop_map(|(x, y)| c(x, y))
}

/// Symbols whose `a` carries exact polar data. Unit-modulus draws use the
/// kernel form half of the time so both bounded and unbounded cases appear.
pub fn arb_exact_symbol() -> impl Strategy<Value = OperatorSymbol> {
    (
        arb_modulus(),
        arb_angle(),
        prop_oneof![Just(c(0.0, 0.0)), arb_complex(1.5)],
        prop::sample::select(vec![0.5, 1.0, 2.0, 3.0]),
        arb_angle(),
        arb_complex(1.0),
        any::<bool>(),
        prop::collection::vec(arb_complex(1.0), 0..3),
    )
        .prop_map(|(am, aa, b, dm, da, cc, kernel, extra)| {
            let a = polar(am, aa);
            let d = polar(dm, da);
            let cc = if kernel { -a.value() * b.conj() } else { cc };
            let mut p = vec![c(1.0, 0.0)];
            if !kernel && !extra.is_empty() {
                p.extend(extra);
                if p.last().unwrap().norm() == 0.0 {
                    p.pop();
                }
            }
            with_poly(d, cc, &p, a, b)
        })
}
