mod common;

use common::*;
use fockwc_core::classify::eigen_exponent;
use fockwc_core::fock::{adjoint_consistency, build_matrix, dominant_singular_value};
use fockwc_core::{
    adjoint_symbol, check_bounded, check_convex_cyclic, check_cyclic, check_supercyclic_family,
    classify_full, eigen_system, operator_norm, AffineMap, Complex, Multiplier, OperatorSymbol,
    Scalar, TruncationParams, VerdictValue,
};

fn translation_example() -> OperatorSymbol {
    // u = e^{-z}, psi = z + 1
    symbol(Scalar::one(), c(-1.0, 0.0), Scalar::one(), c(1.0, 0.0))
}

fn golden_rotation(d: Scalar) -> OperatorSymbol {
    symbol(d, c(0.0, 0.0), polar(1.0, golden()), c(0.0, 0.0))
}

#[test]
fn translation_with_kernel_multiplier_is_bounded() {
    let v = check_bounded(&translation_example());
    assert_eq!(v.value, VerdictValue::Yes);
    assert!(v.margin.is_none());
}

#[test]
fn plain_translation_is_unbounded() {
    let op = symbol(Scalar::one(), c(0.0, 0.0), Scalar::one(), c(1.0, 0.0));
    assert_eq!(check_bounded(&op).value, VerdictValue::No);
    assert!(operator_norm(&op).is_err());
}

#[test]
fn contraction_with_polynomial_factor_is_bounded() {
    // u = z^2 e^{3z}, psi = z / 2
    let op = with_poly(
        Scalar::one(),
        c(3.0, 0.0),
        &[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        Scalar::real(0.5),
        c(0.0, 0.0),
    );
    assert_eq!(check_bounded(&op).value, VerdictValue::Yes);
    // Oracle: brute-force sup of |u(z)| exp((|z/2|^2 - |z|^2)/2) on a fine grid.
    // |z|^2 e^{3x - 3|z|^2/8} peaks on the real axis.
    let mut best = f64::NEG_INFINITY;
    for i in 0..4001 {
        let x = -2.0 + 14.0 * i as f64 / 4000.0;
        let v = 2.0 * x.abs().ln() + 3.0 * x - 3.0 * x * x / 8.0;
        best = best.max(v);
    }
    let norm = operator_norm(&op).unwrap();
    assert!((norm.lower.ln() - best).abs() < 1e-6, "{} vs {}", norm.lower.ln(), best);
    assert!((norm.upper - 2.0 * norm.lower).abs() < 1e-9 * norm.upper);
}

#[test]
fn unit_modulus_norm_is_exact() {
    let n = operator_norm(&translation_example()).unwrap();
    assert!(n.exact);
    assert!((n.lower - 0.5f64.exp()).abs() < 1e-15);
}

#[test]
fn composition_by_half_has_bracket_one_two() {
    let op = symbol(Scalar::one(), c(0.0, 0.0), Scalar::real(0.5), c(0.0, 0.0));
    let n = operator_norm(&op).unwrap();
    assert!((n.lower - 1.0).abs() < 1e-15 && (n.upper - 2.0).abs() < 1e-15);
    // Oracle: the matrix is diag(2^-k), whose largest singular value is 1.
    let m = build_matrix(&op, &TruncationParams::with_dim(32)).unwrap();
    let sv = dominant_singular_value(&m, 1e-12, 10_000).unwrap();
    assert!((sv.value - 1.0).abs() < 1e-9);
    assert!(n.contains(sv.value, 1e-9));

    let op3 = symbol(Scalar::real(3.0), c(0.0, 0.0), Scalar::real(0.5), c(0.0, 0.0));
    let n3 = operator_norm(&op3).unwrap();
    assert!((n3.lower - 3.0).abs() < 1e-14 && (n3.upper - 6.0).abs() < 1e-14);
}

#[test]
fn cyclicity_examples() {
    assert_eq!(check_cyclic(&translation_example()).value, VerdictValue::No);
    let half = symbol(Scalar::one(), c(0.0, 0.0), Scalar::real(0.5), c(0.0, 0.0));
    assert_eq!(check_cyclic(&half).value, VerdictValue::Yes);
    let vanishing = with_poly(
        Scalar::one(),
        c(0.0, 0.0),
        &[c(0.0, 0.0), c(1.0, 0.0)],
        Scalar::real(0.5),
        c(0.0, 0.0),
    );
    assert_eq!(check_cyclic(&vanishing).value, VerdictValue::No);
    let cube_root = symbol(polar(2.0, turns(1, 4)), c(0.0, 0.0), polar(1.0, turns(1, 3)), c(0.0, 0.0));
    assert_eq!(check_cyclic(&cube_root).value, VerdictValue::No);
}

#[test]
fn convex_cyclicity_examples() {
    let yes = check_convex_cyclic(&golden_rotation(cart(c(0.0, 2.0))));
    assert_eq!(yes.value, VerdictValue::Yes, "{}", yes.reason);
    let real = check_convex_cyclic(&golden_rotation(Scalar::real(2.0)));
    assert_eq!(real.value, VerdictValue::No);
    assert!(real.reason.contains("m = 0"));
    for op in [
        symbol(Scalar::one(), c(0.0, 0.0), polar(1.0, golden()), c(0.0, 0.0)),
        symbol(Scalar::one(), c(0.0, 0.0), Scalar::real(0.5), c(0.3, 0.0)),
        symbol(Scalar::one(), c(0.0, 0.0), polar(1.0, turns(1, 7)), c(0.0, 0.0)),
    ] {
        assert_eq!(check_convex_cyclic(&op).value, VerdictValue::No);
    }
}

#[test]
fn supercyclic_family_is_always_no() {
    for op in [
        translation_example(),
        symbol(Scalar::one(), c(0.0, 0.0), Scalar::real(0.5), c(0.0, 0.0)),
        golden_rotation(cart(c(0.0, 2.0))),
    ] {
        let (n, w, t) = check_supercyclic_family(&op);
        assert!([n, w, t].iter().all(|v| v.value == VerdictValue::No));
    }
}

#[test]
fn golden_rotation_eigen_system() {
    let op = golden_rotation(cart(c(0.0, 2.0)));
    let e = eigen_system(&op, 2).unwrap();
    assert_eq!(e.beta, c(0.0, 0.0));
    let a = op.a().value();
    for (m, mu) in &e.pairs {
        let expect = c(0.0, 2.0) * a.powu(*m);
        assert!((mu - expect).norm() < 1e-14);
    }
    assert_eq!(e.distinct, Some(true));
}

#[test]
fn eigen_exponent_uses_the_multiplier_exponent() {
    // u = 1, psi = z/2 + 1: W f = f(z/2 + 1) has f_m = (z - 2)^m with no
    // exponential factor. The value a conj(b) / (a - 1) = -1 only applies to
    // kernel-form multipliers.
    let op = symbol(Scalar::one(), c(0.0, 0.0), Scalar::real(0.5), c(1.0, 0.0));
    let (beta, z0) = eigen_exponent(&op).unwrap();
    assert_eq!(beta, c(0.0, 0.0));
    assert_eq!(z0, c(2.0, 0.0));
    let e = eigen_system(&op, 3).unwrap();
    assert_eq!(e.lambda, c(1.0, 0.0));
    for (m, mu) in &e.pairs {
        assert!((mu - c(0.5f64.powi(*m as i32), 0.0)).norm() < 1e-15);
    }
    let kernel = kernel_symbol(Scalar::one(), Scalar::real(0.5), c(1.0, 0.0));
    let (beta, _) = eigen_exponent(&kernel).unwrap();
    assert!((beta - c(-1.0, 0.0)).norm() < 1e-15);
}

#[test]
fn degenerate_maps_have_no_eigen_system() {
    assert!(eigen_system(&translation_example(), 3).is_err());
    let rank_one = symbol(Scalar::one(), c(0.0, 0.0), Scalar::zero(), c(0.0, 0.0));
    assert!(eigen_system(&rank_one, 3).is_err());
}

#[test]
fn adjoint_of_composition_is_kernel_weighted() {
    let a = cart(c(0.3, 0.4));
    let b = c(0.5, -0.2);
    let op = symbol(Scalar::one(), c(0.0, 0.0), a, b);
    let adj = adjoint_symbol(&op).unwrap().unwrap();
    assert_eq!(adj.a().value(), a.value().conj());
    assert_eq!(adj.b().value(), c(0.0, 0.0));
    assert_eq!(adj.u().c().value(), b.conj());
    let trunc = TruncationParams::with_dim(40);
    assert!(adjoint_consistency(&op, &adj, &trunc).unwrap() <= 1e-10);
}

#[test]
fn adjoint_of_real_diagonal() {
    let op = symbol(cart(c(2.0, 1.0)), c(0.0, 0.0), Scalar::real(0.6), c(0.0, 0.0));
    let adj = adjoint_symbol(&op).unwrap().unwrap();
    assert_eq!(adj.a().value(), c(0.6, 0.0));
    assert_eq!(adj.u().at_origin().value(), c(2.0, -1.0));
}

#[test]
fn adjoint_probe_half_shift() {
    let op = symbol(Scalar::one(), c(0.0, 0.0), Scalar::real(0.5), c(1.0, 0.0));
    let adj = adjoint_symbol(&op).unwrap().unwrap();
    let trunc = TruncationParams::with_dim(40);
    assert!(adjoint_consistency(&op, &adj, &trunc).unwrap() <= 1e-10);
}

#[test]
fn adjoint_is_absent_outside_the_admissible_cases() {
    let rank_one = symbol(Scalar::one(), c(0.0, 0.0), Scalar::zero(), c(1.0, 0.0));
    assert_eq!(adjoint_symbol(&rank_one).unwrap(), None);
    let off_kernel = symbol(Scalar::one(), c(0.0, 0.0), Scalar::one(), c(1.0, 0.0));
    assert_eq!(adjoint_symbol(&off_kernel).unwrap(), None);
    let poly = with_poly(
        Scalar::one(),
        c(0.0, 0.0),
        &[c(1.0, 0.0), c(1.0, 0.0)],
        Scalar::real(0.5),
        c(0.0, 0.0),
    );
    assert!(adjoint_symbol(&poly).is_err());
}

#[test]
fn full_report_for_translation_example() {
    let r = classify_full(&translation_example());
    assert_eq!(r.bounded.value, VerdictValue::Yes);
    assert!(r.norm.exact && (r.norm.lower - 0.5f64.exp()).abs() < 1e-15);
    assert_eq!(r.cyclic.value, VerdictValue::No);
    assert_eq!(r.convex_cyclic.value, VerdictValue::No);
    assert_eq!(r.supercyclic.value, VerdictValue::No);
    assert_eq!(r.weakly_supercyclic.value, VerdictValue::No);
    assert_eq!(r.tpt_supercyclic.value, VerdictValue::No);
    assert!(r.consistency_violations().is_empty());
}

#[test]
fn full_report_for_golden_rotation() {
    let r = classify_full(&golden_rotation(cart(c(0.0, 2.0))));
    assert_eq!(r.bounded.value, VerdictValue::Yes);
    assert!(r.norm.exact && r.norm.lower == 2.0);
    assert_eq!(r.cyclic.value, VerdictValue::Yes);
    assert_eq!(r.convex_cyclic.value, VerdictValue::Yes);
    assert_eq!(r.adjoint_convex_cyclic.value, VerdictValue::Yes);
    assert_eq!(r.supercyclic.value, VerdictValue::No);
    assert!(r.verdicts().iter().all(|(_, v)| v.margin.is_none()));
}

#[test]
fn rank_one_is_bounded_not_cyclic() {
    let r = classify_full(&symbol(Scalar::one(), c(0.0, 0.0), Scalar::zero(), c(0.0, 0.0)));
    assert_eq!(r.bounded.value, VerdictValue::Yes);
    assert_eq!(r.cyclic.value, VerdictValue::No);
    // W f = f(0), norm = ||1|| ||K_0|| = 1
    assert!((r.norm.lower - 1.0).abs() < 1e-15);
}

#[test]
fn multiplication_operator_is_not_cyclic() {
    let op = OperatorSymbol::new(Multiplier::constant(Scalar::real(2.0)).unwrap(), AffineMap::identity());
    let r = classify_full(&op);
    assert_eq!(r.bounded.value, VerdictValue::Yes);
    assert_eq!(r.cyclic.value, VerdictValue::No);
    assert_eq!(r.convex_cyclic.value, VerdictValue::No);
}

#[test]
fn inexact_rotation_gets_margin_verdicts() {
    // |a| = 1 only up to rounding and the angle is not exact
    let theta = 2.0 * std::f64::consts::PI * 0.618_033_988_749_895;
    let a = cart(Complex::from_polar(1.0, theta));
    let op = symbol(cart(c(0.0, 2.0)), c(0.0, 0.0), a, c(0.0, 0.0));
    let v = check_convex_cyclic(&op);
    assert!(!v.is_exact());
    if !v.is_unknown() {
        assert!(v.margin.is_some());
        assert!(v.reason.contains("non-exhaustive") || v.reason.contains("undecided"));
    }
}

#[test]
fn inexact_modulus_far_from_circle_is_decided_with_margin() {
    let op = symbol(Scalar::one(), c(0.0, 0.0), cart(c(0.3, 0.4)), c(0.0, 0.0));
    let v = check_cyclic(&op);
    assert_eq!(v.value, VerdictValue::YesWithMargin);
    assert!(v.margin.unwrap() > 0.0);
}
