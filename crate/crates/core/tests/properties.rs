mod common;

use common::*;
use fockwc_core::dynamics::{hull_distance, ratio_experiment, OrbitRecord, Route, ZeroFree};
use fockwc_core::{
    check_convex_cyclic, classify_full, eigen_system, is_half_integer_combination, iterate_map,
    iterated_multiplier, power_equals_base, AffineMap, CoeffVector, Multiplier, OperatorSymbol,
    Scalar, VerdictValue,
};
use proptest::prelude::*;

fn arb_map() -> impl Strategy<Value = AffineMap> {
    (arb_complex(1.0), arb_complex(2.0)).prop_map(|(a, b)| AffineMap::new(cart(a), cart(b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn iterates_compose(psi in arb_map(), n in 0u32..12, m in 0u32..12) {
        let lhs = iterate_map(&psi, n + m);
        let rhs = iterate_map(&psi, n).compose(&iterate_map(&psi, m));
        let scale = 1.0 + lhs.a.value().norm() + lhs.b.value().norm();
        prop_assert!((lhs.a.value() - rhs.a.value()).norm() <= 1e-12 * scale);
        prop_assert!((lhs.b.value() - rhs.b.value()).norm() <= 1e-12 * scale);
    }

    #[test]
    fn iterated_multiplier_recursion(
        psi in arb_map(),
        d in arb_complex(1.5),
        cc in arb_complex(1.0),
        p in prop::collection::vec(arb_complex(1.0), 0..3),
        n in 0u32..6,
        zs in prop::collection::vec((0.0f64..2.0, 0.0f64..std::f64::consts::TAU), 100),
    ) {
        prop_assume!(d.norm() > 1e-3);
        let mut coeffs = vec![c(1.0, 0.0)];
        coeffs.extend(p);
        let u = Multiplier::new(cart(d), cart(cc), coeffs.into_iter().map(cart).collect()).unwrap();
        let op = OperatorSymbol::new(u.clone(), psi);
        let (Ok(next), Ok(prev)) = (iterated_multiplier(&op, n + 1), iterated_multiplier(&op, n)) else {
            return Ok(());
        };
        for (r, t) in zs {
            let z = Complex::from_polar(r, t);
            let lhs = next.eval(z);
            let rhs = u.eval(z) * prev.eval(psi.apply(z));
            prop_assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1e-300), "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn power_equals_base_ignores_conjugation(m in arb_modulus(), angle in arb_angle()) {
        prop_assume!(m <= 1.0);
        let a = polar(m, angle);
        prop_assert_eq!(power_equals_base(&a).unwrap(), power_equals_base(&a.conj()).unwrap());
    }

    #[test]
    fn no_witness_means_no_real_power(t in arb_angle(), s in arb_angle()) {
        if let Ok(None) = is_half_integer_combination(&t, &s) {
            let (t, s) = (t.turns(), s.turns());
            for m in 0..=10_000u32 {
                let x = (2.0 * std::f64::consts::PI * (t + m as f64 * s)).sin().abs();
                prop_assert!(x > 0.0);
            }
        }
    }

    #[test]
    fn eigenvalue_moduli_are_geometric(op in arb_exact_symbol()) {
        if let Ok(e) = eigen_system(&op, 5) {
            let a = op.a().abs();
            for (m, mu) in &e.pairs {
                let expect = a.powi(*m as i32) * e.lambda.norm();
                prop_assert!((mu.norm() - expect).abs() <= 1e-12 * expect.max(1e-300));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn report_invariants_hold(op in arb_exact_symbol()) {
        let r = classify_full(&op);
        prop_assert!(r.consistency_violations().is_empty(), "{:?}", r.consistency_violations());
        prop_assert_eq!(r.convex_cyclic.value, r.adjoint_convex_cyclic.value);
        prop_assert_eq!(r.convex_cyclic.value, r.invariant_convex_property.value);
        prop_assert_eq!(r.cyclic.value, r.adjoint_cyclic.value);
        if r.convex_cyclic.is_yes() {
            prop_assert!(r.cyclic.is_yes());
            let lambda = op.lambda().unwrap().norm();
            prop_assert!(r.norm.exact);
            prop_assert!((r.norm.lower - lambda).abs() <= 1e-9 * lambda);
            prop_assert!(lambda > 1.0);
        }
        for (_, v) in r.verdicts() {
            if v.is_exact() {
                prop_assert!(v.margin.is_none());
            }
        }
    }

    #[test]
    fn small_constant_multiplier_is_never_convex_cyclic(
        am in arb_modulus(),
        angle in arb_angle(),
        b in arb_complex(1.0),
        dm in prop::sample::select(vec![0.25, 0.5, 1.0]),
        da in arb_angle(),
    ) {
        prop_assume!(am <= 1.0);
        let a = polar(am, angle);
        // u = d exp(c z) with |u(z0)| <= 1 at the fixed point, or u = 1
        let op = if am == 1.0 { kernel_symbol(polar(dm, da), a, c(0.0, 0.0)) } else { symbol(polar(dm, da), c(0.0, 0.0), a, b) };
        prop_assert!(check_convex_cyclic(&op).is_no());
        let unit = symbol(Scalar::one(), c(0.0, 0.0), a, if am == 1.0 { c(0.0, 0.0) } else { b });
        prop_assert!(check_convex_cyclic(&unit).is_no());
    }

    #[test]
    fn multiplication_operators_are_not_cyclic(dm in 0.1f64..3.0, da in arb_angle()) {
        let op = OperatorSymbol::new(Multiplier::constant(polar(dm, da)).unwrap(), AffineMap::identity());
        let r = classify_full(&op);
        prop_assert_eq!(r.cyclic.value, VerdictValue::No);
        prop_assert_eq!(r.convex_cyclic.value, VerdictValue::No);
    }

    #[test]
    fn rotating_b_keeps_convex_verdict(
        angle in arb_angle(),
        dm in 0.5f64..3.0,
        da in arb_angle(),
        r in 0.1f64..1.5,
        phi in 0.0f64..std::f64::consts::TAU,
        psi in 0.0f64..std::f64::consts::TAU,
    ) {
        let a = polar(1.0, angle);
        let d = polar(dm, da);
        let x = check_convex_cyclic(&kernel_symbol(d, a, Complex::from_polar(r, phi)));
        let y = check_convex_cyclic(&kernel_symbol(d, a, Complex::from_polar(r, psi)));
        prop_assert_eq!(x.value, y.value);
    }
}

use fockwc_core::Complex;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_curve_is_nonincreasing(
        pts in prop::collection::vec(prop::collection::vec(arb_complex(1.0), 6), 1..30),
        target in prop::collection::vec(arb_complex(1.0), 6),
    ) {
        let rec = OrbitRecord {
            vectors: pts.into_iter().map(CoeffVector::new).collect(),
            route: Route::MatrixIteration,
        };
        let curve = hull_distance(&rec, &CoeffVector::new(target), 50).unwrap();
        for w in curve.errors.windows(2) {
            prop_assert!(w[1] <= w[0] + 1e-9);
        }
    }

    #[test]
    fn fixed_point_disk_is_invariant(
        am in prop::sample::select(vec![0.0, 0.3, 0.5, 0.9, 1.0]),
        angle in arb_angle(),
        b in arb_complex(1.0),
        d in arb_complex(2.0),
        cc in arb_complex(1.0),
        sigma in arb_complex(1.0),
        r in 0.2f64..2.0,
    ) {
        prop_assume!(d.norm() > 1e-3);
        let a = polar(am, angle);
        let op = if am == 1.0 { kernel_symbol(cart(d), a, b) } else { symbol(cart(d), cc, a, b) };
        prop_assume!(!op.psi().is_translation());
        let rep = ratio_experiment(&op, &ZeroFree::new(sigma), r, 40, 16).unwrap();
        prop_assert!(rep.invariance_ok, "excess {}", rep.max_invariance_excess);
        prop_assert!(rep.ratio_ok, "{} > {}", rep.max_ratio_observed, rep.m_bound);
    }
}
