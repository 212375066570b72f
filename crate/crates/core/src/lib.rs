//! Weighted composition operators `f -> u * (f o psi)` on the Fock space F2.
//!
//! The crate decides boundedness, cyclicity, convex-cyclicity and the
//! supercyclicity family from exact symbol data, and carries a truncated
//! numerical model of F2 in the orthonormal basis `e_n = z^n / sqrt(n!)`
//! that checks every closed form independently.
//!
//! `no_std`; needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod angle;
pub mod classify;
pub mod dynamics;
pub mod error;
pub mod fock;
pub mod scalar;
pub mod symbols;

pub use angle::{is_half_integer_combination, AngleKind, ExactAngle, Irrational, Rational};
pub use classify::{
    adjoint_symbol, check_bounded, check_convex_cyclic, check_cyclic, check_supercyclic_family,
    classify_full, eigen_system, operator_norm, ClassificationReport, NormBounds, Verdict,
    VerdictValue,
};
pub use error::{Error, Result};
pub use fock::{CoeffVector, OperatorMatrix, TruncationParams};
pub use scalar::{Complex, ModulusClass, Polar, Scalar};
pub use symbols::{
    fixed_point, iterate_map, iterated_multiplier, power_equals_base, AffineMap, EigenSystem,
    Multiplier, OperatorSymbol,
};
