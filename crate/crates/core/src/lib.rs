//! Flag-transitive `2-(144,12,λ)` designs of `PSL(3,3)` and the arithmetic
//! that surrounds their classification.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf`]: projective 3×3 matrices over a prime field, the explicit
//!   generators of the order-39 Frobenius subgroup and of `A₄`, and the
//!   polarity of the conic `XZ − Y² = 0`.
//! * [`permgroup`]: brute-force finite group machinery (closure, orbits,
//!   stabilizers, normalizers, double cosets, primitivity).
//! * [`atlas`]: exact orders of the finite simple classical groups, their
//!   outer automorphism groups, and a few named groups.
//! * [`geometry`]: the coset geometries on 144 points and the two designs.
//! * [`design`]: design-theoretic verification (parameters, flags, tactical
//!   configurations, orbit conditions, triple factorizations).
//! * [`arith`]: primitive parts, Zsigmondy primes and the order inequalities.
//! * [`diophantine`]: bounded exhaustive scans of the square equations and
//!   the significant-prime table audit.
//! * [`cli`]: the command-line front end used by the `flagtrans` binary.

pub mod arith;
pub mod atlas;
pub mod cli;
pub mod design;
pub mod diophantine;
mod error;
pub mod geometry;
pub mod gf;
pub mod permgroup;
pub mod report;

pub use error::{Error, Result};
