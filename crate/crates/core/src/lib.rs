//! Exact construction of the exceptional Laguerre (L1, L2) and Jacobi (J1, J2)
//! orthogonal polynomials through Darboux–Crum transformations of the radial
//! oscillator and the trigonometric Darboux–Pöschl–Teller potential, together
//! with machine checks of the identities they satisfy.
//!
//! Everything symbolic runs over exact rationals in the sinusoidal coordinate
//! `η` (`η = x²` on the Laguerre side, `η = cos 2x` on the Jacobi side).
//! The [`numerics`] module is the only floating-point layer.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bispectral;
pub mod classical;
pub mod darboux;
mod error;
pub mod exceptional;
pub mod families;
pub mod numerics;
pub mod ratpoly;
mod report;
pub mod suite;

pub use error::{Error, Result};
pub use families::{Family, FamilyParams, Tier};
pub use ratpoly::{int, rat, Rational, RationalFunction, UniPoly};
pub use report::{Check, Perturbation, Report};
