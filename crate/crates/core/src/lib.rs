//! Polynomials deviating least from zero in measure.
//!
//! Given a trigonometric polynomial `f` of order `n` with a prescribed
//! leading harmonic, how small can the measure of `{t : |f(t)| >= 1}` be,
//! and which polynomials attain the minimum? This crate implements the
//! closed-form answers, the extremal families attaining them, a level-set
//! measurement engine, derivative-free search oracles that rediscover the
//! optima numerically, and the convex-geometry checks behind the proofs.
//!
//! Modules:
//! * [`trigpoly`] — coefficient, zero-product, and circle-polynomial forms.
//! * [`levelset`] — measurement of `{t : |f(t)| >= h}` on the torus.
//! * [`closedforms`] — the closed-form quantities and extremal constructors.
//! * [`oracle`] — searches and scans that verify the closed forms independently.
//! * [`geometry`] — the lifted body in `R^m`: convexity, cube partitions,
//!   line-section decompositions.

pub mod closedforms;
pub mod error;
pub mod geometry;
pub mod levelset;
pub mod oracle;
pub mod trigpoly;

pub use error::{Error, Result};
