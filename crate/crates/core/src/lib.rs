//! Exact and numerical invariants of knot diagrams and generic plane curves.
//!
//! The combinatorial side computes the order-2 Vassiliev invariant `v2` from
//! signed Gauss codes (two independent formulas), and the Arnold invariants
//! `St`, `J+`, `J-`, `I+`, `I-` and `alpha` of unicursal plane curves from an
//! exact arrangement analysis. The numerical side evaluates the underlying
//! configuration-space integrals (the X- and Y-integrals, the classical and
//! generalized Crofton integrals, and the Gauss linking integral) by
//! reproducible Monte Carlo, so each side checks the other.
//!
//! Monte Carlo runs are deterministic: counter-based per-stratum RNG streams
//! and fixed-order aggregation make results bit-identical for a given seed,
//! independent of how many threads execute the strata (the `parallel`
//! feature, on by default, runs them on rayon).

pub mod arrangement;
pub mod chords;
pub mod codecs;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod geom;
pub mod knots;
pub mod plane;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
