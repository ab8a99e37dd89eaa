//! Deterministic `01 -> 10` evolution on binary strings.
//!
//! A string evolves in synchronous steps: every occurrence of the substring
//! `01` is replaced by `10`, simultaneously. After at most `n - 1` steps the
//! string reaches the stable form `11..1100..00`; the number of steps taken
//! is its *stabilization time*.
//!
//! This crate computes the stabilization time three independent ways
//! (direct simulation, Young-diagram depth, a closed-form random-walk
//! expression), computes the exact probability law of the stabilization
//! time when bits are drawn i.i.d. Bernoulli(p), evaluates the limiting
//! densities of the suitably centered and scaled time in the three
//! asymptotic regimes, and verifies them against seeded Monte Carlo via
//! Kolmogorov-Smirnov distances.
//!
//! Modules follow the pipeline:
//!
//! * [`evolution`] — bit strings, the rewrite step, stabilization, core
//!   extraction.
//! * [`young`] — staircase paths, Young diagrams, corner cutting, depth.
//! * [`walk`] — partial-sum profiles and the O(n) closed form.
//! * [`exactlaw`] — exact finite-n laws (enumeration, DP, mixture), generic
//!   over the weight scalar (exact rationals or `f64`).
//! * [`limits`] — closed-form limit densities and their quadrature oracles.
//! * [`montecarlo`] — seeded sampling, scaled statistics, KS distances.

pub mod evolution;
pub mod exactlaw;
pub mod limits;
pub mod montecarlo;
pub mod walk;
pub mod weight;
pub mod young;

mod quad;

pub use evolution::{BitString, CoreDecomposition, ParseBitStringError, Stabilization};
pub use exactlaw::{CoefficientVector, Pmf};
pub use limits::LimitDistribution;
pub use montecarlo::{EmpiricalSample, Regime};
pub use weight::Weight;

/// Exact rational scalar used by the exact-law engine.
pub type Rational = num_rational::BigRational;

/// Floating-point scalar used by the continuous layer.
pub type Real = f64;

/// Probability mass function with exact rational weights.
pub type RationalPmf = Pmf<Rational>;

/// Probability mass function with floating-point weights.
pub type FloatPmf = Pmf<Real>;
