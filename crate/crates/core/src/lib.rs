//! Computational potential theory on an interval: Hausdorff h-contents of
//! compact sets, Frostman measures and their distribution functions, and
//! Nevanlinna difference characteristics of log-moduli of rational functions,
//! together with a harness that verifies the integral bounds tying the three
//! together on fractal and randomized instances.
//!
//! The crate is organized around the objects themselves:
//!
//! * [`gauge`] — gauge functions `h` pricing cover intervals, their inverses
//!   and stretch constants;
//! * [`set`] — compact subsets of `[0, r]` as finite interval unions,
//!   including Cantor-type prefractals;
//! * [`content`] — Hausdorff h-contents of bounded diameter, exact for
//!   concave gauges and by exhaustive cover search as an independent oracle;
//! * [`increasing`] — increasing functions, their Lebesgue–Stieltjes
//!   measures, moduli of continuity, Dini integrals and Stieltjes quadrature;
//! * [`frostman`] — the net-measure construction of a Frostman measure on a
//!   compact set;
//! * [`nevanlinna`] — log-modulus test functions, circle maxima and means,
//!   and the difference characteristic;
//! * [`bounds`] — right-hand-side evaluators and the corpus verification
//!   harness.

// Validations are written as `!(x > 0.0)` so that NaN is rejected together
// with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod content;
pub mod error;
pub mod frostman;
pub mod gauge;
pub mod increasing;
pub mod nevanlinna;
pub mod quad;
pub mod set;
pub mod special;

pub use bounds::{BoundReport, BoundVariant, CorpusConfig, VariantStatus};
pub use num_complex::Complex64;
pub use content::{ContentMode, ContentQuery, ContentResult};
pub use error::{Error, Result};
pub use frostman::{FrostmanReport, FrostmanResult};
pub use gauge::Gauge;
pub use increasing::IncreasingFunction;
pub use nevanlinna::LogRatio;
pub use set::IntervalUnion;
