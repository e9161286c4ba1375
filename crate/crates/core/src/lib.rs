//! Semiclassical (WKB) tunnel-ionization rates for particles bound in
//! one-dimensional power-law potentials −1/xˢ (0 < s < 2) and logarithmic
//! potentials V₀ ln(x/a), subjected to a static or low-frequency electric
//! field −Fx.
//!
//! The crate computes the barrier action exponent −2∫|p|dx by three
//! independent routes (a singularity-aware numerical oracle, exact closed
//! forms in terms of Gauss ₂F₁ / Appell F₁ functions, and small-field
//! asymptotic expansions) and assembles ionization probabilities per unit
//! time from WKB normalization constants. Atomic units (m = ħ = e = 1, and
//! V₀ = 1 for the power-law family) are used throughout.

// `!(x > 0.0)`-style guards are used on purpose: they reject NaN inputs,
// which `x <= 0.0` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Published Lanczos/constants tables keep their canonical digit counts.
#![allow(clippy::excessive_precision)]

pub mod barrier;
pub mod config;
pub mod error;
pub mod potentials;
pub mod rates;
pub mod special_fns;
pub mod spectra;
pub mod turning_points;
pub mod validate;

mod quadrature;

pub use config::EvalConfig;
pub use error::{Error, Result};
