//! Special functions backing the closed-form barrier actions: Gauss ₂F₁,
//! Appell F₁, both real Lambert W branches, and Gamma-function ratios.
//!
//! Everything here is a pure function of its arguments and safe to call from
//! any number of threads.

mod appell;
mod gamma;
mod hyp2f1;
mod lambert;

pub use appell::{appell_f1, appell_f1_near_unity};
pub use gamma::{digamma, gamma, gamma_ratio, ln_gamma};
pub use hyp2f1::{gauss_2f1, gauss_2f1_via_integral};
pub use lambert::{lambert_w0, lambert_wm1, RESIDUAL_TOL as LAMBERT_RESIDUAL_TOL};
