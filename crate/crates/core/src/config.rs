//! Evaluation tuning knobs for series and quadrature based routines.

use crate::error::{Error, Result};

/// Accuracy controls shared by the special-function evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Target relative tolerance for series sums and quadratures.
    pub rel_tol: f64,
    /// Cap on the number of series terms before giving up.
    pub max_terms: usize,
    /// Cap on refinement doublings for integral representations.
    pub quad_levels: usize,
}

impl EvalConfig {
    pub fn new(rel_tol: f64, max_terms: usize, quad_levels: usize) -> Result<Self> {
        if !(rel_tol > 0.0) {
            return Err(Error::Domain(format!("rel_tol must be > 0, got {rel_tol}")));
        }
        if max_terms < 1 || quad_levels < 1 {
            return Err(Error::Domain(
                "max_terms and quad_levels must be at least 1".into(),
            ));
        }
        Ok(Self {
            rel_tol,
            max_terms,
            quad_levels,
        })
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_terms: 10_000,
            quad_levels: 12,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let cfg = EvalConfig::default();
        assert_eq!(cfg.rel_tol, 1e-12);
        assert_eq!(cfg.max_terms, 10_000);
        assert_eq!(cfg.quad_levels, 12);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(EvalConfig::new(0.0, 10, 10).is_err());
        assert!(EvalConfig::new(-1e-9, 10, 10).is_err());
        assert!(EvalConfig::new(1e-12, 0, 10).is_err());
        assert!(EvalConfig::new(1e-12, 10, 0).is_err());
    }
}
