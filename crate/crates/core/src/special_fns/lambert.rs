//! Both real branches of the Lambert W function, solving W·e^W = x.
//!
//! W₀ covers x ∈ [−1/e, ∞) with W₀ ≥ −1; W₋₁ covers x ∈ [−1/e, 0) with
//! W₋₁ ≤ −1. Branch-specific initial guesses feed a Halley iteration
//! (log-form Newton far from the branch point, where e^W would over- or
//! underflow).

use crate::error::{Error, Result};

const INV_E: f64 = 0.36787944117144233; // 1/e, nearest f64

/// Residual bound the iterations are polished to: |W e^W − x| ≤ RESIDUAL_TOL · max(1, |x|).
pub const RESIDUAL_TOL: f64 = 1e-14;

/// Series about the branch point x = −1/e in p = √(2(e·x + 1)).
fn branch_point_series(p: f64) -> f64 {
    // W = −1 + p − p²/3 + 11p³/72 − 43p⁴/540 …
    -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))))
}

/// Halley iteration on f(w) = w e^w − x.
fn halley(mut w: f64, x: f64) -> f64 {
    for _ in 0..40 {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            return w;
        }
        let denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        if denom == 0.0 || !denom.is_finite() {
            break;
        }
        let step = f / denom;
        w -= step;
        if step.abs() <= 1e-16 * w.abs().max(1.0) {
            break;
        }
    }
    w
}

/// Newton on the logarithmic form g(w) = w + ln|w| − ln|x|, stable when
/// e^w is out of floating-point range. Valid for w of a single sign.
fn log_newton(mut w: f64, ln_abs_x: f64) -> f64 {
    for _ in 0..60 {
        let g = w + w.abs().ln() - ln_abs_x;
        let dg = 1.0 + 1.0 / w;
        let step = g / dg;
        w -= step;
        if step.abs() <= 1e-16 * w.abs().max(1.0) {
            break;
        }
    }
    w
}

fn check_residual(w: f64, x: f64, branch: &str) -> Result<f64> {
    let residual = (w * w.exp() - x).abs();
    if residual <= RESIDUAL_TOL * x.abs().max(1.0) {
        Ok(w)
    } else {
        Err(Error::Convergence(format!(
            "lambert_{branch}({x}) residual {residual:e} above tolerance"
        )))
    }
}

/// Principal branch W₀(x), defined for x ≥ −1/e.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if !(x >= -INV_E) {
        // Allow round-off at the branch point itself.
        if (x + INV_E).abs() <= 4.0 * f64::EPSILON {
            return Ok(-1.0);
        }
        return Err(Error::Domain(format!(
            "lambert_w0 requires x >= -1/e, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }

    let guess = if x < -0.25 {
        branch_point_series((2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt())
    } else if x.abs() < 0.25 {
        // Leading series terms about zero.
        x * (1.0 + x * (-1.0 + x * 1.5))
    } else if x > std::f64::consts::E {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    } else {
        (1.0 + x).ln()
    };

    let w = if guess > 700.0 {
        log_newton(guess, x.ln())
    } else {
        halley(guess, x)
    };
    check_residual(w.max(-1.0), x, "w0")
}

/// Lower branch W₋₁(x), defined for x ∈ [−1/e, 0).
pub fn lambert_wm1(x: f64) -> Result<f64> {
    if !(-INV_E..0.0).contains(&x) {
        if (x + INV_E).abs() <= 4.0 * f64::EPSILON {
            return Ok(-1.0);
        }
        return Err(Error::Domain(format!(
            "lambert_wm1 requires x in [-1/e, 0), got {x}"
        )));
    }

    if x > -0.25 {
        // Asymptotic guess W ≈ ln(−x) − ln(−ln(−x)), then refine on the
        // log form which stays conditioned as x → 0⁻.
        let l1 = (-x).ln();
        let l2 = (-l1).ln();
        let guess = l1 - l2 + l2 / l1;
        let w = log_newton(guess, (-x).ln());
        check_residual(w.min(-1.0), x, "wm1")
    } else {
        // W₋₁ mirror of the branch-point series: odd powers change sign.
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt();
        let guess = -1.0 - p - p * p / 3.0 - 11.0 * p * p * p / 72.0;
        let w = halley(guess, x);
        check_residual(w.min(-1.0), x, "wm1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w0_fixed_points() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        let w = lambert_w0(std::f64::consts::E).unwrap();
        assert!((w - 1.0).abs() < 1e-15);
    }

    #[test]
    fn branch_point_values() {
        assert_eq!(lambert_wm1(-INV_E).unwrap(), -1.0);
        let w0 = lambert_w0(-INV_E).unwrap();
        assert!((w0 + 1.0).abs() < 2e-4); // square-root behaviour limits precision here
    }

    #[test]
    fn w0_residuals_across_domain() {
        for i in 0..1000 {
            let x = -INV_E + (i as f64 + 0.5) / 1000.0 * (50.0 + INV_E);
            let w = lambert_w0(x).unwrap();
            assert!(
                (w * w.exp() - x).abs() <= RESIDUAL_TOL * x.abs().max(1.0),
                "residual too large at x = {x}"
            );
            assert!(w >= -1.0);
        }
    }

    #[test]
    fn wm1_residuals_across_domain() {
        for i in 0..1000 {
            // Log-spaced from the branch point into the corner at 0⁻.
            let x = -INV_E * (1e-12f64).powf(i as f64 / 999.0);
            let w = lambert_wm1(x).unwrap();
            assert!(
                (w * w.exp() - x).abs() <= RESIDUAL_TOL * x.abs().max(1.0),
                "residual too large at x = {x}"
            );
            assert!(w <= -1.0);
        }
    }

    #[test]
    fn wm1_extreme_corner() {
        let w = lambert_wm1(-1e-300).unwrap();
        assert!((w * w.exp() - (-1e-300)).abs() <= 1e-14);
        assert!(w < -690.0);
    }

    #[test]
    fn domains_enforced() {
        assert!(lambert_w0(-0.4).is_err());
        assert!(lambert_wm1(0.1).is_err());
        assert!(lambert_wm1(-0.4).is_err());
        assert!(lambert_wm1(0.0).is_err());
    }

    #[test]
    fn large_argument() {
        let x = 1e40;
        let w = lambert_w0(x).unwrap();
        assert!((w * w.exp() - x).abs() <= RESIDUAL_TOL * x);
    }
}
