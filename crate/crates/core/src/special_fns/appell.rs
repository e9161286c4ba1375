//! Appell hypergeometric function F₁ of two variables, through its
//! one-dimensional Euler-type integral representation
//!
//! F₁(a; b₁, b₂; c; y₁, y₂) = Γ(c)/(Γ(a)Γ(c−a)) ∫₀¹ t^{a−1} (1−t)^{c−a−1}
//!                            (1−y₁t)^{−b₁} (1−y₂t)^{−b₂} dt,
//!
//! valid for a > 0, c−a > 0 and y₁, y₂ < 1. The substitution t = sin²θ
//! removes the algebraic endpoint weights before refinement.

use super::gamma::ln_gamma;
use super::hyp2f1::gauss_2f1;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::tanh_sinh_plain;

/// F₁(a; b₁, b₂; c; y₁, y₂) by quadrature of the integral representation.
pub fn appell_f1(
    a: f64,
    b1: f64,
    b2: f64,
    c: f64,
    y1: f64,
    y2: f64,
    cfg: &EvalConfig,
) -> Result<f64> {
    if !(a > 0.0) || !(c - a > 0.0) {
        return Err(Error::Domain(format!(
            "integral representation requires a > 0 and c - a > 0, got a = {a}, c = {c}"
        )));
    }
    if !(y1 < 1.0) || !(y2 < 1.0) {
        return Err(Error::Domain(format!(
            "appell_f1 requires y1 < 1 and y2 < 1, got ({y1}, {y2})"
        )));
    }

    let integrand = |theta: f64| {
        let sin = theta.sin();
        let cos = theta.cos();
        let t = sin * sin;
        2.0 * sin.powf(2.0 * a - 1.0)
            * cos.powf(2.0 * (c - a) - 1.0)
            * (1.0 - y1 * t).powf(-b1)
            * (1.0 - y2 * t).powf(-b2)
    };
    let q = tanh_sinh_plain(
        integrand,
        0.0,
        std::f64::consts::FRAC_PI_2,
        cfg.rel_tol,
        cfg.quad_levels,
    )?;
    let norm = (ln_gamma(c) - ln_gamma(a) - ln_gamma(c - a)).exp();
    Ok(norm * q.value)
}

/// Two-term expansion of F₁(3/2; −1/2, −1/2; 3; y₁, y₂) about y₁ = 1, the
/// parameter family entering the inverse-square-root barrier action.
///
/// The leading term is (32/15π)·₂F₁(−1/2, 3/2; 7/2; y₂); the (y₁−1)
/// correction carries √(1−y₂), inverse powers of y₂ and arcsin(√y₂).
pub fn appell_f1_near_unity(y1: f64, y2: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(y2 > 0.0 && y2 < 1.0) {
        return Err(Error::Domain(format!(
            "near-unity expansion requires y2 in (0, 1), got {y2}"
        )));
    }
    let pi = std::f64::consts::PI;
    let leading = 32.0 / (15.0 * pi) * gauss_2f1(-0.5, 1.5, 3.5, y2, cfg)?;
    let correction = ((1.0 - y2).sqrt() * (2.0 / y2 + 3.0 / (y2 * y2) - 8.0)
        - 3.0 * y2.sqrt().asin() / y2.powf(2.5))
        * (y1 - 1.0)
        / (6.0 * pi);
    Ok(leading + correction)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    /// Independent oracle: composite Simpson on the raw t-integrand with the
    /// endpoint weight handled by t = sin²θ, at fixed high resolution and at
    /// double that resolution. No shared code with the tanh-sinh route.
    fn simpson_oracle(a: f64, b1: f64, b2: f64, c: f64, y1: f64, y2: f64, n: usize) -> f64 {
        let h = std::f64::consts::FRAC_PI_2 / n as f64;
        let f = |theta: f64| {
            let sin = theta.sin();
            let cos = theta.cos();
            let t = sin * sin;
            2.0 * sin.powf(2.0 * a - 1.0)
                * cos.powf(2.0 * (c - a) - 1.0)
                * (1.0 - y1 * t).powf(-b1)
                * (1.0 - y2 * t).powf(-b2)
        };
        let mut acc = f(0.0) + f(std::f64::consts::FRAC_PI_2);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(i as f64 * h);
        }
        let integral = acc * h / 3.0;
        (super::ln_gamma(c) - super::ln_gamma(a) - super::ln_gamma(c - a)).exp() * integral
    }

    #[test]
    fn beta_normalised_constant() {
        // F₁(3/2; −1/2, −1/2; 3; 0, 0) = 1 by normalization.
        let v = appell_f1(1.5, -0.5, -0.5, 3.0, 0.0, 0.0, &cfg()).unwrap();
        assert!((v - 1.0).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn reduction_to_gauss_2f1() {
        // F₁(a; b₁, b₂; c; y, y) = ₂F₁(a, b₁+b₂; c; y); with b₁+b₂ = −1 the
        // right side is the polynomial 1 − y/2.
        let v = appell_f1(1.5, -0.5, -0.5, 3.0, 0.5, 0.5, &cfg()).unwrap();
        assert!((v - 0.75).abs() < 1e-12, "got {v}");
        for y in [0.1, 0.3, 0.5, 0.7] {
            let lhs = appell_f1(1.5, -0.5, -0.5, 3.0, y, y, &cfg()).unwrap();
            let rhs = gauss_2f1(1.5, -1.0, 3.0, y, &cfg()).unwrap();
            assert!(
                (lhs - rhs).abs() < 1e-12 * rhs.abs(),
                "y = {y}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn matches_refined_grid_oracle() {
        // Oracle value recorded from the doubled-resolution Simpson rule.
        let coarse = simpson_oracle(1.5, -0.5, -0.5, 3.0, 0.9, 0.4, 1 << 12);
        let fine = simpson_oracle(1.5, -0.5, -0.5, 3.0, 0.9, 0.4, 1 << 13);
        assert!(
            (fine - coarse).abs() < 1e-12 * fine.abs(),
            "oracle not settled"
        );
        let v = appell_f1(1.5, -0.5, -0.5, 3.0, 0.9, 0.4, &cfg()).unwrap();
        assert!(
            (v - fine).abs() < 1e-11 * fine.abs(),
            "got {v}, oracle {fine}"
        );
    }

    #[test]
    fn domain_errors() {
        assert!(appell_f1(1.5, -0.5, -0.5, 3.0, 1.0, 0.5, &cfg()).is_err());
        assert!(appell_f1(1.5, -0.5, -0.5, 3.0, 0.5, 1.2, &cfg()).is_err());
        assert!(appell_f1(-0.5, -0.5, -0.5, 3.0, 0.2, 0.2, &cfg()).is_err());
        assert!(appell_f1_near_unity(1.0, 0.0, &cfg()).is_err());
        assert!(appell_f1_near_unity(1.0, 1.0, &cfg()).is_err());
    }

    #[test]
    fn near_unity_limit_small_y2() {
        // y₁ = 1 kills the correction; ₂F₁ → 1 as y₂ → 0⁺.
        let v = appell_f1_near_unity(1.0, 1e-9, &cfg()).unwrap();
        assert!((v - 32.0 / (15.0 * PI)).abs() < 1e-8, "got {v}");
    }

    #[test]
    fn near_unity_matches_integral_at_one() {
        let expansion = appell_f1_near_unity(1.0, 0.5, &cfg()).unwrap();
        let expected = 32.0 / (15.0 * PI) * gauss_2f1(-0.5, 1.5, 3.5, 0.5, &cfg()).unwrap();
        assert!((expansion - expected).abs() < 1e-14);
        let integral = appell_f1(1.5, -0.5, -0.5, 3.0, 1.0 - 1e-8, 0.5, &cfg()).unwrap();
        assert!(
            (expansion - integral).abs() < 1e-6 * integral.abs(),
            "expansion {expansion}, integral {integral}"
        );
    }

    #[test]
    fn near_unity_error_is_second_order() {
        // |expansion − integral| must shrink quadratically in (1 − y₁).
        let err = |dy: f64| {
            let e = appell_f1_near_unity(1.0 - dy, 0.5, &cfg()).unwrap();
            let f = appell_f1(1.5, -0.5, -0.5, 3.0, 1.0 - dy, 0.5, &cfg()).unwrap();
            (e - f).abs()
        };
        let e1 = err(0.01);
        let e2 = err(0.001);
        let ratio = e1 / e2;
        assert!(
            (30.0..300.0).contains(&ratio),
            "error ratio {ratio} not consistent with O((y1-1)^2): {e1} vs {e2}"
        );
    }
}
