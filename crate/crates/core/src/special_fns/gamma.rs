//! Gamma-family helpers: log-Gamma, Gamma, Gamma ratios and digamma.

use crate::error::{Error, Result};

// Lanczos approximation constants (g = 7, n = 9).
// Coefficients from Paul Godfrey / Boost / CPython.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn lanczos_sum(x: f64) -> f64 {
    let mut sum = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        sum += c / (x + (i + 1) as f64);
    }
    sum
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // Reflection keeps the Lanczos argument in its accurate range.
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}

/// Γ(x) for real non-pole x, including negative non-integer arguments.
pub fn gamma(x: f64) -> f64 {
    if x > 0.0 {
        if x > 171.6 {
            return f64::INFINITY;
        }
        return ln_gamma(x).exp();
    }
    // Reflection: Γ(x) = π / (sin(πx) Γ(1−x)).
    let pi = std::f64::consts::PI;
    let s = (pi * x).sin();
    if s == 0.0 {
        return f64::NAN; // pole at non-positive integer
    }
    pi / (s * gamma(1.0 - x))
}

/// Γ(p)/Γ(q) for positive p, q, evaluated through log-Gamma.
pub fn gamma_ratio(p: f64, q: f64) -> Result<f64> {
    if !(p > 0.0) || !(q > 0.0) {
        return Err(Error::Domain(format!(
            "gamma_ratio requires positive arguments, got ({p}, {q})"
        )));
    }
    Ok((ln_gamma(p) - ln_gamma(q)).exp())
}

/// Digamma ψ(x) for real non-pole x.
pub fn digamma(x: f64) -> f64 {
    let pi = std::f64::consts::PI;
    if x <= 0.0 {
        if x == x.floor() {
            return f64::NAN;
        }
        // ψ(1−x) − ψ(x) = π cot(πx)
        return digamma(1.0 - x) - pi / (pi * x).tan();
    }
    // Recurrence up to the asymptotic region, then the Stirling series.
    let mut value = 0.0;
    let mut y = x;
    while y < 12.0 {
        value -= 1.0 / y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    // ψ(y) ≈ ln y − 1/(2y) − Σ B_{2n}/(2n y^{2n})
    value + y.ln()
        - 0.5 * inv
        - inv2
            * (1.0 / 12.0
                - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_PI: f64 = 1.7724538509055160273;
    const EULER_GAMMA: f64 = 0.5772156649015328606;

    #[test]
    fn gamma_known_values() {
        assert!((gamma(1.0) - 1.0).abs() < 1e-14);
        assert!((gamma(0.5) - SQRT_PI).abs() < 1e-14);
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
        assert!((gamma(1.5) - 0.5 * SQRT_PI).abs() < 1e-14);
        // Γ(−1/2) = −2√π
        assert!((gamma(-0.5) + 2.0 * SQRT_PI).abs() < 1e-13);
    }

    #[test]
    fn ratio_examples() {
        // Γ(1)/Γ(3/2) = 2/√π
        let r = gamma_ratio(1.0, 1.5).unwrap();
        assert!((r - 2.0 / SQRT_PI).abs() < 1e-14);
        // Γ(2)/Γ(5/2) = 4/(3√π)
        let r = gamma_ratio(2.0, 2.5).unwrap();
        assert!((r - 4.0 / (3.0 * SQRT_PI)).abs() < 1e-14);
        // identity
        let r = gamma_ratio(0.37, 0.37).unwrap();
        assert_eq!(r, 1.0);
    }

    #[test]
    fn ratio_rejects_nonpositive() {
        assert!(gamma_ratio(0.0, 1.0).is_err());
        assert!(gamma_ratio(1.0, -2.0).is_err());
    }

    #[test]
    fn digamma_known_values() {
        let ln2 = std::f64::consts::LN_2;
        assert!((digamma(1.0) + EULER_GAMMA).abs() < 1e-13);
        assert!((digamma(0.5) + EULER_GAMMA + 2.0 * ln2).abs() < 1e-13);
        assert!((digamma(1.5) - (2.0 - EULER_GAMMA - 2.0 * ln2)).abs() < 1e-13);
        // ψ(n) = −γ + Σ_{k<n} 1/k
        assert!((digamma(4.0) - (-EULER_GAMMA + 1.0 + 0.5 + 1.0 / 3.0)).abs() < 1e-13);
    }
}
