//! Gauss hypergeometric function ₂F₁(a, b; c; x) for real parameters and
//! real argument x ≤ 1.
//!
//! Evaluation strategy:
//!
//! * terminating series when a or b is a non-positive integer;
//! * direct power series for |x| ≤ 0.75;
//! * Pfaff transformation x → x/(x−1) for x < −0.75;
//! * the 1−x connection formulas for 0.75 < x < 1, with the logarithmic
//!   variant when c−a−b is an integer;
//! * Gauss summation at x = 1 (requires c−a−b > 0).
//!
//! The raw series loses accuracy quickly as x → 1, which is exactly where the
//! barrier actions evaluate it; the connection formulas keep full precision
//! there.

use super::gamma::{digamma, gamma, ln_gamma};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::tanh_sinh_plain;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Plain power series Σ (a)_k (b)_k / ((c)_k k!) x^k.
fn series(a: f64, b: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut settled = 0;
    for k in 0..cfg.max_terms {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        sum += term;
        if term == 0.0 {
            return Ok(sum); // terminating (polynomial) case
        }
        if term.abs() <= cfg.rel_tol * sum.abs() {
            settled += 1;
            if settled >= 2 {
                return Ok(sum);
            }
        } else {
            settled = 0;
        }
    }
    Err(Error::Convergence(format!(
        "2F1 series did not converge within {} terms (x = {x})",
        cfg.max_terms
    )))
}

/// Gauss summation theorem at x = 1: Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b)).
fn gauss_sum(a: f64, b: f64, c: f64) -> Result<f64> {
    let s = c - a - b;
    if s <= 0.0 {
        return Err(Error::Domain(format!(
            "2F1 diverges at x = 1 when c - a - b = {s} <= 0"
        )));
    }
    if is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b) {
        return Ok(0.0); // Γ pole in the denominator
    }
    Ok(gamma(c) * gamma(s) / (gamma(c - a) * gamma(c - b)))
}

/// 1−x connection formula, generic (non-integer c−a−b) branch. DLMF 15.8.4.
fn near_unity_generic(a: f64, b: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let s = c - a - b;
    let w = 1.0 - x;
    let first =
        gamma(c) * gamma(s) / (gamma(c - a) * gamma(c - b)) * series(a, b, 1.0 - s, w, cfg)?;
    let second = gamma(c) * gamma(-s) / (gamma(a) * gamma(b))
        * w.powf(s)
        * series(c - a, c - b, s + 1.0, w, cfg)?;
    Ok(first + second)
}

/// 1−x connection formula with integer m = c−a−b ≥ 0 (logarithmic case).
/// DLMF 15.8.10.
fn near_unity_log(a: f64, b: f64, c: f64, m: u32, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let w = 1.0 - x;
    let mf = m as f64;

    // Finite part: Γ(m)/(Γ(a+m)Γ(b+m)) Σ_{k<m} (a)_k (b)_k / (k! (1−m)_k) w^k.
    let mut finite = 0.0;
    if m >= 1 {
        let mut term = 1.0;
        let mut acc = term;
        for k in 1..m {
            let kf = (k - 1) as f64;
            // (1−m)_k grows as (1−m)(2−m)…(k−m), all negative factors here.
            term *= (a + kf) * (b + kf) / ((kf + 1.0) * (1.0 - mf + kf)) * w;
            acc += term;
        }
        finite = gamma(mf) / (gamma(a + mf) * gamma(b + mf)) * acc;
    }

    // Logarithmic part. The leading coefficient is 1/(0!·m!).
    let ln_w = w.ln();
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let m_factorial: f64 = (1..=m).map(f64::from).product();
    let mut term = 1.0 / m_factorial;
    let mut l = ln_w - digamma(1.0) - digamma(mf + 1.0) + digamma(a + mf) + digamma(b + mf);
    let mut acc = term * l;
    let mut settled = 0;
    let mut converged = false;
    for k in 0..cfg.max_terms {
        let kf = k as f64;
        term *= (a + mf + kf) * (b + mf + kf) / ((kf + 1.0) * (kf + mf + 1.0)) * w;
        l += -1.0 / (kf + 1.0) - 1.0 / (kf + mf + 1.0) + 1.0 / (a + mf + kf) + 1.0 / (b + mf + kf);
        let contribution = term * l;
        acc += contribution;
        if contribution.abs() <= cfg.rel_tol * acc.abs().max(1e-300) {
            settled += 1;
            if settled >= 2 {
                converged = true;
                break;
            }
        } else {
            settled = 0;
        }
    }
    if !converged {
        return Err(Error::Convergence(
            "2F1 logarithmic 1-x series did not converge".into(),
        ));
    }
    let log_part = sign * w.powi(m as i32) / (gamma(a) * gamma(b)) * acc;

    Ok(gamma(c) * (finite - log_part))
}

/// ₂F₁(a, b; c; x) for x ∈ (−∞, 1].
pub fn gauss_2f1(a: f64, b: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(Error::Domain(format!("2F1 undefined for c = {c}")));
    }
    if x > 1.0 {
        return Err(Error::Domain(format!(
            "2F1 argument x = {x} outside (-inf, 1]"
        )));
    }
    if x == 1.0 {
        return gauss_sum(a, b, c);
    }
    if a == 0.0 || b == 0.0 || x == 0.0 {
        return Ok(1.0);
    }
    // Polynomial cases terminate for any x.
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return series(a, b, c, x, cfg);
    }
    if x < -0.75 {
        // Pfaff: F(a,b;c;x) = (1−x)^{−a} F(a, c−b; c; x/(x−1)).
        let w = x / (x - 1.0);
        if !is_nonpositive_integer(c - b) {
            return Ok((1.0 - x).powf(-a) * gauss_2f1(a, c - b, c, w, cfg)?);
        }
        return Ok((1.0 - x).powf(-b) * gauss_2f1(c - a, b, c, w, cfg)?);
    }
    if x <= 0.75 {
        return series(a, b, c, x, cfg);
    }

    // 0.75 < x < 1: connection formulas in 1−x.
    let s = c - a - b;
    let s_round = s.round();
    if (s - s_round).abs() < 1e-12 {
        if s_round >= 0.0 {
            near_unity_log(a, b, c, s_round as u32, x, cfg)
        } else {
            // Euler transformation flips the integer offset positive:
            // F(a,b;c;x) = (1−x)^{c−a−b} F(c−a, c−b; c; x).
            let m = (-s_round) as u32;
            Ok((1.0 - x).powf(s) * near_unity_log(c - a, c - b, c, m, x, cfg)?)
        }
    } else {
        near_unity_generic(a, b, c, x, cfg)
    }
}

/// ₂F₁ by quadrature of the Euler integral representation, used as an
/// independent consistency route. Requires x < 1 and (after using the a↔b
/// symmetry) a positive lower parameter with c minus it positive.
pub fn gauss_2f1_via_integral(a: f64, b: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    if x >= 1.0 {
        return Err(Error::Domain(
            "integral representation requires x < 1".into(),
        ));
    }
    let (a, b) = if b > 0.0 && c - b > 0.0 {
        (a, b)
    } else {
        (b, a)
    };
    if !(b > 0.0 && c - b > 0.0) {
        return Err(Error::Domain(format!(
            "integral representation needs b > 0 and c - b > 0 (a = {a}, b = {b}, c = {c})"
        )));
    }
    // t = sin²θ removes the algebraic endpoint weights for half-integer
    // parameters; tanh-sinh absorbs whatever power remains.
    let integrand = |theta: f64| {
        let sin = theta.sin();
        let cos = theta.cos();
        let t = sin * sin;
        2.0 * sin.powf(2.0 * b - 1.0) * cos.powf(2.0 * (c - b) - 1.0) * (1.0 - x * t).powf(-a)
    };
    let q = tanh_sinh_plain(
        integrand,
        0.0,
        std::f64::consts::FRAC_PI_2,
        cfg.rel_tol,
        cfg.quad_levels,
    )?;
    let norm = (ln_gamma(c) - ln_gamma(b) - ln_gamma(c - b)).exp();
    Ok(norm * q.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    /// Brute-force oracle: raw series summed until the term drops below
    /// 1e-16 of the sum, no transformations. Only trustworthy for |x| well
    /// below 1.
    fn series_oracle(a: f64, b: f64, c: f64, x: f64) -> f64 {
        let mut sum = 1.0;
        let mut term = 1.0;
        for k in 0..100_000 {
            let kf = k as f64;
            term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
            sum += term;
            if term.abs() < 1e-16 * sum.abs() {
                break;
            }
        }
        sum
    }

    #[test]
    fn identity_at_zero() {
        assert_eq!(gauss_2f1(0.5, 1.5, 3.0, 0.0, &cfg()).unwrap(), 1.0);
    }

    #[test]
    fn gauss_summation_at_one() {
        // ₂F₁(1/2, 3/2; 3; 1) = 16/(3π)
        let v = gauss_2f1(0.5, 1.5, 3.0, 1.0, &cfg()).unwrap();
        assert!((v - 16.0 / (3.0 * PI)).abs() < 1e-13, "got {v}");
    }

    #[test]
    fn divergent_at_one_rejected() {
        assert!(gauss_2f1(1.0, 2.0, 3.0, 1.0, &cfg()).is_err());
        assert!(gauss_2f1(1.0, 2.0, 2.5, 1.0, &cfg()).is_err());
    }

    #[test]
    fn nonpositive_c_rejected() {
        assert!(gauss_2f1(0.5, 1.5, 0.0, 0.3, &cfg()).is_err());
        assert!(gauss_2f1(0.5, 1.5, -2.0, 0.3, &cfg()).is_err());
    }

    #[test]
    fn matches_series_oracle_at_half() {
        // Frozen from the term-by-term oracle (sum until term < 1e-16).
        let oracle = series_oracle(-0.5, 1.5, 3.5, 0.5);
        let v = gauss_2f1(-0.5, 1.5, 3.5, 0.5, &cfg()).unwrap();
        assert!((v - oracle).abs() < 1e-11 * oracle.abs());
        assert!((v - 0.88388347648346011).abs() < 1e-11, "got {v:.17}");
    }

    #[test]
    fn polynomial_case_exact() {
        // ₂F₁(3/2, −1; 3; x) = 1 − x/2
        let v = gauss_2f1(1.5, -1.0, 3.0, 0.5, &cfg()).unwrap();
        assert!((v - 0.75).abs() < 1e-15);
        let v = gauss_2f1(-1.0, 1.5, 3.0, 0.9, &cfg()).unwrap();
        assert!((v - 0.55).abs() < 1e-15);
    }

    #[test]
    fn log_branch_agrees_with_series_near_threshold() {
        // c−a−b = 1 (integer): x just above and below the 0.75 switch must agree.
        let lo = gauss_2f1(0.5, 1.5, 3.0, 0.7499, &cfg()).unwrap();
        let hi = gauss_2f1(0.5, 1.5, 3.0, 0.7501, &cfg()).unwrap();
        assert!((hi - lo).abs() < 1e-3 * lo.abs());
        // Direct cross-check at one point on each side of the switch.
        let s = series_oracle(0.5, 1.5, 3.0, 0.76);
        let v = gauss_2f1(0.5, 1.5, 3.0, 0.76, &cfg()).unwrap();
        assert!(
            (v - s).abs() < 1e-11 * s.abs(),
            "log branch {v}, series {s}"
        );
    }

    #[test]
    fn generic_branch_agrees_with_series() {
        // c−a−b = 5/2 (non-integer connection branch).
        let s = series_oracle(-0.5, 1.5, 3.5, 0.8);
        let v = gauss_2f1(-0.5, 1.5, 3.5, 0.8, &cfg()).unwrap();
        assert!(
            (v - s).abs() < 1e-12 * s.abs(),
            "generic branch {v}, series {s}"
        );
    }

    #[test]
    fn log_branch_m0_closed_form() {
        // ₂F₁(1, 1; 2; x) = −ln(1−x)/x exactly, exercising the m = 0
        // logarithmic connection branch arbitrarily close to 1.
        for x in [0.8, 0.95, 0.999, 1.0 - 1e-9] {
            let v = gauss_2f1(1.0, 1.0, 2.0, x, &cfg()).unwrap();
            let exact = -(-x).ln_1p() / x;
            assert!(
                ((v - exact) / exact).abs() < 1e-12,
                "x = {x}: {v} vs {exact}"
            );
        }
    }

    #[test]
    fn log_branch_m2_agrees_with_series() {
        // c−a−b = 2 exercises the finite sum of the logarithmic branch.
        let s = series_oracle(0.5, 0.5, 3.0, 0.8);
        let v = gauss_2f1(0.5, 0.5, 3.0, 0.8, &cfg()).unwrap();
        assert!((v - s).abs() < 1e-11 * s.abs(), "m = 2 branch {v}, series {s}");
    }

    #[test]
    fn negative_integer_offset_euler_transform() {
        // c−a−b = −1: handled through the Euler transformation onto the
        // positive-offset logarithmic branch.
        let s = series_oracle(1.5, 2.5, 3.0, 0.8);
        let v = gauss_2f1(1.5, 2.5, 3.0, 0.8, &cfg()).unwrap();
        assert!((v - s).abs() < 1e-10 * s.abs(), "m = -1 case {v}, series {s}");
    }

    #[test]
    fn negative_argument_pfaff() {
        let s = series_oracle(0.5, 1.5, 3.0, -0.6);
        let v = gauss_2f1(0.5, 1.5, 3.0, -0.6, &cfg()).unwrap();
        assert!((v - s).abs() < 1e-11 * s.abs());
        // Negative argument past the transform switch, checked against the
        // Pfaff-transformed series (c − b = b here, so the same series).
        let x = -4.0f64;
        let w = x / (x - 1.0);
        let reference = (1.0 - x).powf(-0.5f64) * series_oracle(0.5, 1.5, 3.0, w);
        let v = gauss_2f1(0.5, 1.5, 3.0, x, &cfg()).unwrap();
        assert!(
            (v - reference).abs() < 1e-10 * reference.abs(),
            "got {v}, ref {reference}"
        );
    }

    #[test]
    fn near_unity_log_case_accuracy() {
        // Values approaching x = 1 must tend to the Gauss sum smoothly.
        let at_one = 16.0 / (3.0 * PI);
        let v = gauss_2f1(0.5, 1.5, 3.0, 1.0 - 1e-9, &cfg()).unwrap();
        assert!((v - at_one).abs() < 1e-7, "got {v}, limit {at_one}");
        let closer = gauss_2f1(0.5, 1.5, 3.0, 1.0 - 1e-12, &cfg()).unwrap();
        assert!((closer - at_one).abs() < (v - at_one).abs() + 1e-14);
    }

    #[test]
    fn integral_route_matches_series() {
        let cases = [
            (0.5, 1.5, 3.0, 0.3),
            (0.5, 1.5, 3.0, 0.9),
            (-0.5, 1.5, 3.5, 0.5),
            (2.5, -0.5, 3.5, 0.6),
        ];
        for (a, b, c, x) in cases {
            let direct = gauss_2f1(a, b, c, x, &cfg()).unwrap();
            let via_int = gauss_2f1_via_integral(a, b, c, x, &cfg()).unwrap();
            assert!(
                (direct - via_int).abs() < 1e-11 * direct.abs(),
                "mismatch at ({a},{b},{c},{x}): {direct} vs {via_int}"
            );
        }
    }
}
