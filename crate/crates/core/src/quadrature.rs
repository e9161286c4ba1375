//! Quadrature engines used across the crate.
//!
//! Two complementary schemes:
//!
//! * [`romberg`]: doubling trapezoid with Richardson extrapolation, for
//!   integrands that are smooth on the closed interval. Converges spectrally
//!   for the sin²-substituted forms used by the hypergeometric integral
//!   representations and the barrier integrals.
//! * [`tanh_sinh`]: double-exponential transformation, for integrands with
//!   algebraic endpoint singularities (`t^{a-1}`-type weights, square-root
//!   zeros, and the mildly divergent momenta at the origin).
//!
//! Both refine level by level and stop once two successive estimates agree to
//! the requested relative tolerance.

use crate::error::{Error, Result};

/// Converged quadrature value with the level at which it was accepted.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Quad {
    pub value: f64,
    /// Difference between the last two refinement levels; diagnostic only.
    #[allow(dead_code)]
    pub est_error: f64,
    #[allow(dead_code)]
    pub levels: usize,
}

const ABS_FLOOR: f64 = 1e-305;

/// Doubling-trapezoid rule with a Richardson (Romberg) table.
///
/// `max_levels` caps the number of interval doublings; level `k` uses
/// `2^k` panels.
pub(crate) fn romberg<F>(f: F, a: f64, b: f64, rel_tol: f64, max_levels: usize) -> Result<Quad>
where
    F: Fn(f64) -> f64,
{
    if !(b > a) {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    let fa = f(a);
    let fb = f(b);
    if !fa.is_finite() || !fb.is_finite() {
        return Err(Error::Domain(
            "integrand not finite at interval endpoint".into(),
        ));
    }

    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(max_levels + 1);
    let mut trapezoid = 0.5 * (b - a) * (fa + fb);
    rows.push(vec![trapezoid]);

    for k in 1..=max_levels {
        // Refine the trapezoid with the midpoints introduced at this level.
        let n_new = 1usize << (k - 1);
        let h = (b - a) / (1u64 << k) as f64;
        let mut mid_sum = 0.0;
        for i in 0..n_new {
            let x = a + (2 * i + 1) as f64 * h;
            let fx = f(x);
            if !fx.is_finite() {
                return Err(Error::Convergence(format!(
                    "integrand not finite at x = {x}"
                )));
            }
            mid_sum += fx;
        }
        trapezoid = 0.5 * rows[k - 1][0] + h * mid_sum;

        let mut row = vec![trapezoid];
        let mut pow4 = 1.0;
        for j in 1..=k {
            pow4 *= 4.0;
            let extrap = (pow4 * row[j - 1] - rows[k - 1][j - 1]) / (pow4 - 1.0);
            row.push(extrap);
        }
        let current = row[k];
        let previous = rows[k - 1][k - 1];
        rows.push(row);

        let diff = (current - previous).abs();
        if k >= 3 && diff <= rel_tol * current.abs().max(ABS_FLOOR) {
            return Ok(Quad {
                value: current,
                est_error: diff,
                levels: k,
            });
        }
    }

    Err(Error::Convergence(format!(
        "romberg did not reach rel_tol {rel_tol} within {max_levels} levels"
    )))
}

/// Tanh-sinh (double exponential) quadrature on a finite interval.
///
/// Nodes are `x = c + r·tanh(π/2·sinh(t))` on the grid `t = j·h`; each level
/// halves `h` and reuses previous evaluations.
///
/// The integrand receives `(x, delta)` where `delta` is the node's exact
/// offset from the nearer endpoint: `delta = x − a > 0` in the left half,
/// `delta = x − b < 0` in the right half. The offset is computed in the
/// cancellation-free form `2r/(1+e^{2|u|})`, so integrands singular at an
/// endpoint can evaluate to full relative precision from `delta` even when
/// `x` itself has rounded all the way onto the endpoint.
pub(crate) fn tanh_sinh<F>(f: F, a: f64, b: f64, rel_tol: f64, max_levels: usize) -> Result<Quad>
where
    F: Fn(f64, f64) -> f64,
{
    if !(b > a) {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    let r = 0.5 * (b - a);

    // Contribution of the node at abscissa parameter t (including weight, not h).
    let term = |t: f64| -> Result<f64> {
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        // 1 - tanh|u| = 2 / (1 + e^{2|u|})
        let offset = 2.0 * r / (1.0 + (2.0 * u.abs()).exp());
        if offset == 0.0 {
            return Ok(0.0); // beyond double-precision resolution of the endpoint
        }
        let (x, delta) = if t >= 0.0 {
            (b - offset, -offset)
        } else {
            (a + offset, offset)
        };
        let sech = 1.0 / u.cosh();
        let w = r * std::f64::consts::FRAC_PI_2 * t.cosh() * sech * sech;
        if w == 0.0 {
            return Ok(0.0);
        }
        let fx = f(x, delta);
        if !fx.is_finite() {
            return Err(Error::Convergence(format!(
                "integrand not finite at x = {x}"
            )));
        }
        Ok(fx * w)
    };

    // Level 0: h = 1, walk outwards until terms are negligible.
    let mut h = 1.0;
    let mut sum = term(0.0)?;
    for direction in [1.0f64, -1.0] {
        let mut j = 1;
        let mut tiny_streak = 0;
        loop {
            let t = direction * j as f64 * h;
            let contribution = term(t)?;
            sum += contribution;
            if contribution.abs() <= 1e-18 * sum.abs().max(ABS_FLOOR) {
                tiny_streak += 1;
                if tiny_streak >= 2 {
                    break;
                }
            } else {
                tiny_streak = 0;
            }
            j += 1;
            if j > 800 {
                break; // double-exponential decay guarantees we never get here
            }
        }
    }
    let mut estimate = h * sum;

    for level in 1..=max_levels {
        h *= 0.5;
        // New nodes are the odd multiples of the refined step.
        for direction in [1.0f64, -1.0] {
            let mut j = 1u64;
            let mut tiny_streak = 0;
            loop {
                let t = direction * j as f64 * h;
                let contribution = term(t)?;
                sum += contribution;
                if contribution.abs() <= 1e-18 * sum.abs().max(ABS_FLOOR) {
                    tiny_streak += 1;
                    if tiny_streak >= 2 {
                        break;
                    }
                } else {
                    tiny_streak = 0;
                }
                j += 2;
                if j > 1_600 << level {
                    break;
                }
            }
        }
        let refined = h * sum;
        let diff = (refined - estimate).abs();
        estimate = refined;
        if level >= 2 && diff <= rel_tol * refined.abs().max(ABS_FLOOR) {
            return Ok(Quad {
                value: refined,
                est_error: diff,
                levels: level,
            });
        }
    }

    Err(Error::Convergence(format!(
        "tanh-sinh did not reach rel_tol {rel_tol} within {max_levels} levels"
    )))
}

/// Tanh-sinh for integrands that do not need the endpoint offset.
pub(crate) fn tanh_sinh_plain<F>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    max_levels: usize,
) -> Result<Quad>
where
    F: Fn(f64) -> f64,
{
    tanh_sinh(|x, _| f(x), a, b, rel_tol, max_levels)
}

/// Bisection on a bracketed sign change, to a relative width tolerance.
///
/// Assumes `f` changes sign on `[lo, hi]`; panics are avoided by returning a
/// bracketing error when it does not.
pub(crate) fn bisect<F>(f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Bracketing(format!(
            "no sign change on [{lo}, {hi}] (f = {flo}, {fhi})"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= rel_tol * mid.abs().max(f64::MIN_POSITIVE) {
            return Ok(mid);
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn romberg_polynomial() {
        let q = romberg(|x| x * x, 0.0, 1.0, 1e-12, 16).unwrap();
        assert!((q.value - 1.0 / 3.0).abs() < 1e-13);
        assert!(q.levels >= 3 && q.est_error.is_finite());
    }

    #[test]
    fn romberg_oscillatory() {
        let q = romberg(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-12, 20).unwrap();
        assert!((q.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn tanh_sinh_sqrt_singularity() {
        // ∫₀¹ dx/√x = 2, singular at the left endpoint.
        let q = tanh_sinh_plain(|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-13, 12).unwrap();
        assert!((q.value - 2.0).abs() < 1e-12, "got {}", q.value);
    }

    #[test]
    fn tanh_sinh_both_endpoints() {
        // ∫₀¹ dx/√(x(1-x)) = π, with x(1−x) = |δ|(1−|δ|) evaluated from the
        // endpoint offset on both sides.
        let q = tanh_sinh(
            |_, delta: f64| {
                let d = delta.abs();
                1.0 / (d * (1.0 - d)).sqrt()
            },
            0.0,
            1.0,
            1e-13,
            12,
        )
        .unwrap();
        assert!(
            (q.value - std::f64::consts::PI).abs() < 1e-12,
            "got {}",
            q.value
        );
    }

    #[test]
    fn tanh_sinh_strong_algebraic() {
        // ∫₀¹ x^{-0.9} dx = 10.
        let q = tanh_sinh_plain(|x| x.powf(-0.9), 0.0, 1.0, 1e-13, 12).unwrap();
        assert!((q.value - 10.0).abs() < 1e-10, "got {}", q.value);
    }

    #[test]
    fn bisect_simple_root() {
        let root = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((root - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn bisect_rejects_no_sign_change() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
    }
}
