//! WKB bound-state energies and normalization constants.
//!
//! Closed forms exist for the Coulomb (s = 1), inverse-square-root (s = 1/2)
//! and logarithmic potentials; for other exponents the quantization condition
//! ∫₀^{x₀} p₀ dx = π(n − μ) is solved numerically with a caller-supplied
//! Maslov index.

use crate::error::{Error, Result};
use crate::potentials::PotentialSpec;
use crate::quadrature::tanh_sinh;
use crate::special_fns::gamma_ratio;

/// A WKB bound state of the unperturbed confining potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    /// Principal quantum number, n ≥ 1.
    pub n: u32,
    /// Maslov index entering ∫p dx = π(n − μ).
    pub mu: f64,
    /// Level energy (negative for the power-law family).
    pub energy: f64,
    /// Inner turning point of the unperturbed potential.
    pub x_inner: f64,
    /// Normalization constant A² of the WKB wave function.
    pub a_sq: f64,
}

/// Maslov index reproducing the quoted closed-form spectra: 0 for s = 1,
/// 1/6 for s = 1/2, 1/4 for the logarithmic potential. None for other
/// exponents; the caller must supply μ there.
pub fn maslov_index(spec: &PotentialSpec) -> Option<f64> {
    match spec {
        PotentialSpec::PowerLaw { s } if *s == 1.0 => Some(0.0),
        PotentialSpec::PowerLaw { s } if *s == 0.5 => Some(1.0 / 6.0),
        PotentialSpec::PowerLaw { .. } => None,
        PotentialSpec::Logarithmic { .. } => Some(0.25),
    }
}

/// Inner turning point of the unperturbed potential at the given energy.
pub fn inner_turning_point(spec: &PotentialSpec, energy: f64) -> Result<f64> {
    match spec {
        PotentialSpec::PowerLaw { s } => {
            if !(energy < 0.0) {
                return Err(Error::Domain(format!(
                    "power-law bound states need E < 0, got {energy}"
                )));
            }
            Ok(energy.abs().powf(-1.0 / s))
        }
        PotentialSpec::Logarithmic { v0, a } => Ok(a * (energy / v0).exp()),
    }
}

/// Closed-form WKB energy of the n-th level.
///
/// Coulomb: −1/(2n²). Inverse square root: −½(n − 1/6)^{−2/3}.
/// Logarithmic: V₀ ln((n − 1/4)√(2π/V₀)/a).
pub fn energy_closed(spec: &PotentialSpec, n: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("quantum number must be >= 1".into()));
    }
    let nf = n as f64;
    match spec {
        PotentialSpec::PowerLaw { s } if *s == 1.0 => Ok(-0.5 / (nf * nf)),
        PotentialSpec::PowerLaw { s } if *s == 0.5 => Ok(-0.5 * (nf - 1.0 / 6.0).powf(-2.0 / 3.0)),
        PotentialSpec::PowerLaw { s } => Err(Error::Unsupported(format!(
            "no closed-form spectrum for s = {s}; use energy_quantize with an explicit Maslov index"
        ))),
        PotentialSpec::Logarithmic { v0, a } => {
            Ok(v0 * ((nf - 0.25) * (2.0 * std::f64::consts::PI / v0).sqrt() / a).ln())
        }
    }
}

/// Classical momentum for quadrature nodes carrying their endpoint offset:
/// near the turning point (delta < 0) the radicand is rebuilt from
/// log1p/expm1 so it keeps full relative precision where E − V(x) cancels.
pub(crate) fn momentum_classical_offset(
    spec: &PotentialSpec,
    energy: f64,
    x0: f64,
    x: f64,
    delta: f64,
) -> f64 {
    let radicand = if delta < 0.0 {
        match *spec {
            // E − V = |E|((x/x₀)^{−s} − 1) with x = x₀ + δ.
            PotentialSpec::PowerLaw { s } => {
                2.0 * energy.abs() * (-s * (delta / x0).ln_1p()).exp_m1()
            }
            // E − V₀ ln(x/a) = −V₀ ln(x/x_L).
            PotentialSpec::Logarithmic { v0, .. } => -2.0 * v0 * (delta / x0).ln_1p(),
        }
    } else {
        match *spec {
            // Factored as 2x^{−s}(1 + E xˢ): x^{−s} alone overflows at the
            // deepest double-exponential nodes once s > 1, while the
            // momentum x^{−s/2}·√(…) is still representable.
            PotentialSpec::PowerLaw { s } => {
                let inner = (2.0 * (1.0 + energy * x.powf(s))).max(0.0).sqrt();
                return inner * x.powf(-0.5 * s);
            }
            PotentialSpec::Logarithmic { .. } => {
                2.0 * (energy - spec.confining(x).unwrap_or(f64::INFINITY))
            }
        }
    };
    radicand.max(0.0).sqrt()
}

/// Radial action ∫₀^{x_inner} p₀(x) dx at the given energy.
///
/// The integrand carries an inverse-square-root zero at the turning point
/// and, for the power-law family, an integrable singularity at the origin;
/// tanh-sinh quadrature absorbs both.
fn radial_action(spec: &PotentialSpec, energy: f64) -> Result<f64> {
    let x0 = inner_turning_point(spec, energy)?;
    let q = tanh_sinh(
        |x, delta| momentum_classical_offset(spec, energy, x0, x, delta),
        0.0,
        x0,
        1e-12,
        14,
    )?;
    Ok(q.value)
}

/// Solve ∫₀^{x₀(E)} p₀ dx = π(n − μ) for E by bracketed bisection.
///
/// The action is strictly increasing in E for both potential families, so a
/// geometric bracket expansion always straddles the target.
pub fn energy_quantize(spec: &PotentialSpec, n: u32, mu: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("quantum number must be >= 1".into()));
    }
    if !(0.0..1.0).contains(&mu) {
        return Err(Error::Domain(format!(
            "Maslov index must lie in [0, 1), got {mu}"
        )));
    }
    let target = std::f64::consts::PI * (n as f64 - mu);
    let shortfall = |e: f64| -> Result<f64> { Ok(radial_action(spec, e)? - target) };

    let (mut lo, mut hi) = match *spec {
        PotentialSpec::PowerLaw { .. } => {
            // Bracket in E < 0, expanding geometrically on both sides.
            let mut lo = -1.0;
            let mut hi = -1.0;
            for _ in 0..60 {
                if shortfall(lo)? < 0.0 {
                    break;
                }
                lo *= 4.0;
            }
            for _ in 0..60 {
                if shortfall(hi)? > 0.0 {
                    break;
                }
                hi *= 0.25;
            }
            (lo, hi)
        }
        PotentialSpec::Logarithmic { v0, .. } => {
            // Action grows like e^{E/V0}; expand an additive bracket.
            let mut lo = -v0;
            let mut hi = v0;
            for _ in 0..200 {
                if shortfall(lo)? < 0.0 {
                    break;
                }
                lo -= v0;
            }
            for _ in 0..200 {
                if shortfall(hi)? > 0.0 {
                    break;
                }
                hi += v0;
            }
            (lo, hi)
        }
    };

    let flo = shortfall(lo)?;
    let fhi = shortfall(hi)?;
    if flo > 0.0 || fhi < 0.0 {
        return Err(Error::Bracketing(format!(
            "quantization bracket failed for n = {n}: action shortfall {flo} .. {fhi}"
        )));
    }
    // Plain bisection; the action evaluation dominates the cost anyway.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= 1e-12 * mid.abs().max(1e-12) {
            return Ok(mid);
        }
        if shortfall(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Normalization constant A² of the WKB wave function.
///
/// Power law: A² = 2 x₀^{−1−s/2} √(2/π) Γ(1/s)/Γ(1/2 + 1/s), which reduces
/// to 2/(πn³) at s = 1 and (8√2/3π)|E|^{5/2} at s = 1/2. Logarithmic:
/// A² ≈ 2V₀/(π(n − 1/4)).
pub fn normalization(spec: &PotentialSpec, state: &BoundState) -> Result<f64> {
    match spec {
        PotentialSpec::PowerLaw { s } => normalization_power_law(*s, state.energy),
        PotentialSpec::Logarithmic { v0, .. } => {
            Ok(2.0 * v0 / (std::f64::consts::PI * (state.n as f64 - 0.25)))
        }
    }
}

/// Power-law normalization directly from the level energy.
pub fn normalization_power_law(s: f64, energy: f64) -> Result<f64> {
    if !(energy < 0.0) {
        return Err(Error::Domain(format!(
            "power-law bound states need E < 0, got {energy}"
        )));
    }
    let x0 = energy.abs().powf(-1.0 / s);
    let ratio = gamma_ratio(1.0 / s, 0.5 + 1.0 / s)?;
    Ok(2.0 * x0.powf(-1.0 - 0.5 * s) * (2.0 / std::f64::consts::PI).sqrt() * ratio)
}

/// Assemble the n-th bound state using the closed-form spectrum and the
/// built-in Maslov table.
pub fn bound_state(spec: &PotentialSpec, n: u32) -> Result<BoundState> {
    let mu = maslov_index(spec).ok_or_else(|| {
        Error::Unsupported("no Maslov index table entry for this potential; supply one".into())
    })?;
    let energy = energy_closed(spec, n)?;
    let x_inner = inner_turning_point(spec, energy)?;
    let mut state = BoundState {
        n,
        mu,
        energy,
        x_inner,
        a_sq: 0.0,
    };
    state.a_sq = normalization(spec, &state)?;
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::tanh_sinh;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn closed_form_energies() {
        let coulomb = PotentialSpec::power_law(1.0).unwrap();
        assert!((energy_closed(&coulomb, 2).unwrap() + 0.125).abs() < 1e-15);

        let invsqrt = PotentialSpec::power_law(0.5).unwrap();
        let e1 = energy_closed(&invsqrt, 1).unwrap();
        assert!((e1 - (-0.5 * (5.0_f64 / 6.0).powf(-2.0 / 3.0))).abs() < 1e-15);
        assert!((e1 + 0.56462).abs() < 1e-5);

        let log = PotentialSpec::logarithmic(1.0, 1.0).unwrap();
        let e1 = energy_closed(&log, 1).unwrap();
        assert!((e1 - (0.75 * (2.0 * PI).sqrt()).ln()).abs() < 1e-15);

        let s17 = PotentialSpec::power_law(1.7).unwrap();
        assert!(matches!(energy_closed(&s17, 1), Err(Error::Unsupported(_))));
        assert!(energy_closed(&coulomb, 0).is_err());
    }

    #[test]
    fn quantize_matches_coulomb() {
        let coulomb = PotentialSpec::power_law(1.0).unwrap();
        let e = energy_quantize(&coulomb, 1, 0.0).unwrap();
        assert!((e + 0.5).abs() < 1e-8 * 0.5, "got {e}");
    }

    #[test]
    fn quantize_matches_invsqrt() {
        let invsqrt = PotentialSpec::power_law(0.5).unwrap();
        let e = energy_quantize(&invsqrt, 1, 1.0 / 6.0).unwrap();
        let closed = energy_closed(&invsqrt, 1).unwrap();
        assert!(
            ((e - closed) / closed).abs() < 1e-8,
            "got {e}, closed {closed}"
        );
    }

    #[test]
    fn quantize_matches_logarithmic() {
        let log = PotentialSpec::logarithmic(1.0, 1.0).unwrap();
        let e = energy_quantize(&log, 3, 0.25).unwrap();
        let closed = energy_closed(&log, 3).unwrap();
        assert!(
            ((e - closed) / closed).abs() < 1e-8,
            "got {e}, closed {closed}"
        );
    }

    #[test]
    fn quantize_rejects_bad_mu() {
        let coulomb = PotentialSpec::power_law(1.0).unwrap();
        assert!(energy_quantize(&coulomb, 1, 1.0).is_err());
        assert!(energy_quantize(&coulomb, 1, -0.2).is_err());
    }

    #[test]
    fn quantize_general_s_matches_beta_inversion() {
        // For any 0 < s < 2 the radial action reduces analytically to
        // √2 |E|^{1/2−1/s} B(1/s − 1/2, 3/2)/s, so the quantization condition
        // inverts in closed form. The numerical solver must land on it.
        use crate::special_fns::gamma;
        let s = 1.3f64;
        let spec = PotentialSpec::power_law(s).unwrap();
        let mu = 0.1;
        let beta =
            gamma(1.0 / s - 0.5) * gamma(1.5) / gamma(1.0 / s + 1.0);
        for n in [1u32, 3] {
            let target = std::f64::consts::PI * (n as f64 - mu);
            let expected = -(target * s / (2f64.sqrt() * beta)).powf(1.0 / (0.5 - 1.0 / s));
            let e = energy_quantize(&spec, n, mu).unwrap();
            assert!(
                ((e - expected) / expected).abs() < 1e-8,
                "n = {n}: solved {e}, closed form {expected}"
            );
        }
    }

    #[test]
    fn normalization_closed_forms() {
        let coulomb = PotentialSpec::power_law(1.0).unwrap();
        let state = bound_state(&coulomb, 1).unwrap();
        assert!((state.a_sq - 2.0 / PI).abs() < 1e-14, "A² = {}", state.a_sq);

        // Eq-level consistency at s = 1: 2/(πn³) for several n.
        for n in 1..=4u32 {
            let state = bound_state(&coulomb, n).unwrap();
            let expected = 2.0 / (PI * (n as f64).powi(3));
            assert!(((state.a_sq - expected) / expected).abs() < 1e-12);
        }

        // s = 1/2 reduces to (8√2/3π)|E|^{5/2}.
        let invsqrt = PotentialSpec::power_law(0.5).unwrap();
        let state = bound_state(&invsqrt, 1).unwrap();
        let expected = 8.0 * 2f64.sqrt() / (3.0 * PI) * state.energy.abs().powf(2.5);
        assert!(((state.a_sq - expected) / expected).abs() < 1e-12);

        // Logarithmic: 2/(π·1.75) at n = 2.
        let log = PotentialSpec::logarithmic(1.0, 1.0).unwrap();
        let state = bound_state(&log, 2).unwrap();
        assert!((state.a_sq - 2.0 / (PI * 1.75)).abs() < 1e-14);
        assert!((state.a_sq - 0.363783).abs() < 1e-6);
    }

    #[test]
    fn normalization_closure_integral() {
        // A² ∫₀^{x₀} dx/(2 p₀) = 1 for representative exponents.
        for s in [0.5, 1.0, 1.5] {
            let spec = PotentialSpec::power_law(s).unwrap();
            let energy = -0.5;
            let a_sq = normalization_power_law(s, energy).unwrap();
            let x0 = inner_turning_point(&spec, energy).unwrap();
            let q = tanh_sinh(
                |x, delta| {
                    let p = momentum_classical_offset(&spec, energy, x0, x, delta);
                    if p > 0.0 {
                        0.5 / p
                    } else {
                        0.0
                    }
                },
                0.0,
                x0,
                1e-11,
                14,
            )
            .unwrap();
            let closure = a_sq * q.value;
            assert!((closure - 1.0).abs() < 1e-8, "s = {s}: closure = {closure}");
        }
    }

    #[test]
    fn energies_increase_with_n() {
        let log = PotentialSpec::logarithmic(2.0, 0.7).unwrap();
        let mut last = f64::NEG_INFINITY;
        for n in 1..=5 {
            let e = energy_closed(&log, n).unwrap();
            assert!(e > last);
            last = e;
        }
    }
}
