//! Barrier turning points for each potential family: quadratic roots for the
//! Coulomb case, trigonometric Cardano roots for the inverse square root
//! case, Lambert-W roots for the logarithmic case, and a bisection fallback
//! for arbitrary exponents.

use crate::error::{Error, Result};
use crate::potentials::{potential_total, PotentialSpec};
use crate::quadrature::bisect;
use crate::special_fns::{lambert_w0, lambert_wm1};

/// Which dimensionless reduction the small parameter ε belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaledCase {
    /// s = 1: ε = 4n⁴F = F/E², roots of z − 1 − εz² = 0, x = z/|E|.
    Coulomb,
    /// s = 1/2: ε = F/|E|³, roots of z − 1 − εz³ = 0, x = z²/E².
    InvSqrt,
    /// Logarithmic: ε = aF·e^{E/V₀}/V₀, roots of z = ε·e^z, x = (V₀/F)z.
    Log,
}

/// Dimensionless field strength for one of the reduced barrier problems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledField {
    pub case: ScaledCase,
    pub epsilon: f64,
}

impl ScaledField {
    /// Coulomb ε = 4n⁴F; the barrier survives only for ε < 1/4.
    pub fn coulomb(n: u32, f: f64) -> Result<Self> {
        Self::coulomb_from_epsilon(4.0 * (n as f64).powi(4) * f)
    }

    /// Coulomb ε = F/E² for an explicit level energy.
    pub fn coulomb_from_energy(energy: f64, f: f64) -> Result<Self> {
        Self::coulomb_from_epsilon(f / (energy * energy))
    }

    fn coulomb_from_epsilon(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 0.25) {
            return Err(Error::Domain(format!(
                "Coulomb barrier requires 0 < epsilon < 1/4, got {epsilon}"
            )));
        }
        Ok(Self {
            case: ScaledCase::Coulomb,
            epsilon,
        })
    }

    /// Inverse-square-root ε = F/|E|³.
    pub fn inv_sqrt(energy: f64, f: f64) -> Result<Self> {
        let epsilon = f / energy.abs().powi(3);
        if !(epsilon > 0.0) {
            return Err(Error::Domain(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        Ok(Self {
            case: ScaledCase::InvSqrt,
            epsilon,
        })
    }

    /// Logarithmic ε = (n − 1/4)F√(2π)/V₀^{3/2}; the level scale a cancels.
    pub fn log_from_quantum_number(v0: f64, n: u32, f: f64) -> Result<Self> {
        let epsilon = (n as f64 - 0.25) * f * (2.0 * std::f64::consts::PI).sqrt() / v0.powf(1.5);
        Self::log_from_epsilon(epsilon)
    }

    /// Logarithmic ε = aF·e^{E/V₀}/V₀ for an explicit level energy.
    pub fn log_from_energy(v0: f64, a: f64, energy: f64, f: f64) -> Result<Self> {
        Self::log_from_epsilon(a * f * (energy / v0).exp() / v0)
    }

    fn log_from_epsilon(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < (-1.0f64).exp()) {
            return Err(Error::Domain(format!(
                "logarithmic barrier requires 0 < epsilon < 1/e, got {epsilon}"
            )));
        }
        Ok(Self {
            case: ScaledCase::Log,
            epsilon,
        })
    }
}

/// Sorted turning-point roots of one of the reduced equations, plus the
/// physical barrier endpoints they map to.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    /// All real roots in ascending order, in the dimensionless z variable.
    pub roots: Vec<f64>,
    /// Physical left barrier endpoint.
    pub x_left: f64,
    /// Physical right barrier endpoint.
    pub x_right: f64,
}

fn check_residual(roots: &[f64], residual: impl Fn(f64) -> f64, what: &str) -> Result<()> {
    for &z in roots {
        let r = residual(z).abs();
        if r > 1e-12 * z.abs().max(1.0) {
            return Err(Error::Convergence(format!(
                "{what} root {z} has residual {r:e} above the 1e-12 scale"
            )));
        }
    }
    Ok(())
}

/// Roots z₁ < z₂ of z − 1 − εz² = 0 for the Coulomb barrier, with the
/// physical mapping x = z/|E|.
pub fn coulomb_roots(epsilon: f64, abs_energy: f64) -> Result<RootSet> {
    if !(epsilon > 0.0 && epsilon < 0.25) {
        return Err(Error::Domain(format!(
            "Coulomb turning points require 0 < epsilon < 1/4 (barrier suppressed), got {epsilon}"
        )));
    }
    if !(abs_energy > 0.0) {
        return Err(Error::Domain("energy scale must be positive".into()));
    }
    let r = (1.0 - 4.0 * epsilon).sqrt();
    // 2/(1+r) is the cancellation-free form of (1−r)/(2ε).
    let z1 = 2.0 / (1.0 + r);
    let z2 = (1.0 + r) / (2.0 * epsilon);
    check_residual(&[z1, z2], |z| z - 1.0 - epsilon * z * z, "coulomb")?;
    Ok(RootSet {
        roots: vec![z1, z2],
        x_left: z1 / abs_energy,
        x_right: z2 / abs_energy,
    })
}

/// The three real roots z₁ < 1 < z₂ < z₃ of z − 1 − εz³ = 0, computed with
/// the trigonometric Cardano branch and one Newton polish, and the physical
/// mapping x = z²/E² for the barrier endpoints (z₂, z₃).
pub fn cubic_roots_cardano(epsilon: f64, abs_energy: f64) -> Result<RootSet> {
    // Depressed form z³ − z/ε + 1/ε: three real roots iff ε < 4/27.
    if !(epsilon > 0.0 && epsilon < 4.0 / 27.0) {
        return Err(Error::Domain(format!(
            "cubic discriminant requires 0 < epsilon < 4/27, got {epsilon}"
        )));
    }
    if !(abs_energy > 0.0) {
        return Err(Error::Domain("energy scale must be positive".into()));
    }
    let radius = 2.0 / (3.0 * epsilon).sqrt();
    let phi = (-1.5 * (3.0 * epsilon).sqrt()).acos();
    let mut roots: Vec<f64> = (0..3)
        .map(|k| radius * ((phi - 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos())
        .collect();
    // One Newton step per root removes the last trigonometric rounding.
    for z in roots.iter_mut() {
        let g = *z - 1.0 - epsilon * *z * *z * *z;
        let dg = 1.0 - 3.0 * epsilon * *z * *z;
        if dg != 0.0 {
            *z -= g / dg;
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    check_residual(&roots, |z| z - 1.0 - epsilon * z * z * z, "cardano")?;
    if !(roots[0] < 1.0 && 1.0 < roots[1] && roots[1] < roots[2]) {
        return Err(Error::Convergence(format!(
            "unexpected cubic root ordering {roots:?}"
        )));
    }
    let e_sq = abs_energy * abs_energy;
    Ok(RootSet {
        x_left: roots[1] * roots[1] / e_sq,
        x_right: roots[2] * roots[2] / e_sq,
        roots,
    })
}

/// Lambert-W turning points z_L = −W₀(−ε), z_R = −W₋₁(−ε) of z = ε·e^z, with
/// the physical mapping x = (V₀/F)·z.
pub fn log_turning_points(epsilon: f64, v0: f64, f: f64) -> Result<RootSet> {
    if !(epsilon > 0.0 && epsilon < (-1.0f64).exp()) {
        return Err(Error::Domain(format!(
            "Lambert branch point limits epsilon to (0, 1/e), got {epsilon}"
        )));
    }
    if !(v0 > 0.0 && f > 0.0) {
        return Err(Error::Domain("V0 and F must be positive".into()));
    }
    let z_l = -lambert_w0(-epsilon)?;
    let z_r = -lambert_wm1(-epsilon)?;
    let roots = vec![z_l, z_r];
    // Residual in the z = ε·e^z form, tightened to the Lambert tolerance.
    for &z in &roots {
        let r = (z - epsilon * z.exp()).abs();
        if r > 1e-13 * z.abs().max(1.0) {
            return Err(Error::Convergence(format!(
                "lambert turning point {z} residual {r:e} above 1e-13"
            )));
        }
    }
    let scale = v0 / f;
    Ok(RootSet {
        x_left: scale * z_l,
        x_right: scale * z_r,
        roots,
    })
}

/// Barrier turning points for an arbitrary spec by bracketed bisection on
/// E − V_total(x) = 0 around the barrier maximum.
pub fn generic_turning_points(spec: &PotentialSpec, energy: f64, f: f64) -> Result<RootSet> {
    if !(f > 0.0) {
        return Err(Error::Domain("generic turning points require F > 0".into()));
    }
    // Interior maximum of the tilted potential.
    let x_max = match spec {
        PotentialSpec::PowerLaw { s } => (s / f).powf(1.0 / (s + 1.0)),
        PotentialSpec::Logarithmic { v0, .. } => v0 / f,
    };
    let v_max = potential_total(spec, f, x_max)?;
    if v_max <= energy {
        return Err(Error::NoBarrier(format!(
            "barrier maximum {v_max} does not exceed the level energy {energy}"
        )));
    }
    let shortfall = |x: f64| energy - potential_total(spec, f, x).unwrap_or(f64::INFINITY);

    // Left endpoint: the confining part sends V → −∞ as x → 0⁺.
    let mut lo = x_max;
    for _ in 0..2000 {
        lo *= 0.5;
        if shortfall(lo) > 0.0 {
            break;
        }
    }
    let x_left = bisect(shortfall, lo, x_max, 1e-15)?;

    // Right endpoint: the field term dominates at large x.
    let mut hi = x_max;
    for _ in 0..2000 {
        hi *= 2.0;
        if shortfall(hi) > 0.0 {
            break;
        }
    }
    let x_right = bisect(shortfall, x_max, hi, 1e-15)?;

    Ok(RootSet {
        roots: vec![x_left, x_right],
        x_left,
        x_right,
    })
}
