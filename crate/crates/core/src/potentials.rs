//! Confining potentials, the tilted total potential, classical and
//! under-barrier momenta, and the weak-field validity check.

use crate::error::{Error, Result};

/// Tiny negative radicands from rounded turning points are clamped to zero
/// instead of raising a domain error.
pub const RADICAND_TOL: f64 = -1e-12;

/// Default threshold on F/|E|^{1+1/s} below which the weak-field closed
/// forms are considered applicable.
pub const WEAK_FIELD_THRESHOLD: f64 = 0.1;

/// A confining potential in atomic units.
///
/// The power-law family is V(x) = −1/xˢ with the energy scale fixed to one;
/// the logarithmic potential is V(x) = V₀ ln(x/a).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialSpec {
    PowerLaw { s: f64 },
    Logarithmic { v0: f64, a: f64 },
}

impl PotentialSpec {
    /// Power-law potential −1/xˢ. Requires 0 < s < 2: at s = 2 the particle
    /// falls to the origin and no bound states remain.
    pub fn power_law(s: f64) -> Result<Self> {
        if !(s > 0.0 && s < 2.0) {
            return Err(Error::Domain(format!(
                "power-law exponent must lie in (0, 2), got {s}"
            )));
        }
        Ok(Self::PowerLaw { s })
    }

    /// Logarithmic potential V₀ ln(x/a) with V₀ > 0, a > 0.
    pub fn logarithmic(v0: f64, a: f64) -> Result<Self> {
        if !(v0 > 0.0) || !(a > 0.0) {
            return Err(Error::Domain(format!(
                "logarithmic potential requires V0 > 0 and a > 0, got ({v0}, {a})"
            )));
        }
        Ok(Self::Logarithmic { v0, a })
    }

    /// Confining part V(x) without the external field.
    pub fn confining(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!(
                "potential defined for x > 0, got {x}"
            )));
        }
        Ok(match *self {
            Self::PowerLaw { s } => -x.powf(-s),
            Self::Logarithmic { v0, a } => v0 * (x / a).ln(),
        })
    }
}

/// External field: strength F ≥ 0 in atomic units, static or treated as the
/// peak amplitude of a low-frequency cycle average.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldMode {
    Static,
    LowFrequencyAc,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSpec {
    pub strength: f64,
    pub mode: FieldMode,
}

impl FieldSpec {
    pub fn static_field(strength: f64) -> Result<Self> {
        Self::new(strength, FieldMode::Static)
    }

    pub fn low_frequency_ac(strength: f64) -> Result<Self> {
        Self::new(strength, FieldMode::LowFrequencyAc)
    }

    pub fn new(strength: f64, mode: FieldMode) -> Result<Self> {
        if !(strength >= 0.0) {
            return Err(Error::Domain(format!(
                "field strength must be >= 0, got {strength}"
            )));
        }
        Ok(Self { strength, mode })
    }
}

/// Total potential V(x) − Fx seen by the particle.
pub fn potential_total(spec: &PotentialSpec, f: f64, x: f64) -> Result<f64> {
    Ok(spec.confining(x)? - f * x)
}

fn sqrt_clamped(radicand: f64, x: f64) -> Result<f64> {
    if radicand < RADICAND_TOL {
        return Err(Error::Domain(format!(
            "momentum radicand {radicand} negative beyond tolerance at x = {x}"
        )));
    }
    Ok(radicand.max(0.0).sqrt())
}

/// Classical momentum p₀ = √(2(E − V(x))) in the allowed region of the
/// unperturbed potential.
pub fn momentum_classical(spec: &PotentialSpec, energy: f64, x: f64) -> Result<f64> {
    let radicand = 2.0 * (energy - spec.confining(x)?);
    sqrt_clamped(radicand, x)
}

/// Under-barrier momentum magnitude |p| = √(2(V(x) − Fx − E)).
pub fn momentum_barrier(spec: &PotentialSpec, energy: f64, f: f64, x: f64) -> Result<f64> {
    let radicand = 2.0 * (potential_total(spec, f, x)? - energy);
    sqrt_clamped(radicand, x)
}

/// Outcome of the weak-field applicability test F ≪ |E|^{1+1/s}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakFieldCheck {
    pub ratio: f64,
    pub valid: bool,
}

/// Weak-field check for the power-law family with the default threshold.
pub fn weak_field_check(spec: &PotentialSpec, energy: f64, f: f64) -> Result<WeakFieldCheck> {
    weak_field_check_with(spec, energy, f, WEAK_FIELD_THRESHOLD)
}

pub fn weak_field_check_with(
    spec: &PotentialSpec,
    energy: f64,
    f: f64,
    threshold: f64,
) -> Result<WeakFieldCheck> {
    let s = match spec {
        PotentialSpec::PowerLaw { s } => *s,
        PotentialSpec::Logarithmic { .. } => {
            return Err(Error::Unsupported(
                "weak-field ratio is defined for the power-law family; the logarithmic \
                 smallness parameter is exposed by the turning-point module"
                    .into(),
            ))
        }
    };
    if !(energy < 0.0) {
        return Err(Error::Domain(format!(
            "bound-state energy must be negative, got {energy}"
        )));
    }
    let ratio = f / energy.abs().powf(1.0 + 1.0 / s);
    Ok(WeakFieldCheck {
        ratio,
        valid: ratio < threshold,
    })
}
