//! Ionization probabilities per unit time: prefactor · exp(action), with the
//! optional low-frequency cycle-averaging factor and the textbook reference
//! rates for display alongside the 1-D results.

use crate::barrier::{
    action_coulomb_asymptotic, action_coulomb_exact, action_general_s, action_invsqrt_asymptotic,
    action_invsqrt_exact, action_log_improved, action_log_leading, action_oracle, ActionResult,
};
use crate::error::{Error, Result};
use crate::potentials::{weak_field_check, FieldMode, FieldSpec, PotentialSpec};
use crate::spectra::{energy_closed, normalization_power_law};
use crate::turning_points::ScaledField;
use crate::EvalConfig;

const PI: f64 = std::f64::consts::PI;
const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Which route supplies the action exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateMethod {
    /// Numerical quadrature between exact turning points.
    Oracle,
    /// Closed form (₂F₁ / Appell F₁) where one exists.
    Exact,
    /// Small-ε expansion truncated at the given number of terms.
    Asymptotic(u8),
}

/// An assembled ionization rate w = prefactor · exp(exponent) · ac_factor.
#[derive(Debug, Clone, PartialEq)]
pub struct RateResult {
    /// Probability of ionization per unit time (atomic units).
    pub w: f64,
    pub prefactor: f64,
    pub exponent: f64,
    /// Cycle-averaging factor, present only for low-frequency AC fields.
    pub ac_factor: Option<f64>,
    pub method: RateMethod,
    /// Governing small parameter ε of the underlying barrier reduction.
    pub epsilon: f64,
    /// Soft validity diagnostics that do not abort the computation.
    pub warnings: Vec<String>,
}

fn assemble(
    prefactor: f64,
    action: &ActionResult,
    ac: Option<AcAverage>,
    method: RateMethod,
    mut warnings: Vec<String>,
) -> RateResult {
    let ac_factor = ac.map(|a| {
        if !a.reliable {
            warnings.push(format!(
                "cycle averaging unreliable: static exponent {:.2} below 10",
                a.static_exponent
            ));
        }
        a.factor
    });
    RateResult {
        w: prefactor * action.value.exp() * ac_factor.unwrap_or(1.0),
        prefactor,
        exponent: action.value,
        ac_factor,
        method,
        epsilon: action.epsilon,
        warnings,
    }
}

/// Low-frequency cycle-averaging factor √(3F/(π(2|E|)^{3/2})) and its
/// saddle-point reliability diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcAverage {
    pub factor: f64,
    /// Static exponent magnitude 2(2|E|)^{3/2}/(3F) controlling the
    /// saddle-point validity.
    pub static_exponent: f64,
    /// The averaging approximation is trusted for static exponents ≥ 10.
    pub reliable: bool,
}

/// Averaging factor for a level of energy −|E| in a peak field F.
pub fn ac_average_factor(abs_energy: f64, f: f64) -> Result<AcAverage> {
    if !(abs_energy > 0.0 && f > 0.0) {
        return Err(Error::Domain("need |E| > 0 and F > 0".into()));
    }
    let static_exponent = 2.0 * (2.0 * abs_energy).powf(1.5) / (3.0 * f);
    Ok(AcAverage {
        factor: (3.0 * f / (PI * (2.0 * abs_energy).powf(1.5))).sqrt(),
        static_exponent,
        reliable: static_exponent >= 10.0,
    })
}

/// Logarithmic-potential averaging factor
/// (ln(1/ε))^{−3/4} √(3F/(π(2V₀)^{3/2})) with ε from the level index.
pub fn ac_average_factor_log(v0: f64, n: u32, f: f64) -> Result<AcAverage> {
    let epsilon = ScaledField::log_from_quantum_number(v0, n, f)?.epsilon;
    let log_term = (1.0 / epsilon).ln();
    let static_exponent = 4.0 * SQRT_2 * v0.powf(1.5) / (3.0 * f) * log_term.powf(1.5);
    Ok(AcAverage {
        factor: log_term.powf(-0.75) * (3.0 * f / (PI * (2.0 * v0).powf(1.5))).sqrt(),
        static_exponent,
        reliable: static_exponent >= 10.0,
    })
}

fn ac_for(field: &FieldSpec, abs_energy: f64) -> Result<Option<AcAverage>> {
    match field.mode {
        FieldMode::Static => Ok(None),
        FieldMode::LowFrequencyAc => Ok(Some(ac_average_factor(abs_energy, field.strength)?)),
    }
}

/// Rate for a power-law exponent 1 < s < 2 from the decomposed action.
///
/// The decomposition applies only while the field-free correction stays
/// smaller in magnitude than the leading field term; `margin` scales that
/// guard (1.0 reproduces the bare comparison).
pub fn rate_general_s(
    s: f64,
    energy: f64,
    field: &FieldSpec,
    method: RateMethod,
    margin: f64,
) -> Result<RateResult> {
    let spec = PotentialSpec::power_law(s)?;
    if !(s > 1.0) {
        return Err(Error::Domain(format!(
            "the decomposed rate applies for 1 < s < 2, got {s}"
        )));
    }
    let f = field.strength;
    let check = weak_field_check(&spec, energy, f)?;
    let mut warnings = Vec::new();
    if !check.valid {
        warnings.push(format!(
            "weak-field ratio {:.4} above threshold",
            check.ratio
        ));
    }

    let action = match method {
        RateMethod::Oracle => action_oracle(&spec, energy, f)?,
        RateMethod::Asymptotic(_) => action_general_s(s, energy, f)?,
        RateMethod::Exact => {
            return Err(Error::Unsupported(
                "no closed-form action for general s; use Oracle or Asymptotic".into(),
            ))
        }
    };
    // Applicability guard: correction term smaller than the field term.
    let correction = 2.0 * SQRT_2 * (f_guard_correction(s, energy)?);
    let field_term = 2.0 * (2.0 * energy.abs()).powf(1.5) / (3.0 * f);
    if correction >= margin * field_term {
        return Err(Error::Applicability(format!(
            "correction term {correction:.4} not below the field term {field_term:.4}"
        )));
    }

    let prefactor = normalization_power_law(s, energy)? / 4.0;
    Ok(assemble(
        prefactor,
        &action,
        ac_for(field, energy.abs())?,
        method,
        warnings,
    ))
}

fn f_guard_correction(s: f64, energy: f64) -> Result<f64> {
    Ok((crate::barrier::f_of_s(s)? + 1.0) / energy.abs().powf(1.0 / s - 0.5))
}

/// Coulomb (s = 1) rate from the n-th level: w₀ = 1/(2πn³) times the
/// exponential of the chosen action route.
pub fn rate_coulomb(
    n: u32,
    field: &FieldSpec,
    method: RateMethod,
    cfg: &EvalConfig,
) -> Result<RateResult> {
    if n < 1 {
        return Err(Error::Domain("quantum number must be >= 1".into()));
    }
    let f = field.strength;
    let epsilon = ScaledField::coulomb(n, f)?.epsilon;
    let energy = -0.5 / (n as f64 * n as f64);
    let spec = PotentialSpec::power_law(1.0)?;
    let action = match method {
        RateMethod::Oracle => action_oracle(&spec, energy, f)?,
        RateMethod::Exact => action_coulomb_exact(epsilon, energy, cfg)?,
        RateMethod::Asymptotic(order) => action_coulomb_asymptotic(epsilon, n as f64, order)?,
    };
    let prefactor = 1.0 / (2.0 * PI * (n as f64).powi(3));
    Ok(assemble(
        prefactor,
        &action,
        ac_for(field, energy.abs())?,
        method,
        vec![],
    ))
}

/// Inverse-square-root (s = 1/2) rate at an explicit level energy:
/// prefactor (2√2/3π)|E|^{5/2}.
pub fn rate_invsqrt(
    energy: f64,
    field: &FieldSpec,
    method: RateMethod,
    cfg: &EvalConfig,
) -> Result<RateResult> {
    if !(energy < 0.0) {
        return Err(Error::Domain("level energy must be negative".into()));
    }
    let f = field.strength;
    let epsilon = ScaledField::inv_sqrt(energy, f)?.epsilon;
    let spec = PotentialSpec::power_law(0.5)?;
    let action = match method {
        RateMethod::Oracle => action_oracle(&spec, energy, f)?,
        RateMethod::Exact => action_invsqrt_exact(epsilon, f, cfg)?,
        RateMethod::Asymptotic(order) => action_invsqrt_asymptotic(epsilon, f, order)?,
    };
    let prefactor = 2.0 * SQRT_2 / (3.0 * PI) * energy.abs().powf(2.5);
    Ok(assemble(
        prefactor,
        &action,
        ac_for(field, energy.abs())?,
        method,
        vec![],
    ))
}

/// Inverse-square-root rate from the n-th WKB level.
pub fn rate_invsqrt_from_n(
    n: u32,
    field: &FieldSpec,
    method: RateMethod,
    cfg: &EvalConfig,
) -> Result<RateResult> {
    let spec = PotentialSpec::power_law(0.5)?;
    rate_invsqrt(energy_closed(&spec, n)?, field, method, cfg)
}

/// Logarithmic-potential rate: prefactor V₀/(π(n − 1/4)) with the leading
/// (order 1), improved (order ≥ 2) or oracle action in the exponent.
pub fn rate_log(
    v0: f64,
    a: f64,
    n: u32,
    field: &FieldSpec,
    method: RateMethod,
) -> Result<RateResult> {
    let spec = PotentialSpec::logarithmic(v0, a)?;
    let f = field.strength;
    let energy = energy_closed(&spec, n)?;
    // Validates ε < 1/e up front for every method.
    ScaledField::log_from_quantum_number(v0, n, f)?;
    let action = match method {
        RateMethod::Oracle => action_oracle(&spec, energy, f)?,
        RateMethod::Asymptotic(order) => {
            if order <= 1 {
                action_log_leading(v0, n, f)?
            } else {
                action_log_improved(v0, a, energy, f)?
            }
        }
        RateMethod::Exact => {
            return Err(Error::Unsupported(
                "no closed-form action for the logarithmic barrier; use Oracle or Asymptotic"
                    .into(),
            ))
        }
    };
    let prefactor = v0 / (PI * (n as f64 - 0.25));
    let ac = match field.mode {
        FieldMode::Static => None,
        FieldMode::LowFrequencyAc => Some(ac_average_factor_log(v0, n, f)?),
    };
    Ok(assemble(prefactor, &action, ac, method, vec![]))
}

/// The textbook 3-D reference rates, exposed for side-by-side display only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferenceKind {
    /// Ground-state hydrogen: w = (4/F) e^{−2/(3F)}, valid for F ≪ 1.
    Hydrogen1s,
    /// Spherical short-range well binding −κ²/2: w = (F/2κ) e^{−2κ³/(3F)}.
    ShortRangeWell { kappa: f64 },
}

pub fn reference_rate(kind: ReferenceKind, f: f64) -> Result<RateResult> {
    if !(f > 0.0) {
        return Err(Error::Domain("field strength must be positive".into()));
    }
    let mut warnings = Vec::new();
    let (prefactor, exponent, epsilon) = match kind {
        ReferenceKind::Hydrogen1s => {
            if f > 0.1 {
                warnings.push(format!("hydrogen reference assumes F << 1, got {f}"));
            }
            (4.0 / f, -2.0 / (3.0 * f), f)
        }
        ReferenceKind::ShortRangeWell { kappa } => {
            if !(kappa > 0.0) {
                return Err(Error::Domain("kappa must be positive".into()));
            }
            if f > 0.1 * kappa.powi(3) {
                warnings.push(format!(
                    "short-range reference assumes F << kappa^3, got {f}"
                ));
            }
            (
                f / (2.0 * kappa),
                -2.0 * kappa.powi(3) / (3.0 * f),
                f / kappa.powi(3),
            )
        }
    };
    Ok(RateResult {
        w: prefactor * exponent.exp(),
        prefactor,
        exponent,
        ac_factor: None,
        method: RateMethod::Exact,
        epsilon,
        warnings,
    })
}
