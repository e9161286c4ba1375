//! Barrier action exponents −2∫|p|dx between the outer turning points,
//! computed by three routes:
//!
//! * [`action_oracle`]: direct quadrature between the exact numerical
//!   turning points, the ground truth every closed form is compared against;
//! * exact closed forms: Gauss ₂F₁ for the Coulomb barrier,
//!   Appell F₁ for the inverse-square-root barrier;
//! * small-ε asymptotic expansions, order by order.

use crate::error::{Error, Result};
use crate::potentials::{momentum_barrier, PotentialSpec};
use crate::quadrature::{romberg, tanh_sinh_plain};
use crate::special_fns::{appell_f1, gauss_2f1};
use crate::turning_points::{
    coulomb_roots, cubic_roots_cardano, generic_turning_points, log_turning_points, ScaledField,
};
use crate::EvalConfig;

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const PI: f64 = std::f64::consts::PI;

/// Provenance of an action value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionMethod {
    Oracle,
    ExactClosedForm,
    /// Truncated expansion keeping the given number of terms.
    Asymptotic(u8),
}

/// A barrier action exponent (the quantity −2∫|p|dx ≤ 0).
#[derive(Debug, Clone, PartialEq)]
pub struct ActionResult {
    pub value: f64,
    pub method: ActionMethod,
    /// Governing small parameter of the reduction this value belongs to.
    pub epsilon: f64,
    /// Optional named breakdown of the value.
    pub terms: Vec<(&'static str, f64)>,
}

/// Small parameter governing the barrier for the given spec and level.
pub fn governing_epsilon(spec: &PotentialSpec, energy: f64, f: f64) -> f64 {
    match *spec {
        PotentialSpec::PowerLaw { s } => f / energy.abs().powf(1.0 + 1.0 / s),
        PotentialSpec::Logarithmic { v0, a } => a * f * (energy / v0).exp() / v0,
    }
}

/// Numerical ground truth: −2∫_{x_L}^{x_R}|p|dx with the turning points from
/// bisection and both square-root endpoint zeros removed by the substitution
/// x = x_L + (x_R − x_L) sin²θ.
pub fn action_oracle(spec: &PotentialSpec, energy: f64, f: f64) -> Result<ActionResult> {
    let points = generic_turning_points(spec, energy, f)?;
    let span = points.x_right - points.x_left;
    let integrand = |theta: f64| {
        let sin = theta.sin();
        let x = points.x_left + span * sin * sin;
        let p = momentum_barrier(spec, energy, f, x).unwrap_or(0.0);
        p * span * (2.0 * theta).sin()
    };
    let q = romberg(integrand, 0.0, std::f64::consts::FRAC_PI_2, 1e-11, 22)?;
    Ok(ActionResult {
        value: -2.0 * q.value,
        method: ActionMethod::Oracle,
        epsilon: governing_epsilon(spec, energy, f),
        terms: vec![],
    })
}

/// The dimensionless tail integral f(s) = ∫₁^∞ dy/((√(1−1/yˢ)+1) yˢ),
/// convergent for s > 1 and divergent as s → 1⁺.
///
/// The y = 1 endpoint is handled by y = 1 + u². The infinite tail is mapped
/// by y = 1/t and then t = τ^{1/(s−1)}, which flattens the algebraic weight
/// t^{s−2} into a bounded integrand uniformly in s; without it the weight
/// approaches the non-integrable t^{−1} as s → 1 and double precision cannot
/// resolve the mass next to the endpoint.
pub fn f_of_s(s: f64) -> Result<f64> {
    if !(s > 1.0 && s <= 2.0) {
        return Err(Error::Domain(format!(
            "f(s) converges for 1 < s <= 2 only, got {s} (diverges at s = 1)"
        )));
    }
    let head = tanh_sinh_plain(
        |u: f64| {
            let y = 1.0 + u * u;
            let ys = y.powf(s);
            2.0 * u / (((1.0 - 1.0 / ys).max(0.0).sqrt() + 1.0) * ys)
        },
        0.0,
        1.0,
        1e-12,
        14,
    )?;
    let k = 1.0 / (s - 1.0);
    let tail = tanh_sinh_plain(
        |tau: f64| k / (1.0 + (1.0 - tau.powf(k * s)).max(0.0).sqrt()),
        0.0,
        0.5f64.powf(s - 1.0),
        1e-12,
        14,
    )?;
    Ok(head.value + tail.value)
}

/// Leading field term I_s1 = −2(2|E|)^{3/2}/(3F) of the barrier exponent.
fn term_field(energy: f64, f: f64) -> f64 {
    -2.0 * (2.0 * energy.abs()).powf(1.5) / (3.0 * f)
}

/// Field-free inner term I_s2 = 2√2 |E|^{1/2−1/s}.
fn term_inner(s: f64, energy: f64) -> f64 {
    2.0 * SQRT_2 * energy.abs().powf(0.5 - 1.0 / s)
}

/// Decomposed action I_s1 + I_s2 + I_s3 for exponents 1 < s < 2.
pub fn action_general_s(s: f64, energy: f64, f: f64) -> Result<ActionResult> {
    if !(s > 1.0 && s < 2.0) {
        return Err(Error::Domain(format!(
            "decomposed action applies for 1 < s < 2, got {s}"
        )));
    }
    if !(energy < 0.0 && f > 0.0) {
        return Err(Error::Domain("need E < 0 and F > 0".into()));
    }
    let i1 = term_field(energy, f);
    let i2 = term_inner(s, energy);
    let i3 = i2 * f_of_s(s)?;
    Ok(ActionResult {
        value: i1 + i2 + i3,
        method: ActionMethod::Asymptotic(2),
        epsilon: f / energy.abs().powf(1.0 + 1.0 / s),
        terms: vec![("field", i1), ("inner", i2), ("tail", i3)],
    })
}

fn coulomb_prefactor(epsilon: f64, abs_energy: f64, dz: f64, z_anchor: f64) -> f64 {
    -(2.0f64).powf(1.5) / abs_energy.sqrt() * dz * dz / z_anchor.sqrt() * epsilon.sqrt() * PI / 8.0
}

/// Exact Coulomb barrier action via the Gauss hypergeometric closed form
/// whose argument 1 − z₁/z₂ lies in [0, 1].
pub fn action_coulomb_exact(epsilon: f64, energy: f64, cfg: &EvalConfig) -> Result<ActionResult> {
    if !(energy < 0.0) {
        return Err(Error::Domain(
            "Coulomb level energy must be negative".into(),
        ));
    }
    let abs_e = energy.abs();
    let set = coulomb_roots(epsilon, abs_e)?;
    let (z1, z2) = (set.roots[0], set.roots[1]);
    let hyp = gauss_2f1(0.5, 1.5, 3.0, 1.0 - z1 / z2, cfg)?;
    Ok(ActionResult {
        value: coulomb_prefactor(epsilon, abs_e, z2 - z1, z2) * hyp,
        method: ActionMethod::ExactClosedForm,
        epsilon,
        terms: vec![],
    })
}

/// Algebraically equivalent Coulomb action anchored on the inner root, with
/// hypergeometric argument (z₁ − z₂)/z₁ ≤ 0. Exposed for transposition
/// consistency checks.
pub fn action_coulomb_exact_alt(
    epsilon: f64,
    energy: f64,
    cfg: &EvalConfig,
) -> Result<ActionResult> {
    if !(energy < 0.0) {
        return Err(Error::Domain(
            "Coulomb level energy must be negative".into(),
        ));
    }
    let abs_e = energy.abs();
    let set = coulomb_roots(epsilon, abs_e)?;
    let (z1, z2) = (set.roots[0], set.roots[1]);
    let hyp = gauss_2f1(0.5, 1.5, 3.0, (z1 - z2) / z1, cfg)?;
    Ok(ActionResult {
        value: coulomb_prefactor(epsilon, abs_e, z2 - z1, z1) * hyp,
        method: ActionMethod::ExactClosedForm,
        epsilon,
        terms: vec![],
    })
}

/// Small-ε Coulomb asymptotic −4n(2/(3ε) + ln(ε)/2 − (ln 16 + 1)/2),
/// truncated after `order` terms (1 ≤ order ≤ 3).
pub fn action_coulomb_asymptotic(epsilon: f64, n: f64, order: u8) -> Result<ActionResult> {
    if !(epsilon > 0.0) || !(n > 0.0) {
        return Err(Error::Domain("need epsilon > 0 and n > 0".into()));
    }
    if !(1..=3).contains(&order) {
        return Err(Error::Domain(format!("order must be 1..=3, got {order}")));
    }
    let scale = -4.0 * n;
    let t1 = scale * 2.0 / (3.0 * epsilon);
    let t2 = scale * epsilon.ln() / 2.0;
    let t3 = -scale * (16.0f64.ln() + 1.0) / 2.0;
    let mut terms = vec![("inverse-eps", t1)];
    if order >= 2 {
        terms.push(("log-eps", t2));
    }
    if order >= 3 {
        terms.push(("constant", t3));
    }
    Ok(ActionResult {
        value: terms.iter().map(|(_, v)| v).sum(),
        method: ActionMethod::Asymptotic(order),
        epsilon,
        terms,
    })
}

fn invsqrt_prefactor(epsilon: f64, f: f64, dz: f64, anchor: f64) -> f64 {
    // V0 = 1 in the power-law unit convention.
    -PI * SQRT_2 * epsilon / (2.0 * f.sqrt()) * dz * dz * anchor.sqrt()
}

/// Exact inverse-square-root barrier action via Appell F₁, in the form whose
/// arguments (1 − z₂/z₃, (z₂ − z₃)/(z₁ − z₃)) both lie inside (0, 1).
pub fn action_invsqrt_exact(epsilon: f64, f: f64, cfg: &EvalConfig) -> Result<ActionResult> {
    if !(f > 0.0) {
        return Err(Error::Domain("field strength must be positive".into()));
    }
    let abs_e = (f / epsilon).powf(1.0 / 3.0);
    let set = cubic_roots_cardano(epsilon, abs_e)?;
    let (z1, z2, z3) = (set.roots[0], set.roots[1], set.roots[2]);
    let appell = appell_f1(
        1.5,
        -0.5,
        -0.5,
        3.0,
        1.0 - z2 / z3,
        (z2 - z3) / (z1 - z3),
        cfg,
    )?;
    Ok(ActionResult {
        value: invsqrt_prefactor(epsilon, f, z3 - z2, z3 * (z3 - z1)) * appell,
        method: ActionMethod::ExactClosedForm,
        epsilon,
        terms: vec![],
    })
}

/// The transposed (z₂ ↔ z₃) Appell form of the same action, with both
/// arguments negative. Exposed for transposition consistency checks.
pub fn action_invsqrt_exact_alt(epsilon: f64, f: f64, cfg: &EvalConfig) -> Result<ActionResult> {
    if !(f > 0.0) {
        return Err(Error::Domain("field strength must be positive".into()));
    }
    let abs_e = (f / epsilon).powf(1.0 / 3.0);
    let set = cubic_roots_cardano(epsilon, abs_e)?;
    let (z1, z2, z3) = (set.roots[0], set.roots[1], set.roots[2]);
    let appell = appell_f1(
        1.5,
        -0.5,
        -0.5,
        3.0,
        1.0 - z3 / z2,
        (z3 - z2) / (z1 - z2),
        cfg,
    )?;
    Ok(ActionResult {
        value: invsqrt_prefactor(epsilon, f, z3 - z2, z2 * (z2 - z1)) * appell,
        method: ActionMethod::ExactClosedForm,
        epsilon,
        terms: vec![],
    })
}

/// Three-term small-ε expansion of the inverse-square-root action,
/// −(4√2 ε/√F)(1/(3ε^{3/2}) − π/(4ε) + (2−3π)/(48√ε)), truncated after
/// `order` terms. At order 3 the pieces are exactly the three exponent terms
/// of the closed-form rate.
pub fn action_invsqrt_asymptotic(epsilon: f64, f: f64, order: u8) -> Result<ActionResult> {
    if !(epsilon > 0.0 && f > 0.0) {
        return Err(Error::Domain("need epsilon > 0 and F > 0".into()));
    }
    if !(1..=3).contains(&order) {
        return Err(Error::Domain(format!("order must be 1..=3, got {order}")));
    }
    let scale = -4.0 * SQRT_2 * epsilon / f.sqrt();
    let t1 = scale / (3.0 * epsilon.powf(1.5));
    let t2 = scale * (-PI / (4.0 * epsilon));
    let t3 = scale * (2.0 - 3.0 * PI) / (48.0 * epsilon.sqrt());
    let mut terms = vec![("field", t1)];
    if order >= 2 {
        terms.push(("sqrt-field", t2));
    }
    if order >= 3 {
        terms.push(("constant", t3));
    }
    Ok(ActionResult {
        value: terms.iter().map(|(_, v)| v).sum(),
        method: ActionMethod::Asymptotic(order),
        epsilon,
        terms,
    })
}

/// Leading logarithmic-barrier action −(4√2 V₀^{3/2}/(3F)) (ln 1/ε)^{3/2},
/// the exponent of the leading-term rate formula.
pub fn action_log_leading(v0: f64, n: u32, f: f64) -> Result<ActionResult> {
    let epsilon = ScaledField::log_from_quantum_number(v0, n, f)?.epsilon;
    let value = -4.0 * SQRT_2 * v0.powf(1.5) / (3.0 * f) * (1.0 / epsilon).ln().powf(1.5);
    Ok(ActionResult {
        value,
        method: ActionMethod::Asymptotic(1),
        epsilon,
        terms: vec![],
    })
}

/// Improved logarithmic-barrier action keeping the second terms of the
/// turning-point and integrand expansions and the finite lower limit z_L.
///
/// With u = z_L/z_R and T = √(1−u),
///
/// I = −(2V₀)^{3/2}/F · [ ⅔(z_R−z_L)^{3/2} + √z_R (T(ln u − 2) + 2 atanh T) ],
///
/// which reduces to the leading form when z_L → 0 and z_R → ln(1/ε).
pub fn action_log_improved(v0: f64, a: f64, energy: f64, f: f64) -> Result<ActionResult> {
    let epsilon = ScaledField::log_from_energy(v0, a, energy, f)?.epsilon;
    let set = log_turning_points(epsilon, v0, f)?;
    let (z_l, z_r) = (set.roots[0], set.roots[1]);
    let u = z_l / z_r;
    let t = (1.0 - u).sqrt();
    let bracket =
        2.0 / 3.0 * (z_r - z_l).powf(1.5) + z_r.sqrt() * (t * (u.ln() - 2.0) + 2.0 * t.atanh());
    let scale = (2.0 * v0).powf(1.5) / f;
    Ok(ActionResult {
        value: -scale * bracket,
        method: ActionMethod::Asymptotic(2),
        epsilon,
        terms: vec![
            ("right-point", -scale * 2.0 / 3.0 * (z_r - z_l).powf(1.5)),
            (
                "correction",
                -scale * z_r.sqrt() * (t * (u.ln() - 2.0) + 2.0 * t.atanh()),
            ),
        ],
    })
}
