//! Figure data emission: the tilted Coulomb potential with its barrier
//! endpoints, the f(s) curve with its s = 2 limit, and the accuracy of the
//! leading and improved logarithmic actions against the oracle.

use crate::record::fmt_f64;
use tunnel_wkb::barrier::{action_log_improved, action_oracle, f_of_s};
use tunnel_wkb::potentials::{potential_total, PotentialSpec};
use tunnel_wkb::turning_points::coulomb_roots;
use tunnel_wkb::Result;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// fig1 data: V(x) = −1/x − Fx at s = 1, F = 0.01, with labelled rows for
/// the n = 1 barrier endpoints where V(x) = E₁ = −1/2.
pub fn fig1() -> Result<String> {
    let spec = PotentialSpec::power_law(1.0)?;
    let f = 0.01;
    let mut out = String::from("x,potential,label\n");
    let n_points = 400;
    for i in 0..n_points {
        let x = 0.2 * (120.0f64 / 0.2).powf(i as f64 / (n_points - 1) as f64);
        let v = potential_total(&spec, f, x)?;
        out.push_str(&format!("{},{},\n", fmt_f64(x), fmt_f64(v)));
    }
    // ε = 4F at n = 1; x = z/|E| with |E| = 1/2.
    let roots = coulomb_roots(4.0 * f, 0.5)?;
    for (x, label) in [(roots.x_left, "x_L"), (roots.x_right, "x_R")] {
        let v = potential_total(&spec, f, x)?;
        out.push_str(&format!("{},{},{label}\n", fmt_f64(x), fmt_f64(v)));
    }
    Ok(out)
}

/// fig2 data: f(s) on s ∈ (1, 2] with the constant π/2 − 1 alongside.
pub fn fig2() -> Result<String> {
    let mut out = String::from("s,f_s,f2_limit\n");
    let limit = std::f64::consts::FRAC_PI_2 - 1.0;
    let n_points = 50;
    for i in 0..n_points {
        let s = 1.02 + (2.0 - 1.02) * i as f64 / (n_points - 1) as f64;
        let value = f_of_s(s)?;
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_f64(s),
            fmt_f64(value),
            fmt_f64(limit)
        ));
    }
    Ok(out)
}

/// fig3 data: improved and leading logarithmic actions normalized to the
/// oracle, over a log-spaced ε grid (V₀ = a = 1, F = 0.01).
pub fn fig3() -> Result<String> {
    let spec = PotentialSpec::logarithmic(1.0, 1.0)?;
    let f = 0.01;
    let mut out = String::from("epsilon,improved_over_oracle,leading_over_oracle,exact\n");
    let n_points = 24;
    for i in 0..n_points {
        let eps = 1e-3 * (0.05f64 / 1e-3).powf(i as f64 / (n_points - 1) as f64);
        let energy = (eps / f).ln();
        let oracle = action_oracle(&spec, energy, f)?.value;
        let improved = action_log_improved(1.0, 1.0, energy, f)?.value;
        let leading = -4.0 * SQRT_2 / (3.0 * f) * (1.0 / eps).ln().powf(1.5);
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_f64(eps),
            fmt_f64(improved / oracle),
            fmt_f64(leading / oracle),
            fmt_f64(1.0)
        ));
    }
    Ok(out)
}
