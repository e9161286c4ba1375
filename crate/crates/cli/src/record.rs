//! Output records and CSV/JSON emission.
//!
//! CSV carries full double precision (17 significant digits) so validation
//! runs are reproducible from emitted artifacts; JSON uses shortest
//! round-trip encoding, which restores f64 values bit-exactly.

use serde::{Deserialize, Serialize};
use tunnel_wkb::rates::{RateMethod, RateResult};

/// One computed rate, in the stable column order used by every command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RateRecord {
    pub potential: String,
    pub s: Option<f64>,
    pub n: Option<u32>,
    /// Level energy E.
    pub e: f64,
    /// Field strength F.
    pub f: f64,
    pub epsilon: f64,
    pub prefactor: f64,
    pub exponent: f64,
    pub w: f64,
    pub ac_factor: Option<f64>,
    pub method: String,
    pub validity_flags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn method_label(method: RateMethod) -> String {
    match method {
        RateMethod::Oracle => "oracle".into(),
        RateMethod::Exact => "exact".into(),
        RateMethod::Asymptotic(order) => format!("asymptotic({order})"),
    }
}

impl RateRecord {
    pub fn from_rate(
        potential: &str,
        s: Option<f64>,
        n: Option<u32>,
        energy: f64,
        f: f64,
        rate: &RateResult,
    ) -> Self {
        Self {
            potential: potential.to_string(),
            s,
            n,
            e: energy,
            f,
            epsilon: rate.epsilon,
            prefactor: rate.prefactor,
            exponent: rate.exponent,
            w: rate.w,
            ac_factor: rate.ac_factor,
            method: method_label(rate.method),
            validity_flags: rate.warnings.clone(),
            error: None,
        }
    }

    /// Placeholder row for a scan point that failed its validity checks.
    pub fn failed(
        potential: &str,
        s: Option<f64>,
        n: Option<u32>,
        energy: f64,
        f: f64,
        method: &str,
        error: &tunnel_wkb::Error,
    ) -> Self {
        Self {
            potential: potential.to_string(),
            s,
            n,
            e: energy,
            f,
            epsilon: f64::NAN,
            prefactor: f64::NAN,
            exponent: f64::NAN,
            w: f64::NAN,
            ac_factor: None,
            method: method.to_string(),
            validity_flags: vec![],
            error: Some(error.category().to_string()),
        }
    }
}

/// 17-significant-digit float field; empty for missing values.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        String::new()
    } else {
        format!("{x:.16e}")
    }
}

pub const RATE_CSV_HEADER: &str =
    "potential,s,n,e,f,epsilon,prefactor,exponent,w,ac_factor,method,validity_flags,error";

pub fn rate_csv_row(r: &RateRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.potential,
        r.s.map(fmt_f64).unwrap_or_default(),
        r.n.map(|n| n.to_string()).unwrap_or_default(),
        fmt_f64(r.e),
        fmt_f64(r.f),
        fmt_f64(r.epsilon),
        fmt_f64(r.prefactor),
        fmt_f64(r.exponent),
        fmt_f64(r.w),
        r.ac_factor.map(fmt_f64).unwrap_or_default(),
        r.method,
        r.validity_flags.join("; "),
        r.error.clone().unwrap_or_default(),
    )
}

pub fn rates_to_csv(rows: &[RateRecord]) -> String {
    let mut out = String::from(RATE_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&rate_csv_row(row));
        out.push('\n');
    }
    out
}

pub fn rates_to_json(rows: &[RateRecord]) -> String {
    if rows.len() == 1 {
        serde_json::to_string_pretty(&rows[0]).expect("serializable record")
    } else {
        serde_json::to_string_pretty(rows).expect("serializable records")
    }
}
