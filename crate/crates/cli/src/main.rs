//! Command-line front end for the tunnel-ionization rate engine: compute
//! single rates, scan field ranges, emit figure data, and run the validation
//! suite. Emits CSV or JSON; errors carry a machine-readable category and a
//! non-zero exit status.

mod figures;
mod record;
mod scan;

use clap::{Args, Parser, Subcommand, ValueEnum};
use record::{rates_to_csv, rates_to_json, RateRecord};
use serde::Deserialize;
use std::io::Write;
use std::process::ExitCode;
use tunnel_wkb::potentials::{FieldSpec, PotentialSpec};
use tunnel_wkb::rates::{
    rate_coulomb, rate_general_s, rate_invsqrt, rate_invsqrt_from_n, rate_log, RateMethod,
    RateResult,
};
use tunnel_wkb::spectra::{energy_closed, energy_quantize};
use tunnel_wkb::validate::{run as run_validation, ValidateOptions};
use tunnel_wkb::{Error, EvalConfig};

#[derive(Parser)]
#[command(
    name = "tunnel-wkb",
    about = "Semiclassical tunnel-ionization rates for 1-D power-law and logarithmic potentials",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single ionization rate.
    Rate(RateArgs),
    /// Compute rates over a log-spaced field range.
    Scan(ScanArgs),
    /// Emit the data behind one of the reference figures.
    Figure(FigureArgs),
    /// Run the validation suite and report each criterion.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PotentialArg {
    #[value(name = "powerlaw", alias = "power-law")]
    PowerLaw,
    #[value(name = "log", alias = "logarithmic")]
    Log,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Exact,
    Asymptotic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Physics parameters shared by `rate` and `scan`, all of which may also be
/// supplied through `--config`; explicit flags win.
#[derive(Args, Clone, Default)]
struct StateArgs {
    /// Confining potential family.
    #[arg(long, value_enum)]
    potential: Option<PotentialArg>,
    /// Power-law exponent s in (0, 2).
    #[arg(long)]
    s: Option<f64>,
    /// Logarithmic potential depth V0 > 0.
    #[arg(long = "V0")]
    v0: Option<f64>,
    /// Logarithmic potential length scale a > 0.
    #[arg(long)]
    a: Option<f64>,
    /// Principal quantum number n >= 1.
    #[arg(long)]
    n: Option<u32>,
    /// Maslov index in [0, 1), for exponents without a built-in table entry.
    #[arg(long)]
    mu: Option<f64>,
    /// Explicit level energy E (skips the closed-form spectrum).
    #[arg(long = "E", allow_hyphen_values = true)]
    energy: Option<f64>,
    /// Treat the field as the peak of a low-frequency cycle and apply the
    /// averaging factor.
    #[arg(long)]
    ac: bool,
    /// Action route: oracle, exact closed form, or asymptotic expansion.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Number of asymptotic terms to keep (1..=3; logarithmic: 1 = leading,
    /// 2 = improved).
    #[arg(long)]
    order: Option<u8>,
    /// JSON file with the same keys as these flags.
    #[arg(long)]
    config: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct RateArgs {
    #[command(flatten)]
    state: StateArgs,
    /// Field strength F (atomic units).
    #[arg(long = "F")]
    field: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write to this path instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    state: StateArgs,
    /// Lower end of the field range.
    #[arg(long = "f-min")]
    f_min: Option<f64>,
    /// Upper end of the field range.
    #[arg(long = "f-max")]
    f_max: Option<f64>,
    /// Number of log-spaced points (>= 2).
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// Which figure to emit: fig1, fig2 or fig3.
    #[arg(long)]
    id: String,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Run only criteria whose name contains this substring.
    #[arg(long)]
    only: Option<String>,
    /// Tolerance multiplier (< 1 is stricter).
    #[arg(long = "tol-scale", default_value_t = 1.0)]
    tol_scale: f64,
}

/// Optional JSON config mirroring the state flags.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    potential: Option<String>,
    s: Option<f64>,
    #[serde(rename = "V0")]
    v0: Option<f64>,
    a: Option<f64>,
    n: Option<u32>,
    mu: Option<f64>,
    #[serde(rename = "E")]
    energy: Option<f64>,
    #[serde(rename = "F")]
    field: Option<f64>,
    ac: Option<bool>,
    method: Option<String>,
    order: Option<u8>,
}

fn usage_error(msg: &str) -> Error {
    Error::Domain(format!("usage: {msg}"))
}

fn merge_config(state: &mut StateArgs, field: &mut Option<f64>) -> Result<(), Error> {
    let Some(path) = &state.config else {
        return Ok(());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(&format!("cannot read config {}: {e}", path.display())))?;
    let file: FileConfig = serde_json::from_str(&text)
        .map_err(|e| usage_error(&format!("bad config {}: {e}", path.display())))?;
    if state.potential.is_none() {
        state.potential = match file.potential.as_deref() {
            None => None,
            Some("powerlaw" | "power-law") => Some(PotentialArg::PowerLaw),
            Some("log" | "logarithmic") => Some(PotentialArg::Log),
            Some(other) => return Err(usage_error(&format!("unknown potential '{other}'"))),
        };
    }
    state.s = state.s.or(file.s);
    state.v0 = state.v0.or(file.v0);
    state.a = state.a.or(file.a);
    state.n = state.n.or(file.n);
    state.mu = state.mu.or(file.mu);
    state.energy = state.energy.or(file.energy);
    if !state.ac {
        state.ac = file.ac.unwrap_or(false);
    }
    if state.method.is_none() {
        state.method = match file.method.as_deref() {
            None => None,
            Some("oracle") => Some(MethodArg::Oracle),
            Some("exact") => Some(MethodArg::Exact),
            Some("asymptotic") => Some(MethodArg::Asymptotic),
            Some(other) => return Err(usage_error(&format!("unknown method '{other}'"))),
        };
    }
    state.order = state.order.or(file.order);
    *field = field.or(file.field);
    Ok(())
}

/// Everything needed to evaluate one (potential, level, method) point.
struct ResolvedState {
    potential_label: &'static str,
    spec: PotentialSpec,
    s: Option<f64>,
    v0: f64,
    a: f64,
    n: Option<u32>,
    energy_override: Option<f64>,
    mu: Option<f64>,
    ac: bool,
    method: Option<MethodArg>,
    order: Option<u8>,
}

fn resolve_state(state: &StateArgs) -> Result<ResolvedState, Error> {
    let potential = state
        .potential
        .ok_or_else(|| usage_error("--potential is required (powerlaw|log)"))?;
    match potential {
        PotentialArg::PowerLaw => {
            let s = state
                .s
                .ok_or_else(|| usage_error("--s is required for powerlaw"))?;
            let spec = PotentialSpec::power_law(s)?;
            if state.n.is_none() && state.energy.is_none() {
                return Err(usage_error("provide --n or --E"));
            }
            Ok(ResolvedState {
                potential_label: "powerlaw",
                spec,
                s: Some(s),
                v0: 1.0,
                a: 1.0,
                n: state.n,
                energy_override: state.energy,
                mu: state.mu,
                ac: state.ac,
                method: state.method,
                order: state.order,
            })
        }
        PotentialArg::Log => {
            let v0 = state.v0.unwrap_or(1.0);
            let a = state.a.unwrap_or(1.0);
            let spec = PotentialSpec::logarithmic(v0, a)?;
            let n = state
                .n
                .ok_or_else(|| usage_error("--n is required for log"))?;
            if state.energy.is_some() {
                return Err(usage_error("logarithmic rates are indexed by --n, not --E"));
            }
            Ok(ResolvedState {
                potential_label: "logarithmic",
                spec,
                s: None,
                v0,
                a,
                n: Some(n),
                energy_override: None,
                mu: state.mu,
                ac: state.ac,
                method: state.method,
                order: state.order,
            })
        }
    }
}

impl ResolvedState {
    fn field_spec(&self, f: f64) -> Result<FieldSpec, Error> {
        if self.ac {
            FieldSpec::low_frequency_ac(f)
        } else {
            FieldSpec::static_field(f)
        }
    }

    /// Level energy: explicit override, closed form, or quantization with a
    /// caller-supplied Maslov index.
    fn level_energy(&self) -> Result<f64, Error> {
        if let Some(e) = self.energy_override {
            return Ok(e);
        }
        let n = self.n.ok_or_else(|| usage_error("provide --n or --E"))?;
        match energy_closed(&self.spec, n) {
            Ok(e) => Ok(e),
            Err(Error::Unsupported(_)) => {
                let mu = self.mu.ok_or_else(|| {
                    usage_error("no closed-form spectrum for this s; provide --mu or --E")
                })?;
                energy_quantize(&self.spec, n, mu)
            }
            Err(e) => Err(e),
        }
    }

    fn method_for(&self, has_closed_form: bool) -> RateMethod {
        let order = self.order.unwrap_or(if self.s.is_none() { 2 } else { 3 });
        match self.method {
            Some(MethodArg::Oracle) => RateMethod::Oracle,
            Some(MethodArg::Exact) => RateMethod::Exact,
            Some(MethodArg::Asymptotic) => RateMethod::Asymptotic(order),
            None if has_closed_form => RateMethod::Exact,
            None => RateMethod::Oracle,
        }
    }

    fn compute(&self, f: f64) -> Result<(RateResult, f64), Error> {
        let cfg = EvalConfig::default();
        let field = self.field_spec(f)?;
        let energy = self.level_energy()?;
        let rate = match (self.potential_label, self.s) {
            ("logarithmic", _) => rate_log(
                self.v0,
                self.a,
                self.n.unwrap(),
                &field,
                self.method_for(false),
            )?,
            (_, Some(1.0)) => {
                let n = self
                    .n
                    .ok_or_else(|| usage_error("the s = 1 closed forms are indexed by --n"))?;
                rate_coulomb(n, &field, self.method_for(true), &cfg)?
            }
            (_, Some(0.5)) => {
                let method = self.method_for(true);
                match self.energy_override {
                    Some(e) => rate_invsqrt(e, &field, method, &cfg)?,
                    None => rate_invsqrt_from_n(self.n.unwrap(), &field, method, &cfg)?,
                }
            }
            (_, Some(s)) if s > 1.0 && s < 2.0 => {
                rate_general_s(s, energy, &field, self.method_for(false), 1.0)?
            }
            (_, Some(s)) => {
                return Err(Error::Unsupported(format!(
                    "no rate route for s = {s}; supported: s = 1, s = 1/2, 1 < s < 2, logarithmic"
                )))
            }
            _ => unreachable!("power-law states always carry s"),
        };
        Ok((rate, energy))
    }

    fn record(&self, f: f64) -> RateRecord {
        match self.compute(f) {
            Ok((rate, energy)) => {
                RateRecord::from_rate(self.potential_label, self.s, self.n, energy, f, &rate)
            }
            Err(error) => RateRecord::failed(
                self.potential_label,
                self.s,
                self.n,
                self.energy_override.unwrap_or(f64::NAN),
                f,
                "",
                &error,
            ),
        }
    }
}

fn write_output(text: &str, path: &Option<std::path::PathBuf>) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::Convergence(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn cmd_rate(mut args: RateArgs) -> Result<(), Error> {
    merge_config(&mut args.state, &mut args.field)?;
    let state = resolve_state(&args.state)?;
    let f = args.field.ok_or_else(|| usage_error("--F is required"))?;
    let (rate, energy) = state.compute(f)?;
    let record = RateRecord::from_rate(state.potential_label, state.s, state.n, energy, f, &rate);
    let text = match args.format {
        FormatArg::Csv => rates_to_csv(std::slice::from_ref(&record)),
        FormatArg::Json => rates_to_json(std::slice::from_ref(&record)) + "\n",
    };
    write_output(&text, &args.output)
}

fn cmd_scan(mut args: ScanArgs) -> Result<(), Error> {
    let mut unused = None;
    merge_config(&mut args.state, &mut unused)?;
    let state = resolve_state(&args.state)?;
    let (f_min, f_max) = match (args.f_min, args.f_max) {
        (Some(lo), Some(hi)) if lo > 0.0 && hi > lo => (lo, hi),
        _ => {
            return Err(usage_error(
                "--f-min and --f-max must satisfy 0 < f-min < f-max",
            ))
        }
    };
    let points = args.points.unwrap_or(0);
    if points < 2 {
        return Err(usage_error("--points must be at least 2"));
    }
    let fields: Vec<f64> = (0..points)
        .map(|i| f_min * (f_max / f_min).powf(i as f64 / (points - 1) as f64))
        .collect();
    let rows = scan::run_parallel(&fields, |f| state.record(f));
    let text = match args.format {
        FormatArg::Csv => rates_to_csv(&rows),
        FormatArg::Json => rates_to_json(&rows) + "\n",
    };
    write_output(&text, &args.output)
}

fn cmd_figure(args: FigureArgs) -> Result<(), Error> {
    let text = match args.id.as_str() {
        "fig1" => figures::fig1()?,
        "fig2" => figures::fig2()?,
        "fig3" => figures::fig3()?,
        other => return Err(usage_error(&format!("unknown figure id '{other}'"))),
    };
    write_output(&text, &args.output)
}

fn cmd_validate(args: ValidateArgs) -> Result<bool, Error> {
    // Rejects NaN as well as non-positive values.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(args.tol_scale > 0.0) {
        return Err(usage_error("--tol-scale must be positive"));
    }
    let outcomes = run_validation(&ValidateOptions {
        only: args.only,
        tol_scale: args.tol_scale,
    });
    if outcomes.is_empty() {
        return Err(usage_error("--only matched no criteria"));
    }
    let mut all_passed = true;
    for outcome in &outcomes {
        println!("{}", outcome.summary_line());
        all_passed &= outcome.passed;
    }
    println!(
        "{}/{} criteria passed",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    );
    Ok(all_passed)
}

fn emit_error(error: &Error) {
    // Machine-readable single-line JSON on stderr.
    eprintln!(
        "{}",
        serde_json::json!({
            "error": { "category": error.category(), "message": error.to_string() }
        })
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rate(args) => cmd_rate(args).map(|()| true),
        Command::Scan(args) => cmd_scan(args).map(|()| true),
        Command::Figure(args) => cmd_figure(args).map(|()| true),
        Command::Validate(args) => cmd_validate(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1), // validation reported failures
        Err(error) => {
            emit_error(&error);
            if error.to_string().contains("usage:") {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
