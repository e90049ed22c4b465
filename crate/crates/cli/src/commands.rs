//! The analysis subcommands. Each returns an [`Outcome`] holding a JSON
//! value; text output is rendered from the same value.

use std::time::Duration;

use quartics::arith::Field;
use quartics::curvelab::g8::{self, hessian_coefficients, COEFFICIENT_NAMES, HESSIAN_MONOMIALS};
use quartics::curvelab::*;
use serde_json::{json, Value};

use crate::source::{load_curve, load_lines, pair, Curve, Lines, Paired};
use crate::RunConfig;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unreadable input; exit status 2.
    Usage(String),
    /// The computation itself failed; exit status 1.
    Failed(String),
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        CliError::Failed(e.to_string())
    }
}

pub struct Outcome {
    pub command: String,
    /// False when the input fails the property the command tests.
    pub ok: bool,
    pub value: Value,
}

impl Outcome {
    fn new(command: &str, value: Value) -> Self {
        Self { command: command.into(), ok: true, value }
    }

    pub fn to_json(&self) -> Value {
        json!({ "schema_version": crate::SCHEMA_VERSION, "command": self.command, "ok": self.ok, "result": self.value })
    }

    pub fn to_text(&self) -> String {
        match &self.value {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}: {s}"),
                    Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                        let rows: Vec<String> = items.iter().map(|i| format!("  {i}")).collect();
                        format!("{k}:\n{}", rows.join("\n"))
                    }
                    other => format!("{k}: {other}"),
                })
                .collect::<Vec<_>>()
                .join("\n"),
            other => other.to_string(),
        }
    }
}

fn usage(e: String) -> CliError {
    CliError::Usage(e)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

struct HessianTask;

impl CurveTask for HessianTask {
    type Output = String;
    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<String, CurveError> {
        Ok(c.polynomial().hessian_det().to_string())
    }
}

/// The Hessian determinant of a curve, or of the generic invariant quartic
/// when `source` is `generic`.
pub fn hessian(source: &str) -> Result<Outcome, CliError> {
    if source == "generic" {
        let coefficients: Vec<Value> = HESSIAN_MONOMIALS
            .iter()
            .zip(hessian_coefficients())
            .map(|(e, c)| json!({ "monomial": format!("x^{}*y^{}*z^{}", e[0], e[1], e[2]), "coefficient": c.to_string() }))
            .collect();
        return Ok(Outcome::new(
            "hessian",
            json!({
                "quartic": g8::generic_quartic().to_string(),
                "parameters": COEFFICIENT_NAMES,
                "coefficients": coefficients,
            }),
        ));
    }
    let c = load_curve(source).map_err(usage)?;
    Ok(Outcome::new("hessian", json!({ "hessian": c.visit(&HessianTask)? })))
}

struct Basics {
    seed: u64,
}

impl CurveTask for Basics {
    type Output = Value;
    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<Value, CurveError> {
        let f = c.polynomial();
        Ok(json!({
            "curve": f.to_string(),
            "field": c.field().descriptor().to_string(),
            "degree": c.degree(),
            "terms": f.len(),
            "reduced": c.is_reduced(self.seed)?,
            "sign_change_invariant": is_g8_invariant(c),
            "euler_relation": f.euler_check()?,
        }))
    }
}

struct Freeness<'a> {
    policy: &'a StabilizationPolicy,
    table: u32,
}

impl CurveTask for Freeness<'_> {
    type Output = (FreenessReport, Vec<(u32, usize)>);
    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<Self::Output, CurveError> {
        Ok((freeness_report(c, self.policy)?, syzygy_hilbert(c, self.table)))
    }
}

fn freeness_value(c: &Curve, config: &RunConfig, table: u32) -> Result<Value, CliError> {
    if config.modular_for(c.degree()) {
        let run = c.at_two_primes(config.prime_bits, config.seed, |img| {
            Ok((freeness_report(img, &config.policy)?, syzygy_hilbert(img, table)))
        })?;
        let (report, dims) = run.results[0].clone();
        Ok(
            json!({ "mode": "modular", "primes": run.primes, "agreed": run.agreed, "report": report, "syzygy_dims": dims }),
        )
    } else {
        let ((report, dims), route) = c.visit_descended(&Freeness { policy: &config.policy, table })?;
        Ok(json!({ "mode": "exact", "route": route, "report": report, "syzygy_dims": dims }))
    }
}

/// Degree, field, reducedness and, for reduced curves, the freeness data.
pub fn invariants(source: &str, config: &RunConfig) -> Result<Outcome, CliError> {
    let c = load_curve(source).map_err(usage)?;
    let mut value = c.visit(&Basics { seed: config.seed })?;
    if value["reduced"] == json!(true) {
        value["freeness"] = freeness_value(&c, config, c.degree())?;
    }
    Ok(Outcome::new("invariants", value))
}

struct TjurinaTask<'a> {
    policy: &'a StabilizationPolicy,
    order: u32,
}

impl CurveTask for TjurinaTask<'_> {
    type Output = HilbertRun;
    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<HilbertRun, CurveError> {
        match self.order {
            1 => tjurina_number(c, self.policy),
            k => higher_derivative_degree(c, k, self.policy),
        }
    }
}

/// Degree of the scheme cut out by the partials of order `order` (order 1
/// gives the Tjurina number).
pub fn tjurina(source: &str, order: u32, config: &RunConfig) -> Result<Outcome, CliError> {
    let c = load_curve(source).map_err(usage)?;
    let task = TjurinaTask { policy: &config.policy, order };
    let value = if config.modular_for(c.degree()) {
        let run = c.at_two_primes(config.prime_bits, config.seed, |img| task.run(img))?;
        let mut v =
            json!({ "mode": "modular", "primes": run.primes, "agreed": run.agreed, "value": run.results[0].value });
        v["run"] = to_value(&run.results[0]);
        v
    } else {
        let (run, route) = c.visit_descended(&task)?;
        json!({ "mode": "exact", "route": route, "value": run.value, "run": run })
    };
    let mut out = Outcome::new("tjurina", value);
    out.ok = out.value.get("agreed").is_none_or(|a| a == &json!(true));
    Ok(out)
}

struct MdrTask {
    table: u32,
}

impl CurveTask for MdrTask {
    type Output = (u32, Vec<(u32, usize)>);
    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<Self::Output, CurveError> {
        Ok((mdr(c)?, syzygy_hilbert(c, self.table)))
    }
}

/// Minimal degree of a Jacobian syzygy, with the syzygy dimensions up to
/// degree `table`.
pub fn mdr_command(source: &str, table: Option<u32>, config: &RunConfig) -> Result<Outcome, CliError> {
    let c = load_curve(source).map_err(usage)?;
    let task = MdrTask { table: table.unwrap_or(c.degree()) };
    let value = if config.modular_for(c.degree()) {
        let run = c.at_two_primes(config.prime_bits, config.seed, |img| task.run(img))?;
        json!({ "mode": "modular", "primes": run.primes, "agreed": run.agreed, "mdr": run.results[0].0, "syzygy_dims": run.results[0].1 })
    } else {
        let ((r, dims), route) = c.visit_descended(&task)?;
        json!({ "mode": "exact", "route": route, "mdr": r, "syzygy_dims": dims })
    };
    Ok(Outcome::new("mdr", value))
}

pub fn freeness(source: &str, config: &RunConfig) -> Result<Outcome, CliError> {
    let c = load_curve(source).map_err(usage)?;
    let value = freeness_value(&c, config, c.degree())?;
    let mut out = Outcome::new("freeness", value);
    out.ok = out.value.get("agreed").is_none_or(|a| a == &json!(true));
    Ok(out)
}

pub fn combinatorics(source: &str) -> Result<Outcome, CliError> {
    let lines = load_lines(source).map_err(usage)?;
    let wc = match &lines {
        Lines::Rational(l) => line_intersections(&quartics::arith::Rationals, l)?,
        Lines::Prime(k, l) => line_intersections(k, l)?,
        Lines::Extension(k, l) => line_intersections(k, l)?,
    };
    let n = lines.len();
    Ok(Outcome::new(
        "combinatorics",
        json!({
            "lines": n,
            "counts": wc.counts,
            "pair_count": wc.pair_count(),
            "pairs_of_lines": n * n.saturating_sub(1) / 2,
            "ordinary_tjurina": wc.ordinary_tjurina(),
        }),
    ))
}

fn tangency_value<F: Field>(
    c: &PlaneCurve<F>,
    lines: &[ProjectiveLine<F>],
) -> Result<(TangencyReport, Value), CliError> {
    let report = verify_bitangents(c, lines)?;
    let mut value = to_value(&report);
    if let Ok(counts) = dual_singularity_counts(&report) {
        value["dual_singularities"] = to_value(&counts);
    }
    Ok((report, value))
}

/// Contact of each line with a quartic.
pub fn tangency(curve: &str, lines: &str) -> Result<Outcome, CliError> {
    let c = load_curve(curve).map_err(usage)?;
    let given = load_lines(lines).map_err(usage)?;
    let value = match pair(&c, &given).map_err(usage)? {
        Paired::Rational(c, l) => tangency_value(&c, &l)?.1,
        Paired::Prime(c, l) => tangency_value(&c, &l)?.1,
        Paired::Extension(lifted, l) => {
            let (report, mut value) = tangency_value(&lifted, &l)?;
            if let (Curve::Rational(q), Lines::Extension(k, _)) = (&c, &given) {
                value["numeric"] = to_value(&numeric_cross_check(q, k, &l, &report, 1e-8));
            }
            value
        }
    };
    Ok(Outcome::new("tangency", value))
}

struct FlexTask;

impl CurveTask for FlexTask {
    type Output = Value;
    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<Value, CurveError> {
        let fa = flex_analysis(c)?;
        let locus: Vec<String> = fa.hyperflex_locus.iter().map(ToString::to_string).collect();
        let mut v = to_value(&fa);
        v["hyperflex_locus"] = json!(locus);
        Ok(v)
    }
}

pub fn flexes(source: &str) -> Result<Outcome, CliError> {
    let c = load_curve(source).map_err(usage)?;
    Ok(Outcome::new("flexes", c.visit(&FlexTask)?))
}

/// Whether `dual` vanishes on the gradient image of `curve`.
pub fn dual_check(curve: &str, dual: &str) -> Result<Outcome, CliError> {
    let (c, g) = (load_curve(curve).map_err(usage)?, load_curve(dual).map_err(usage)?);
    let (holds, value) = match (&c, &g) {
        (Curve::Rational(c), Curve::Rational(g)) => {
            let r = dual_membership_check(c, g)?;
            (r.holds, to_value(&r))
        }
        (Curve::Prime(c), Curve::Prime(g)) if c.field() == g.field() => {
            let r = dual_membership_check(c, g)?;
            (r.holds, to_value(&r))
        }
        (Curve::Extension(c), Curve::Extension(g)) if c.field() == g.field() => {
            let r = dual_membership_check(c, g)?;
            (r.holds, to_value(&r))
        }
        _ => return Err(CliError::Usage("the two curves are over different fields".into())),
    };
    let mut out = Outcome::new("dual-check", value);
    out.ok = holds;
    Ok(out)
}

pub fn diophantine(taus: &[u32], lines: u32, quartic_degree: u32, hyperflex_lines: u32) -> Outcome {
    let profiles = diophantine_profiles(lines, quartic_degree, taus);
    let verdicts = realizability_filter(&profiles, lines, hyperflex_lines);
    Outcome::new(
        "diophantine",
        json!({
            "taus": taus,
            "profiles": profiles.iter().map(|p| json!({ "n2": p.n2, "n3": p.n3, "n4": p.n4, "t3": p.t3, "t7": p.t7, "tau": p.tau() })).collect::<Vec<_>>(),
            "verdicts": verdicts,
        }),
    )
}

pub fn thm23(config: &RunConfig) -> Outcome {
    let tc = TheoremConfig { budget: Duration::from_secs(config.budget_secs), ..TheoremConfig::default() };
    let report = verify_theorem_2_3(&tc);
    let mut out = Outcome::new("thm23", to_value(&report));
    out.ok = report.passed();
    out
}

fn deletions_plain<F: Field>(
    c: &PlaneCurve<F>,
    lines: &[ProjectiveLine<F>],
    policy: &StabilizationPolicy,
) -> Result<Vec<Value>, CliError> {
    let mut out = Vec::new();
    for skip in 0..lines.len() {
        let rest: Vec<_> = lines.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, l)| l.clone()).collect();
        let d = build_octic(c, &rest)?;
        let report = freeness_report(&d, policy)?;
        out.push(json!({ "removed": skip, "report": report, "syzygy_dims": syzygy_hilbert(&d, d.degree()) }));
    }
    Ok(out)
}

/// Freeness of the curve times all but one of the selected lines, for each
/// choice of the omitted line. `select` holds one-based line labels.
pub fn deletion_study_command(
    curve: &str,
    lines: &str,
    select: &[usize],
    config: &RunConfig,
) -> Result<Outcome, CliError> {
    let c = load_curve(curve).map_err(usage)?;
    let zero_based: Vec<usize> = select
        .iter()
        .map(|&i| i.checked_sub(1).ok_or_else(|| usage("line labels start at 1".into())))
        .collect::<Result<_, _>>()?;
    let l = load_lines(lines).map_err(usage)?.select(&zero_based).map_err(usage)?;
    let mut entries = match pair(&c, &l).map_err(usage)? {
        Paired::Rational(c, l) => deletions_plain(&c, &l, &config.policy)?,
        Paired::Prime(c, l) => deletions_plain(&c, &l, &config.policy)?,
        Paired::Extension(c, l) => deletion_study(&c, &l, &config.policy)?.iter().map(to_value).collect(),
    };
    for e in entries.iter_mut() {
        let i = e["removed"].as_u64().unwrap_or(0) as usize;
        e["removed"] = json!(select[i]);
    }
    let not_free = entries.iter().filter(|e| e["report"]["free"] == json!(false)).count();
    Ok(Outcome::new("deletion-study", json!({ "deletions": entries, "not_free": not_free })))
}

/// The defaults of [`deletion_study_command`]: the quartic with its four
/// hyperflex lines.
pub const DEFAULT_DELETION: (&str, &str, [usize; 4]) = ("c48", "bitangents28", [25, 26, 27, 28]);
