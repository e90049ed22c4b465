//! Named checks and analysis commands behind the `quartics` binary.
//!
//! Every acceptance claim is a registered check. [`run_check`] runs one,
//! [`run_all`] runs the whole registry and returns a [`Summary`] whose JSON
//! form is the versioned report schema.

pub mod checks;
pub mod commands;
pub mod source;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use quartics::curvelab::StabilizationPolicy;
use serde::Serialize;
use serde_json::Value;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum FieldMode {
    Exact,
    Modular,
    /// Modular above degree 12, exact otherwise.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub field_mode: FieldMode,
    pub prime_bits: u32,
    pub seed: u64,
    /// Budget in seconds for the radical-membership stage of `thm23`.
    pub budget_secs: u64,
    pub policy: StabilizationPolicy,
    pub format: Format,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            field_mode: FieldMode::Auto,
            prime_bits: 24,
            seed: 7,
            budget_secs: 1800,
            policy: StabilizationPolicy::default(),
            format: Format::Text,
            jobs: 1,
        }
    }
}

impl RunConfig {
    /// Whether a Hilbert-function computation on a curve of degree `d`
    /// should run at primes.
    pub fn modular_for(&self, d: u32) -> bool {
        match self.field_mode {
            FieldMode::Exact => false,
            FieldMode::Modular => true,
            FieldMode::Auto => d > 12,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Every comparison holds, but some rest on modular evidence only.
    EvidenceOnly,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// A value stated by the claim under audit.
    Claim,
    /// Recomputed by an independent route.
    Derived,
    /// A control whose outcome is known a priori.
    Control,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub expected: Value,
    pub computed: Value,
    pub basis: Basis,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub criterion: u32,
    pub status: Status,
    /// `exact` or `modular-evidence`.
    pub trust: String,
    pub comparisons: Vec<Comparison>,
    /// Further computed data, for inspection.
    pub details: Value,
    pub error: Option<String>,
    pub millis: u128,
    pub budget_secs: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Accumulates comparisons while a check runs.
#[derive(Default)]
pub struct Findings {
    comparisons: Vec<Comparison>,
    details: serde_json::Map<String, Value>,
    modular: bool,
}

impl Findings {
    pub fn expect<T: Serialize + PartialEq>(&mut self, quantity: &str, basis: Basis, expected: T, computed: T) {
        let ok = expected == computed;
        self.comparisons.push(Comparison {
            quantity: quantity.into(),
            expected: serde_json::to_value(&expected).unwrap_or(Value::Null),
            computed: serde_json::to_value(&computed).unwrap_or(Value::Null),
            basis,
            ok,
        });
    }

    pub fn detail<T: Serialize>(&mut self, key: &str, value: T) {
        self.details.insert(key.into(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    /// Marks the result as resting on modular evidence.
    pub fn modular(&mut self) {
        self.modular = true;
    }
}

pub type CheckFn = fn(&RunConfig, &mut Findings) -> Result<(), String>;

pub struct Check {
    pub name: &'static str,
    pub criterion: u32,
    pub summary: &'static str,
    pub budget_secs: u64,
    pub run: CheckFn,
}

pub fn registry() -> &'static [Check] {
    checks::REGISTRY
}

pub fn find_check(name: &str) -> Option<&'static Check> {
    registry().iter().find(|c| c.name == name)
}

fn execute(check: &Check, config: &RunConfig) -> CheckResult {
    let start = Instant::now();
    let mut findings = Findings::default();
    let outcome = (check.run)(config, &mut findings);
    let elapsed = start.elapsed();
    let mut error = outcome.err();
    if error.is_none() && elapsed > Duration::from_secs(check.budget_secs) {
        error = Some(format!("took {:.1} s, over the {} s budget", elapsed.as_secs_f64(), check.budget_secs));
    }
    let all_ok = !findings.comparisons.is_empty() && findings.comparisons.iter().all(|c| c.ok);
    let status = match (error.is_none() && all_ok, findings.modular) {
        (false, _) => Status::Fail,
        (true, false) => Status::Pass,
        (true, true) => Status::EvidenceOnly,
    };
    CheckResult {
        name: check.name.into(),
        criterion: check.criterion,
        status,
        trust: if findings.modular { "modular-evidence" } else { "exact" }.into(),
        comparisons: findings.comparisons,
        details: Value::Object(findings.details),
        error,
        millis: elapsed.as_millis(),
        budget_secs: check.budget_secs,
    }
}

/// Runs the named check.
pub fn run_check(name: &str, config: &RunConfig) -> Result<CheckResult, String> {
    let check = find_check(name).ok_or_else(|| {
        let names: Vec<_> = registry().iter().map(|c| c.name).collect();
        format!("unknown check `{name}`; known checks: {}", names.join(", "))
    })?;
    Ok(execute(check, config))
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub schema_version: u32,
    pub config: RunConfig,
    pub results: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub millis: u128,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs every registered check, `config.jobs` at a time, and reports them
/// in registration order.
pub fn run_all(config: &RunConfig) -> Summary {
    run_selected(registry(), config)
}

pub fn run_selected(checks: &[Check], config: &RunConfig) -> Summary {
    let start = Instant::now();
    let slots: Vec<Mutex<Option<CheckResult>>> = checks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..config.jobs.clamp(1, checks.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= checks.len() {
                    break;
                }
                let r = execute(&checks[i], config);
                *slots[i].lock().expect("unpoisoned") = Some(r);
            });
        }
    });
    let results: Vec<CheckResult> =
        slots.into_iter().map(|m| m.into_inner().expect("unpoisoned").expect("every check ran")).collect();
    let failed = results.iter().filter(|r| !r.passed()).count();
    Summary {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        passed: results.len() - failed,
        failed,
        results,
        millis: start.elapsed().as_millis(),
    }
}

/// One line per result: `PASS  name  (criterion, time)` plus failing
/// comparisons.
pub fn render_result(r: &CheckResult) -> String {
    let tag = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::EvidenceOnly => "PASS*",
    };
    let mut out =
        format!("{tag:<6}{:<18}criterion {:>2}  {:>8.2} s  {}", r.name, r.criterion, r.millis as f64 / 1000.0, r.trust);
    for c in r.comparisons.iter().filter(|c| !c.ok) {
        out.push_str(&format!("\n      {}: expected {}, computed {}", c.quantity, c.expected, c.computed));
    }
    if let Some(e) = &r.error {
        out.push_str(&format!("\n      error: {e}"));
    }
    out
}

pub fn render_summary(s: &Summary) -> String {
    let mut out: Vec<String> = s.results.iter().map(render_result).collect();
    out.push(format!("{} passed, {} failed in {:.1} s", s.passed, s.failed, s.millis as f64 / 1000.0));
    if s.results.iter().any(|r| r.status == Status::EvidenceOnly) {
        out.push("* passed on two-prime modular evidence".into());
    }
    out.join("\n")
}
