//! The cross-validation suite behind `coxeter-euler verify`.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::Serialize;

use crate::coxeter::{parse_types, TypeLabel};
use crate::error::Result;
use crate::lattice::brute_force;
use crate::recursion::{Engine, KResult, Method};
use crate::sequences::{
    bar_d_closed_form, d_closed_form, euler_numbers, euler_numbers_by_division, k_closed_form, verify_identities,
    EXCEPTIONAL,
};

/// Groups checked against brute force by default.
pub const REQUIRED_TIER: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "I2(9)",
    "I2(10)", "I2(11)", "I2(12)", "H3", "A1xA1", "A2xA1", "B2xA1",
];

/// Additional brute-force groups under `--deep`.
pub const DEEP_TIER: &[&str] = &["A5", "B5", "D5", "F4", "E6"];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub deep: bool,
    pub workers: usize,
    pub identity_order: usize,
    pub max_rank: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { deep: false, workers: 1, identity_order: 20, max_rank: 12 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// `Ok(None)` is a pass; `Ok(Some(msg))` and `Err` are failures.
fn timed(name: impl Into<String>, f: impl FnOnce() -> Result<(String, Option<String>)>) -> CheckResult {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok((summary, None)) => (true, summary),
        Ok((_, Some(failure))) => (false, failure),
        Err(e) => (false, e.to_string()),
    };
    CheckResult { name: name.into(), passed, detail, elapsed }
}

fn describe(r: &KResult) -> String {
    let terms: Vec<String> = r.terms.iter().map(|t| format!("{} = {}", t.description, t.value)).collect();
    format!("{} = {} via {} [{}]", r.group, r.value, r.method.as_str(), terms.join("; "))
}

/// Recursion vs an expected value, including internal consistency of the terms.
fn compare(engine: &Engine, spec: &str, expected: &BigUint, source: &str) -> Result<Option<String>> {
    let r = engine.k_spec(spec)?;
    if !r.is_consistent() {
        return Ok(Some(format!("{spec}: terms do not add up: {}", describe(&r))));
    }
    if &r.value != expected {
        return Ok(Some(format!("{spec}: recursion gives {}, {source} gives {expected}: {}", r.value, describe(&r))));
    }
    Ok(None)
}

fn family_specs(max_rank: u32) -> Vec<(String, Vec<TypeLabel>)> {
    let a = (1..=max_rank).map(TypeLabel::a).collect();
    let b = (2..=max_rank).map(TypeLabel::b).collect();
    let d = (4..=max_rank).map(TypeLabel::d).collect();
    let i2 = (3..=30).map(TypeLabel::dihedral).collect();
    vec![
        (format!("A1..A{max_rank}"), a),
        (format!("B2..B{max_rank}"), b),
        (format!("D4..D{max_rank}"), d),
        ("I2(3)..I2(30)".to_string(), i2),
    ]
}

/// Every term written as `1/2 K(X)` must be half of an even `K(X)`.
fn halving_check(engine: &Engine, spec: &str) -> Result<Option<String>> {
    let r = engine.k_spec(spec)?;
    for t in &r.terms {
        if let Some(inner) = t.description.strip_prefix("1/2 K(").and_then(|s| s.strip_suffix(')')) {
            let full = engine.k_value(inner)?;
            if &t.value * 2u32 != full {
                return Ok(Some(format!("{spec}: term {} = {} but K({inner}) = {full}", t.description, t.value)));
            }
        }
    }
    Ok(None)
}

fn brute_force_check(engine: &Engine, spec: &str, workers: usize) -> Result<(String, Option<String>)> {
    let types = parse_types(spec)?;
    let report = brute_force(&types, workers)?;
    let r = engine.k_spec(spec)?;
    let summary = format!(
        "|W| = {}, rank sizes {:?}, {} chains, K = {}",
        report.group_order,
        report.rank_sizes,
        report.chains.total_chains,
        report.k()
    );
    if report.k() != &r.value {
        return Ok((summary, Some(format!("{spec}: brute force gives {}, recursion: {}", report.k(), describe(&r)))));
    }
    // one term of the recursion per orbit of lines
    if types.len() == 1 && matches!(r.method, Method::Summ1 | Method::Summ2) && report.line_orbits != r.terms.len() {
        return Ok((
            summary,
            Some(format!("{spec}: {} orbits of lines but {} recursion terms", report.line_orbits, r.terms.len())),
        ));
    }
    Ok((summary, None))
}

/// Run the whole suite in order: identities, closed forms, brute force, halving.
pub fn run_verification(cfg: &VerifyConfig, engine: &Engine) -> VerifyReport {
    let mut checks = Vec::new();

    checks.push(timed(format!("series identities to order {}", cfg.identity_order), || {
        let report = verify_identities(cfg.identity_order, engine)?;
        let failures: Vec<String> = report
            .failures()
            .map(|c| format!("{} (first mismatch at z^{})", c.name, c.first_mismatch.unwrap_or_default()))
            .collect();
        let summary = format!("{} identities", report.checks.len());
        Ok((summary, (!failures.is_empty()).then(|| failures.join("; "))))
    }));

    checks.push(timed("Seidel triangle vs series division, n <= 40", || {
        let ok = euler_numbers(40) == euler_numbers_by_division(40);
        Ok(("T_0..T_40".into(), (!ok).then(|| "zigzag numbers disagree".into())))
    }));

    for (name, labels) in family_specs(cfg.max_rank) {
        checks.push(timed(format!("closed form vs recursion, {name}"), || {
            for l in &labels {
                if let Some(msg) = compare(engine, &l.to_string(), &k_closed_form(*l), "closed form")? {
                    return Ok((String::new(), Some(msg)));
                }
            }
            Ok((format!("{} types", labels.len()), None))
        }));
    }
    for (spec, value) in EXCEPTIONAL {
        checks.push(timed(format!("closed form vs recursion, {spec}"), || {
            let msg = compare(engine, spec, &BigUint::from(value), "the exceptional table")?;
            Ok((engine.k_spec(spec)?.breakdown(), msg))
        }));
    }
    checks.push(timed(format!("d_n and bar d_n, 2 <= n <= {}", cfg.max_rank), || {
        let t = euler_numbers(cfg.max_rank as usize + 1).values;
        for n in 2..=cfg.max_rank as usize {
            let spec = format!("D{n}");
            if let Some(msg) = compare(engine, &spec, &d_closed_form(n)?, "closed form")? {
                return Ok((String::new(), Some(msg)));
            }
            let bar = engine.k_bar_result(n as u32)?;
            if bar.value != bar_d_closed_form(n)? || !bar.is_consistent() {
                return Ok((String::new(), Some(format!("bar d_{n}: {}", describe(&bar)))));
            }
            let d = engine.k_value(&spec)?;
            let parity_ok = if n % 2 == 0 { d == &bar.value + &t[n] } else { d == bar.value };
            if !parity_ok {
                return Ok((String::new(), Some(format!("parity relation fails at n = {n}"))));
            }
        }
        Ok(("recursion, closed form and parity relation agree".into(), None))
    }));

    let mut tier: Vec<&str> = REQUIRED_TIER.to_vec();
    if cfg.deep {
        tier.extend(DEEP_TIER);
    }
    for spec in tier {
        checks.push(timed(format!("brute force vs recursion, {spec}"), || brute_force_check(engine, spec, cfg.workers)));
    }

    checks.push(timed("halved terms come from even values", || {
        let mut specs: Vec<String> = (2..=cfg.max_rank).map(|n| format!("A{n}")).collect();
        specs.extend((5..=cfg.max_rank).step_by(2).map(|n| format!("D{n}")));
        specs.extend(["E6", "E7", "E8"].map(String::from));
        for s in &specs {
            if let Some(msg) = halving_check(engine, s)? {
                return Ok((String::new(), Some(msg)));
            }
        }
        Ok((format!("{} groups", specs.len()), None))
    }));

    VerifyReport { checks }
}
