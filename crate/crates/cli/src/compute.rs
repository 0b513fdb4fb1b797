use std::fs;
use std::path::Path;

use coxeter_euler::coxeter::{parse_types, spec_of_types, TypeLabel};
use coxeter_euler::lattice::{brute_force, build_lattice, BruteForceReport};
use coxeter_euler::reflection::ReflectionModel;
use coxeter_euler::recursion::KResult;
use coxeter_euler::sequences::k_closed_form_product;
use coxeter_euler::{Error, Result};
use serde_json::{json, Value};

use crate::{exit, exit_code_for, open_engine, store_engine, Common, Format, MethodArg};

struct Outcome {
    group: String,
    recursion: Option<KResult>,
    brute: Option<BruteForceReport>,
    closed: Option<String>,
    skipped: Vec<(String, String)>,
}

impl Outcome {
    fn values(&self) -> Vec<(&'static str, String)> {
        let mut v = Vec::new();
        if let Some(r) = &self.recursion {
            v.push(("recursion", r.value.to_string()));
        }
        if let Some(b) = &self.brute {
            v.push(("bruteforce", b.k().to_string()));
        }
        if let Some(c) = &self.closed {
            v.push(("closed", c.clone()));
        }
        v
    }

    fn agree(&self) -> bool {
        let values = self.values();
        values.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    exit_code_for(e)
}

pub fn run(spec: &str, method: MethodArg, common: &Common, dump: Option<&Path>) -> u8 {
    let types = match parse_types(spec) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    let (engine, cache) = open_engine(common.cache.as_deref());
    let mut out = Outcome { group: spec_of_types(&types), recursion: None, brute: None, closed: None, skipped: vec![] };
    let wants = |m: MethodArg| method == m || method == MethodArg::All;

    if wants(MethodArg::Recursion) {
        match engine.k_spec(spec) {
            Ok(r) => out.recursion = Some(r),
            Err(e) => return fail(&e),
        }
        store_engine(&engine, cache.as_deref());
    }
    if wants(MethodArg::Bruteforce) {
        match brute_force(&types, common.workers as usize) {
            Ok(b) => out.brute = Some(b),
            Err(e @ (Error::UnsupportedBruteForce { .. } | Error::GroupTooLarge { .. })) if method == MethodArg::All => {
                out.skipped.push(("bruteforce".into(), e.to_string()));
            }
            Err(e) => return fail(&e),
        }
    }
    if wants(MethodArg::Closed) {
        out.closed = Some(k_closed_form_product(&types).to_string());
    }
    if let Some(path) = dump {
        if out.brute.is_none() {
            eprintln!("warning: --dump-lattice needs a brute-force run; nothing written");
        } else if let Err(e) = write_lattice(&types, path, false) {
            return fail(&e);
        }
    }

    print!("{}", render(&out, method, common.format));
    if method == MethodArg::All && !out.agree() {
        eprintln!("error: methods disagree for {}", out.group);
        return exit::DISAGREEMENT;
    }
    0
}

fn render(out: &Outcome, method: MethodArg, format: Format) -> String {
    match format {
        Format::Json => {
            let mut results = serde_json::Map::new();
            if let Some(r) = &out.recursion {
                results.insert("recursion".into(), serde_json::to_value(r).expect("serializable"));
            }
            if let Some(b) = &out.brute {
                results.insert(
                    "bruteforce".into(),
                    json!({
                        "value": b.k().to_string(),
                        "group_order": b.group_order,
                        "rank_sizes": b.rank_sizes,
                        "line_orbits": b.line_orbits,
                        "total_chains": b.chains.total_chains.to_string(),
                        "orbit_sizes": b.chains.orbit_sizes,
                    }),
                );
            }
            if let Some(c) = &out.closed {
                results.insert("closed".into(), json!({ "value": c }));
            }
            let skipped: serde_json::Map<String, Value> =
                out.skipped.iter().map(|(m, why)| (m.clone(), Value::String(why.clone()))).collect();
            let doc = json!({
                "group": out.group,
                "results": results,
                "skipped": skipped,
                "agreement": (method == MethodArg::All).then(|| out.agree()),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Csv => {
            let mut s = String::from("group,method,value\n");
            for (m, v) in out.values() {
                s.push_str(&format!("{},{m},{v}\n", out.group));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let headline = out.values().first().map(|(_, v)| v.clone()).unwrap_or_default();
            s.push_str(&format!("K({}) = {headline}\n", out.group));
            if let Some(r) = &out.recursion {
                s.push_str(&format!("  recursion:  {} ({})\n", r.value, r.method.as_str()));
                for t in &r.terms {
                    s.push_str(&format!("    {} = {}\n", t.description, t.value));
                }
            }
            if let Some(b) = &out.brute {
                s.push_str(&format!(
                    "  bruteforce: {} (|W| = {}, rank sizes {:?}, {} maximal chains)\n",
                    b.k(),
                    b.group_order,
                    b.rank_sizes,
                    b.chains.total_chains
                ));
            }
            if let Some(c) = &out.closed {
                s.push_str(&format!("  closed:     {c}\n"));
            }
            for (m, why) in &out.skipped {
                s.push_str(&format!("  {m}: skipped ({why})\n"));
            }
            if method == MethodArg::All {
                s.push_str(if out.agree() { "agreement: OK\n" } else { "agreement: FAILED\n" });
            }
            s
        }
    }
}

fn write_lattice(types: &[TypeLabel], path: &Path, with_model: bool) -> Result<()> {
    let text = lattice_json(types, with_model)?;
    fs::write(path, text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
}

fn lattice_json(types: &[TypeLabel], with_model: bool) -> Result<String> {
    let model = ReflectionModel::build(types)?;
    let lattice = build_lattice(&model)?;
    let mut doc = serde_json::to_value(lattice.dump()).expect("serializable");
    if with_model {
        doc["model"] = serde_json::to_value(model.export(None)).expect("serializable");
    }
    Ok(format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")))
}

pub fn export_lattice(spec: &str, output: Option<&Path>, with_model: bool) -> u8 {
    let result = parse_types(spec).and_then(|types| match output {
        Some(p) => write_lattice(&types, p, with_model),
        None => lattice_json(&types, with_model).map(|t| print!("{t}")),
    });
    match result {
        Ok(()) => 0,
        Err(e) => fail(&e),
    }
}
