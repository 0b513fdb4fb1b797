use coxeter_euler::verify::{run_verification, VerifyConfig};

use crate::{exit, open_engine, store_engine, Common, Format};

pub fn run(deep: bool, max_rank: u32, common: &Common) -> u8 {
    let (engine, cache) = open_engine(common.cache.as_deref());
    let cfg = VerifyConfig { deep, workers: common.workers as usize, max_rank, ..VerifyConfig::default() };
    let report = run_verification(&cfg, &engine);
    match common.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        Format::Csv => {
            println!("check,status,millis,detail");
            for c in &report.checks {
                let detail = c.detail.replace('"', "'");
                println!(
                    "\"{}\",{},{:.1},\"{detail}\"",
                    c.name,
                    if c.passed { "pass" } else { "FAIL" },
                    c.elapsed.as_secs_f64() * 1000.0
                );
            }
        }
        Format::Text => {
            let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &report.checks {
                println!(
                    "{:<4}  {:<width$}  {:>9.1} ms  {}",
                    if c.passed { "ok" } else { "FAIL" },
                    c.name,
                    c.elapsed.as_secs_f64() * 1000.0,
                    c.detail
                );
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            println!("{} checks, {failed} failed", report.checks.len());
        }
    }
    if let Some(f) = report.first_failure() {
        eprintln!("first failure: {}: {}", f.name, f.detail);
        return exit::FAILURE;
    }
    store_engine(&engine, cache.as_deref());
    0
}
