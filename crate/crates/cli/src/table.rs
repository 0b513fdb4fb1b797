use coxeter_euler::coxeter::{parse_types, TypeLabel};
use coxeter_euler::recursion::Engine;
use coxeter_euler::sequences::{bar_d_closed_form, d_closed_form, k_closed_form, EXCEPTIONAL};
use coxeter_euler::Result;
use serde_json::json;

use crate::{exit, exit_code_for, open_engine, store_engine, Common, Format};

/// One table cell computed two ways.
struct Row {
    family: &'static str,
    n: u32,
    recursion: String,
    closed: String,
}

fn rows(engine: &Engine, max_rank: u32) -> Result<Vec<Row>> {
    let mut out = Vec::new();
    let mut push = |family, n, recursion: String, closed: String| out.push(Row { family, n, recursion, closed });
    for n in 0..=max_rank {
        let spec = if n == 0 { "1".to_string() } else { format!("A{n}") };
        let closed = if n == 0 { "1".to_string() } else { k_closed_form(TypeLabel::a(n)).to_string() };
        push("A", n, engine.k_value(&spec)?.to_string(), closed);
    }
    for n in 2..=max_rank {
        push("B", n, engine.k_value(&format!("B{n}"))?.to_string(), k_closed_form(TypeLabel::b(n)).to_string());
    }
    for n in 2..=max_rank {
        push("D", n, engine.k_value(&format!("D{n}"))?.to_string(), d_closed_form(n as usize)?.to_string());
    }
    for n in 2..=max_rank {
        push("barD", n, engine.k_bar(n)?.to_string(), bar_d_closed_form(n as usize)?.to_string());
    }
    for (spec, _) in EXCEPTIONAL {
        let label = parse_types(spec)?[0];
        let family = match spec.as_bytes()[0] {
            b'E' => "E",
            b'F' => "F",
            _ => "H",
        };
        push(family, label.rank, engine.k_value(spec)?.to_string(), k_closed_form(label).to_string());
    }
    for m in 3..=max_rank.max(3) {
        let label = TypeLabel::dihedral(m);
        push("I2", m, engine.k_type(label)?.value.to_string(), k_closed_form(label).to_string());
    }
    Ok(out)
}

fn render_text(rows: &[Row], max_rank: u32) -> String {
    let families = ["A", "B", "D", "barD", "H", "F", "E", "I2"];
    let cols: Vec<u32> = (0..=max_rank).collect();
    let cell = |family: &str, n: u32| {
        rows.iter().find(|r| r.family == family && r.n == n).map_or("-".to_string(), |r| r.recursion.clone())
    };
    let width = rows.iter().map(|r| r.recursion.len()).max().unwrap_or(1).max(3);
    let mut s = format!("{:<6}", "n");
    for c in &cols {
        s.push_str(&format!(" {c:>width$}"));
    }
    s.push('\n');
    for f in families {
        s.push_str(&format!("{f:<6}"));
        for &c in &cols {
            s.push_str(&format!(" {:>width$}", cell(f, c)));
        }
        s.push('\n');
    }
    let mismatches: Vec<String> =
        rows.iter().filter(|r| r.recursion != r.closed).map(|r| format!("{}{}", r.family, r.n)).collect();
    if mismatches.is_empty() {
        s.push_str("closed forms agree with the recursion in every cell\n");
    } else {
        s.push_str(&format!("closed forms DISAGREE at {}\n", mismatches.join(", ")));
    }
    s
}

pub fn run(max_rank: u32, common: &Common) -> u8 {
    let (engine, cache) = open_engine(common.cache.as_deref());
    let rows = match rows(&engine, max_rank) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    store_engine(&engine, cache.as_deref());
    let text = match common.format {
        Format::Text => render_text(&rows, max_rank),
        Format::Csv => {
            let mut s = String::from("family,rank_or_m,method,value\n");
            for r in &rows {
                s.push_str(&format!("{},{},recursion,{}\n", r.family, r.n, r.recursion));
                s.push_str(&format!("{},{},closed,{}\n", r.family, r.n, r.closed));
            }
            s
        }
        Format::Json => {
            let entries: Vec<_> = rows
                .iter()
                .flat_map(|r| {
                    [("recursion", &r.recursion), ("closed", &r.closed)].map(|(m, v)| {
                        json!({ "family": r.family, "rank_or_m": r.n, "method": m, "value": v })
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!({ "max_rank": max_rank, "rows": entries })).unwrap())
        }
    };
    print!("{text}");
    if rows.iter().any(|r| r.recursion != r.closed) {
        return exit::DISAGREEMENT;
    }
    0
}
