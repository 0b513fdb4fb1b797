use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;

use super::*;
use crate::coxeter::{longest_element_automorphism, TypeLabel};
use crate::error::Error;

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Zigzag numbers by counting alternating permutations (`n <= 9`).
fn alternating_count(n: usize) -> u64 {
    fn go(used: &mut Vec<bool>, last: usize, up: bool, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for x in 0..used.len() {
            if !used[x] && ((up && x > last) || (!up && x < last)) {
                used[x] = true;
                total += go(used, x, !up, left - 1);
                used[x] = false;
            }
        }
        total
    }
    if n <= 1 {
        return 1;
    }
    let mut used = vec![false; n];
    let mut total = 0;
    for first in 0..n {
        used[first] = true;
        total += go(&mut used, first, false, n - 1);
        used[first] = false;
    }
    total
}

/// Zigzag numbers from `2 T_{n+1} = sum_k C(n,k) T_k T_{n-k}` (`n >= 1`).
fn zigzag(max: usize) -> Vec<BigUint> {
    let mut t = vec![big(1), big(1)];
    for n in 1..max {
        let s: BigUint = (0..=n).map(|k| crate::combinatorics::binomial(n, k) * &t[k] * &t[n - k]).sum();
        t.push(s / 2u32);
    }
    t
}

#[test]
fn zigzag_oracles_agree() {
    let t = zigzag(10);
    for n in 0..=9 {
        assert_eq!(t[n], big(alternating_count(n)), "n = {n}");
    }
}

#[test]
fn exceptional_values() {
    let e = Engine::new();
    for (spec, v) in [("H3", 4), ("H4", 12), ("F4", 16), ("E6", 82), ("E7", 768), ("E8", 4056)] {
        let r = e.k_spec(spec).unwrap();
        assert_eq!(r.value, big(v), "{spec}");
        assert!(r.is_consistent(), "{spec}");
    }
}

#[test]
fn term_breakdowns() {
    let e = Engine::new();
    let cases = [
        ("E6", "26 + 25 + 15 + 16"),
        ("E7", "82 + 156 + 75 + 120 + 96 + 178 + 61"),
        ("E8", "768 + 574 + 546 + 350 + 525 + 427 + 594 + 272"),
        ("H3", "1 + 2 + 1"),
        ("H4", "4 + 3 + 3 + 2"),
        ("F4", "5 + 3 + 3 + 5"),
    ];
    for (spec, expect) in cases {
        assert_eq!(e.k_spec(spec).unwrap().breakdown(), expect, "{spec}");
    }
    let e6 = e.k_spec("E6").unwrap();
    let names: Vec<&str> = e6.terms.iter().map(|t| t.description.as_str()).collect();
    assert_eq!(names, ["K(D5)", "K(A1xA4)", "1/2 K(A1xA2xA2)", "K(A5)"]);
    assert_eq!(e6.method, Method::Summ2);
    assert_eq!(e.k_spec("E7").unwrap().method, Method::Summ1);
}

#[test]
fn a_and_b_series_are_zigzag() {
    let e = Engine::new();
    let t = zigzag(14);
    for n in 1..=12u32 {
        assert_eq!(e.k_type(TypeLabel::a(n)).unwrap().value, t[n as usize], "A{n}");
        if n >= 2 {
            assert_eq!(e.k_type(TypeLabel::b(n)).unwrap().value, t[n as usize + 1], "B{n}");
        }
    }
}

#[test]
fn d_series() {
    let e = Engine::new();
    let d = [2u64, 2, 12, 26, 178, 594, 4792, 21682, 202374, 1160026, 12303332];
    let bar = [1u64, 2, 7, 26, 117, 594, 3407, 21682, 151853, 1160026, 9600567];
    for n in 2..=12u32 {
        let spec = format!("D{n}");
        assert_eq!(e.k_value(&spec).unwrap(), big(d[n as usize - 2]), "{spec}");
        assert_eq!(e.k_bar(n).unwrap(), big(bar[n as usize - 2]), "bar {spec}");
    }
}

#[test]
fn bar_d_rejects_small_n() {
    assert!(matches!(Engine::new().k_bar(1), Err(Error::RankOutOfRange(_))));
    assert!(Engine::new().k_bar_result(5).unwrap().is_consistent());
}

#[test]
fn fixed_vertex_terms() {
    let e = Engine::new();
    let term = |t: TypeLabel, v: usize, sigma: &BTreeMap<usize, usize>| {
        e.fixed_vertex_term(&t.standard_graph(1), v, sigma).unwrap().value
    };
    let a5 = TypeLabel::a(5);
    assert_eq!(term(a5, 3, &longest_element_automorphism(a5).on_vertices(&[1, 2, 3, 4, 5])), big(3));
    let e6 = crate::coxeter::parse_types("E6").unwrap()[0];
    let sigma = longest_element_automorphism(e6).on_vertices(&[1, 2, 3, 4, 5, 6]);
    assert_eq!(term(e6, 4, &sigma), big(15));
    assert_eq!(term(e6, 2, &sigma), big(16));
    let d7 = TypeLabel::d(7);
    let sigma = longest_element_automorphism(d7).on_vertices(&[1, 2, 3, 4, 5, 6, 7]);
    let t = e.fixed_vertex_term(&d7.standard_graph(1), 3, &sigma).unwrap();
    assert_eq!(t.value, big(105));
    assert!(t.description.contains("Kbar(D4)"));
    assert!(matches!(
        e.fixed_vertex_term(&d7.standard_graph(1), 6, &sigma),
        Err(Error::NotFixed(6))
    ));
}

#[test]
fn dihedral() {
    let e = Engine::new();
    for m in 3..=30u32 {
        let expect = if m % 2 == 1 { 1 } else { 2 };
        assert_eq!(e.k_type(TypeLabel::dihedral(m)).unwrap().value, big(expect), "I2({m})");
    }
}

#[test]
fn products() {
    let e = Engine::new();
    let r = e.k_spec("A2xA1").unwrap();
    assert_eq!(r.value, big(3));
    assert_eq!(r.method, Method::Product);
    assert_eq!(e.k_value("A1xA1").unwrap(), big(2));
    assert_eq!(e.k_value("B2xA1").unwrap(), big(6));
    // C(9;4,5) * K(D4) * K(A5)
    assert_eq!(e.k_value("D4xA5").unwrap(), big(126 * 12 * 16));
    assert_eq!(e.k_value("1").unwrap(), big(1));
    assert_eq!(e.k_spec("A1xA2").unwrap().group, "A1xA2");
}

#[test]
fn independent_of_vertex_numbering() {
    let e = Engine::new();
    let g = crate::coxeter::parse_group_spec("E7").unwrap().shifted(40);
    assert_eq!(e.k_recursive(&g).unwrap().value, big(768));
    let fresh = Engine::new();
    assert_eq!(fresh.k_recursive(&g).unwrap(), e.k_spec("E7").unwrap());
}

#[test]
fn concurrent_use_is_deterministic() {
    let shared = Arc::new(Engine::new());
    let specs = ["E8", "D9", "E7", "B7xA3", "H4", "D12", "A12"];
    let handles: Vec<_> = (0..4)
        .map(|k| {
            let e = Arc::clone(&shared);
            std::thread::spawn(move || {
                let mut order = specs.to_vec();
                order.rotate_left(k);
                order.iter().map(|s| (s.to_string(), e.k_spec(s).unwrap())).collect::<Vec<_>>()
            })
        })
        .collect();
    let serial = Engine::new();
    for h in handles {
        for (spec, r) in h.join().unwrap() {
            assert_eq!(r, serial.k_spec(&spec).unwrap());
        }
    }
}

#[test]
fn json_shape() {
    let r = Engine::new().k_spec("E6").unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["group"], "E6");
    assert_eq!(v["value"], "82");
    assert_eq!(v["method"], "summ2");
    assert_eq!(v["terms"][0]["value"], "26");
    let back: KResult = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("coxeter-cache-test-{}", std::process::id()));
    let path = dir.join("cache.json");
    let e = Engine::new();
    e.k_spec("E8").unwrap();
    save_engine(&e, &path).unwrap();
    let (warm, status) = load_engine(&path).unwrap();
    assert_eq!(status, CacheStatus::Loaded(e.memo_len()));
    assert_eq!(warm.k_spec("E8").unwrap(), e.k_spec("E8").unwrap());

    let text = std::fs::read_to_string(&path).unwrap().replace(ENGINE_VERSION, "old-engine");
    std::fs::write(&path, text).unwrap();
    assert_eq!(load_engine(&path).unwrap().1, CacheStatus::Stale);

    std::fs::write(&path, "{ not json").unwrap();
    assert!(matches!(load_engine(&path), Err(Error::Cache(_))));
    assert_eq!(load_engine(&dir.join("absent.json")).unwrap().1, CacheStatus::Missing);
    std::fs::remove_dir_all(&dir).unwrap();
}
