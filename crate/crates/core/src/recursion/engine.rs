use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use super::result::{KResult, Method, Term};
use crate::combinatorics::{binomial, multinomial};
use crate::coxeter::{
    canonical_spec, classify_irreducible, component_types, longest_element_automorphism, parse_group_spec,
    CoxeterGraph, Family, TypeLabel, VertexId,
};
use crate::error::{Error, Result};
use crate::sequences::bar_d_closed_form;

/// Memoized parabolic recursion for `K(W)`.
///
/// Values are keyed by canonical spec, so a value is computed once no matter
/// how the graph's vertices are numbered. The memo is lock protected and the
/// engine can be shared across threads.
#[derive(Default)]
pub struct Engine {
    memo: RwLock<HashMap<String, KResult>>,
    bar: RwLock<HashMap<u32, KResult>>,
}

/// Order in which standard positions are visited when emitting terms: descending,
/// except that for E the branch node 2 comes last.
pub fn term_order(t: TypeLabel) -> Vec<usize> {
    let n = t.coxeter_rank();
    match t.family {
        Family::E => {
            let mut order: Vec<usize> = (3..=n).rev().collect();
            order.extend([1, 2]);
            order
        }
        _ => (1..=n).rev().collect(),
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Engine preloaded with previously computed results.
    pub fn with_entries(entries: impl IntoIterator<Item = KResult>) -> Self {
        let engine = Self::new();
        {
            let mut memo = engine.memo.write();
            for r in entries {
                memo.insert(r.group.clone(), r);
            }
        }
        engine
    }

    /// All memoized results, sorted by group.
    pub fn entries(&self) -> Vec<KResult> {
        let mut out: Vec<KResult> = self.memo.read().values().cloned().collect();
        out.sort_by(|a, b| a.group.cmp(&b.group));
        out
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn k_spec(&self, spec: &str) -> Result<KResult> {
        self.k_recursive(&parse_group_spec(spec)?)
    }

    pub fn k_type(&self, t: TypeLabel) -> Result<KResult> {
        self.k_recursive(&t.standard_graph(1))
    }

    pub fn k_value(&self, spec: &str) -> Result<BigUint> {
        Ok(self.k_spec(spec)?.value)
    }

    /// `K(W)` for the group of `g`.
    pub fn k_recursive(&self, g: &CoxeterGraph) -> Result<KResult> {
        let key = canonical_spec(g)?;
        if let Some(hit) = self.memo.read().get(&key) {
            return Ok(hit.clone());
        }
        let types = component_types(g)?;
        let result = match types.as_slice() {
            [] => base_case(key.clone()),
            [t] => self.k_irreducible(*t)?,
            _ => {
                let parts = types.iter().map(|&t| self.k_type(t)).collect::<Result<Vec<_>>>()?;
                let ranks: Vec<usize> = types.iter().map(TypeLabel::coxeter_rank).collect();
                k_product(&parts, &ranks)
            }
        };
        self.memo.write().entry(key).or_insert_with(|| result.clone());
        Ok(result)
    }

    fn k_irreducible(&self, t: TypeLabel) -> Result<KResult> {
        let group = t.to_string();
        if t.coxeter_rank() <= 1 {
            return Ok(base_case(group));
        }
        let g = t.standard_graph(1);
        let sigma: BTreeMap<VertexId, VertexId> = longest_element_automorphism(t).on_vertices(g.vertices());
        let central = sigma.iter().all(|(v, w)| v == w);
        let mut terms = Vec::new();
        let mut done = BTreeSet::new();
        for v in term_order(t) {
            if !done.insert(v) {
                continue;
            }
            let w = sigma[&v];
            if w == v && !central {
                terms.push(self.fixed_vertex_term(&g, v, &sigma)?);
            } else {
                done.insert(w);
                let h = g.delete_vertex(v)?;
                let r = self.k_recursive(&h)?;
                terms.push(Term::new(format!("K({})", r.group), r.value));
            }
        }
        let value = terms.iter().map(|t| &t.value).sum();
        let method = if central { Method::Summ1 } else { Method::Summ2 };
        Ok(KResult { group, value, method, terms })
    }

    /// Contribution of a vertex `i` fixed by the involution `sigma` of `g`.
    ///
    /// With `h` the graph minus `i` and `gamma` the restriction of `sigma`:
    /// if `gamma` moves a component of `h` onto another, the term is `K(h)/2`;
    /// otherwise it is the shuffle product over the components `c` of `h`, using
    /// `K(c)` when `gamma` acts on `c` trivially or as `c`'s own longest-element
    /// automorphism, and the augmented count for `D_even` components otherwise.
    pub fn fixed_vertex_term(
        &self,
        g: &CoxeterGraph,
        i: VertexId,
        sigma: &BTreeMap<VertexId, VertexId>,
    ) -> Result<Term> {
        if !g.contains(i) {
            return Err(Error::MissingVertex(i));
        }
        if !g.is_automorphism(sigma) {
            return Err(Error::InvalidGraph("the given permutation is not a graph automorphism".into()));
        }
        if sigma[&i] != i {
            return Err(Error::NotFixed(i));
        }
        let h = g.delete_vertex(i)?;
        let components = h.connected_components();
        let swaps_components = components.iter().any(|c| {
            let image: Vec<VertexId> = c.embedding.iter().map(|v| sigma[v]).collect();
            !image.iter().all(|v| c.embedding.contains(v))
        });
        if swaps_components {
            let r = self.k_recursive(&h)?;
            let (half, rem) = r.value.div_rem(&BigUint::from(2u32));
            if !rem.is_zero() {
                return Err(Error::OddHalving {
                    value: r.value.to_string(),
                    context: format!("K({}) after deleting vertex {i}", r.group),
                });
            }
            return Ok(Term::new(format!("1/2 K({})", r.group), half));
        }
        let mut value = multinomial(&components.iter().map(|c| c.graph.rank()).collect::<Vec<_>>());
        let mut factors: Vec<(String, bool)> = Vec::new();
        for c in &components {
            let gamma: BTreeMap<VertexId, VertexId> = c.embedding.iter().map(|v| (*v, sigma[v])).collect();
            let classified = classify_irreducible(&c.graph)?;
            let own = classified.longest_automorphism_on_vertices();
            let trivial = gamma.iter().all(|(v, w)| v == w);
            let label = classified.label;
            if trivial || gamma == own {
                let r = self.k_recursive(&c.graph)?;
                value *= r.value;
                factors.push((format!("K({})", r.group), false));
            } else if label.family == Family::D && label.rank % 2 == 0 {
                let composed: BTreeMap<VertexId, VertexId> = gamma.iter().map(|(&v, &w)| (v, gamma[&w])).collect();
                if composed.iter().any(|(v, w)| v != w) {
                    return Err(Error::UnexpectedAugmentedCase(format!(
                        "restriction to {label} is not an involution"
                    )));
                }
                value *= self.k_bar(label.rank)?;
                factors.push((format!("Kbar({label})"), true));
            } else {
                return Err(Error::UnexpectedAugmentedCase(format!(
                    "deleting vertex {i} leaves a {label} component on which the involution acts \
                     neither trivially nor as its longest element"
                )));
            }
        }
        let description = if factors.iter().any(|f| f.1) {
            let ranks: Vec<String> = components.iter().map(|c| c.graph.rank().to_string()).collect();
            let mut parts = vec![format!("multinomial({})", ranks.join(","))];
            parts.extend(factors.into_iter().map(|f| f.0));
            parts.join("*")
        } else {
            format!("K({})", canonical_spec(&h)?)
        };
        Ok(Term::new(description, value))
    }

    /// Augmented count `bar d_n` for `D_n` (`n >= 2`), from
    /// `bar d_n = a_{n-1} + sum_{i=2}^{n-1} C(n-1, i) bar d_i a_{n-1-i}`,
    /// cross-checked against `2 T_{n+1} - (n+1) T_n`.
    pub fn k_bar(&self, n: u32) -> Result<BigUint> {
        Ok(self.k_bar_result(n)?.value)
    }

    pub fn k_bar_result(&self, n: u32) -> Result<KResult> {
        if n < 2 {
            return Err(Error::RankOutOfRange(format!("augmented D_n needs n >= 2, got {n}")));
        }
        if let Some(hit) = self.bar.read().get(&n) {
            return Ok(hit.clone());
        }
        let a = |k: u32| -> Result<BigUint> {
            if k == 0 {
                Ok(BigUint::one())
            } else {
                Ok(self.k_type(TypeLabel::a(k))?.value)
            }
        };
        let m = (n - 1) as usize;
        let mut terms = vec![Term::new(format!("K(A{})", n - 1), a(n - 1)?)];
        for i in 2..n {
            let coefficient = binomial(m, i as usize);
            let value = &coefficient * self.k_bar(i)? * a(n - 1 - i)?;
            terms.push(Term::new(format!("C({m},{i})*Kbar(D{i})*K(A{})", n - 1 - i), value));
        }
        let value: BigUint = terms.iter().map(|t| &t.value).sum();
        let closed = bar_d_closed_form(n as usize)?;
        if closed != value {
            return Err(Error::Disagreement {
                group: format!("Kbar(D{n})"),
                detail: format!("recursion gives {value}, closed form gives {closed}"),
            });
        }
        let result = KResult { group: format!("D{n}"), value, method: Method::BarDAugmented, terms };
        self.bar.write().entry(n).or_insert_with(|| result.clone());
        Ok(result)
    }
}

fn base_case(group: String) -> KResult {
    KResult { group, value: BigUint::one(), method: Method::BaseCase, terms: Vec::new() }
}

/// `K(W_1 x ... x W_k) = (n_1 + ... + n_k)! / (n_1! ... n_k!) * prod K(W_j)`.
pub fn k_product(parts: &[KResult], ranks: &[usize]) -> KResult {
    let coefficient = multinomial(ranks);
    let strs: Vec<String> = ranks.iter().map(ToString::to_string).collect();
    let mut terms = vec![Term::new(format!("multinomial({})", strs.join(",")), coefficient)];
    terms.extend(parts.iter().map(|p| Term::new(format!("K({})", p.group), p.value.clone())));
    let value = terms.iter().map(|t| &t.value).product();
    let group = parts.iter().map(|p| p.group.as_str()).collect::<Vec<_>>().join("x");
    KResult { group, value, method: Method::Product, terms }
}
