use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::action::GroupActionTable;
use super::build::IntersectionLattice;
use crate::error::{Error, Result};

/// Orbit statistics of the group acting on maximal chains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainOrbitCount {
    #[serde(with = "crate::recursion::decimal")]
    pub total_chains: BigUint,
    #[serde(with = "crate::recursion::decimal")]
    pub orbit_count: BigUint,
    /// Sorted ascending.
    pub orbit_sizes: Vec<u64>,
}

impl ChainOrbitCount {
    fn from_sizes(mut orbit_sizes: Vec<u64>, group_order: usize) -> Result<Self> {
        orbit_sizes.sort_unstable();
        if let Some(s) = orbit_sizes.iter().find(|&&s| s == 0 || group_order as u64 % s != 0) {
            return Err(Error::InvalidGraph(format!("orbit size {s} does not divide |W| = {group_order}")));
        }
        let total_chains = orbit_sizes.iter().map(|&s| BigUint::from(s)).sum();
        Ok(Self { total_chains, orbit_count: BigUint::from(orbit_sizes.len()), orbit_sizes })
    }
}

/// Number of bottom-to-top paths through the cover relation.
pub fn count_maximal_chains(l: &IntersectionLattice) -> BigUint {
    let mut ways = vec![BigUint::zero(); l.len()];
    ways[l.bottom()] = BigUint::from(1u32);
    // elements are sorted by rank, so a forward sweep respects the order
    for x in 0..l.len() {
        if ways[x].is_zero() {
            continue;
        }
        let w = ways[x].clone();
        for &y in &l.covers[x] {
            ways[y as usize] += &w;
        }
    }
    ways[l.top].clone()
}

/// Number of canonical prefixes to aim for before going parallel.
const SPLIT_TARGET: usize = 64;

/// One canonical chain per orbit with the size of its orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalChain {
    /// Lexicographically smallest chain in its orbit (lattice indices, bottom first).
    pub chain: Vec<usize>,
    pub orbit_size: u64,
}

/// Depth-first search over prefixes, keeping for each prefix the subgroup
/// fixing every element of it. At each level the covers of the last element
/// are split into orbits of that subgroup and only the smallest member of each
/// orbit is extended; the resulting chains are the lexicographic minima of
/// their orbits.
fn extend(
    a: &GroupActionTable<'_>,
    chain: &mut Vec<usize>,
    stabilizer: &[u32],
    out: &mut Vec<CanonicalChain>,
) {
    let l = a.lattice();
    let last = *chain.last().expect("chain starts at the bottom");
    if last == l.top {
        out.push(CanonicalChain {
            chain: chain.clone(),
            orbit_size: (a.group_order() / stabilizer.len()) as u64,
        });
        return;
    }
    for (c, next_stab) in orbit_representatives(a, &l.covers[last], stabilizer) {
        chain.push(c);
        extend(a, chain, &next_stab, out);
        chain.pop();
    }
}

/// Smallest element of each orbit of `stabilizer` on `candidates`, with its stabilizer.
fn orbit_representatives(
    a: &GroupActionTable<'_>,
    candidates: &[u32],
    stabilizer: &[u32],
) -> Vec<(usize, Vec<u32>)> {
    let mut seen: HashMap<usize, ()> = HashMap::with_capacity(candidates.len());
    let mut reps = Vec::new();
    for &c in candidates {
        let c = c as usize;
        if seen.contains_key(&c) {
            continue;
        }
        let mut stab = Vec::new();
        for &g in stabilizer {
            let img = a.act(g as usize, c);
            seen.insert(img, ());
            if img == c {
                stab.push(g);
            }
        }
        reps.push((c, stab));
    }
    reps
}

/// Canonical representatives of every orbit of maximal chains.
///
/// Canonical prefixes are expanded breadth-first until there are enough of
/// them to keep `workers` threads busy, then each prefix is completed
/// independently. The output order does not depend on the worker count.
pub fn canonical_chains(a: &GroupActionTable<'_>, workers: usize) -> Result<Vec<CanonicalChain>> {
    let l = a.lattice();
    let everything: Vec<u32> = (0..a.group_order() as u32).collect();
    let mut frontier = vec![(vec![l.bottom()], everything)];
    while frontier.len() < SPLIT_TARGET && frontier.iter().any(|(c, _)| c.last() != Some(&l.top)) {
        let mut next = Vec::new();
        for (chain, stab) in frontier {
            let last = *chain.last().expect("nonempty");
            if last == l.top {
                next.push((chain, stab));
                continue;
            }
            for (c, s) in orbit_representatives(a, &l.covers[last], &stab) {
                let mut longer = chain.clone();
                longer.push(c);
                next.push((longer, s));
            }
        }
        frontier = next;
    }
    let run = || {
        frontier
            .into_par_iter()
            .map(|(mut chain, stab)| {
                let mut out = Vec::new();
                extend(a, &mut chain, &stab, &mut out);
                out
            })
            .collect::<Vec<_>>()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidGraph(format!("thread pool: {e}")))?;
    Ok(pool.install(run).into_iter().flatten().collect())
}

/// Orbits of the group on maximal chains, via canonical representatives.
pub fn count_chain_orbits(a: &GroupActionTable<'_>, workers: usize) -> Result<ChainOrbitCount> {
    let chains = canonical_chains(a, workers)?;
    ChainOrbitCount::from_sizes(chains.iter().map(|c| c.orbit_size).collect(), a.group_order())
}

/// Plain union-find over the full chain set, joining each chain with its
/// images under the simple reflections. Only for small lattices.
pub fn count_chain_orbits_union_find(a: &GroupActionTable<'_>, max_chains: usize) -> Result<ChainOrbitCount> {
    let l = a.lattice();
    let total = count_maximal_chains(l);
    if total > BigUint::from(max_chains) {
        return Err(Error::UnsupportedBruteForce {
            group: l.group.clone(),
            reason: format!("{total} chains exceed the union-find limit of {max_chains}"),
        });
    }
    let mut chains: Vec<Vec<u32>> = Vec::with_capacity(total.to_usize().unwrap_or(0));
    let mut stack = vec![vec![l.bottom() as u32]];
    while let Some(prefix) = stack.pop() {
        let last = *prefix.last().expect("nonempty") as usize;
        if last == l.top {
            chains.push(prefix);
            continue;
        }
        for &y in &l.covers[last] {
            let mut next = prefix.clone();
            next.push(y);
            stack.push(next);
        }
    }
    let id: HashMap<&[u32], usize> = chains.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..chains.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &g in &a.group().generators {
        for (i, c) in chains.iter().enumerate() {
            let image: Vec<u32> = c.iter().map(|&e| a.act(g, e as usize) as u32).collect();
            let j = id[image.as_slice()];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut sizes: HashMap<usize, u64> = HashMap::new();
    for i in 0..chains.len() {
        *sizes.entry(find(&mut parent, i)).or_default() += 1;
    }
    ChainOrbitCount::from_sizes(sizes.into_values().collect(), a.group_order())
}

/// Number of orbits of the group on coatoms (the lines of the arrangement).
pub fn orbit_count_of_lines(a: &GroupActionTable<'_>) -> usize {
    let l = a.lattice();
    if l.rank == 0 {
        return 0;
    }
    let lines: Vec<u32> = l.rank_level(l.rank - 1).map(|i| i as u32).collect();
    let everything: Vec<u32> = (0..a.group_order() as u32).collect();
    orbit_representatives(a, &lines, &everything).len()
}
