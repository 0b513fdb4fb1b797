//! Brute-force computation of `K(W)`: build the intersection lattice from a
//! reflection model, let the group act on it, and count orbits of maximal chains.

mod action;
mod build;
mod orbits;

pub use action::GroupActionTable;
pub use build::{build_lattice, root_indices, ElementDump, Flat, IntersectionLattice, LatticeDump, RootSet};
pub use orbits::{
    canonical_chains, count_chain_orbits, count_chain_orbits_union_find, count_maximal_chains,
    orbit_count_of_lines, CanonicalChain, ChainOrbitCount,
};

use num_bigint::BigUint;

use crate::coxeter::TypeLabel;
use crate::error::Result;
use crate::reflection::{generate_group, ReflectionModel, DEFAULT_ELEMENT_CAP};

/// Everything the brute-force path produces for one group.
#[derive(Clone, Debug)]
pub struct BruteForceReport {
    pub group: String,
    pub group_order: usize,
    pub rank_sizes: Vec<usize>,
    pub line_orbits: usize,
    pub chains: ChainOrbitCount,
}

impl BruteForceReport {
    pub fn k(&self) -> &BigUint {
        &self.chains.orbit_count
    }
}

/// `K(W)` from the definition, for a product of supported irreducible types.
pub fn brute_force(types: &[TypeLabel], workers: usize) -> Result<BruteForceReport> {
    let model = ReflectionModel::build(types)?;
    let group = generate_group(&model, DEFAULT_ELEMENT_CAP)?;
    let lattice = build_lattice(&model)?;
    let table = GroupActionTable::new(&lattice, &group);
    let chains = count_chain_orbits(&table, workers)?;
    Ok(BruteForceReport {
        group: model.spec(),
        group_order: group.order(),
        rank_sizes: lattice.rank_sizes(),
        line_orbits: orbit_count_of_lines(&table),
        chains,
    })
}
