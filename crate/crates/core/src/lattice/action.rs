use rayon::prelude::*;

use super::build::{root_indices, IntersectionLattice, RootSet};
use crate::reflection::{Group, SignedPerm};

/// Rows with fewer entries than this are stored densely.
const DENSE_LIMIT: usize = 1 << 25;

/// Action of each group element on the lattice elements.
///
/// Small groups get a dense `|W| x |P(W)|` table; larger ones compute images on
/// demand from the root permutation and the lattice index.
pub struct GroupActionTable<'a> {
    lattice: &'a IntersectionLattice,
    group: &'a Group,
    dense: Option<Vec<u32>>,
}

fn image_set(g: &SignedPerm, set: RootSet) -> RootSet {
    root_indices(set).fold(0, |acc, r| acc | (1 << g.hyperplane_image(r)))
}

impl<'a> GroupActionTable<'a> {
    pub fn new(lattice: &'a IntersectionLattice, group: &'a Group) -> Self {
        let cells = lattice.len() * group.order();
        let dense = (cells <= DENSE_LIMIT).then(|| {
            group
                .elements
                .par_iter()
                .flat_map_iter(|g| {
                    lattice.elements.iter().map(move |f| {
                        lattice.index_of(image_set(g, f.hyperplanes)).expect("lattice is W-stable") as u32
                    })
                })
                .collect()
        });
        Self { lattice, group, dense }
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        self.lattice
    }

    pub fn group(&self) -> &Group {
        self.group
    }

    pub fn group_order(&self) -> usize {
        self.group.order()
    }

    pub fn is_dense(&self) -> bool {
        self.dense.is_some()
    }

    /// Index of `g · e`.
    #[inline]
    pub fn act(&self, g: usize, e: usize) -> usize {
        match &self.dense {
            Some(t) => t[g * self.lattice.len() + e] as usize,
            None => {
                let set = image_set(&self.group.elements[g], self.lattice.elements[e].hyperplanes);
                self.lattice.index_of(set).expect("lattice is W-stable")
            }
        }
    }

    pub fn row(&self, g: usize) -> Vec<usize> {
        (0..self.lattice.len()).map(|e| self.act(g, e)).collect()
    }
}
