use std::collections::HashMap;

use super::model::ReflectionModel;
use crate::error::{Error, Result};

/// Action of a group element on the root representatives: root `i` goes to
/// `±root j`. Entry `i` stores `2j + sign`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(Vec<u32>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((0..n as u32).map(|i| i << 1).collect())
    }

    pub fn from_pairs(pairs: &[(usize, bool)]) -> Self {
        SignedPerm(pairs.iter().map(|&(j, neg)| ((j as u32) << 1) | neg as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of root `i`: target index and whether the sign flips.
    #[inline]
    pub fn image(&self, i: usize) -> (usize, bool) {
        let e = self.0[i];
        ((e >> 1) as usize, e & 1 == 1)
    }

    /// Index part only: the action on reflecting hyperplanes.
    #[inline]
    pub fn hyperplane_image(&self, i: usize) -> usize {
        (self.0[i] >> 1) as usize
    }

    /// `next ∘ self`: first apply `self`, then `next`.
    pub fn then(&self, next: &SignedPerm) -> SignedPerm {
        SignedPerm(self.0.iter().map(|&e| next.0[(e >> 1) as usize] ^ (e & 1)).collect())
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[(e >> 1) as usize] = ((i as u32) << 1) | (e & 1);
        }
        SignedPerm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e == (i as u32) << 1)
    }

    /// Lift into a product acting on `total` roots, occupying `offset..offset + len`.
    pub fn embedded(&self, offset: usize, total: usize) -> SignedPerm {
        let mut out = SignedPerm::identity(total);
        for (i, &e) in self.0.iter().enumerate() {
            out.0[offset + i] = e + ((offset as u32) << 1);
        }
        out
    }

    /// 1-based indices, negative for a sign flip.
    pub fn to_signed_indices(&self) -> Vec<i64> {
        (0..self.len())
            .map(|i| {
                let (j, neg) = self.image(i);
                if neg {
                    -(j as i64 + 1)
                } else {
                    j as i64 + 1
                }
            })
            .collect()
    }
}

/// All elements of a finite reflection group, as root permutations.
#[derive(Clone, Debug)]
pub struct Group {
    /// `elements[0]` is the identity.
    pub elements: Vec<SignedPerm>,
    /// Indices of the simple reflections within `elements`.
    pub generators: Vec<usize>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Breadth-first closure of the generators acting on root indices.
pub fn generate_group(model: &ReflectionModel, cap: usize) -> Result<Group> {
    let gens = model.generator_permutations()?;
    let n = model.root_count();
    let identity = SignedPerm::identity(n);
    let mut index: HashMap<SignedPerm, usize> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elements = vec![identity];
    let mut i = 0;
    while i < elements.len() {
        for g in &gens {
            let next = elements[i].then(g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    let generators = gens.iter().map(|g| index[g]).collect();
    Ok(Group { elements, generators })
}
