use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Subspace;
use crate::reflection::{MatrixModel, ModelKind, ReflectionModel};

/// Set of root (equivalently, hyperplane) indices, one bit per root.
pub type RootSet = u128;

pub const MAX_ROOTS: usize = 128;

pub fn root_indices(set: RootSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i)
    })
}

/// An element of the intersection lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Codimension within the essential space.
    pub rank: usize,
    /// Hyperplanes containing this flat. Determines the flat uniquely.
    pub hyperplanes: RootSet,
    /// Canonical basis; absent for the dihedral index model.
    pub subspace: Option<Subspace>,
}

/// The lattice of intersections of reflecting hyperplanes, ordered by reverse inclusion.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    pub group: String,
    /// Essential rank: length of every maximal chain.
    pub rank: usize,
    /// Sorted by rank, then by hyperplane set; index 0 is the whole space.
    pub elements: Vec<Flat>,
    /// `covers[x]`: elements of rank `rank(x) + 1` contained in `x`, ascending.
    pub covers: Vec<Vec<u32>>,
    /// Index of the unique rank-`n` element.
    pub top: usize,
    index: HashMap<RootSet, u32>,
}

impl IntersectionLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn index_of(&self, hyperplanes: RootSet) -> Option<usize> {
        self.index.get(&hyperplanes).map(|&i| i as usize)
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.rank + 1];
        for f in &self.elements {
            sizes[f.rank] += 1;
        }
        sizes
    }

    /// Elements of the given rank.
    pub fn rank_level(&self, rank: usize) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().enumerate().filter(move |(_, f)| f.rank == rank).map(|(i, _)| i)
    }

    pub fn cover_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.covers.iter().enumerate().flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y as usize)))
    }

    /// Meet in the ordering by inclusion: the flat spanned by both hyperplane sets' intersection.
    pub fn intersection(&self, a: usize, b: usize) -> Option<usize> {
        let union = self.elements[a].hyperplanes | self.elements[b].hyperplanes;
        // the intersection is the smallest flat whose hyperplane set contains the union
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, f)| f.hyperplanes & union == union)
            .min_by_key(|(_, f)| f.rank)
            .map(|(i, _)| i)
    }

    /// Sort, index and compute covers from `(rank, hyperplanes, subspace)` triples.
    fn finalize(group: String, rank: usize, mut elements: Vec<Flat>) -> Result<Self> {
        elements.sort_by(|a, b| {
            a.rank.cmp(&b.rank).then_with(|| {
                root_indices(a.hyperplanes).cmp(root_indices(b.hyperplanes))
            })
        });
        let index: HashMap<RootSet, u32> =
            elements.iter().enumerate().map(|(i, f)| (f.hyperplanes, i as u32)).collect();
        if index.len() != elements.len() {
            return Err(Error::InvalidGraph("two flats share a hyperplane set".into()));
        }
        let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); rank + 1];
        for (i, f) in elements.iter().enumerate() {
            if f.rank > rank {
                return Err(Error::InvalidGraph(format!("flat of rank {} above essential rank {rank}", f.rank)));
            }
            by_rank[f.rank].push(i);
        }
        let mut covers = vec![Vec::new(); elements.len()];
        for k in 0..rank {
            for &x in &by_rank[k] {
                let hx = elements[x].hyperplanes;
                for &y in &by_rank[k + 1] {
                    if elements[y].hyperplanes & hx == hx {
                        covers[x].push(y as u32);
                    }
                }
            }
        }
        if by_rank[0].len() != 1 || by_rank[rank].len() != 1 {
            return Err(Error::InvalidGraph("lattice lacks a unique bottom or top".into()));
        }
        let top = by_rank[rank][0];
        let lattice = Self { group, rank, elements, covers, top, index };
        lattice.validate_grading()?;
        Ok(lattice)
    }

    /// Every non-bottom element is covered by something and every non-top element covers something.
    pub fn validate_grading(&self) -> Result<()> {
        let mut has_lower = vec![false; self.len()];
        for (x, ys) in self.covers.iter().enumerate() {
            if x != self.top && ys.is_empty() {
                return Err(Error::InvalidGraph(format!("element {x} is maximal but not the top")));
            }
            for &y in ys {
                if self.elements[y as usize].rank != self.elements[x].rank + 1 {
                    return Err(Error::InvalidGraph("cover with rank jump other than 1".into()));
                }
                has_lower[y as usize] = true;
            }
        }
        if let Some(y) = (1..self.len()).find(|&y| !has_lower[y]) {
            return Err(Error::InvalidGraph(format!("element {y} is minimal but not the bottom")));
        }
        Ok(())
    }

    pub fn dump(&self) -> LatticeDump {
        LatticeDump {
            group: self.group.clone(),
            essential_rank: self.rank,
            rank_sizes: self.rank_sizes(),
            elements: self
                .elements
                .iter()
                .enumerate()
                .map(|(i, f)| ElementDump {
                    index: i,
                    codim: f.rank,
                    hyperplanes: root_indices(f.hyperplanes).collect(),
                    basis: f.subspace.as_ref().map(Subspace::basis_strings),
                })
                .collect(),
            covers: self.cover_edges().map(|(a, b)| [a, b]).collect(),
        }
    }
}

/// JSON shape written by `--dump-lattice`.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeDump {
    pub group: String,
    pub essential_rank: usize,
    pub rank_sizes: Vec<usize>,
    pub elements: Vec<ElementDump>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementDump {
    pub index: usize,
    pub codim: usize,
    pub hyperplanes: Vec<usize>,
    pub basis: Option<Vec<Vec<String>>>,
}

fn matrix_flats(m: &MatrixModel) -> Result<Vec<Flat>> {
    let hyperplanes: Vec<Subspace> = (0..m.roots.len()).map(|i| m.hyperplane(i)).collect();
    let mut seen: HashMap<Subspace, ()> = HashMap::new();
    let full = Subspace::full(m.field, m.ambient);
    seen.insert(full.clone(), ());
    let mut queue = vec![full];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i].clone();
        for (r, h) in hyperplanes.iter().enumerate() {
            if x.is_orthogonal_to(&m.roots[r]) {
                continue;
            }
            let y = x.intersect(h)?;
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), ());
                queue.push(y);
            }
        }
        i += 1;
    }
    Ok(queue
        .into_iter()
        .map(|s| {
            let hyperplanes = (0..m.roots.len())
                .filter(|&r| s.is_orthogonal_to(&m.roots[r]))
                .fold(0 as RootSet, |acc, r| acc | (1 << r));
            Flat { rank: s.codim(), hyperplanes, subspace: Some(s) }
        })
        .collect())
}

fn dihedral_flats(m: u32) -> Vec<Flat> {
    let all: RootSet = (1 << m) - 1;
    let mut flats = vec![Flat { rank: 0, hyperplanes: 0, subspace: None }];
    flats.extend((0..m).map(|j| Flat { rank: 1, hyperplanes: 1 << j, subspace: None }));
    flats.push(Flat { rank: 2, hyperplanes: all, subspace: None });
    flats
}

fn model_flats(model: &ReflectionModel) -> Result<Vec<Flat>> {
    match &model.kind {
        ModelKind::Matrix(m) => matrix_flats(m),
        ModelKind::Dihedral(d) => Ok(dihedral_flats(d.m)),
        ModelKind::Product(parts) => {
            // P(W1 x W2) = P(W1) x P(W2)
            let mut acc = vec![Flat { rank: 0, hyperplanes: 0, subspace: None }];
            let mut offset = 0;
            for p in parts {
                let flats = model_flats(p)?;
                acc = acc
                    .iter()
                    .flat_map(|a| {
                        flats.iter().map(move |b| Flat {
                            rank: a.rank + b.rank,
                            hyperplanes: a.hyperplanes | (b.hyperplanes << offset),
                            subspace: None,
                        })
                    })
                    .collect();
                offset += p.root_count();
            }
            Ok(acc)
        }
    }
}

/// Build the intersection lattice by closing the hyperplanes under intersection.
pub fn build_lattice(model: &ReflectionModel) -> Result<IntersectionLattice> {
    if model.root_count() > MAX_ROOTS {
        return Err(Error::UnsupportedBruteForce {
            group: model.spec(),
            reason: format!("more than {MAX_ROOTS} reflections"),
        });
    }
    let flats = model_flats(model)?;
    IntersectionLattice::finalize(model.spec(), model.essential_rank(), flats)
}
