use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Identifier of a vertex (simple generator). Ids survive vertex deletion.
pub type VertexId = usize;

/// A labeled simple graph encoding a finite Coxeter system.
///
/// Vertices are the simple generators. An edge `{v, w}` carries the order
/// `m(s_v, s_w) >= 3`; a missing edge means the generators commute (`m = 2`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    vertices: Vec<VertexId>,
    edges: BTreeMap<(VertexId, VertexId), u32>,
}

/// A connected component together with the original ids of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: CoxeterGraph,
    pub embedding: Vec<VertexId>,
}

impl CoxeterGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, u32)>,
    ) -> Result<Self> {
        let mut vs: Vec<VertexId> = vertices.into_iter().collect();
        let before = vs.len();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != before {
            return Err(Error::InvalidGraph("duplicate vertex id".into()));
        }
        let present: BTreeSet<VertexId> = vs.iter().copied().collect();
        let mut map = BTreeMap::new();
        for (v, w, m) in edges {
            if v == w {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {v}")));
            }
            if !present.contains(&v) || !present.contains(&w) {
                return Err(Error::InvalidGraph(format!("edge ({v}, {w}) uses an unknown vertex")));
            }
            if m < 3 {
                return Err(Error::InvalidGraph(format!("edge ({v}, {w}) has label {m} < 3")));
            }
            let key = (v.min(w), v.max(w));
            if map.insert(key, m).is_some() {
                return Err(Error::InvalidGraph(format!("edge ({v}, {w}) given twice")));
            }
        }
        Ok(Self { vertices: vs, edges: map })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Path on `ids` with the given consecutive edge labels.
    pub fn path(ids: &[VertexId], labels: &[u32]) -> Result<Self> {
        assert_eq!(ids.len(), labels.len() + 1, "a path on k vertices has k - 1 labels");
        let edges = ids.windows(2).zip(labels).map(|(w, &m)| (w[0], w[1], m));
        Self::new(ids.iter().copied(), edges)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn rank(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Coxeter label `m(v, w)`; 2 when there is no edge.
    pub fn label(&self, v: VertexId, w: VertexId) -> u32 {
        self.edges.get(&(v.min(w), v.max(w))).copied().unwrap_or(2)
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.edges.iter().map(|(&(v, w), &m)| (v, w, m))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.keys().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Induced subgraph on the given vertex set (ids preserved).
    pub fn induced(&self, keep: &[VertexId]) -> Self {
        let set: BTreeSet<VertexId> = keep.iter().copied().filter(|v| self.contains(*v)).collect();
        let edges = self
            .edges
            .iter()
            .filter(|((a, b), _)| set.contains(a) && set.contains(b))
            .map(|(&k, &m)| (k, m))
            .collect();
        Self { vertices: set.into_iter().collect(), edges }
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<Self> {
        if !self.contains(v) {
            return Err(Error::MissingVertex(v));
        }
        let keep: Vec<VertexId> = self.vertices.iter().copied().filter(|&w| w != v).collect();
        Ok(self.induced(&keep))
    }

    /// Connected components, ordered by their smallest vertex id.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut stack = vec![start];
            let mut members = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        stack.push(w);
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(Component { graph: self.induced(&members), embedding: members });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Disjoint union; the second graph's ids are shifted past the first's maximum id.
    pub fn disjoint_union(&self, other: &CoxeterGraph) -> Self {
        let offset = self.vertices.last().map_or(0, |&m| m);
        let shifted = other.shifted(offset);
        let mut vertices = self.vertices.clone();
        vertices.extend(shifted.vertices);
        let mut edges = self.edges.clone();
        edges.extend(shifted.edges);
        Self { vertices, edges }
    }

    /// Copy with every id increased by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| v + offset).collect(),
            edges: self.edges.iter().map(|(&(a, b), &m)| ((a + offset, b + offset), m)).collect(),
        }
    }

    /// Same graph with vertices renumbered `1..=rank` in increasing id order.
    pub fn renumbered(&self) -> (Self, BTreeMap<VertexId, VertexId>) {
        let map: BTreeMap<VertexId, VertexId> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
        let edges = self.edges.iter().map(|(&(a, b), &m)| ((map[&a], map[&b]), m)).collect();
        (Self { vertices: (1..=self.rank()).collect(), edges }, map)
    }

    /// True when `perm` (given on every vertex) preserves edges and labels.
    pub fn is_automorphism(&self, perm: &BTreeMap<VertexId, VertexId>) -> bool {
        if self.vertices.iter().any(|v| !perm.get(v).is_some_and(|w| self.contains(*w))) {
            return false;
        }
        let image: BTreeSet<VertexId> = self.vertices.iter().map(|v| perm[v]).collect();
        if image.len() != self.rank() {
            return false;
        }
        self.vertices.iter().all(|&a| {
            self.vertices.iter().all(|&b| a == b || self.label(a, b) == self.label(perm[&a], perm[&b]))
        })
    }
}
