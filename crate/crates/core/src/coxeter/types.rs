use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::graph::{CoxeterGraph, VertexId};
use crate::error::{Error, Result};

/// Families of the finite irreducible Coxeter groups.
///
/// `C_n` is identified with `B_n` and `G_2` with `I2(6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
}

/// A finite irreducible type. For `I2` the `rank` field holds the edge label `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: u32,
}

impl TypeLabel {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::H => (3..=4).contains(&rank),
            Family::I2 => rank >= 3,
        };
        if !ok {
            let t = TypeLabel { family, rank };
            return Err(Error::RankOutOfRange(t.to_string()));
        }
        Ok(Self { family, rank })
    }

    pub fn a(n: u32) -> Self {
        Self::new(Family::A, n).expect("A_n needs n >= 1")
    }

    pub fn b(n: u32) -> Self {
        Self::new(Family::B, n).expect("B_n needs n >= 2")
    }

    pub fn d(n: u32) -> Self {
        Self::new(Family::D, n).expect("D_n needs n >= 4")
    }

    pub fn dihedral(m: u32) -> Self {
        Self::new(Family::I2, m).expect("I2(m) needs m >= 3").canonical()
    }

    /// `I2(3) = A2` and `I2(4) = B2`; every other label is already canonical.
    pub fn canonical(self) -> Self {
        match (self.family, self.rank) {
            (Family::I2, 3) => Self { family: Family::A, rank: 2 },
            (Family::I2, 4) => Self { family: Family::B, rank: 2 },
            _ => self,
        }
    }

    /// Number of simple generators.
    pub fn coxeter_rank(&self) -> usize {
        match self.family {
            Family::I2 => 2,
            _ => self.rank as usize,
        }
    }

    /// Graph in standard numbering, ids `first..first + rank`.
    ///
    /// A, B, H: path `1..n` (B's label 4 on the last edge, H's label 5 on the first).
    /// D: path `1..n-2` with `n-1` and `n` both attached to `n-2`.
    /// E: Bourbaki numbering (`1-3-4-5-...-n`, with `2` attached to `4`).
    /// F4: path with labels 3, 4, 3.
    pub fn standard_graph(&self, first: VertexId) -> CoxeterGraph {
        let n = self.coxeter_rank();
        let ids: Vec<VertexId> = (first..first + n).collect();
        let id = |k: usize| first + k - 1;
        let edges: Vec<(VertexId, VertexId, u32)> = match self.family {
            Family::A => (1..n).map(|k| (id(k), id(k + 1), 3)).collect(),
            Family::B => (1..n).map(|k| (id(k), id(k + 1), if k == n - 1 { 4 } else { 3 })).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 2).map(|k| (id(k), id(k + 1), 3)).collect();
                e.push((id(n - 2), id(n - 1), 3));
                e.push((id(n - 2), id(n), 3));
                e
            }
            Family::E => {
                let mut e = vec![(id(1), id(3), 3), (id(3), id(4), 3), (id(2), id(4), 3)];
                e.extend((4..n).map(|k| (id(k), id(k + 1), 3)));
                e
            }
            Family::F => vec![(id(1), id(2), 3), (id(2), id(3), 4), (id(3), id(4), 3)],
            Family::H => (1..n).map(|k| (id(k), id(k + 1), if k == 1 { 5 } else { 3 })).collect(),
            Family::I2 => vec![(id(1), id(2), self.rank)],
        };
        CoxeterGraph::new(ids, edges).expect("standard graphs are valid")
    }

    /// Whether the longest element is central (`w0 = -1`).
    pub fn longest_element_is_central(&self) -> bool {
        match self.family {
            Family::A => self.rank == 1,
            Family::B | Family::F | Family::H => true,
            Family::D => self.rank % 2 == 0,
            Family::E => self.rank != 6,
            Family::I2 => self.rank % 2 == 0,
        }
    }

    /// Order of the group.
    pub fn group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::H => {
                if n == 3 {
                    120
                } else {
                    14_400
                }
            }
            Family::I2 => 2 * n,
        }
    }

    /// Number of reflections.
    pub fn reflection_count(&self) -> usize {
        let n = self.rank as usize;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::H => {
                if n == 3 {
                    15
                } else {
                    60
                }
            }
            Family::I2 => n,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.rank),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

/// An involutive label-preserving permutation of a type's standard vertex positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    pub source: TypeLabel,
    /// `permutation[k - 1]` is the image of standard position `k`.
    pub permutation: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(source: TypeLabel) -> Self {
        Self { source, permutation: (1..=source.coxeter_rank()).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    pub fn image(&self, position: usize) -> usize {
        self.permutation[position - 1]
    }

    pub fn compose(&self, other: &Self) -> Self {
        let permutation = other.permutation.iter().map(|&p| self.image(p)).collect();
        Self { source: self.source, permutation }
    }

    /// Transport onto a concrete graph through `iso` (standard position `k` is `iso[k - 1]`).
    pub fn on_vertices(&self, iso: &[VertexId]) -> BTreeMap<VertexId, VertexId> {
        iso.iter().enumerate().map(|(k, &v)| (v, iso[self.permutation[k] - 1])).collect()
    }
}

/// The automorphism `s -> w0 s w0` of the standard graph of `t`.
///
/// Identity when `w0` is central; otherwise the unique nontrivial automorphism
/// (path reversal for A, fork swap for odd D, the order-2 symmetry of E6, the
/// vertex swap of `I2(m)` for odd m). For D4 only the identity is returned,
/// triality is not modeled.
pub fn longest_element_automorphism(t: TypeLabel) -> DiagramAutomorphism {
    let n = t.coxeter_rank();
    if t.longest_element_is_central() {
        return DiagramAutomorphism::identity(t);
    }
    let permutation = match t.family {
        Family::A | Family::I2 => (1..=n).rev().collect(),
        Family::D => {
            let mut p: Vec<usize> = (1..=n).collect();
            p.swap(n - 2, n - 1);
            p
        }
        Family::E => vec![6, 2, 5, 4, 3, 1],
        _ => unreachable!("central longest element"),
    };
    DiagramAutomorphism { source: t, permutation }
}

/// Swap of the two fork vertices of `D_n`, used by the augmented orbit count.
pub fn fork_swap(n: u32) -> DiagramAutomorphism {
    let t = TypeLabel::d(n);
    let mut permutation: Vec<usize> = (1..=n as usize).collect();
    permutation.swap(n as usize - 2, n as usize - 1);
    DiagramAutomorphism { source: t, permutation }
}

/// A classified connected graph: its type and the isomorphism from standard numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classified {
    pub label: TypeLabel,
    /// `iso[k - 1]` is the graph vertex sitting at standard position `k`.
    pub iso: Vec<VertexId>,
}

impl Classified {
    /// `longest_element_automorphism` expressed on the graph's own vertex ids.
    pub fn longest_automorphism_on_vertices(&self) -> BTreeMap<VertexId, VertexId> {
        longest_element_automorphism(self.label).on_vertices(&self.iso)
    }
}

fn not_finite(g: &CoxeterGraph, why: &str) -> Error {
    let edges: Vec<String> = g.edges().map(|(a, b, m)| format!("{a}-{b}:{m}")).collect();
    Error::NotFinite(format!("{why} (edges {})", edges.join(", ")))
}

/// Walk from `start` away from `from` along degree-2 vertices, collecting the arm.
fn walk_arm(g: &CoxeterGraph, from: VertexId, start: VertexId) -> Vec<VertexId> {
    let mut arm = vec![start];
    let (mut prev, mut cur) = (from, start);
    loop {
        let next: Vec<VertexId> = g.neighbors(cur).into_iter().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                arm.push(*w);
                prev = cur;
                cur = *w;
            }
            _ => return arm,
        }
    }
}

/// Identify a connected graph with a finite irreducible type.
pub fn classify_irreducible(g: &CoxeterGraph) -> Result<Classified> {
    let n = g.rank();
    if n == 0 {
        return Err(Error::InvalidGraph("cannot classify the empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidGraph("graph is not connected".into()));
    }
    if n == 1 {
        return Ok(Classified { label: TypeLabel::a(1), iso: g.vertices().to_vec() });
    }
    if g.edge_count() != n - 1 {
        return Err(not_finite(g, "graph contains a cycle"));
    }
    let degrees: Vec<(VertexId, usize)> = g.vertices().iter().map(|&v| (v, g.degree(v))).collect();
    if degrees.iter().any(|&(_, d)| d > 3) {
        return Err(not_finite(g, "vertex of degree > 3"));
    }
    let branches: Vec<VertexId> = degrees.iter().filter(|&&(_, d)| d == 3).map(|&(v, _)| v).collect();
    match branches.as_slice() {
        [] => classify_path(g),
        [b] => classify_branched(g, *b),
        _ => Err(not_finite(g, "more than one branch vertex")),
    }
}

fn classify_path(g: &CoxeterGraph) -> Result<Classified> {
    let n = g.rank();
    let ends: Vec<VertexId> = g.vertices().iter().copied().filter(|&v| g.degree(v) == 1).collect();
    let start = ends[0].min(ends[1]);
    let mut order = vec![start];
    order.extend(walk_arm(g, start, g.neighbors(start)[0]));
    let labels: Vec<u32> = order.windows(2).map(|w| g.label(w[0], w[1])).collect();
    let reversed = || {
        let mut o = order.clone();
        o.reverse();
        o
    };
    let n32 = n as u32;
    if n == 2 {
        let m = labels[0];
        let label = TypeLabel::new(Family::I2, m)?.canonical();
        return Ok(Classified { label, iso: order });
    }
    if labels.iter().all(|&m| m == 3) {
        return Ok(Classified { label: TypeLabel::a(n32), iso: order });
    }
    let last = labels.len() - 1;
    let odd: Vec<(usize, u32)> = labels.iter().copied().enumerate().filter(|&(_, m)| m != 3).collect();
    match odd.as_slice() {
        [(i, 4)] if *i == last => Ok(Classified { label: TypeLabel::b(n32), iso: order }),
        [(0, 4)] => Ok(Classified { label: TypeLabel::b(n32), iso: reversed() }),
        [(1, 4)] if n == 4 => Ok(Classified { label: TypeLabel::new(Family::F, 4)?, iso: order }),
        [(0, 5)] if n <= 4 => Ok(Classified { label: TypeLabel::new(Family::H, n32)?, iso: order }),
        [(i, 5)] if *i == last && n <= 4 => {
            Ok(Classified { label: TypeLabel::new(Family::H, n32)?, iso: reversed() })
        }
        _ => Err(not_finite(g, "path labels do not match a finite type")),
    }
}

fn classify_branched(g: &CoxeterGraph, branch: VertexId) -> Result<Classified> {
    if g.edges().any(|(_, _, m)| m != 3) {
        return Err(not_finite(g, "branched graph with a label other than 3"));
    }
    let mut arms: Vec<Vec<VertexId>> =
        g.neighbors(branch).into_iter().map(|w| walk_arm(g, branch, w)).collect();
    arms.sort_by_key(|a| (a.len(), a[0]));
    if arms.iter().all(|a| a.len() == 1) {
        // D4: the smallest id plays the path end, the other two form the fork
        arms.rotate_left(1);
    }
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    let n = g.rank() as u32;
    match lens.as_slice() {
        [1, 1, _] => {
            // long arm listed from its far end, then the branch, then the fork
            let mut iso: Vec<VertexId> = arms[2].iter().rev().copied().collect();
            iso.push(branch);
            iso.push(arms[0][0]);
            iso.push(arms[1][0]);
            Ok(Classified { label: TypeLabel::d(n), iso })
        }
        [1, 2, 2..=4] => {
            let mut iso = vec![arms[1][1], arms[0][0], arms[1][0], branch];
            iso.extend(arms[2].iter().copied());
            Ok(Classified { label: TypeLabel::new(Family::E, n)?, iso })
        }
        _ => Err(not_finite(g, "branch arm lengths do not match D or E")),
    }
}

/// Types of every component, sorted by family then rank.
pub fn component_types(g: &CoxeterGraph) -> Result<Vec<TypeLabel>> {
    let mut labels = g
        .connected_components()
        .iter()
        .map(|c| classify_irreducible(&c.graph).map(|k| k.label))
        .collect::<Result<Vec<_>>>()?;
    labels.sort();
    Ok(labels)
}

/// Canonical serialization: sorted component labels joined by `x`; `1` for rank 0.
pub fn canonical_spec(g: &CoxeterGraph) -> Result<String> {
    Ok(spec_of_types(&component_types(g)?))
}

pub fn spec_of_types(labels: &[TypeLabel]) -> String {
    if labels.is_empty() {
        return "1".into();
    }
    let mut sorted = labels.to_vec();
    sorted.sort();
    sorted.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
}

/// Disjoint union of standard graphs, ids numbered consecutively from 1.
pub fn graph_of_types(labels: &[TypeLabel]) -> CoxeterGraph {
    labels.iter().fold(CoxeterGraph::empty(), |acc, t| acc.disjoint_union(&t.standard_graph(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types_up_to(max: u32) -> Vec<TypeLabel> {
        let mut out = Vec::new();
        for n in 1..=max {
            out.push(TypeLabel::a(n));
            if n >= 2 {
                out.push(TypeLabel::b(n));
            }
            if n >= 4 {
                out.push(TypeLabel::d(n));
            }
        }
        for n in 6..=8.min(max) {
            out.push(TypeLabel::new(Family::E, n).unwrap());
        }
        out.push(TypeLabel::new(Family::F, 4).unwrap());
        out.push(TypeLabel::new(Family::H, 3).unwrap());
        out.push(TypeLabel::new(Family::H, 4).unwrap());
        for m in 5..=12 {
            out.push(TypeLabel::dihedral(m));
        }
        out
    }

    #[test]
    fn classify_round_trips_standard_graphs() {
        for t in all_types_up_to(9) {
            let g = t.standard_graph(1);
            let c = classify_irreducible(&g).unwrap();
            assert_eq!(c.label, t, "{t}");
            assert_eq!(c.iso, (1..=t.coxeter_rank()).collect::<Vec<_>>(), "{t}");
        }
    }

    #[test]
    fn classify_relabeled_graphs() {
        // same shapes with scrambled ids
        for t in all_types_up_to(8) {
            let g = t.standard_graph(1);
            let scramble = |v: VertexId| (v * 7 + 3) % 101 + 100;
            let h = CoxeterGraph::new(
                g.vertices().iter().map(|&v| scramble(v)),
                g.edges().map(|(a, b, m)| (scramble(a), scramble(b), m)),
            )
            .unwrap();
            let c = classify_irreducible(&h).unwrap();
            assert_eq!(c.label, t);
            let std = t.standard_graph(1);
            for (a, b, m) in std.edges() {
                assert_eq!(h.label(c.iso[a - 1], c.iso[b - 1]), m, "{t}");
            }
            assert_eq!(h.edge_count(), std.edge_count());
        }
    }

    #[test]
    fn small_examples() {
        let b2 = CoxeterGraph::path(&[1, 2], &[4]).unwrap();
        assert_eq!(classify_irreducible(&b2).unwrap().label, TypeLabel::b(2));
        let d5 = TypeLabel::d(5).standard_graph(1);
        assert_eq!(classify_irreducible(&d5).unwrap().label, TypeLabel::d(5));
        let triangle = CoxeterGraph::new([1, 2, 3], [(1, 2, 3), (2, 3, 3), (1, 3, 3)]).unwrap();
        assert!(matches!(classify_irreducible(&triangle), Err(Error::NotFinite(_))));
        let seven = CoxeterGraph::path(&[1, 2, 3], &[7, 3]).unwrap();
        assert!(matches!(classify_irreducible(&seven), Err(Error::NotFinite(_))));
        let affine_e6 = CoxeterGraph::path(&[1, 2, 3, 4, 5], &[3, 3, 3, 3])
            .unwrap()
            .disjoint_union(&CoxeterGraph::path(&[1, 2], &[3]).unwrap());
        let affine_e6 = CoxeterGraph::new(
            affine_e6.vertices().iter().copied(),
            affine_e6.edges().chain([(3, 6, 3)]),
        )
        .unwrap();
        assert!(matches!(classify_irreducible(&affine_e6), Err(Error::NotFinite(_))));
    }

    #[test]
    fn central_longest_element_table() {
        let central = ["B4", "D4", "D6", "E7", "E8", "F4", "H3", "H4", "I2(6)", "I2(8)", "A1"];
        let not_central = ["A2", "A4", "D5", "E6", "I2(5)", "I2(7)"];
        let p = |s: &str| {
            let g = crate::coxeter::parse_group_spec(s).unwrap();
            classify_irreducible(&g).unwrap().label
        };
        for s in central {
            assert!(longest_element_automorphism(p(s)).is_identity(), "{s}");
        }
        for s in not_central {
            assert!(!longest_element_automorphism(p(s)).is_identity(), "{s}");
        }
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(longest_element_automorphism(TypeLabel::a(4)).permutation, vec![4, 3, 2, 1]);
        assert_eq!(longest_element_automorphism(TypeLabel::d(5)).permutation, vec![1, 2, 3, 5, 4]);
        assert!(longest_element_automorphism(TypeLabel::b(4)).is_identity());
        assert_eq!(fork_swap(4).permutation, vec![1, 2, 4, 3]);
    }

    #[test]
    fn automorphisms_are_graph_involutions() {
        for t in all_types_up_to(9) {
            let sigma = longest_element_automorphism(t);
            assert!(sigma.compose(&sigma).is_identity(), "{t}");
            let g = t.standard_graph(1);
            let iso: Vec<VertexId> = g.vertices().to_vec();
            assert!(g.is_automorphism(&sigma.on_vertices(&iso)), "{t}");
        }
    }

    #[test]
    fn deleting_a_vertices_gives_two_paths() {
        for n in 1..=9u32 {
            for i in 1..=n as usize {
                let g = TypeLabel::a(n).standard_graph(1).delete_vertex(i).unwrap();
                let mut expect = Vec::new();
                if i > 1 {
                    expect.push(TypeLabel::a(i as u32 - 1));
                }
                if (i as u32) < n {
                    expect.push(TypeLabel::a(n - i as u32));
                }
                expect.sort();
                assert_eq!(component_types(&g).unwrap(), expect);
            }
        }
    }

    #[test]
    fn e6_branch_deletion() {
        let g = TypeLabel::new(Family::E, 6).unwrap().standard_graph(1).delete_vertex(4).unwrap();
        assert_eq!(canonical_spec(&g).unwrap(), "A1xA2xA2");
        let d4 = TypeLabel::d(4).standard_graph(1).delete_vertex(4).unwrap();
        assert_eq!(canonical_spec(&d4).unwrap(), "A3");
    }

    #[test]
    fn spec_strings() {
        assert_eq!(spec_of_types(&[]), "1");
        assert_eq!(
            spec_of_types(&[TypeLabel::dihedral(5), TypeLabel::a(2), TypeLabel::d(4)]),
            "A2xD4xI2(5)"
        );
        assert_eq!(TypeLabel::dihedral(4), TypeLabel::b(2));
    }
}
