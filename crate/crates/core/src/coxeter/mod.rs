//! Coxeter graphs: parsing, components, classification and the longest-element
//! diagram automorphism.

mod graph;
mod parse;
mod types;

pub use graph::{Component, CoxeterGraph, VertexId};
pub use parse::{parse_group_spec, parse_types};
pub use types::{
    canonical_spec, classify_irreducible, component_types, fork_swap, graph_of_types,
    longest_element_automorphism, spec_of_types, Classified, DiagramAutomorphism, Family, TypeLabel,
};
