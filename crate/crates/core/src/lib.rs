//! Orbits of maximal chains in the intersection lattice of a finite Coxeter
//! group's reflection arrangement.
//!
//! The count `K(W)` is computed three ways that check each other:
//!
//! - [`lattice`]: build the lattice from an explicit reflection model and count
//!   orbits of maximal chains directly;
//! - [`recursion`]: a product formula over irreducible components and a sum
//!   over maximal parabolic subgroups for irreducible groups;
//! - [`sequences`]: Euler zigzag numbers, closed forms, and exact truncated
//!   power series for the generating functions.

pub mod combinatorics;
pub mod coxeter;
pub mod error;
pub mod field;
pub mod lattice;
pub mod recursion;
pub mod reflection;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
