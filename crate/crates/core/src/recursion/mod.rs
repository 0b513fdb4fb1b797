//! Computation of `K(W)` by recursion over maximal parabolic subgroups.
//!
//! Reducible groups use the shuffle product. For an irreducible group the
//! value is a sum over the vertices of the Coxeter graph, grouped by the
//! involution induced by the longest element.

mod cache;
mod engine;
mod result;

pub use cache::{load_engine, resolve_cache_path, save_engine, CacheStatus, CACHE_ENV, ENGINE_VERSION};
pub use engine::{k_product, term_order, Engine};
pub use result::{decimal, KResult, Method, Term};

#[cfg(test)]
mod tests;
