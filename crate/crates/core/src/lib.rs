//! Clique detection and counting built on multi-dimensional matrix products.
//!
//! The crate provides exact integer and bit-packed matrices ([`matrix`]), the
//! k-dimensional matrix product computed by flattening into one rectangular
//! multiplication ([`multidim`]), host-graph machinery ([`graph`]), and the
//! clique counters, detectors and finders built on top of them ([`cliques`]).

pub mod cliques;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod multidim;
pub mod rng;

pub use cliques::{
    count, count_alg1, count_alg2, count_alg3, count_bruteforce, count_triangle_method,
    count_triangles_ir, default_q, detect_alg3, find, find_alg1, find_alg2, find_alg3, Algorithm,
    CountReport, FindResult,
};
pub use error::{Error, Result};
pub use graph::{
    common_neighbor_count, emit_edge_list, enumerate_cliques, extension_set, is_clique,
    parse_dimacs, parse_edge_list, parse_graph, CliqueList, Graph,
};
pub use matrix::{Backend, BoolMatrix, IntMatrix};
pub use multidim::MultiDimProduct;

/// Entry budget for dense intermediates (2^27, about 1 GiB of `u64`).
pub const DEFAULT_MAX_ENTRIES: u64 = 1 << 27;

/// Subset budget for the brute-force counter.
pub const DEFAULT_MAX_SUBSETS: u64 = 100_000_000;

/// Knobs shared by every product-based routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub backend: Backend,
    /// Largest dense intermediate (in entries) a routine may allocate.
    pub max_entries: u64,
    /// Largest number of `r`-subsets the brute-force counter may scan.
    pub max_subsets: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            backend: Backend::default(),
            max_entries: DEFAULT_MAX_ENTRIES,
            max_subsets: DEFAULT_MAX_SUBSETS,
        }
    }
}
