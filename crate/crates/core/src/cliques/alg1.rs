//! Counting by extending `K_{r-1}` copies one vertex at a time, with the
//! extension counts read off the `(r-1)`-dimensional product of adjacency
//! matrices.

use std::time::Instant;

use super::{require_r, Algorithm, CountReport, FindResult};
use crate::error::Result;
use crate::graph::{enumerate_cliques, Graph};
use crate::multidim::{common_neighbors_tensor, find_witness};
use crate::Config;

/// Sums, over every `K_{r-1}` copy `C`, the number of vertices adjacent to all
/// of `C`, then divides by `r` (each `K_r` contains `r` copies of `K_{r-1}`).
/// `k1` selects the tensor split, defaulting to `ceil((r-1)/2)`.
pub fn count_alg1(g: &Graph, r: usize, k1: Option<usize>, cfg: &Config) -> Result<CountReport> {
    require_r(r, 3)?;
    let start = Instant::now();
    let k = r - 1;
    let k1 = k1.unwrap_or(k.div_ceil(2));
    let tensor = common_neighbors_tensor(g, k, Some(k1), cfg)?;
    let list = enumerate_cliques(g, k);
    let tally: u64 = list.iter().map(|c| tensor.entry(c)).sum();
    let mut report = CountReport::new(Algorithm::Alg1, r, tally, r as u64)?;
    report.k1 = Some(k1);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Returns the first `K_{r-1}` copy (lexicographically) with a non-zero
/// tensor entry, completed by its smallest witness. This is the
/// lexicographically smallest `K_r` copy of `g`.
pub fn find_alg1(g: &Graph, r: usize, cfg: &Config) -> Result<FindResult> {
    require_r(r, 3)?;
    let k = r - 1;
    let tensor = common_neighbors_tensor(g, k, None, cfg)?;
    let list = enumerate_cliques(g, k);
    let Some(c) = list.iter().find(|c| tensor.entry(c) > 0) else {
        return Ok(FindResult::none());
    };
    let a = g.adjacency().to_int();
    let mats = vec![a; k];
    let w = find_witness(&mats, c).expect("non-zero entry has a witness");
    let mut vs = c.to_vec();
    vs.push(w);
    Ok(FindResult::found(vs))
}
