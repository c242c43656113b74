//! Triangle-based counting: the square-and-sum triangle counter and the
//! general reduction of `K_r` to triangles in a tripartite auxiliary graph.

use std::time::Instant;

use super::{guard, require_r, Algorithm, CountReport};
use crate::error::Result;
use crate::graph::{enumerate_cliques, CliqueList, Graph};
use crate::matrix::BoolMatrix;
use crate::Config;

/// Counts triangles from `C = A * A`: each edge `{i, j}` lies in `C[i, j]`
/// triangles and each triangle has three edges.
pub fn count_triangles_ir(g: &Graph, cfg: &Config) -> Result<CountReport> {
    let n = g.n();
    guard("two-path matrix", n, n, cfg)?;
    let start = Instant::now();
    let a = g.adjacency();
    // A is symmetric, so A * A = A * A^T.
    let c = cfg.backend.mul_transpose_bits(a, a)?;
    let tally: u64 = g.edges().into_iter().map(|(i, j)| c.get(i, j)).sum();
    let mut report = CountReport::new(Algorithm::TrianglesIr, 3, tally, 3)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Part sizes `(floor(r/3), ceil((r-1)/3), ceil(r/3))`; they sum to `r`.
pub fn part_sizes(r: usize) -> (usize, usize, usize) {
    (r / 3, r.saturating_sub(1).div_ceil(3), r.div_ceil(3))
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Compatibility between two clique lists: `out[a, b]` is set iff copy `b`
/// lies entirely inside the common neighbourhood of copy `a`, i.e. the copies
/// are disjoint and their union is a clique.
fn compatibility(g: &Graph, from: &CliqueList, to: &CliqueList) -> BoolMatrix {
    let mut m = BoolMatrix::zeros(from.len(), to.len());
    for (a, x) in from.iter().enumerate() {
        let mask = g.common_mask(x);
        for (b, y) in to.iter().enumerate() {
            if y.iter().all(|&v| (mask[v / 64] >> (v % 64)) & 1 == 1) {
                m.set(a, b, true);
            }
        }
    }
    m
}

/// Counts `K_r` copies as triangles of an auxiliary graph whose three node
/// classes are the `K_p1`, `K_p2` and `K_p3` copies of `g`. With the class-1
/// to class-2 compatibility matrix `M12` and class-2 to class-3 matrix `M23`,
/// the tally is the sum of `(M12 * M23)[a, c]` over compatible `(a, c)`. Each
/// `K_r` copy is hit once per ordered partition of its vertices into parts of
/// the three sizes.
pub fn count_triangle_method(g: &Graph, r: usize, cfg: &Config) -> Result<CountReport> {
    require_r(r, 3)?;
    let start = Instant::now();
    let (p1, p2, p3) = part_sizes(r);
    let l1 = enumerate_cliques(g, p1);
    let l2 = enumerate_cliques(g, p2);
    let l3 = enumerate_cliques(g, p3);
    guard("triangle-method M12", l1.len(), l2.len(), cfg)?;
    guard("triangle-method M23", l3.len(), l2.len(), cfg)?;
    guard("triangle-method product", l1.len(), l3.len(), cfg)?;

    let m12 = compatibility(g, &l1, &l2);
    let m32 = compatibility(g, &l3, &l2);
    let m13 = compatibility(g, &l1, &l3);
    let paths = cfg.backend.mul_transpose_bits(&m12, &m32)?;
    let mut tally = 0u64;
    for a in 0..l1.len() {
        for c in m13.row_ones(a) {
            tally += paths.get(a, c);
        }
    }
    let divisor = factorial(r) / (factorial(p1) * factorial(p2) * factorial(p3));
    let mut report = CountReport::new(Algorithm::Triangle, r, tally, divisor)?;
    report.elapsed = start.elapsed();
    Ok(report)
}
