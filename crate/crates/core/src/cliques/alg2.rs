//! Counting by extending `K_{r-2}` copies with adjacent vertex pairs.

use std::time::Instant;

use super::{binom_u64, guard, keep_min, require_r, Algorithm, CountReport, FindResult};
use crate::error::Result;
use crate::graph::{enumerate_cliques, CliqueList, Graph};
use crate::matrix::{iter_bits, BoolMatrix, IntMatrix};
use crate::Config;

struct Extensions {
    list: CliqueList,
    /// `|V| x |L|`; `b[v, H]` set iff `v` extends `H` to a `K_{r-1}`.
    b: BoolMatrix,
    /// `B * B^T`: `c[v, u]` counts copies extended by both `v` and `u`.
    c: IntMatrix,
}

fn build(g: &Graph, r: usize, cfg: &Config) -> Result<Extensions> {
    require_r(r, 3)?;
    let n = g.n();
    let list = enumerate_cliques(g, r - 2);
    guard("extension incidence matrix", n, list.len(), cfg)?;
    guard("pair product", n, n, cfg)?;
    // Column H of B is the bitset S(H); fill B^T row by row, then transpose.
    let mut bt = BoolMatrix::zeros(list.len(), n);
    for (col, h) in list.iter().enumerate() {
        bt.row_words_mut(col).copy_from_slice(&g.common_mask(h));
    }
    let b = bt.transpose();
    let c = cfg.backend.mul_transpose_bits(&b, &b)?;
    Ok(Extensions { list, b, c })
}

/// Sums `(B B^T)[v, u]` over the edges `{v, u}` and divides by `C(r, 2)`.
pub fn count_alg2(g: &Graph, r: usize, cfg: &Config) -> Result<CountReport> {
    let start = Instant::now();
    let ext = build(g, r, cfg)?;
    let tally: u64 = g.edges().into_iter().map(|(v, u)| ext.c.get(v, u)).sum();
    let mut report = CountReport::new(Algorithm::Alg2, r, tally, binom_u64(r, 2))?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Completes every edge `{v, u}` with a non-zero entry of `B B^T` using every
/// `K_{r-2}` column extended by both endpoints and returns the smallest copy.
pub fn find_alg2(g: &Graph, r: usize, cfg: &Config) -> Result<FindResult> {
    let ext = build(g, r, cfg)?;
    let mut best = None;
    for (v, u) in g.edges() {
        if ext.c.get(v, u) == 0 {
            continue;
        }
        let both: Vec<u64> = ext
            .b
            .row_words(v)
            .iter()
            .zip(ext.b.row_words(u))
            .map(|(x, y)| x & y)
            .collect();
        for col in iter_bits(&both) {
            let mut vs = ext.list.get(col).to_vec();
            vs.extend([v, u]);
            keep_min(&mut best, vs);
        }
    }
    Ok(FindResult { vertices: best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::{count_bruteforce, count_triangles_ir};
    use crate::graph::is_clique;

    #[test]
    fn k4_hand_trace() {
        let rep = count_alg2(&Graph::complete(4), 4, &Config::default()).unwrap();
        assert_eq!(rep.tally, 6);
        assert_eq!(rep.divisor, 6);
        assert_eq!(rep.count, 1);
    }

    #[test]
    fn triangles_special_case() {
        let cfg = Config::default();
        for seed in 0..5 {
            let g = Graph::gnp(22, 0.45, seed).unwrap();
            assert_eq!(
                count_alg2(&g, 3, &cfg).unwrap().count,
                count_triangles_ir(&g, &cfg).unwrap().count
            );
        }
    }

    #[test]
    fn matches_oracle() {
        let cfg = Config::default();
        let g = Graph::gnp(18, 0.5, 11).unwrap();
        assert_eq!(
            count_alg2(&g, 5, &cfg).unwrap().count,
            count_bruteforce(&g, 5, &cfg).unwrap().count
        );
    }

    #[test]
    fn find_examples() {
        let cfg = Config::default();
        let (g, _) = Graph::planted(20, 0.2, 5, 6).unwrap();
        let found = find_alg2(&g, 5, &cfg).unwrap().vertices.unwrap();
        assert_eq!(found.len(), 5);
        assert!(is_clique(&g, &found).unwrap());
        assert!(!find_alg2(&Graph::petersen(), 4, &cfg).unwrap().is_found());
        assert_eq!(
            find_alg2(&Graph::complete(5), 5, &cfg).unwrap().vertices,
            Some(vec![0, 1, 2, 3, 4])
        );
    }
}
