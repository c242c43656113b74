//! Counting and detection by extending `K_q` copies with two cliques of
//! near-equal size found inside each copy's extension set.

use std::collections::BTreeMap;
use std::time::Instant;

use super::{binom_u64, guard, keep_min, require_r, Algorithm, CountReport, FindResult};
use crate::error::{Error, Result};
use crate::graph::{enumerate_cliques, for_each_clique_in, CliqueList, Graph};
use crate::matrix::{iter_bits, BoolMatrix, IntMatrix};
use crate::Config;

/// `(r1, r2) = (ceil((r-q)/2), floor((r-q)/2))`.
pub fn split_sizes(r: usize, q: usize) -> (usize, usize) {
    let rest = r - q;
    (rest.div_ceil(2), rest / 2)
}

/// `max(1, floor(r/3))`.
pub fn default_q(r: usize) -> usize {
    (r / 3).max(1)
}

/// Incidence of small cliques against the `K_q` copies they extend. Rows are
/// only the cliques that occur in some `G[S(H)]`, sorted lexicographically.
struct Incidence {
    rows: Vec<Vec<usize>>,
    b: BoolMatrix,
}

struct Plan {
    list: CliqueList,
    first: Incidence,
    /// `None` when `r1 == r2` and the second incidence equals the first.
    second: Option<Incidence>,
    /// `B1 * B2^T`.
    c: IntMatrix,
}

impl Plan {
    fn second(&self) -> &Incidence {
        self.second.as_ref().unwrap_or(&self.first)
    }

    /// Visits every `(row1, row2)` with a non-zero product entry whose cliques
    /// are disjoint and jointly complete, in row-major order. Stops when `f`
    /// returns `false`.
    fn scan(&self, g: &Graph, mut f: impl FnMut(usize, usize) -> bool) {
        let second = self.second();
        for (i, s1) in self.first.rows.iter().enumerate() {
            let mask = g.common_mask(s1);
            for (j, s2) in second.rows.iter().enumerate() {
                if self.c.get(i, j) == 0 {
                    continue;
                }
                // s2 inside N(s1) means disjoint and fully cross-adjacent.
                if s2.iter().all(|&v| (mask[v / 64] >> (v % 64)) & 1 == 1) && !f(i, j) {
                    return;
                }
            }
        }
    }
}

fn incidence(
    g: &Graph,
    list: &CliqueList,
    masks: &[Vec<u64>],
    size: usize,
    cfg: &Config,
) -> Result<Incidence> {
    let mut cols_of: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (col, mask) in masks.iter().enumerate() {
        for_each_clique_in(g, mask, size, |s| {
            cols_of.entry(s.to_vec()).or_default().push(col);
        });
    }
    guard("clique incidence matrix", cols_of.len(), list.len(), cfg)?;
    let mut b = BoolMatrix::zeros(cols_of.len(), list.len());
    let mut rows = Vec::with_capacity(cols_of.len());
    for (i, (s, cols)) in cols_of.into_iter().enumerate() {
        for col in cols {
            b.set(i, col, true);
        }
        rows.push(s);
    }
    Ok(Incidence { rows, b })
}

fn plan(g: &Graph, r: usize, q: usize, cfg: &Config) -> Result<Plan> {
    require_r(r, 3)?;
    if q == 0 || q > r - 2 {
        return Err(Error::InvalidInput(format!(
            "q = {q} outside [1, {}] for r = {r}",
            r - 2
        )));
    }
    let (r1, r2) = split_sizes(r, q);
    let list = enumerate_cliques(g, q);
    let masks: Vec<Vec<u64>> = list.iter().map(|h| g.common_mask(h)).collect();
    let first = incidence(g, &list, &masks, r1, cfg)?;
    let second = if r2 == r1 {
        None
    } else {
        Some(incidence(g, &list, &masks, r2, cfg)?)
    };
    let second_ref = second.as_ref().unwrap_or(&first);
    guard(
        "split product",
        first.rows.len(),
        second_ref.rows.len(),
        cfg,
    )?;
    let c = cfg.backend.mul_transpose_bits(&first.b, &second_ref.b)?;
    Ok(Plan {
        list,
        first,
        second,
        c,
    })
}

/// True iff `g` contains a `K_r`. `q` must lie in `[1, r-2]`.
pub fn detect_alg3(g: &Graph, r: usize, q: usize, cfg: &Config) -> Result<bool> {
    let p = plan(g, r, q, cfg)?;
    let mut hit = false;
    p.scan(g, |_, _| {
        hit = true;
        false
    });
    Ok(hit)
}

/// Sums the product entries over all qualifying ordered pairs. A `K_r` copy
/// is reached once for every choice of its `q`-subset `H` and every ordered
/// split of the remaining `r - q` vertices into parts of sizes `r1` and `r2`,
/// giving the divisor `C(r, q) * C(r - q, r1)`.
pub fn count_alg3(g: &Graph, r: usize, q: usize, cfg: &Config) -> Result<CountReport> {
    let start = Instant::now();
    let p = plan(g, r, q, cfg)?;
    let mut tally = 0u64;
    p.scan(g, |i, j| {
        tally += p.c.get(i, j);
        true
    });
    let (r1, _) = split_sizes(r, q);
    let divisor = binom_u64(r, q) * binom_u64(r - q, r1);
    let mut report = CountReport::new(Algorithm::Alg3, r, tally, divisor)?;
    report.q = Some(q);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Completes every qualifying pair with every `K_q` column that both halves
/// extend and returns the smallest copy.
pub fn find_alg3(g: &Graph, r: usize, q: usize, cfg: &Config) -> Result<FindResult> {
    let p = plan(g, r, q, cfg)?;
    let mut pairs = Vec::new();
    p.scan(g, |i, j| {
        pairs.push((i, j));
        true
    });
    let second = p.second();
    let mut best = None;
    for (i, j) in pairs {
        let both: Vec<u64> = p
            .first
            .b
            .row_words(i)
            .iter()
            .zip(second.b.row_words(j))
            .map(|(x, y)| x & y)
            .collect();
        for col in iter_bits(&both) {
            let mut vs = p.list.get(col).to_vec();
            vs.extend_from_slice(&p.first.rows[i]);
            vs.extend_from_slice(&second.rows[j]);
            keep_min(&mut best, vs);
        }
    }
    Ok(FindResult { vertices: best })
}
