//! Instance generators.

use super::Graph;
use crate::error::{Error, Result};
use crate::rng::GraphRng;

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidInput(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    Ok(())
}

impl Graph {
    /// Erdős–Rényi `G(n, p)`. Pairs `(i, j)`, `i < j`, are visited in
    /// lexicographic order and each consumes exactly one `bernoulli(p)` draw.
    pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
        check_probability(p)?;
        let mut rng = GraphRng::new(seed);
        Ok(gnp_with(n, p, &mut rng))
    }

    /// `G(n, p)` with a clique forced on `r` vertices. The background is drawn
    /// first; the planted set then comes from a partial Fisher–Yates shuffle
    /// of `0..n` on the same stream (`swap(i, i + below(n - i))`). Returns the
    /// planted vertices sorted.
    pub fn planted(n: usize, p: f64, r: usize, seed: u64) -> Result<(Graph, Vec<usize>)> {
        check_probability(p)?;
        if r > n {
            return Err(Error::InvalidInput(format!(
                "cannot plant K_{r} in {n} vertices"
            )));
        }
        let mut rng = GraphRng::new(seed);
        let mut g = gnp_with(n, p, &mut rng);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in 0..r {
            let j = i + rng.below((n - i) as u64) as usize;
            perm.swap(i, j);
        }
        let mut set = perm[..r].to_vec();
        set.sort_unstable();
        for (a, &u) in set.iter().enumerate() {
            for &v in &set[a + 1..] {
                g.adj.set(u, v, true);
                g.adj.set(v, u, true);
            }
        }
        Ok((g, set))
    }

    /// The cycle `0-1-...-(n-1)-0`. For `n < 3` this is a path.
    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j {
                g.adj.set(i, j, true);
                g.adj.set(j, i, true);
            }
        }
        g
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("static edge list")
    }
}

fn gnp_with(n: usize, p: f64, rng: &mut GraphRng) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.bernoulli(p) {
                g.adj.set(i, j, true);
                g.adj.set(j, i, true);
            }
        }
    }
    g
}
