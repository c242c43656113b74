//! Host graphs: adjacency storage, clique enumeration and extension sets.

mod gen;
mod io;

pub use io::{emit_edge_list, parse_dimacs, parse_edge_list, parse_graph};

use crate::error::{Error, Result};
use crate::matrix::{iter_bits, BoolMatrix};

/// Simple undirected graph on vertices `0..n`, stored as a symmetric bit
/// adjacency matrix with an all-zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BoolMatrix,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: BoolMatrix::zeros(n, n),
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: BoolMatrix::from_fn(n, n, |i, j| i != j),
        }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; repeated edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidInput(format!(
                "edge ({u},{v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        self.adj.set(u, v, true);
        self.adj.set(v, u, true);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    /// The 0/1 adjacency matrix `A`.
    #[inline]
    pub fn adjacency(&self) -> &BoolMatrix {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    /// Packed neighbourhood bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u64] {
        self.adj.row_words(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.count_ones() as usize / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| {
                iter_bits(self.neighbors(u))
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Bitset of all vertices.
    pub(crate) fn full_mask(&self) -> Vec<u64> {
        let n = self.n();
        let mut words = vec![u64::MAX; self.adj.words_per_row()];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        words
    }

    /// Bitset of vertices adjacent to every vertex of `tuple`.
    pub(crate) fn common_mask(&self, tuple: &[usize]) -> Vec<u64> {
        let mut mask = self.full_mask();
        for &v in tuple {
            for (m, &w) in mask.iter_mut().zip(self.neighbors(v)) {
                *m &= w;
            }
        }
        mask
    }

    fn check_vertices(&self, vs: &[usize]) -> Result<()> {
        match vs.iter().find(|&&v| v >= self.n()) {
            Some(v) => Err(Error::InvalidInput(format!(
                "vertex {v} out of range for {} vertices",
                self.n()
            ))),
            None => Ok(()),
        }
    }
}

/// All copies of `K_t` in a graph, each as a strictly increasing tuple, in
/// lexicographic order. Stored flat with stride `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueList {
    t: usize,
    flat: Vec<usize>,
    len: usize,
}

impl CliqueList {
    fn new(t: usize) -> Self {
        CliqueList {
            t,
            flat: Vec::new(),
            len: 0,
        }
    }

    fn push(&mut self, tuple: &[usize]) {
        debug_assert_eq!(tuple.len(), self.t);
        self.flat.extend_from_slice(tuple);
        self.len += 1;
    }

    /// Clique size.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> &[usize] {
        &self.flat[i * self.t..(i + 1) * self.t]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

/// Visits every `K_t` copy whose vertices all lie in `allowed`, in
/// lexicographic order. Candidates are narrowed by intersecting
/// neighbourhoods and keeping only vertices above the current maximum.
pub(crate) fn for_each_clique_in(
    g: &Graph,
    allowed: &[u64],
    t: usize,
    mut visit: impl FnMut(&[usize]),
) {
    if t == 0 {
        visit(&[]);
        return;
    }
    let mut tuple = Vec::with_capacity(t);
    let mut stack: Vec<Vec<u64>> = Vec::with_capacity(t);
    stack.push(allowed.to_vec());
    extend(g, t, &mut tuple, &mut stack, &mut visit);
}

fn extend(
    g: &Graph,
    t: usize,
    tuple: &mut Vec<usize>,
    stack: &mut Vec<Vec<u64>>,
    visit: &mut impl FnMut(&[usize]),
) {
    let cand = stack.last().expect("candidate stack").clone();
    for v in iter_bits(&cand) {
        tuple.push(v);
        if tuple.len() == t {
            visit(tuple);
        } else {
            let mut next: Vec<u64> = cand
                .iter()
                .zip(g.neighbors(v))
                .map(|(c, n)| c & n)
                .collect();
            clear_through(&mut next, v);
            if next.iter().any(|&w| w != 0) {
                stack.push(next);
                extend(g, t, tuple, stack, visit);
                stack.pop();
            }
        }
        tuple.pop();
    }
}

/// Clears bits `0..=v`.
fn clear_through(words: &mut [u64], v: usize) {
    let wi = v / 64;
    for w in &mut words[..wi] {
        *w = 0;
    }
    let b = v % 64;
    words[wi] &= if b == 63 { 0 } else { !((1u64 << (b + 1)) - 1) };
}

/// Lists every copy of `K_t` in `g`. `t = 0` yields the single empty tuple.
pub fn enumerate_cliques(g: &Graph, t: usize) -> CliqueList {
    enumerate_cliques_in(g, &g.full_mask(), t)
}

/// Lists the `K_t` copies of the induced subgraph `G[allowed]`.
pub fn enumerate_cliques_in(g: &Graph, allowed: &[u64], t: usize) -> CliqueList {
    let mut list = CliqueList::new(t);
    for_each_clique_in(g, allowed, t, |c| list.push(c));
    list
}

/// `S(H)`: vertices adjacent to every vertex of the clique `h`, in increasing
/// order. Never intersects `h`.
pub fn extension_set(g: &Graph, h: &[usize]) -> Result<Vec<usize>> {
    if !is_clique(g, h)? {
        return Err(Error::InvalidInput(format!("{h:?} is not a clique")));
    }
    Ok(iter_bits(&g.common_mask(h)).collect())
}

/// True iff every pair of vertices in `s` is adjacent.
pub fn is_clique(g: &Graph, s: &[usize]) -> Result<bool> {
    g.check_vertices(s)?;
    Ok(s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v))))
}

/// `|N(v_1) ∩ ... ∩ N(v_k)|` by direct bitset intersection.
///
/// Panics if a vertex is out of range.
pub fn common_neighbor_count(g: &Graph, tuple: &[usize]) -> u64 {
    g.common_mask(tuple)
        .iter()
        .map(|w| w.count_ones() as u64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Every `t`-subset of `0..n` in lexicographic order.
    fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == t {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, t, cur, out);
                cur.pop();
            }
        }
        rec(0, n, t, &mut cur, &mut out);
        out
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_cliques(&Graph::complete(5), 3).len(), 10);
        assert!(enumerate_cliques(&Graph::cycle(5), 3).is_empty());
        let singles = enumerate_cliques(&Graph::empty(4), 1);
        assert_eq!(
            singles.iter().collect::<Vec<_>>(),
            vec![&[0][..], &[1], &[2], &[3]]
        );
        assert_eq!(enumerate_cliques(&Graph::empty(4), 0).len(), 1);
    }

    #[test]
    fn enumerate_matches_subset_scan() {
        let g = Graph::gnp(15, 0.5, 1).unwrap();
        let scanned: Vec<Vec<usize>> = subsets(15, 4)
            .into_iter()
            .filter(|s| is_clique(&g, s).unwrap())
            .collect();
        let listed: Vec<Vec<usize>> = enumerate_cliques(&g, 4)
            .iter()
            .map(<[usize]>::to_vec)
            .collect();
        assert_eq!(listed, scanned);
    }

    #[test]
    fn enumerate_exhaustive_small() {
        for seed in 0..4 {
            for &p in &[0.3, 0.6, 0.9] {
                let g = Graph::gnp(16, p, seed).unwrap();
                for t in 1..=5 {
                    let expected: Vec<Vec<usize>> = subsets(16, t)
                        .into_iter()
                        .filter(|s| is_clique(&g, s).unwrap())
                        .collect();
                    let listed: Vec<Vec<usize>> = enumerate_cliques(&g, t)
                        .iter()
                        .map(<[usize]>::to_vec)
                        .collect();
                    assert_eq!(listed, expected, "seed {seed} p {p} t {t}");
                }
            }
        }
    }

    #[test]
    fn complete_graph_closed_form() {
        for n in 0..=12 {
            for t in 1..=6 {
                assert_eq!(enumerate_cliques(&Graph::complete(n), t).len(), binom(n, t));
            }
        }
    }

    #[test]
    fn enumerate_across_word_boundary() {
        let g = Graph::complete(70);
        assert_eq!(enumerate_cliques(&g, 2).len(), binom(70, 2));
        let last = enumerate_cliques(&g, 2);
        assert_eq!(last.get(last.len() - 1), &[68, 69]);
    }

    #[test]
    fn extension_examples() {
        assert_eq!(
            extension_set(&Graph::complete(4), &[0, 1, 2]).unwrap(),
            vec![3]
        );
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(extension_set(&star, &[1]).unwrap(), vec![0]);
        assert!(extension_set(&star, &[1, 2]).is_err());

        let g = Graph::gnp(12, 0.6, 3).unwrap();
        for h in enumerate_cliques(&g, 2).iter() {
            let direct: Vec<usize> = (0..12)
                .filter(|&w| g.has_edge(h[0], w) && g.has_edge(h[1], w))
                .collect();
            assert_eq!(extension_set(&g, h).unwrap(), direct);
        }
    }

    #[test]
    fn extension_set_is_one_vertex_growth() {
        for seed in 0..3 {
            let g = Graph::gnp(16, 0.5, seed).unwrap();
            for t in 1..=3 {
                for h in enumerate_cliques(&g, t).iter() {
                    let direct: Vec<usize> = (0..16)
                        .filter(|v| !h.contains(v))
                        .filter(|&v| {
                            let mut s = h.to_vec();
                            s.push(v);
                            is_clique(&g, &s).unwrap()
                        })
                        .collect();
                    assert_eq!(extension_set(&g, h).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn is_clique_examples() {
        let mut g = Graph::complete(4);
        assert!(is_clique(&g, &[2]).unwrap());
        assert!(is_clique(&g, &[]).unwrap());
        g.adj.set(0, 1, false);
        g.adj.set(1, 0, false);
        assert!(!is_clique(&g, &[0, 1, 2, 3]).unwrap());
        assert!(is_clique(&g, &[0, 9]).is_err());
        let (pg, planted) = Graph::planted(20, 0.1, 6, 4).unwrap();
        assert!(is_clique(&pg, &planted).unwrap());
    }

    #[test]
    fn common_neighbor_examples() {
        assert_eq!(common_neighbor_count(&Graph::complete(4), &[0, 1, 2]), 1);
        assert_eq!(common_neighbor_count(&Graph::empty(6), &[1, 4]), 0);
        let g = Graph::gnp(9, 0.5, 2).unwrap();
        for u in 0..9 {
            assert_eq!(common_neighbor_count(&g, &[u]), g.degree(u) as u64);
        }
    }

    #[test]
    fn edges_are_sorted_and_symmetric() {
        let g = Graph::gnp(30, 0.4, 5).unwrap();
        let e = g.edges();
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(e.len(), g.edge_count());
        for i in 0..30 {
            assert!(!g.has_edge(i, i));
            for j in 0..30 {
                assert_eq!(g.has_edge(i, j), g.has_edge(j, i));
            }
        }
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}
