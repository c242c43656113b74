//! Shared fixtures for the criterion benches.

use mdclique::rng::GraphRng;
use mdclique::{Graph, IntMatrix};

/// Seeded square matrix with entries in `0..=max`.
pub fn random_matrix(n: usize, max: u64, seed: u64) -> IntMatrix {
    let mut rng = GraphRng::new(seed);
    IntMatrix::from_fn(n, n, |_, _| rng.below(max + 1))
}

/// `G(n, p)` with a fixed seed per `n`.
pub fn host(n: usize, p: f64) -> Graph {
    Graph::gnp(n, p, n as u64).expect("valid probability")
}
