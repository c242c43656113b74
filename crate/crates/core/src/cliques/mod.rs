//! `K_r` counting, detection and finding.
//!
//! Every counter accumulates an over-count (the tally) and divides it by a
//! fixed multiplicity. Reports keep both so the division can be audited.
//!
//! | algorithm  | tally                                            | divisor                 |
//! |------------|--------------------------------------------------|-------------------------|
//! | `brute`    | `r`-subsets inducing a clique                    | 1                       |
//! | `triangle` | triangles of the auxiliary tripartite graph      | `r! / (p1! p2! p3!)`    |
//! | `alg1`     | common-neighbour counts over `K_{r-1}` copies    | `r`                     |
//! | `alg2`     | `(B B^T)[v,u]` over edges `{v,u}`                | `C(r, 2)`               |
//! | `alg3`     | `(B1 B2^T)[s1,s2]` over compatible ordered pairs | `C(r, q) * C(r-q, r1)`  |

mod alg1;
mod alg2;
mod alg3;
mod brute;
mod triangle;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

pub use alg1::{count_alg1, find_alg1};
pub use alg2::{count_alg2, find_alg2};
pub use alg3::{count_alg3, default_q, detect_alg3, find_alg3, split_sizes};
pub use brute::count_bruteforce;
pub use triangle::{count_triangle_method, count_triangles_ir, part_sizes};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Config;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Brute,
    /// Square-and-sum triangle counting (`r = 3` only).
    TrianglesIr,
    Triangle,
    Alg1,
    Alg2,
    Alg3,
}

impl Algorithm {
    pub const COUNTERS: [Algorithm; 5] = [
        Algorithm::Brute,
        Algorithm::Triangle,
        Algorithm::Alg1,
        Algorithm::Alg2,
        Algorithm::Alg3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::TrianglesIr => "triangles-ir",
            Algorithm::Triangle => "triangle",
            Algorithm::Alg1 => "alg1",
            Algorithm::Alg2 => "alg2",
            Algorithm::Alg3 => "alg3",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "brute" => Algorithm::Brute,
            "triangles-ir" => Algorithm::TrianglesIr,
            "triangle" => Algorithm::Triangle,
            "alg1" => Algorithm::Alg1,
            "alg2" => Algorithm::Alg2,
            "alg3" => Algorithm::Alg3,
            other => return Err(Error::InvalidInput(format!("unknown algorithm `{other}`"))),
        })
    }
}

/// Result of one counting run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub algorithm: Algorithm,
    pub r: usize,
    pub q: Option<usize>,
    pub k1: Option<usize>,
    /// Number of `K_r` copies.
    pub count: u64,
    /// Undivided accumulator.
    pub tally: u64,
    /// Multiplicity correction; `count * divisor == tally`.
    pub divisor: u64,
    pub elapsed: Duration,
}

impl CountReport {
    fn new(algorithm: Algorithm, r: usize, tally: u64, divisor: u64) -> Result<Self> {
        if !tally.is_multiple_of(divisor) {
            return Err(Error::Indivisible {
                algorithm: algorithm.as_str(),
                tally,
                divisor,
            });
        }
        Ok(CountReport {
            algorithm,
            r,
            q: None,
            k1: None,
            count: tally / divisor,
            tally,
            divisor,
            elapsed: Duration::ZERO,
        })
    }
}

/// Outcome of a find call: a sorted `r`-clique, or nothing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FindResult {
    pub vertices: Option<Vec<usize>>,
}

impl FindResult {
    pub fn none() -> Self {
        FindResult { vertices: None }
    }

    fn found(mut vs: Vec<usize>) -> Self {
        vs.sort_unstable();
        FindResult { vertices: Some(vs) }
    }

    pub fn is_found(&self) -> bool {
        self.vertices.is_some()
    }
}

/// Keeps the lexicographically smaller of `best` and the sorted `cand`.
fn keep_min(best: &mut Option<Vec<usize>>, mut cand: Vec<usize>) {
    cand.sort_unstable();
    if best.as_ref().is_none_or(|b| cand < *b) {
        *best = Some(cand);
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn binom_u64(n: usize, k: usize) -> u64 {
    u64::try_from(binomial(n as u64, k as u64)).expect("binomial fits in u64")
}

fn require_r(r: usize, min: usize) -> Result<()> {
    if r < min {
        return Err(Error::InvalidInput(format!("r = {r}, need r >= {min}")));
    }
    Ok(())
}

fn guard(what: &'static str, rows: usize, cols: usize, cfg: &Config) -> Result<()> {
    let requested = rows as u128 * cols as u128;
    if requested > cfg.max_entries as u128 {
        return Err(Error::MemoryGuard {
            what,
            requested,
            limit: cfg.max_entries,
        });
    }
    Ok(())
}

/// Dispatches to the counter named by `algo`. `q` is used by `alg3` (falling
/// back to [`default_q`]) and `k1` by `alg1`; both are ignored otherwise.
pub fn count(
    g: &Graph,
    algo: Algorithm,
    r: usize,
    q: Option<usize>,
    k1: Option<usize>,
    cfg: &Config,
) -> Result<CountReport> {
    match algo {
        Algorithm::Brute => count_bruteforce(g, r, cfg),
        Algorithm::TrianglesIr => {
            if r != 3 {
                return Err(Error::InvalidInput("triangles-ir counts r = 3 only".into()));
            }
            count_triangles_ir(g, cfg)
        }
        Algorithm::Triangle => count_triangle_method(g, r, cfg),
        Algorithm::Alg1 => count_alg1(g, r, k1, cfg),
        Algorithm::Alg2 => count_alg2(g, r, cfg),
        Algorithm::Alg3 => count_alg3(g, r, q.unwrap_or_else(|| default_q(r)), cfg),
    }
}

/// Dispatches to a finder. Only `alg1`, `alg2` and `alg3` have one.
pub fn find(
    g: &Graph,
    algo: Algorithm,
    r: usize,
    q: Option<usize>,
    cfg: &Config,
) -> Result<FindResult> {
    match algo {
        Algorithm::Alg1 => find_alg1(g, r, cfg),
        Algorithm::Alg2 => find_alg2(g, r, cfg),
        Algorithm::Alg3 => find_alg3(g, r, q.unwrap_or_else(|| default_q(r)), cfg),
        other => Err(Error::InvalidInput(format!(
            "`{other}` has no find variant"
        ))),
    }
}
