use std::time::Instant;

use super::{binomial, Algorithm, CountReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Config;

/// Counts `K_r` copies by testing every `r`-subset of the vertex set.
/// Shares no code with the enumeration used by the other counters.
pub fn count_bruteforce(g: &Graph, r: usize, cfg: &Config) -> Result<CountReport> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    let n = g.n();
    let subsets = binomial(n as u64, r as u64);
    if subsets > cfg.max_subsets as u128 {
        return Err(Error::WorkLimit {
            what: "brute-force subset scan",
            requested: subsets,
            limit: cfg.max_subsets,
        });
    }
    let start = Instant::now();
    let mut tally = 0u64;
    if r <= n {
        let mut s: Vec<usize> = (0..r).collect();
        loop {
            let clique = (0..r).all(|i| (i + 1..r).all(|j| g.has_edge(s[i], s[j])));
            tally += clique as u64;
            // Advance to the next subset in lexicographic order.
            let Some(i) = (0..r).rev().find(|&i| s[i] < n - r + i) else {
                break;
            };
            s[i] += 1;
            for j in i + 1..r {
                s[j] = s[j - 1] + 1;
            }
        }
    }
    let mut report = CountReport::new(Algorithm::Brute, r, tally, 1)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let cfg = Config::default();
        assert_eq!(
            count_bruteforce(&Graph::complete(6), 4, &cfg)
                .unwrap()
                .count,
            15
        );
        assert_eq!(
            count_bruteforce(&Graph::cycle(5), 3, &cfg).unwrap().count,
            0
        );
        assert_eq!(
            count_bruteforce(&Graph::complete(3), 5, &cfg)
                .unwrap()
                .count,
            0
        );
        assert_eq!(
            count_bruteforce(&Graph::cycle(5), 1, &cfg).unwrap().count,
            5
        );
        assert_eq!(
            count_bruteforce(&Graph::cycle(5), 2, &cfg).unwrap().count,
            5
        );
        assert!(count_bruteforce(&Graph::cycle(5), 0, &cfg).is_err());
    }

    #[test]
    fn work_limit() {
        let cfg = Config::default();
        let big = Graph::empty(200);
        assert!(matches!(
            count_bruteforce(&big, 5, &cfg),
            Err(Error::WorkLimit { .. })
        ));
    }
}
