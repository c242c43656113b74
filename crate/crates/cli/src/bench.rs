//! `bench`: timed runs written as CSV.

use std::fs::File;
use std::io::Write;
use std::time::Instant;

use mdclique::matrix::{matmul_blocked, matmul_naive, DEFAULT_TILE};
use mdclique::{count, default_q, Algorithm, Backend, Config, Graph};

use crate::args::BenchArgs;
use crate::error::CliError;
use crate::record::{write_records, BenchRecord};

fn millis(start: Instant) -> i64 {
    start.elapsed().as_millis() as i64
}

/// Runs every requested algorithm on `G(n, p, seed)` for each `n`.
pub fn collect(args: &BenchArgs, cfg: &Config) -> Result<Vec<BenchRecord>, CliError> {
    let mut records = Vec::new();
    for &n in &args.n_list {
        let g = Graph::gnp(n, args.p, args.seed).map_err(|e| CliError::Usage(e.to_string()))?;
        for &a in &args.algos {
            let algo = Algorithm::from(a);
            let start = Instant::now();
            let result = count(&g, algo, args.r, args.q, args.k1, cfg);
            let elapsed_ms = millis(start);
            let mut record = BenchRecord {
                algorithm: algo.to_string(),
                n,
                p: Some(args.p),
                r: Some(args.r),
                q: None,
                k1: None,
                seed: Some(args.seed),
                count: None,
                elapsed_ms: -1,
            };
            match result {
                Ok(report) => {
                    record.q = report.q;
                    record.k1 = report.k1;
                    record.count = Some(report.count);
                    record.elapsed_ms = elapsed_ms;
                }
                Err(e) if e.is_guard() => {
                    record.q =
                        (algo == Algorithm::Alg3).then(|| args.q.unwrap_or(default_q(args.r)));
                    record.k1 = (algo == Algorithm::Alg1)
                        .then(|| args.k1.unwrap_or((args.r - 1).div_ceil(2)));
                }
                Err(e) => return Err(e.into()),
            }
            records.push(record);
        }
        if args.matmul {
            records.extend(time_matmul(&g, cfg)?);
        }
    }
    Ok(records)
}

fn time_matmul(g: &Graph, cfg: &Config) -> Result<[BenchRecord; 2], CliError> {
    let a = g.adjacency().to_int();
    let tile = match cfg.backend {
        Backend::Blocked { tile } => tile,
        _ => DEFAULT_TILE,
    };
    let start = Instant::now();
    let naive = matmul_naive(&a, &a)?;
    let naive_ms = millis(start);
    let start = Instant::now();
    let blocked = matmul_blocked(&a, &a, tile)?;
    let blocked_ms = millis(start);
    let row = |name: &str, sum: u64, ms: i64| BenchRecord {
        algorithm: name.to_string(),
        n: g.n(),
        p: None,
        r: None,
        q: None,
        k1: None,
        seed: None,
        count: Some(sum),
        elapsed_ms: ms,
    };
    Ok([
        row("matmul-naive", naive.sum(), naive_ms),
        row("matmul-blocked", blocked.sum(), blocked_ms),
    ])
}

/// Checks that all completed clique counters agree for each `n`, and that
/// the two multiply backends agree with each other.
pub fn check_groups(records: &[BenchRecord]) -> Result<(), CliError> {
    let mut groups: Vec<((usize, bool), u64, &str)> = Vec::new();
    for rec in records.iter().filter(|r| !r.is_skipped()) {
        let key = (rec.n, rec.algorithm.starts_with("matmul-"));
        let c = rec.count.expect("not skipped");
        match groups.iter().find(|(k, _, _)| *k == key) {
            Some((_, expected, first)) if *expected != c => {
                return Err(CliError::Disagreement(format!(
                    "n={}: {} counted {} but {} counted {}",
                    rec.n, first, expected, rec.algorithm, c
                )));
            }
            Some(_) => {}
            None => groups.push((key, c, &rec.algorithm)),
        }
    }
    Ok(())
}

pub fn run(args: &BenchArgs, cfg: &Config, out: &mut dyn Write) -> Result<i32, CliError> {
    let records = collect(args, cfg)?;
    match &args.csv {
        Some(path) => write_records(File::create(path)?, &records)?,
        None => write_records(&mut *out, &records)?,
    }
    check_groups(&records)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::AlgoArg;

    fn args() -> BenchArgs {
        BenchArgs {
            n_list: vec![16, 24],
            p: 0.4,
            r: 4,
            algos: vec![AlgoArg::Alg1, AlgoArg::Alg2],
            q: None,
            k1: None,
            seed: 3,
            matmul: true,
            csv: None,
        }
    }

    #[test]
    fn rows_per_algorithm_and_n() {
        let recs = collect(&args(), &Config::default()).unwrap();
        assert_eq!(recs.len(), 8);
        assert_eq!(recs[0].count, recs[1].count);
        assert_eq!(recs[2].count, recs[3].count);
        check_groups(&recs).unwrap();
    }

    #[test]
    fn guarded_runs_become_skipped_rows() {
        let cfg = Config {
            max_entries: 1000,
            ..Config::default()
        };
        let mut a = args();
        a.matmul = false;
        let recs = collect(&a, &cfg).unwrap();
        let alg1: Vec<_> = recs.iter().filter(|r| r.algorithm == "alg1").collect();
        assert!(alg1
            .iter()
            .all(|r| r.is_skipped() && r.elapsed_ms == -1 && r.k1 == Some(2)));
        check_groups(&recs).unwrap();
    }

    #[test]
    fn disagreement_is_reported() {
        let mut recs = collect(&args(), &Config::default()).unwrap();
        recs[1].count = recs[1].count.map(|c| c + 1);
        assert_eq!(check_groups(&recs).unwrap_err().exit_code(), 5);
    }
}
