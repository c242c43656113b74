//! `verify`: the cross-algorithm agreement sweep.

use std::io::Write;

use mdclique::matrix::matmul_naive;
use mdclique::{count, count_triangles_ir, Algorithm, Config, Graph};

use crate::args::VerifyArgs;
use crate::error::CliError;

/// Labelled counts for one instance, brute force first.
fn instance_counts(g: &Graph, r: usize, cfg: &Config) -> Result<Vec<(String, u64)>, CliError> {
    let mut out = Vec::new();
    for algo in Algorithm::COUNTERS {
        if algo == Algorithm::Alg3 {
            for q in 1..=r.saturating_sub(2) {
                let c = count(g, algo, r, Some(q), None, cfg)?.count;
                out.push((format!("alg3[q={q}]"), c));
            }
        } else {
            out.push((algo.to_string(), count(g, algo, r, None, None, cfg)?.count));
        }
    }
    if r == 3 {
        out.push(("triangles-ir".into(), count_triangles_ir(g, cfg)?.count));
        let a = g.adjacency().to_int();
        let a3 = matmul_naive(&matmul_naive(&a, &a)?, &a)?;
        let trace = a3.trace()?;
        if trace % 6 != 0 {
            return Err(CliError::Disagreement(format!(
                "trace(A^3) = {trace} is not a multiple of 6"
            )));
        }
        out.push(("trace/6".into(), trace / 6));
    }
    Ok(out)
}

/// Runs the sweep, printing one line per instance. `fault` adds one to the
/// named counter's result, for exercising the failure path.
pub fn run(
    args: &VerifyArgs,
    cfg: &Config,
    out: &mut dyn Write,
    fault: Option<Algorithm>,
) -> Result<i32, CliError> {
    let mut first_bad: Option<String> = None;
    let mut instances = 0usize;
    for &n in &args.n_list {
        for &p in &args.p_list {
            for &seed in &args.seeds {
                let g = Graph::gnp(n, p, seed).map_err(|e| CliError::Usage(e.to_string()))?;
                for &r in &args.r_list {
                    if r < 3 {
                        return Err(CliError::Usage(format!("r = {r}, verify needs r >= 3")));
                    }
                    let mut counts = instance_counts(&g, r, cfg)?;
                    if let Some(f) = fault {
                        for (name, c) in counts.iter_mut() {
                            if name.starts_with(f.as_str()) {
                                *c += 1;
                            }
                        }
                    }
                    instances += 1;
                    let expected = counts[0].1;
                    let bad = counts.iter().find(|(_, c)| *c != expected);
                    let cells: Vec<String> = counts
                        .iter()
                        .map(|(name, c)| format!("{name}={c}"))
                        .collect();
                    let status = if bad.is_some() { "MISMATCH" } else { "ok" };
                    writeln!(
                        out,
                        "n={n} p={p} seed={seed} r={r} {} {status}",
                        cells.join(" ")
                    )?;
                    if let (Some((name, got)), None) = (bad, &first_bad) {
                        first_bad = Some(format!(
                            "instance n={n} p={p} seed={seed} r={r}: {name} expected {expected} got {got}"
                        ));
                    }
                }
            }
        }
    }
    match first_bad {
        Some(msg) => Err(CliError::Disagreement(msg)),
        None => {
            writeln!(out, "verified {instances} instances: all counters agree")?;
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyArgs {
        VerifyArgs {
            n_list: vec![8],
            p_list: vec![0.6],
            r_list: vec![3, 4],
            seeds: vec![1],
        }
    }

    #[test]
    fn clean_sweep_passes() {
        let mut buf = Vec::new();
        assert_eq!(
            run(&small(), &Config::default(), &mut buf, None).unwrap(),
            0
        );
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("trace/6="));
        assert!(text.ends_with("verified 2 instances: all counters agree\n"));
    }

    #[test]
    fn injected_fault_exits_five() {
        let mut buf = Vec::new();
        let err = run(
            &small(),
            &Config::default(),
            &mut buf,
            Some(Algorithm::Alg2),
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 5);
        let msg = err.to_string();
        assert!(msg.contains("n=8 p=0.6 seed=1 r=3: alg2 expected"), "{msg}");
    }
}
