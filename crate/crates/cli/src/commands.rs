//! `gen`, `count`, `detect` and `find`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use mdclique::{
    count, detect_alg3, emit_edge_list, find, is_clique, parse_graph, Algorithm, Config, Graph,
};

use crate::args::{CountArgs, GenArgs, ModelArg, SearchArgs};
use crate::error::CliError;
use crate::record::{append_record, BenchRecord};

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn sidecar(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".planted");
    PathBuf::from(s)
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn gen(args: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let usage = |e: mdclique::Error| CliError::Usage(e.to_string());
    let (graph, planted) = match args.model {
        ModelArg::Gnp => (Graph::gnp(args.n, args.p, args.seed).map_err(usage)?, None),
        ModelArg::Planted => {
            let r = args
                .r
                .ok_or_else(|| CliError::Usage("--model planted needs --r".into()))?;
            let (g, set) = Graph::planted(args.n, args.p, r, args.seed).map_err(usage)?;
            (g, Some(set))
        }
        ModelArg::Complete => (Graph::complete(args.n), None),
        ModelArg::Empty => (Graph::empty(args.n), None),
    };
    let text = emit_edge_list(&graph);
    match &args.out {
        Some(path) => {
            fs::write(path, text)?;
            if let Some(set) = &planted {
                fs::write(sidecar(path), format!("{}\n", join(set)))?;
            }
        }
        None => {
            out.write_all(text.as_bytes())?;
            if let Some(set) = &planted {
                writeln!(err, "planted: {}", join(set))?;
            }
        }
    }
    Ok(0)
}

pub fn count_cmd(args: &CountArgs, cfg: &Config, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&args.input)?;
    let algo = Algorithm::from(args.algo);
    let report = count(&g, algo, args.r, args.q, args.k1, cfg)?;
    writeln!(out, "count={}", report.count)?;
    if let Some(path) = &args.csv {
        let record = BenchRecord {
            algorithm: algo.to_string(),
            n: g.n(),
            p: None,
            r: Some(args.r),
            q: report.q,
            k1: report.k1,
            seed: None,
            count: Some(report.count),
            elapsed_ms: report.elapsed.as_millis() as i64,
        };
        append_record(path, &record)?;
    }
    Ok(0)
}

pub fn detect(args: &SearchArgs, cfg: &Config, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&args.input)?;
    let present = match Algorithm::from(args.algo) {
        Algorithm::Alg3 => {
            let q = args.q.unwrap_or_else(|| mdclique::default_q(args.r));
            detect_alg3(&g, args.r, q, cfg)?
        }
        algo => find(&g, algo, args.r, None, cfg)?.is_found(),
    };
    writeln!(out, "{}", if present { "YES" } else { "NO" })?;
    Ok(if present { 0 } else { 1 })
}

/// Re-checks a reported clique before it is printed.
pub fn verify_found(g: &Graph, r: usize, vs: &[usize]) -> Result<(), CliError> {
    let sorted = vs.windows(2).all(|w| w[0] < w[1]);
    let valid = vs.len() == r && sorted && is_clique(g, vs).unwrap_or(false);
    if !valid {
        return Err(CliError::SelfCheck(format!(
            "{vs:?} is not a sorted {r}-clique"
        )));
    }
    Ok(())
}

pub fn find_cmd(args: &SearchArgs, cfg: &Config, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&args.input)?;
    let result = find(&g, args.algo.into(), args.r, args.q, cfg)?;
    match result.vertices {
        Some(vs) => {
            verify_found(&g, args.r, &vs)?;
            writeln!(out, "{}", join(&vs))?;
        }
        None => writeln!(out, "none")?,
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_check_rejects_bad_sets() {
        let g = Graph::cycle(5);
        assert!(verify_found(&g, 2, &[0, 1]).is_ok());
        let e = verify_found(&g, 3, &[0, 1, 2]).unwrap_err();
        assert_eq!(e.exit_code(), 4);
        assert_eq!(verify_found(&g, 2, &[1, 0]).unwrap_err().exit_code(), 4);
        assert_eq!(verify_found(&g, 3, &[0, 1]).unwrap_err().exit_code(), 4);
        assert_eq!(verify_found(&g, 2, &[0, 9]).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn sidecar_name() {
        assert_eq!(
            sidecar(Path::new("/tmp/g.txt")),
            PathBuf::from("/tmp/g.txt.planted")
        );
    }
}
