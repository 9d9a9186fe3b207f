//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use interval_coloring::io::{coloring_to_json, spectrum_csv_rows, SPECTRUM_CSV_HEADER};
use interval_coloring::{
    chromatic_index_is_delta, closed_form_diameter, families, interval_spectrum, is_interval,
    is_interval_colorable, moebius_ladder, moebius_max_coloring, search_interval_coloring, Cap, Graph,
    SearchStatus, SolverOptions,
};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ladder(n: usize) -> Graph {
    moebius_ladder(n).unwrap().into_graph()
}

/// Explicit construction: valid interval (n+2)-coloring, every color used.
fn construction_validity() -> Check {
    for n in 2..=200 {
        let g = ladder(n);
        let c = moebius_max_coloring(n).map_err(|e| format!("n = {n}: {e}"))?;
        let report = is_interval(&g, &c);
        ensure(c.t() as usize == n + 2, || format!("n = {n}: t = {}", c.t()))?;
        ensure(report.verdict(), || format!("n = {n}: {:?}", report.violations))?;
        let used: BTreeSet<u32> = c.colors().iter().copied().collect();
        ensure(used == (1..=n as u32 + 2).collect(), || {
            format!("n = {n}: colors used {used:?}")
        })?;
    }
    Ok("n = 2..=200 all interval with t = n + 2".into())
}

fn diameter_formula() -> Check {
    for n in 2..=64 {
        let bfs = ladder(n).diameter();
        let closed = closed_form_diameter(n).unwrap();
        ensure(bfs == closed && closed == n.div_ceil(2), || {
            format!("n = {n}: bfs {bfs}, formula {closed}")
        })?;
    }
    Ok("n = 2..=64 BFS diameter = ceil(n/2)".into())
}

fn csv_path() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("moebius_spectrum.csv")
}

fn moebius_spectrum() -> Check {
    let mut csv = format!("{SPECTRUM_CSV_HEADER}\n");
    let mut summary = Vec::new();
    for n in 2..=6usize {
        let g = ladder(n);
        let report = interval_spectrum(&g, Cap::Auto, SolverOptions::default()).map_err(|e| e.to_string())?;
        csv.push_str(&spectrum_csv_rows(Some(n), &report));
        let expected: Vec<u32> = (3..=n as u32 + 2).collect();
        ensure(report.feasible_t == expected, || {
            format!("n = {n}: feasible {:?}", report.feasible_t)
        })?;
        ensure(report.inconclusive_t.is_empty(), || {
            format!("n = {n}: inconclusive {:?}", report.inconclusive_t)
        })?;
        ensure(report.t_max_searched as usize >= n + 2, || {
            format!("n = {n}: cap {}", report.t_max_searched)
        })?;
        if n % 2 == 1 {
            // The bipartite bound is already n + 2; n + 3 is searched separately.
            ensure(report.t_max_searched as usize == n + 2, || {
                format!("n = {n}: cap {}", report.t_max_searched)
            })?;
            let beyond = search_interval_coloring(&g, n as u32 + 3, SolverOptions::default());
            ensure(beyond.status == SearchStatus::Infeasible, || {
                format!("n = {n}: t = n+3 {:?}", beyond.status)
            })?;
        } else {
            ensure(report.t_max_searched as usize == n + 3, || {
                format!("n = {n}: cap {}", report.t_max_searched)
            })?;
            ensure(report.infeasible_t == vec![n as u32 + 3], || {
                format!("n = {n}: infeasible {:?}", report.infeasible_t)
            })?;
        }
        ensure(report.w == Some(3) && report.big_w == Some(n as u32 + 2), || {
            format!("n = {n}: w = {:?}, W = {:?}", report.w, report.big_w)
        })?;
        for (&t, c) in &report.witnesses {
            ensure(is_interval(&g, c).verdict() && c.t() == t, || {
                format!("n = {n}: bad witness for t = {t}")
            })?;
        }
        let nodes: u64 = report.runs.iter().map(|r| r.nodes).sum();
        summary.push(format!("n={n}: {nodes} nodes"));
    }
    std::fs::write(csv_path(), csv).map_err(|e| e.to_string())?;
    Ok(format!(
        "spectra {{3..n+2}} for n = 2..=6 ({}); csv at {}",
        summary.join(", "),
        csv_path().display()
    ))
}

fn chromatic_index_cross_check() -> Check {
    for n in 2..=8 {
        ensure(chromatic_index_is_delta(&ladder(n)), || {
            format!("M_{} not class 1", 2 * n)
        })?;
        ensure(is_interval_colorable(&ladder(n)), || {
            format!("M_{} not interval colorable", 2 * n)
        })?;
    }
    let petersen = families::petersen();
    ensure(!chromatic_index_is_delta(&petersen), || {
        "Petersen reported class 1".into()
    })?;
    ensure(!chromatic_index_is_delta(&families::cycle(5)), || {
        "C_5 reported class 1".into()
    })?;
    ensure(!is_interval_colorable(&petersen), || {
        "Petersen reported interval colorable".into()
    })?;
    Ok("M_4..M_16 class 1 and interval colorable; Petersen and C_5 class 2".into())
}

fn oracle_corpus() -> Vec<Graph> {
    common::connected_graphs(6, 9)
}

fn oracle_equivalence(corpus: &[Graph]) -> Check {
    let mut checked = 0;
    for g in corpus {
        for t in 1..=6u32 {
            let expected = common::brute_force(g, t).is_some();
            let got = search_interval_coloring(g, t, SolverOptions::default());
            ensure(got.status != SearchStatus::Inconclusive, || {
                "inconclusive without limit".into()
            })?;
            ensure((got.status == SearchStatus::Feasible) == expected, || {
                format!(
                    "{:?}, t = {t}: solver {:?}, brute force {expected}",
                    g.edges(),
                    got.status
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{} graphs, {checked} (graph, t) pairs agree with t^|E| enumeration",
        corpus.len()
    ))
}

fn random_connected_graph(rng: &mut ChaCha8Rng) -> Graph {
    let order = rng.gen_range(2..=8);
    let mut edges = BTreeSet::new();
    for v in 2..=order {
        let u = rng.gen_range(1..v);
        edges.insert((u, v));
    }
    let extra = rng.gen_range(0..=order);
    for _ in 0..extra {
        let u = rng.gen_range(1..=order);
        let v = rng.gen_range(1..=order);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::new(order, edges).unwrap()
}

fn determinism_and_soundness(corpus: &[Graph]) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e7e_c01a);
    let mut witnesses = 0;
    for run in 0..1000 {
        let g = random_connected_graph(&mut rng);
        let t = rng.gen_range(g.max_degree() as u32..=g.edge_count() as u32);
        let first = search_interval_coloring(&g, t, SolverOptions::default());
        let second = search_interval_coloring(&g, t, SolverOptions::default());
        ensure(first.status != SearchStatus::Inconclusive, || {
            format!("run {run}: inconclusive")
        })?;
        let a = first.coloring.as_ref().map(|c| coloring_to_json(&g, c));
        let b = second.coloring.as_ref().map(|c| coloring_to_json(&g, c));
        ensure(a == b && first.nodes == second.nodes, || {
            format!("run {run}: runs differ")
        })?;
        if let Some(c) = &first.coloring {
            ensure(is_interval(&g, c).verdict(), || {
                format!("run {run}: unsound witness {a:?}")
            })?;
            witnesses += 1;
        }
    }

    let unpruned = SolverOptions {
        pruning: false,
        ..SolverOptions::default()
    };
    for g in corpus {
        for t in 1..=6u32 {
            let with = search_interval_coloring(g, t, SolverOptions::default()).status;
            let without = search_interval_coloring(g, t, unpruned);
            ensure(with == without.status, || {
                format!("{:?}, t = {t}: pruning changed verdict", g.edges())
            })?;
            if let Some(c) = without.coloring {
                ensure(is_interval(g, &c).verdict(), || "unsound unpruned witness".into())?;
            }
        }
    }
    Ok(format!(
        "1000 runs ({witnesses} witnesses) sound and repeatable; pruning on/off agree on corpus"
    ))
}

fn main() {
    let corpus = oracle_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 construction validity", Box::new(construction_validity)),
        ("2 diameter formula", Box::new(diameter_formula)),
        ("3 Moebius spectrum", Box::new(moebius_spectrum)),
        (
            "4 chromatic index cross-check",
            Box::new(chromatic_index_cross_check),
        ),
        ("5 oracle equivalence", Box::new(|| oracle_equivalence(&corpus))),
        (
            "6 determinism and soundness",
            Box::new(|| determinism_and_soundness(&corpus)),
        ),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        let line = match &result {
            Ok(detail) => format!("PASS criterion {name} ({secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                format!("FAIL criterion {name} ({secs:.2}s): {why}")
            }
        };
        println!("{line}");
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
