//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use polyclar::forcing::{forcing_number, max_disjoint_alternating_cycles, max_forcing_number, max_forcing_via_clar};
use polyclar::grid::cells_connected;
use polyclar::harness::report::strip_timing;
use polyclar::harness::{generate_polyominoes, GeneratorConfig};
use polyclar::lp::{build_clar_ip, solve_ip, solve_lp_exact};
use polyclar::matching::{
    count_perfect_matchings, enumerate_perfect_matchings, for_each_perfect_matching, has_perfect_matching,
};
use polyclar::resonance::{clar_exhaustive, maximal_alternating_sets, verify_unique_after_deletion};
use polyclar::structure::{classify_edges, is_two_connected};
use polyclar::{CellCoord, Connectivity, Count, Limits, PolyominoGraph, Rational, Subgraph};

/// Fixed polyominoes with at most `n` cells that have a perfect matching.
fn matchable(n: usize) -> Vec<PolyominoGraph> {
    let cfg = GeneratorConfig { max_cells: n, mode: Connectivity::Edge };
    (1..=n)
        .flat_map(|k| generate_polyominoes(k, &cfg).unwrap())
        .filter_map(|cells| PolyominoGraph::from_cells(cells).ok())
        .filter(|g| has_perfect_matching(&Subgraph::full(g)))
        .collect()
}

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn forcing_equals_cycle_packing() -> Verdict {
    let limits = Limits::default();
    let mut pairs = 0;
    for g in matchable(6) {
        for m in enumerate_perfect_matchings(&Subgraph::full(&g), &limits).unwrap() {
            let f = forcing_number(&g, &m, &limits).unwrap().forcing_number;
            let (c, _) = max_disjoint_alternating_cycles(&g, &m, &limits).unwrap();
            if f != c {
                return Err(format!("f = {f}, c = {c} on\n{}", g.to_ascii()));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (graph, matching) pairs"))
}

fn unique_after_max_resonant() -> Verdict {
    let limits = Limits::default();
    let mut sets = 0;
    for g in matchable(7) {
        for k in clar_exhaustive(&g, &limits).unwrap().witness_sets {
            if !verify_unique_after_deletion(&g, &k.squares).unwrap() {
                return Err(format!("{:?} on\n{}", k.cell_list(&g), g.to_ascii()));
            }
            sets += 1;
        }
    }
    Ok(format!("{sets} maximum resonant sets"))
}

fn unique_after_maximal_alternating() -> Verdict {
    let limits = Limits::default();
    let mut sets = 0;
    for g in matchable(7) {
        for k in maximal_alternating_sets(&g, &limits).unwrap() {
            if !verify_unique_after_deletion(&g, &k.squares).unwrap() {
                return Err(format!("{:?} on\n{}", k.cell_list(&g), g.to_ascii()));
            }
            sets += 1;
        }
    }
    Ok(format!("{sets} maximal alternating sets"))
}

fn clar_equals_max_forcing() -> Verdict {
    let limits = Limits::default();
    let graphs = matchable(7);
    for g in &graphs {
        let a = clar_exhaustive(g, &limits).unwrap().clar_number;
        let b = solve_ip(&build_clar_ip(g)).unwrap().optimum;
        let c = max_forcing_number(g, &limits).unwrap().value;
        let d = max_forcing_via_clar(g).unwrap();
        if !(a == b && b == c && c == d) {
            return Err(format!("{a} {b} {c} {d} on\n{}", g.to_ascii()));
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn enumerated(g: &PolyominoGraph) -> u64 {
    let mut n = 0u64;
    let _ = for_each_perfect_matching(&Subgraph::full(g), |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

fn block(w: i64, h: i64) -> PolyominoGraph {
    PolyominoGraph::from_cells((0..h).flat_map(|y| (0..w).map(move |x| CellCoord::new(x, y)))).unwrap()
}

fn counting() -> Verdict {
    let limits = Limits::default();
    let cfg = GeneratorConfig::default();
    let mut graphs = 0;
    for n in 1..=7 {
        for cells in generate_polyominoes(n, &cfg).unwrap() {
            let Ok(g) = PolyominoGraph::from_cells(cells) else { continue };
            let count = count_perfect_matchings(&g, &limits).unwrap();
            if count != Count::from(enumerated(&g)) {
                return Err(format!("count {count} on\n{}", g.to_ascii()));
            }
            graphs += 1;
        }
    }
    let rows: Vec<String> = (1..=5).map(|n| count_perfect_matchings(&block(n, 1), &limits).unwrap().to_string()).collect();
    if rows != ["2", "3", "5", "8", "13"] {
        return Err(format!("rows gave {rows:?}"));
    }
    let start = Instant::now();
    let big = block(7, 7);
    let dp = count_perfect_matchings(&big, &limits).unwrap();
    let full = enumerated(&big);
    let elapsed = start.elapsed();
    if dp != Count::from(12_988_816u64) || full != 12_988_816 {
        return Err(format!("7x7 block: dp {dp}, enumeration {full}"));
    }
    if elapsed > Duration::from_secs(60) {
        return Err(format!("7x7 block took {elapsed:?}"));
    }
    Ok(format!("{graphs} graphs, rows 2 3 5 8 13, 7x7 block 12988816 in {:.1}s", elapsed.as_secs_f64()))
}

fn lp_integrality() -> Verdict {
    let mut probed = 0;
    for g in matchable(8) {
        if !classify_edges(&g).unwrap().is_elementary() || !is_two_connected(&g) {
            continue;
        }
        let program = build_clar_ip(&g);
        let lp = solve_lp_exact(&program).unwrap().objective;
        let ip = solve_ip(&program).unwrap().optimum;
        if lp != Rational::from_integer(ip.into()) {
            return Err(format!("LP {lp} vs IP {ip} on\n{}", g.to_ascii()));
        }
        probed += 1;
    }
    Ok(format!("{probed} elementary two-connected graphs"))
}

/// Connected `n`-cell subsets of each `w x h` box touching all four sides.
fn bounding_box_count(n: usize) -> usize {
    let mut found = BTreeSet::new();
    for w in 1..=n {
        for h in 1..=n + 1 - w {
            if w * h < n {
                continue;
            }
            let all: Vec<CellCoord> = (0..h as i64).flat_map(|y| (0..w as i64).map(move |x| CellCoord::new(x, y))).collect();
            let mut pick = Vec::new();
            choose(&all, n, 0, &mut pick, &mut |cells| {
                let set: BTreeSet<CellCoord> = cells.iter().copied().collect();
                if set.iter().any(|c| c.x == 0)
                    && set.iter().any(|c| c.y == 0)
                    && set.iter().any(|c| c.x == w as i64 - 1)
                    && set.iter().any(|c| c.y == h as i64 - 1)
                    && cells_connected(&set, Connectivity::Edge)
                {
                    found.insert(cells.to_vec());
                }
            });
        }
    }
    found.len()
}

fn choose(all: &[CellCoord], k: usize, from: usize, pick: &mut Vec<CellCoord>, visit: &mut dyn FnMut(&[CellCoord])) {
    if pick.len() == k {
        visit(pick);
        return;
    }
    for i in from..all.len() {
        if all.len() - i < k - pick.len() {
            break;
        }
        pick.push(all[i]);
        choose(all, k, i + 1, pick, visit);
        pick.pop();
    }
}

fn generator_audit() -> Verdict {
    let cfg = GeneratorConfig { max_cells: 8, mode: Connectivity::Edge };
    let generated: Vec<usize> = (1..=8).map(|n| generate_polyominoes(n, &cfg).unwrap().len()).collect();
    let oracle: Vec<usize> = (1..=8).map(bounding_box_count).collect();
    let expected = vec![1, 2, 6, 19, 63, 216, 760, 2725];
    if generated != expected || oracle != expected {
        return Err(format!("generator {generated:?}, brute force {oracle:?}"));
    }
    Ok(format!("{generated:?}"))
}

fn verify_run() -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_polyclar"))
        .args(["verify", "--limit", "6"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("verify exited with {:?}", out.status.code()));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn determinism() -> Verdict {
    let a = strip_timing(&verify_run()?);
    let b = strip_timing(&verify_run()?);
    if a != b {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical report lines", a.lines().count()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("forcing number equals disjoint alternating cycles (<= 6 cells)", forcing_equals_cycle_packing),
        ("unique matching after every maximum resonant set (<= 7 cells)", unique_after_max_resonant),
        ("unique matching after every maximal alternating set (<= 7 cells)", unique_after_maximal_alternating),
        ("Clar number equals maximum forcing number, four ways (<= 7 cells)", clar_equals_max_forcing),
        ("matching counts agree with enumeration", counting),
        ("LP relaxation integral on elementary two-connected graphs (<= 8 cells)", lp_integrality),
        ("fixed polyomino counts 1..8", generator_audit),
        ("verify --limit 6 is deterministic", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
