use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use polyclar::forcing::{max_forcing_number, max_forcing_via_clar};
use polyclar::harness::{report, run_battery, BatteryConfig, BatterySummary, Fault};
use polyclar::lp::{build_clar_ip, solve_ip, solve_lp_exact};
use polyclar::matching::{count_perfect_matchings, enumerate_perfect_matchings};
use polyclar::render::{render_svg, RenderSpec};
use polyclar::resonance::clar_exhaustive;
use polyclar::structure::{classify_edges, elementary_components, is_two_connected, is_weakly_elementary, nice_cycles};
use polyclar::{AlternatingCycle, EdgeId, Limits, Matching, PolyominoGraph, Subgraph};
use serde_json::{json, Value};

use crate::input::{read_graph, CliError};
use crate::{Cli, Command, Method, Overlay, Options};

const DEFAULT_VERIFY_CELLS: usize = 7;

pub fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let opts = &cli.opts;
    let limits = Limits::from_env();
    if let Command::Verify { csv, inject_fault } = &cli.command {
        return verify(opts, &limits, csv.as_deref(), *inject_fault);
    }
    let g = read_graph(opts)?;
    let (value, ok) = match &cli.command {
        Command::Info { emit_json } => {
            if *emit_json {
                write_output(opts, &format!("{}\n", g.to_json()))?;
                return Ok(ExitCode::SUCCESS);
            }
            (info(&g), true)
        }
        Command::Count => (json!({ "perfect_matchings": count_perfect_matchings(&g, &limits)?.to_string() }), true),
        Command::Matchings => (matchings(&g, &limits, opts.limit)?, true),
        Command::Clar { listing } => clar(&g, &limits, opts.method, *listing)?,
        Command::Forcing => forcing(&g, &limits)?,
        Command::Maxforce => maxforce(&g, &limits, opts.method)?,
        Command::Decompose => (decompose(&g, &limits)?, true),
        Command::Render { overlay, scale } => {
            let svg = render(&g, &limits, *overlay, *scale)?;
            write_output(opts, &svg)?;
            return Ok(ExitCode::SUCCESS);
        }
        Command::Verify { .. } => unreachable!("handled above"),
    };
    let text = if opts.pretty {
        serde_json::to_string_pretty(&value).expect("JSON values serialize")
    } else {
        value.to_string()
    };
    write_output(opts, &format!("{text}\n"))?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn write_output(opts: &Options, text: &str) -> Result<(), CliError> {
    match &opts.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io("stdout".into(), e))
        }
    }
}

fn pairs(g: &PolyominoGraph, edges: &[EdgeId]) -> Value {
    json!(Matching::new(edges.iter().copied()).endpoint_pairs(g))
}

fn cycle_points(g: &PolyominoGraph, c: &AlternatingCycle) -> Value {
    let pts: Vec<[i64; 2]> = c.vertices.iter().map(|&v| g.point(v)).map(|p| [p.x, p.y]).collect();
    json!(pts)
}

fn info(g: &PolyominoGraph) -> Value {
    let holes: Vec<[i64; 2]> = g.filled_holes().iter().map(|c| [c.x, c.y]).collect();
    json!({
        "cells": g.cells_doc().cells,
        "filled_holes": holes,
        "mode": g.mode(),
        "width": g.width(),
        "height": g.height(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "squares": g.square_count(),
        "boundary_length": g.boundary_cycle().ok().map(|c| c.len()),
    })
}

fn matchings(g: &PolyominoGraph, limits: &Limits, cap: Option<usize>) -> Result<Value, CliError> {
    let all = enumerate_perfect_matchings(&Subgraph::full(g), limits)?;
    let shown = cap.unwrap_or(all.len()).min(all.len());
    let listed: Vec<Value> = all[..shown].iter().map(|m| json!(m.endpoint_pairs(g))).collect();
    Ok(json!({
        "count": all.len().to_string(),
        "truncated": shown < all.len(),
        "matchings": listed,
    }))
}

fn clar(g: &PolyominoGraph, limits: &Limits, method: Method, listing: bool) -> Result<(Value, bool), CliError> {
    let mut out = serde_json::Map::new();
    let mut values = Vec::new();
    if method != Method::Ip {
        let r = clar_exhaustive(g, limits)?;
        values.push(r.clar_number);
        let sets: Vec<Value> = r.witness_sets.iter().map(|s| json!(s.cell_list(g))).collect();
        out.insert("max_resonant_sets".into(), json!(sets));
    }
    let program = build_clar_ip(g);
    if method != Method::Exhaustive {
        let s = solve_ip(&program)?;
        values.push(s.optimum);
        let cells: Vec<[i64; 2]> = s.faces.iter().map(|&f| g.square(f).cell).map(|c| [c.x, c.y]).collect();
        out.insert(
            "ip".into(),
            json!({
                "optimum": s.optimum,
                "faces": cells,
                "edges": pairs(g, &s.edges),
                "nodes": s.nodes,
                "lp_relaxation": solve_lp_exact(&program)?.objective.to_string(),
            }),
        );
    }
    if listing {
        out.insert("program".into(), json!(program.to_text()));
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    out.insert("clar".into(), json!(values[0]));
    out.insert("method".into(), json!(method_name(method)));
    if values.len() > 1 {
        out.insert("agree".into(), json!(agree));
    }
    Ok((Value::Object(out), agree))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Exhaustive => "exhaustive",
        Method::Ip => "ip",
        Method::Both => "both",
    }
}

fn forcing(g: &PolyominoGraph, limits: &Limits) -> Result<(Value, bool), CliError> {
    let mf = max_forcing_number(g, limits)?;
    let per: Vec<Value> = mf
        .per_matching
        .iter()
        .map(|r| {
            let sets: Vec<Value> = r.min_forcing_sets.iter().map(|s| pairs(g, s)).collect();
            let cycles: Vec<Value> = r.disjoint_cycle_witness.iter().map(|c| cycle_points(g, c)).collect();
            json!({
                "matching": r.matching.endpoint_pairs(g),
                "forcing_number": r.forcing_number,
                "c": r.c_value,
                "min_forcing_sets": sets,
                "disjoint_cycles": cycles,
                "minimax_holds": r.minimax_holds,
            })
        })
        .collect();
    let ok = mf.per_matching.iter().all(|r| r.minimax_holds);
    Ok((json!({ "max_forcing": mf.value, "all_minimax_hold": ok, "matchings": per }), ok))
}

fn maxforce(g: &PolyominoGraph, limits: &Limits, method: Method) -> Result<(Value, bool), CliError> {
    let mut out = serde_json::Map::new();
    let mut values = Vec::new();
    if method != Method::Ip {
        let mf = max_forcing_number(g, limits)?;
        values.push(mf.value);
        out.insert("exhaustive".into(), json!(mf.value));
        out.insert("witness".into(), json!(mf.witness.endpoint_pairs(g)));
    }
    if method != Method::Exhaustive {
        let v = max_forcing_via_clar(g)?;
        values.push(v);
        out.insert("clar_pipeline".into(), json!(v));
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    out.insert("max_forcing".into(), json!(values[0]));
    if values.len() > 1 {
        out.insert("agree".into(), json!(agree));
    }
    Ok((Value::Object(out), agree))
}

fn decompose(g: &PolyominoGraph, limits: &Limits) -> Result<Value, CliError> {
    let classes = classify_edges(g)?;
    let d = elementary_components(g)?;
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| {
            json!({
                "cells": c.cell_list(g),
                "vertices": c.vertices.len(),
                "edges": pairs(g, &c.edges),
            })
        })
        .collect();
    let nice: Vec<Value> = nice_cycles(g, limits)?.iter().map(|n| cycle_points(g, &n.cycle)).collect();
    Ok(json!({
        "allowed": pairs(g, &classes.allowed),
        "forbidden": pairs(g, &classes.forbidden),
        "elementary": classes.is_elementary(),
        "two_connected": is_two_connected(g),
        "components": components,
        "isolated_vertices": d.isolated_vertices,
        "nice_cycles": nice,
        "weakly_elementary": is_weakly_elementary(g, limits)?,
    }))
}

fn render(g: &PolyominoGraph, limits: &Limits, overlay: Overlay, scale: u32) -> Result<String, CliError> {
    let mut spec = RenderSpec { scale, ..RenderSpec::new(g) };
    match overlay {
        Overlay::None => {}
        Overlay::Matching => {
            let m = polyclar::matching::max_matching(&Subgraph::full(g));
            spec.matching = Some(m.edges().to_vec());
        }
        Overlay::Clar => {
            let r = clar_exhaustive(g, limits)?;
            let best = &r.witness_sets[0];
            spec.faces = Some(best.squares.clone());
            spec.matching = best.witness.as_ref().map(|m| m.edges().to_vec());
        }
    }
    Ok(render_svg(&spec)?)
}

fn verify(opts: &Options, limits: &Limits, csv: Option<&Path>, inject_fault: bool) -> Result<ExitCode, CliError> {
    let mut cfg = BatteryConfig::new(opts.limit.unwrap_or(DEFAULT_VERIFY_CELLS), opts.mode.into());
    cfg.limits = *limits;
    if inject_fault {
        cfg.fault = Fault::FlipMatchingEdge;
    }
    let reports = run_battery(&cfg)?;
    let summary = BatterySummary::from_reports(&reports);
    if let Some(path) = csv {
        std::fs::write(path, report::to_csv(&reports)).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    }
    let text = if opts.pretty {
        summary_table(&summary)
    } else {
        report::to_jsonl(&reports)
    };
    write_output(opts, &text)?;
    Ok(if summary.has_violations() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn summary_table(s: &BatterySummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graphs: {}  with perfect matching: {}  violations: {}", s.graphs, s.with_perfect_matching, s.violations);
    let _ = writeln!(out, "{:<36} {:>7} {:>9} {:>8}", "check", "holds", "violated", "skipped");
    for (name, holds, violated, skipped) in &s.per_check {
        let _ = writeln!(out, "{name:<36} {holds:>7} {violated:>9} {skipped:>8}");
    }
    out
}
