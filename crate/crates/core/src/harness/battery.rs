//! The verification battery: every check on every generated polyomino.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::generate::{generate_up_to, GeneratorConfig};
use crate::error::{Error, Result};
use crate::forcing::{max_forcing_number, max_forcing_via_clar};
use crate::grid::{CellCoord, Connectivity, PolyominoGraph};
use crate::limits::Limits;
use crate::lp::{build_clar_ip, solve_ip, solve_lp_exact};
use crate::matching::{count_perfect_matchings, enumerate_perfect_matchings};
use crate::resonance::{clar_exhaustive, maximal_alternating_sets, verify_unique_after_deletion};
use crate::structure::{classify_edges, interior_graph, is_two_connected, is_weakly_elementary, nice_cycles};
use crate::view::Subgraph;

/// Result of one check on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Violated,
    Skipped(String),
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Violated
        }
    }

    fn skipped(reason: &str) -> Self {
        Outcome::Skipped(reason.to_string())
    }

    /// Size-guard errors become skips; any other error is a violation.
    fn from_result(r: Result<bool>) -> Self {
        match r {
            Ok(ok) => Outcome::from_bool(ok),
            Err(Error::TooLarge { .. } | Error::TooWide { .. }) => Outcome::skipped("size-guard"),
            Err(_) => Outcome::Violated,
        }
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, Outcome::Violated)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Holds => f.write_str("holds"),
            Outcome::Violated => f.write_str("violated"),
            Outcome::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A deliberate defect, for testing that violations surface.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    #[default]
    None,
    /// Toggles the lowest-id edge of the first enumerated perfect matching
    /// before the enumeration is checked.
    FlipMatchingEdge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryConfig {
    pub generator: GeneratorConfig,
    pub limits: Limits,
    pub fault: Fault,
}

impl BatteryConfig {
    pub fn new(max_cells: usize, mode: Connectivity) -> Self {
        Self { generator: GeneratorConfig { max_cells, mode }, limits: Limits::default(), fault: Fault::None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// Profile-DP count equals the enumeration, whose members are distinct
    /// perfect matchings.
    pub counting: Outcome,
    /// Exhaustive Clar number equals the integer-program optimum.
    pub clar_backends_agree: Outcome,
    /// Every maximum resonant set leaves a unique perfect matching.
    pub unique_after_max_resonant: Outcome,
    /// Every maximal alternating set leaves a unique perfect matching.
    pub unique_after_maximal_alternating: Outcome,
    /// For every perfect matching, forcing number equals the maximum number
    /// of disjoint alternating cycles.
    pub forcing_equals_cycle_packing: Outcome,
    /// Clar number equals the maximum forcing number, computed by subset
    /// search and by Clar numbers of elementary components.
    pub clar_equals_max_forcing: Outcome,
    /// On elementary two-connected graphs, the LP relaxation is integral.
    pub lp_integrality: Outcome,
    /// For every nice cycle `C`, every maximum resonant set of `I[C]` leaves
    /// a unique perfect matching of `I[C]`.
    pub interior_unique_after_max_resonant: Outcome,
    /// When the previous check holds, the graph is weakly elementary.
    pub weakly_elementary: Outcome,
}

impl Checks {
    fn all(outcome: Outcome) -> Self {
        Self {
            counting: outcome.clone(),
            clar_backends_agree: outcome.clone(),
            unique_after_max_resonant: outcome.clone(),
            unique_after_maximal_alternating: outcome.clone(),
            forcing_equals_cycle_packing: outcome.clone(),
            clar_equals_max_forcing: outcome.clone(),
            lp_integrality: outcome.clone(),
            interior_unique_after_max_resonant: outcome.clone(),
            weakly_elementary: outcome,
        }
    }

    pub fn named(&self) -> [(&'static str, &Outcome); 9] {
        [
            ("counting", &self.counting),
            ("clar_backends_agree", &self.clar_backends_agree),
            ("unique_after_max_resonant", &self.unique_after_max_resonant),
            ("unique_after_maximal_alternating", &self.unique_after_maximal_alternating),
            ("forcing_equals_cycle_packing", &self.forcing_equals_cycle_packing),
            ("clar_equals_max_forcing", &self.clar_equals_max_forcing),
            ("lp_integrality", &self.lp_integrality),
            ("interior_unique_after_max_resonant", &self.interior_unique_after_max_resonant),
            ("weakly_elementary", &self.weakly_elementary),
        ]
    }

    pub fn named_fields() -> Vec<&'static str> {
        Checks::all(Outcome::Holds).named().iter().map(|(name, _)| *name).collect()
    }

    pub fn violations(&self) -> usize {
        self.named().iter().filter(|(_, o)| o.is_violated()).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: usize,
    pub cells: Vec<[i64; 2]>,
    pub cell_count: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Decimal string; absent when the graph could not be built.
    pub perfect_matchings: Option<String>,
    pub clar_exhaustive: Option<usize>,
    pub clar_ip: Option<usize>,
    pub max_forcing_exhaustive: Option<usize>,
    pub max_forcing_clar: Option<usize>,
    /// `(f(G, M), c(M))` for every perfect matching, in enumeration order.
    pub forcing_pairs: Vec<(usize, usize)>,
    /// Exact LP relaxation optimum, as `p/q` or an integer.
    pub lp_optimum: Option<String>,
    pub checks: Checks,
    pub elapsed_us: u64,
}

impl VerificationReport {
    pub fn violations(&self) -> usize {
        self.checks.violations()
    }
}

/// Runs the battery over every polyomino up to `cfg.generator.max_cells`.
///
/// Reports come back in generator order with ids `0..`. Failures are report
/// content; only an invalid configuration is an error.
pub fn run_battery(cfg: &BatteryConfig) -> Result<Vec<VerificationReport>> {
    let shapes = generate_up_to(&cfg.generator)?;
    Ok(shapes
        .par_iter()
        .enumerate()
        .map(|(id, cells)| verify_cells(id, cells, cfg))
        .collect())
}

/// Runs every check on one cell set.
pub fn verify_cells(id: usize, cells: &[CellCoord], cfg: &BatteryConfig) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport {
        id,
        cells: cells.iter().map(|c| [c.x, c.y]).collect(),
        cell_count: cells.len(),
        vertices: 0,
        edges: 0,
        perfect_matchings: None,
        clar_exhaustive: None,
        clar_ip: None,
        max_forcing_exhaustive: None,
        max_forcing_clar: None,
        forcing_pairs: Vec::new(),
        lp_optimum: None,
        checks: Checks::all(Outcome::skipped("invalid-graph")),
        elapsed_us: 0,
    };
    match PolyominoGraph::from_cells_with(cells.iter().copied(), cfg.generator.mode) {
        Ok(g) => verify_graph(&g, cfg, &mut report),
        Err(e) => report.checks = Checks::all(Outcome::Skipped(format!("invalid-graph: {e}"))),
    }
    report.elapsed_us = start.elapsed().as_micros() as u64;
    report
}

fn verify_graph(g: &PolyominoGraph, cfg: &BatteryConfig, report: &mut VerificationReport) {
    let limits = &cfg.limits;
    report.vertices = g.vertex_count();
    report.edges = g.edge_count();
    let full = Subgraph::full(g);

    let mut matchings = match enumerate_perfect_matchings(&full, limits) {
        Ok(ms) => ms,
        Err(_) => {
            report.checks = Checks::all(Outcome::skipped("size-guard"));
            return;
        }
    };
    let count = count_perfect_matchings(g, limits);
    report.perfect_matchings = count.as_ref().ok().map(|c| c.to_string());
    if matchings.is_empty() {
        let mut checks = Checks::all(Outcome::skipped("no-perfect-matching"));
        checks.counting = Outcome::from_result(count.map(|c| c == 0u32.into()));
        report.checks = checks;
        return;
    }
    if cfg.fault == Fault::FlipMatchingEdge {
        let lowest = g.edge_ids().next().expect("graph has edges");
        matchings[0] = matchings[0].flipped(&[lowest]);
    }
    let checks = &mut report.checks;
    checks.counting = Outcome::from_result(count.map(|c| {
        let mut sorted = matchings.clone();
        sorted.sort();
        sorted.dedup();
        c == matchings.len().into() && sorted.len() == matchings.len() && matchings.iter().all(|m| m.is_perfect_in(&full))
    }));

    // Clar number by both backends, and deletion uniqueness for every
    // maximum resonant set.
    let clar = clar_exhaustive(g, limits);
    let program = build_clar_ip(g);
    let ip = solve_ip(&program);
    report.clar_exhaustive = clar.as_ref().ok().map(|r| r.clar_number);
    report.clar_ip = ip.as_ref().ok().map(|s| s.optimum);
    checks.clar_backends_agree = match (&clar, &ip) {
        (Ok(c), Ok(s)) => Outcome::from_bool(c.clar_number == s.optimum),
        (Err(Error::TooLarge { .. }), _) => Outcome::skipped("size-guard"),
        _ => Outcome::Violated,
    };
    checks.unique_after_max_resonant = match &clar {
        Ok(c) => Outcome::from_result(all_ok(c.witness_sets.iter().map(|k| verify_unique_after_deletion(g, &k.squares)))),
        Err(e) => Outcome::from_result(Err(e.clone())),
    };
    checks.unique_after_maximal_alternating = Outcome::from_result(
        maximal_alternating_sets(g, limits)
            .and_then(|sets| all_ok(sets.iter().map(|k| verify_unique_after_deletion(g, &k.squares)))),
    );

    // Forcing numbers against cycle packings, then the maximum against the
    // Clar number.
    let max_forcing = max_forcing_number(g, limits);
    if let Ok(mf) = &max_forcing {
        report.forcing_pairs = mf.per_matching.iter().map(|r| (r.forcing_number, r.c_value)).collect();
        report.max_forcing_exhaustive = Some(mf.value);
    }
    checks.forcing_equals_cycle_packing = Outcome::from_result(
        max_forcing.as_ref().map(|mf| mf.per_matching.iter().all(|r| r.minimax_holds)).map_err(Clone::clone),
    );
    let via_clar = max_forcing_via_clar(g);
    report.max_forcing_clar = via_clar.as_ref().ok().copied();
    checks.clar_equals_max_forcing = match (report.clar_exhaustive, report.clar_ip, report.max_forcing_exhaustive, &via_clar) {
        (Some(a), Some(b), Some(c), Ok(d)) => Outcome::from_bool(a == b && b == c && c == *d),
        _ if matches!(clar, Err(Error::TooLarge { .. })) => Outcome::skipped("size-guard"),
        _ => Outcome::Violated,
    };

    // LP relaxation value; integrality is only expected on elementary
    // two-connected graphs.
    let lp = solve_lp_exact(&program);
    report.lp_optimum = lp.as_ref().ok().map(|s| s.objective.to_string());
    let elementary = classify_edges(g).map(|c| c.is_elementary()).unwrap_or(false);
    checks.lp_integrality = if !elementary {
        Outcome::skipped("not-elementary")
    } else if !is_two_connected(g) {
        Outcome::skipped("not-two-connected")
    } else {
        match (&lp, &ip) {
            (Ok(l), Ok(s)) => Outcome::from_bool(l.objective == crate::scalar::rational_from_int(s.optimum as i64)),
            _ => Outcome::Violated,
        }
    };

    checks.interior_unique_after_max_resonant = Outcome::from_result(interiors_unique(g, limits));
    checks.weakly_elementary = match checks.interior_unique_after_max_resonant {
        Outcome::Holds => Outcome::from_result(is_weakly_elementary(g, limits)),
        _ => Outcome::skipped("hypothesis-not-met"),
    };
}

fn all_ok(results: impl Iterator<Item = Result<bool>>) -> Result<bool> {
    for r in results {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For each nice cycle, every maximum resonant set of its interior graph
/// leaves a unique perfect matching there.
fn interiors_unique(g: &PolyominoGraph, limits: &Limits) -> Result<bool> {
    for nice in nice_cycles(g, limits)? {
        let inner = interior_graph(g, &nice.cycle)?;
        let clar = clar_exhaustive(&inner, limits)?;
        if !all_ok(clar.witness_sets.iter().map(|k| verify_unique_after_deletion(&inner, &k.squares)))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Aggregate counts over a battery run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatterySummary {
    pub graphs: usize,
    pub with_perfect_matching: usize,
    pub violations: usize,
    /// `(check name, holds, violated, skipped)` per check.
    pub per_check: Vec<(String, usize, usize, usize)>,
}

impl BatterySummary {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let mut per_check: Vec<(String, usize, usize, usize)> =
            Checks::named_fields().into_iter().map(|name| (name.to_string(), 0, 0, 0)).collect();
        for r in reports {
            for (slot, (_, outcome)) in per_check.iter_mut().zip(r.checks.named()) {
                match outcome {
                    Outcome::Holds => slot.1 += 1,
                    Outcome::Violated => slot.2 += 1,
                    Outcome::Skipped(_) => slot.3 += 1,
                }
            }
        }
        Self {
            graphs: reports.len(),
            with_perfect_matching: reports
                .iter()
                .filter(|r| r.perfect_matchings.as_deref().is_some_and(|c| c != "0"))
                .count(),
            violations: reports.iter().map(VerificationReport::violations).sum(),
            per_check,
        }
    }

    pub fn has_violations(&self) -> bool {
        self.violations > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_battery_holds() {
        let reports = run_battery(&BatteryConfig::new(2, Connectivity::Edge)).unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert_eq!(r.violations(), 0, "{r:?}");
            assert_eq!(r.checks.counting, Outcome::Holds);
        }
        let summary = BatterySummary::from_reports(&reports);
        assert_eq!(summary.with_perfect_matching, 3);
    }

    #[test]
    fn skipped_graphs_stay_in_the_report() {
        let cfg = BatteryConfig::new(4, Connectivity::Edge);
        let block = [CellCoord::new(0, 0), CellCoord::new(1, 0), CellCoord::new(0, 1), CellCoord::new(1, 1)];
        let r = verify_cells(0, &block, &cfg);
        assert_eq!(r.perfect_matchings.as_deref(), Some("0"));
        assert_eq!(r.checks.counting, Outcome::Holds);
        assert_eq!(r.checks.clar_backends_agree, Outcome::skipped("no-perfect-matching"));
        assert_eq!(serde_json::to_value(&r.checks.lp_integrality).unwrap(), "skipped(no-perfect-matching)");
    }

    #[test]
    fn injected_fault_is_reported() {
        let mut cfg = BatteryConfig::new(3, Connectivity::Edge);
        cfg.fault = Fault::FlipMatchingEdge;
        let reports = run_battery(&cfg).unwrap();
        assert!(reports.iter().all(|r| r.checks.counting == Outcome::Violated));
        assert!(BatterySummary::from_reports(&reports).has_violations());
    }
}
