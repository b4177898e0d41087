use std::collections::BTreeSet;
use std::ops::ControlFlow;

use polyclar::forcing::{forcing_number, is_forcing_set};
use polyclar::lp::{build_clar_ip, solve_ip, solve_lp_exact};
use polyclar::matching::{
    alternating_squares, count_perfect_matchings, count_perfect_matchings_as, enumerate_alternating_cycles,
    enumerate_perfect_matchings, for_each_perfect_matching, has_perfect_matching, has_unique_perfect_matching,
    max_matching, symmetric_difference_cycles,
};
use polyclar::resonance::{clar_exhaustive, is_resonant_set};
use polyclar::structure::classify_edges;
use polyclar::{CellCoord, Limits, Matching, PolyominoGraph, Rational, Subgraph};
use proptest::prelude::*;

/// Grows a cell set by attaching cells next to earlier ones.
fn grown(steps: &[(usize, u8)]) -> Vec<CellCoord> {
    let mut cells = vec![CellCoord::new(0, 0)];
    let mut set: BTreeSet<CellCoord> = cells.iter().copied().collect();
    for &(pick, dir) in steps {
        let base = cells[pick % cells.len()];
        let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][dir as usize % 4];
        let c = CellCoord::new(base.x + dx, base.y + dy);
        if set.insert(c) {
            cells.push(c);
        }
    }
    cells
}

/// Polyominoes of up to `max_steps + 1` cells; shapes enclosing a region
/// larger than one cell are rejected by the builder and skipped.
fn polyomino(max_steps: usize) -> impl Strategy<Value = PolyominoGraph> {
    prop::collection::vec((0usize..64, 0u8..4), 0..max_steps)
        .prop_filter_map("enclosed region", |steps| PolyominoGraph::from_cells(grown(&steps)).ok())
}

fn polyomino_with_matching(max_steps: usize) -> impl Strategy<Value = PolyominoGraph> {
    polyomino(max_steps).prop_filter("no perfect matching", |g| has_perfect_matching(&Subgraph::full(g)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(g in polyomino(12)) {
        let back = PolyominoGraph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(&back, &g);
        let ascii = PolyominoGraph::parse_ascii(&g.to_ascii()).unwrap();
        prop_assert_eq!(&ascii, &g);
    }

    #[test]
    fn coloring_is_proper(g in polyomino(12)) {
        for e in g.edge_ids() {
            let (a, b) = g.endpoints(e);
            prop_assert_ne!(g.color(a), g.color(b));
        }
    }

    #[test]
    fn count_matches_enumeration(g in polyomino(9)) {
        let limits = Limits::default();
        let all = enumerate_perfect_matchings(&Subgraph::full(&g), &limits).unwrap();
        let count = count_perfect_matchings(&g, &limits).unwrap();
        prop_assert_eq!(count, all.len().into());
        let small: u64 = count_perfect_matchings_as(&g, &limits).unwrap();
        prop_assert_eq!(small, all.len() as u64);
        let distinct: BTreeSet<&Matching> = all.iter().collect();
        prop_assert_eq!(distinct.len(), all.len());
        let full = Subgraph::full(&g);
        prop_assert!(all.iter().all(|m| m.is_perfect_in(&full)));
        prop_assert_eq!(max_matching(&full).len() * 2 == g.vertex_count(), !all.is_empty());
        prop_assert_eq!(has_unique_perfect_matching(&full).ok() == Some(true), all.len() == 1);
    }

    #[test]
    fn flipping_an_alternating_cycle_gives_another_matching(g in polyomino_with_matching(8)) {
        let limits = Limits::default();
        let full = Subgraph::full(&g);
        let m = max_matching(&full);
        let all: BTreeSet<Matching> = enumerate_perfect_matchings(&full, &limits).unwrap().into_iter().collect();
        for c in enumerate_alternating_cycles(&full, &m, &limits).unwrap() {
            prop_assert!(c.alternates_with(&m));
            let flipped = m.flipped(&c.edges);
            prop_assert!(flipped != m);
            prop_assert!(all.contains(&flipped));
        }
        for other in &all {
            let cycles = symmetric_difference_cycles(&full, &m, other).unwrap();
            let edges: usize = cycles.iter().map(|c| c.len()).sum();
            let diff = m.edges().iter().filter(|e| !other.contains(**e)).count() * 2;
            prop_assert_eq!(edges, diff);
        }
    }

    #[test]
    fn clar_backends_and_relaxation(g in polyomino_with_matching(8)) {
        let limits = Limits::default();
        let exhaustive = clar_exhaustive(&g, &limits).unwrap();
        let program = build_clar_ip(&g);
        let ip = solve_ip(&program).unwrap();
        prop_assert_eq!(exhaustive.clar_number, ip.optimum);
        let lp = solve_lp_exact(&program).unwrap();
        prop_assert!(lp.objective >= Rational::from_integer(ip.optimum.into()));
        prop_assert!(program.as_linear_program::<Rational>().max_residual(&lp.values) == Rational::from_integer(0.into()));
        prop_assert!(is_resonant_set(&g, &ip.faces).is_resonant());
        for set in &exhaustive.witness_sets {
            let w = set.witness.as_ref().unwrap();
            let alternating = alternating_squares(&Subgraph::full(&g), w);
            prop_assert!(set.squares.iter().all(|s| alternating.contains(s)));
        }
    }

    #[test]
    fn allowed_edges_are_the_union_of_matchings(g in polyomino_with_matching(8)) {
        let mut union = BTreeSet::new();
        let _ = for_each_perfect_matching(&Subgraph::full(&g), |edges| {
            union.extend(edges.iter().copied());
            ControlFlow::Continue(())
        });
        let classes = classify_edges(&g).unwrap();
        prop_assert_eq!(classes.allowed, union.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn minimum_forcing_sets_force(g in polyomino_with_matching(6)) {
        let limits = Limits::default();
        let m = max_matching(&Subgraph::full(&g));
        let r = forcing_number(&g, &m, &limits).unwrap();
        prop_assert!(!r.min_forcing_sets.is_empty());
        for s in &r.min_forcing_sets {
            prop_assert_eq!(s.len(), r.forcing_number);
            prop_assert!(is_forcing_set(&g, &m, s).unwrap());
            // dropping any edge from a minimum forcing set breaks it
            for i in 0..s.len() {
                let mut smaller = s.clone();
                smaller.remove(i);
                prop_assert!(!is_forcing_set(&g, &m, &smaller).unwrap());
            }
        }
        prop_assert!(r.c_value <= r.forcing_number);
    }
}
