//! Forcing sets and forcing numbers of perfect matchings.
//!
//! Two quantities are computed by separate code paths and compared: the
//! forcing number `f(G, M)` by subset search over `M`, and `c(M)`, the
//! largest number of pairwise vertex-disjoint `M`-alternating cycles, by
//! maximum independent set over the cycle conflict graph.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{EdgeId, PolyominoGraph};
use crate::limits::Limits;
use crate::lp;
use crate::matching::{
    enumerate_alternating_cycles, enumerate_perfect_matchings, has_unique_perfect_matching,
    AlternatingCycle, Matching,
};
use crate::mis::ConflictGraph;
use crate::structure;
use crate::view::Subgraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingResult {
    #[serde(skip)]
    pub matching: Matching,
    pub forcing_number: usize,
    /// Every minimum forcing set, each sorted, listed lexicographically.
    pub min_forcing_sets: Vec<Vec<EdgeId>>,
    pub c_value: usize,
    pub disjoint_cycle_witness: Vec<AlternatingCycle>,
    /// Whether the subset search and the cycle packing agree.
    pub minimax_holds: bool,
}

/// Whether `s ⊆ m` is contained in no other perfect matching of `g`.
pub fn is_forcing_set(g: &PolyominoGraph, m: &Matching, s: &[EdgeId]) -> Result<bool> {
    if s.iter().any(|&e| !m.contains(e)) {
        return Err(Error::NotSubset);
    }
    has_unique_perfect_matching(&Subgraph::full(g).without_edge_endpoints(s))
}

/// `c(M)` together with a witnessing family of disjoint alternating cycles.
pub fn max_disjoint_alternating_cycles(
    g: &PolyominoGraph,
    m: &Matching,
    limits: &Limits,
) -> Result<(usize, Vec<AlternatingCycle>)> {
    let view = Subgraph::full(g);
    if !m.is_perfect_in(&view) {
        return Err(Error::MismatchedGraphs);
    }
    let cycles = enumerate_alternating_cycles(&view, m, limits)?;
    let conflicts = ConflictGraph::from_predicate(cycles.len(), |a, b| cycles[a].shares_vertex_with(&cycles[b]));
    let picked = conflicts.maximum_independent_set();
    let witness: Vec<AlternatingCycle> = picked.into_iter().map(|i| cycles[i].clone()).collect();
    Ok((witness.len(), witness))
}

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> ControlFlow<()>) {
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if cur.len() == k {
            return visit(cur);
        }
        let need = k - cur.len();
        for i in start..=n - need {
            cur.push(i);
            let flow = rec(i + 1, n, k, cur, visit);
            cur.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    if k <= n {
        let _ = rec(0, n, k, &mut Vec::with_capacity(k), &mut visit);
    }
}

fn forcing_sets_of_size(g: &PolyominoGraph, m: &Matching, k: usize, first_only: bool) -> Vec<Vec<EdgeId>> {
    let edges = m.edges();
    let full = Subgraph::full(g);
    let mut found = Vec::new();
    for_each_subset(edges.len(), k, |idx| {
        let s: Vec<EdgeId> = idx.iter().map(|&i| edges[i]).collect();
        let rest = full.without_edge_endpoints(&s);
        if has_unique_perfect_matching(&rest).expect("m minus s is a perfect matching of the rest") {
            found.push(s);
            if first_only {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    found
}

/// The forcing number of `m` with all minimum forcing sets.
///
/// The search starts at the independently computed `c(M)`. Supersets of
/// forcing sets are forcing, so `f = k` exactly when size `k` has a forcing
/// set and size `k - 1` has none; the search moves up or down from `c(M)`
/// until that holds, and the result records whether `f` equals `c(M)`.
pub fn forcing_number(g: &PolyominoGraph, m: &Matching, limits: &Limits) -> Result<ForcingResult> {
    let (c_value, witness) = max_disjoint_alternating_cycles(g, m, limits)?;
    let start = c_value.min(m.len());
    let mut k = start;
    let mut sets = forcing_sets_of_size(g, m, k, false);
    if sets.is_empty() {
        while sets.is_empty() {
            k += 1;
            sets = forcing_sets_of_size(g, m, k, false);
        }
    } else {
        while k > 0 && !forcing_sets_of_size(g, m, k - 1, true).is_empty() {
            k -= 1;
        }
        if k != start {
            sets = forcing_sets_of_size(g, m, k, false);
        }
    }
    Ok(ForcingResult {
        matching: m.clone(),
        forcing_number: k,
        min_forcing_sets: sets,
        c_value,
        disjoint_cycle_witness: witness,
        minimax_holds: k == c_value,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxForcing {
    pub value: usize,
    /// Lexicographically smallest perfect matching attaining the maximum.
    pub witness: Matching,
    /// One result per perfect matching, in enumeration order.
    pub per_matching: Vec<ForcingResult>,
}

/// `F(G)`: the largest forcing number over all perfect matchings.
pub fn max_forcing_number(g: &PolyominoGraph, limits: &Limits) -> Result<MaxForcing> {
    let matchings = enumerate_perfect_matchings(&Subgraph::full(g), limits)?;
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let per_matching = matchings
        .par_iter()
        .map(|m| forcing_number(g, m, limits))
        .collect::<Result<Vec<_>>>()?;
    let best = per_matching
        .iter()
        .max_by(|a, b| {
            a.forcing_number
                .cmp(&b.forcing_number)
                .then_with(|| b.matching.cmp(&a.matching))
        })
        .expect("at least one matching");
    Ok(MaxForcing { value: best.forcing_number, witness: best.matching.clone(), per_matching })
}

/// `F(G)` as the sum of Clar numbers of the elementary components, each
/// solved as an exact integer program.
pub fn max_forcing_via_clar(g: &PolyominoGraph) -> Result<usize> {
    let decomposition = structure::elementary_components(g)?;
    let mut total = 0;
    for component in &decomposition.components {
        let view = component.view(g);
        let program = lp::build_clar_ip_in(&view);
        total += lp::solve_ip(&program)?.optimum;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Point;

    fn graph(ascii: &str) -> PolyominoGraph {
        PolyominoGraph::parse_ascii(ascii).unwrap()
    }

    fn edge(g: &PolyominoGraph, a: (i64, i64), b: (i64, i64)) -> EdgeId {
        let va = g.vertex_at(Point::new(a.0, a.1)).unwrap();
        let vb = g.vertex_at(Point::new(b.0, b.1)).unwrap();
        g.edge_between(va, vb).unwrap()
    }

    fn all_vertical(g: &PolyominoGraph) -> Matching {
        (0..=g.width()).map(|x| edge(g, (x, 0), (x, 1))).collect()
    }

    #[test]
    fn forcing_set_examples() {
        let g = graph("#");
        let m = Matching::new([edge(&g, (0, 0), (1, 0)), edge(&g, (0, 1), (1, 1))]);
        assert!(is_forcing_set(&g, &m, &[edge(&g, (0, 1), (1, 1))]).unwrap());
        assert!(!is_forcing_set(&g, &m, &[]).unwrap());
        assert_eq!(is_forcing_set(&g, &m, &[edge(&g, (0, 0), (0, 1))]), Err(Error::NotSubset));
    }

    #[test]
    fn domino_middle_edge_forces() {
        let g = graph("##");
        let m = all_vertical(&g);
        // deleting the middle edge's endpoints leaves two separate edges
        assert!(is_forcing_set(&g, &m, &[edge(&g, (1, 0), (1, 1))]).unwrap());
        assert!(!is_forcing_set(&g, &m, &[edge(&g, (0, 0), (0, 1))]).unwrap());
    }

    #[test]
    fn forcing_numbers() {
        let limits = Limits::default();
        let g = graph("#");
        let m = Matching::new([edge(&g, (0, 0), (1, 0)), edge(&g, (0, 1), (1, 1))]);
        let r = forcing_number(&g, &m, &limits).unwrap();
        assert_eq!((r.forcing_number, r.c_value), (1, 1));
        assert_eq!(r.min_forcing_sets.len(), 2);

        let g = graph("##");
        let r = forcing_number(&g, &all_vertical(&g), &limits).unwrap();
        assert_eq!((r.forcing_number, r.c_value), (1, 1));
        assert_eq!(r.min_forcing_sets, vec![vec![edge(&g, (1, 0), (1, 1))]]);

        let g = graph("###");
        let r = forcing_number(&g, &all_vertical(&g), &limits).unwrap();
        assert_eq!((r.forcing_number, r.c_value), (2, 2));
        assert!(r.minimax_holds);
        for s in &r.min_forcing_sets {
            assert!(is_forcing_set(&g, &r.matching, s).unwrap());
        }
    }

    #[test]
    fn max_forcing() {
        let limits = Limits::default();
        assert_eq!(max_forcing_number(&graph("#"), &limits).unwrap().value, 1);
        assert_eq!(max_forcing_number(&graph("###"), &limits).unwrap().value, 2);
        assert_eq!(max_forcing_via_clar(&graph("#")).unwrap(), 1);
        assert_eq!(max_forcing_via_clar(&graph("##")).unwrap(), 1);
        assert_eq!(max_forcing_number(&graph("##\n##"), &limits).unwrap_err(), Error::NoPerfectMatching);
    }
}
