use std::ops::ControlFlow;

use super::Matching;
use crate::error::Result;
use crate::grid::EdgeId;
use crate::limits::Limits;
use crate::view::Subgraph;

/// Calls `visit` once per perfect matching of `view`, in the order produced
/// by always extending at the lowest-id uncovered vertex. The slice passed to
/// `visit` is sorted by edge id. Returning `ControlFlow::Break` stops early.
///
/// Not size-guarded; callers that materialize results should check limits.
pub fn for_each_perfect_matching<F>(view: &Subgraph<'_>, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let g = view.graph();
    let n = g.vertex_count();
    // Only neighbors above the branching vertex can still be uncovered.
    let forward: Vec<Vec<(usize, EdgeId)>> = g
        .vertex_ids()
        .map(|v| {
            if !view.has_vertex(v) {
                return Vec::new();
            }
            view.neighbors(v)
                .filter(|(u, _)| *u > v)
                .map(|(u, e)| (u.index(), e))
                .collect()
        })
        .collect();
    let mut covered: Vec<bool> = g.vertex_ids().map(|v| !view.has_vertex(v)).collect();
    if covered.iter().filter(|&&c| !c).count() % 2 == 1 {
        return ControlFlow::Continue(());
    }
    let mut stack = Vec::with_capacity(n / 2);
    descend(0, &forward, &mut covered, &mut stack, &mut visit)
}

fn descend<F>(
    from: usize,
    forward: &[Vec<(usize, EdgeId)>],
    covered: &mut [bool],
    stack: &mut Vec<EdgeId>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let Some(v) = (from..covered.len()).find(|&i| !covered[i]) else {
        return visit(stack);
    };
    covered[v] = true;
    for &(u, e) in &forward[v] {
        if covered[u] {
            continue;
        }
        covered[u] = true;
        stack.push(e);
        let flow = descend(v + 1, forward, covered, stack, visit);
        stack.pop();
        covered[u] = false;
        if flow.is_break() {
            covered[v] = false;
            return flow;
        }
    }
    covered[v] = false;
    ControlFlow::Continue(())
}

/// Every perfect matching of `view`, each exactly once, in deterministic order.
pub fn enumerate_perfect_matchings(view: &Subgraph<'_>, limits: &Limits) -> Result<Vec<Matching>> {
    limits.check_vertices(view.vertex_count())?;
    let mut out = Vec::new();
    let _ = for_each_perfect_matching(view, |edges| {
        out.push(Matching { edges: edges.to_vec() });
        ControlFlow::Continue(())
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::grid::PolyominoGraph;

    fn all(ascii: &str) -> Vec<Matching> {
        let g = PolyominoGraph::parse_ascii(ascii).unwrap();
        enumerate_perfect_matchings(&Subgraph::full(&g), &Limits::default()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(all("#").len(), 2);
        assert_eq!(all("##").len(), 3);
        assert_eq!(all("####").len(), 8);
        assert_eq!(all("##\n##").len(), 0);
    }

    #[test]
    fn results_are_distinct_and_perfect() {
        let g = PolyominoGraph::parse_ascii("###\n###\n.##").unwrap();
        let view = Subgraph::full(&g);
        let ms = enumerate_perfect_matchings(&view, &Limits::default()).unwrap();
        let mut sorted = ms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ms.len());
        assert!(ms.iter().all(|m| m.is_perfect_in(&view)));
    }

    #[test]
    fn guard() {
        let g = PolyominoGraph::parse_ascii("####").unwrap();
        let limits = Limits { max_vertices: 8, ..Limits::default() };
        let err = enumerate_perfect_matchings(&Subgraph::full(&g), &limits).unwrap_err();
        assert_eq!(err, Error::TooLarge { vertices: 10, limit: 8 });
    }

    #[test]
    fn empty_subgraph_has_one_empty_matching() {
        let g = PolyominoGraph::parse_ascii("#").unwrap();
        let view = Subgraph::full(&g).without_squares(&[crate::grid::SquareId(0)]);
        let ms = enumerate_perfect_matchings(&view, &Limits::default()).unwrap();
        assert_eq!(ms, vec![Matching::default()]);
    }
}
