//! Alternating cycles, symmetric differences, and the uniqueness test.
//!
//! With respect to a matching `M`, orient matched edges black to white and
//! unmatched edges white to black. Directed cycles of this orientation are
//! exactly the `M`-alternating cycles, each traversed once.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{max_matching, Matching};
use crate::error::{Error, Result};
use crate::grid::{Color, EdgeId, PolyominoGraph, SquareId, VertexId};
use crate::limits::Limits;
use crate::view::Subgraph;

/// A simple even cycle; `edges[i]` joins `vertices[i]` and `vertices[i + 1]`
/// (wrapping around).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AlternatingCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl AlternatingCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    pub fn shares_vertex_with(&self, other: &AlternatingCycle) -> bool {
        self.vertices.iter().any(|v| other.vertices.contains(v))
    }

    /// True when the edges alternate in and out of `m`.
    pub fn alternates_with(&self, m: &Matching) -> bool {
        let n = self.edges.len();
        n.is_multiple_of(2)
            && n >= 4
            && (0..n).all(|i| m.contains(self.edges[i]) != m.contains(self.edges[(i + 1) % n]))
    }
}

/// Out-arcs of the alternating orientation for every vertex of `view`.
fn oriented(view: &Subgraph<'_>, m: &Matching) -> Vec<Vec<(VertexId, EdgeId)>> {
    let g = view.graph();
    g.vertex_ids()
        .map(|v| {
            if !view.has_vertex(v) {
                return Vec::new();
            }
            let black = g.color(v) == Color::Black;
            view.neighbors(v).filter(|&(_, e)| m.contains(e) == black).collect()
        })
        .collect()
}

fn has_directed_cycle(view: &Subgraph<'_>, arcs: &[Vec<(VertexId, EdgeId)>]) -> bool {
    let mut indeg = vec![0usize; arcs.len()];
    for out in arcs {
        for &(w, _) in out {
            indeg[w.index()] += 1;
        }
    }
    let mut queue: VecDeque<usize> =
        view.vertices().map(|v| v.index()).filter(|&i| indeg[i] == 0).collect();
    let mut removed = 0;
    while let Some(i) = queue.pop_front() {
        removed += 1;
        for &(w, _) in &arcs[i] {
            indeg[w.index()] -= 1;
            if indeg[w.index()] == 0 {
                queue.push_back(w.index());
            }
        }
    }
    removed < view.vertex_count()
}

/// Whether `view` has exactly one perfect matching. The empty graph has one
/// (the empty matching); a graph with none is reported as
/// [`Error::NoPerfectMatching`].
pub fn has_unique_perfect_matching(view: &Subgraph<'_>) -> Result<bool> {
    if view.is_empty() {
        return Ok(true);
    }
    let m = max_matching(view);
    if 2 * m.len() != view.vertex_count() {
        return Err(Error::NoPerfectMatching);
    }
    Ok(!has_directed_cycle(view, &oriented(view, &m)))
}

/// The cycles of `m1 ⊕ m2`, each starting at its lowest vertex.
pub fn symmetric_difference_cycles(
    view: &Subgraph<'_>,
    m1: &Matching,
    m2: &Matching,
) -> Result<Vec<AlternatingCycle>> {
    if !m1.is_perfect_in(view) || !m2.is_perfect_in(view) {
        return Err(Error::MismatchedGraphs);
    }
    let g = view.graph();
    let mates1 = m1.mates(g);
    let mates2 = m2.mates(g);
    let mut seen = vec![false; g.vertex_count()];
    let mut cycles = Vec::new();
    for v in view.vertices() {
        if seen[v.index()] || mates1[v.index()] == mates2[v.index()] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut cur = v;
        let mut use_first = true;
        loop {
            seen[cur.index()] = true;
            vertices.push(cur);
            let mates = if use_first { &mates1 } else { &mates2 };
            let next = mates[cur.index()].expect("perfect matchings cover every vertex");
            edges.push(g.edge_between(cur, next).expect("matched pairs are adjacent"));
            use_first = !use_first;
            cur = next;
            if cur == v {
                break;
            }
        }
        cycles.push(AlternatingCycle { vertices, edges });
    }
    Ok(cycles)
}

/// Squares of `view` whose boundary alternates with respect to `m`.
pub fn alternating_squares(view: &Subgraph<'_>, m: &Matching) -> Vec<SquareId> {
    let g = view.graph();
    view.squares()
        .filter(|&s| square_alternates(g, s, m))
        .collect()
}

pub(crate) fn square_alternates(g: &PolyominoGraph, s: SquareId, m: &Matching) -> bool {
    let e = g.square(s).edges;
    (m.contains(e[0]) && m.contains(e[2])) || (m.contains(e[1]) && m.contains(e[3]))
}

/// Every simple `m`-alternating cycle of `view`, each once, anchored at its
/// lowest vertex and listed in depth-first discovery order.
pub fn enumerate_alternating_cycles(
    view: &Subgraph<'_>,
    m: &Matching,
    limits: &Limits,
) -> Result<Vec<AlternatingCycle>> {
    limits.check_vertices(view.vertex_count())?;
    let arcs = oriented(view, m);
    let n = arcs.len();
    let mut cycles = Vec::new();
    let mut on_path = vec![false; n];
    for s in view.vertices() {
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        on_path[s.index()] = true;
        walk(s, s, &arcs, &mut on_path, &mut vertices, &mut edges, &mut cycles);
        on_path[s.index()] = false;
    }
    Ok(cycles)
}

fn walk(
    anchor: VertexId,
    v: VertexId,
    arcs: &[Vec<(VertexId, EdgeId)>],
    on_path: &mut [bool],
    vertices: &mut Vec<VertexId>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<AlternatingCycle>,
) {
    for &(w, e) in &arcs[v.index()] {
        if w == anchor {
            edges.push(e);
            out.push(AlternatingCycle { vertices: vertices.clone(), edges: edges.clone() });
            edges.pop();
        } else if w > anchor && !on_path[w.index()] {
            on_path[w.index()] = true;
            vertices.push(w);
            edges.push(e);
            walk(anchor, w, arcs, on_path, vertices, edges, out);
            edges.pop();
            vertices.pop();
            on_path[w.index()] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{CellCoord, Point};
    use crate::matching::enumerate_perfect_matchings;

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
    fn uniqueness() {
        let g = graph("#");
        let full = Subgraph::full(&g);
        assert!(!has_unique_perfect_matching(&full).unwrap());
        // deleting two corners of the square leaves a single edge
        let v: Vec<VertexId> = g.square(SquareId(0)).vertices[..2].to_vec();
        assert!(has_unique_perfect_matching(&full.without_vertices(v)).unwrap());
        let empty = full.without_squares(&[SquareId(0)]);
        assert!(has_unique_perfect_matching(&empty).unwrap());
        let odd = graph("##\n##");
        assert_eq!(has_unique_perfect_matching(&Subgraph::full(&odd)), Err(Error::NoPerfectMatching));
    }

    #[test]
    fn symmetric_difference() {
        let g = graph("##");
        let view = Subgraph::full(&g);
        let v = all_vertical(&g);
        assert!(symmetric_difference_cycles(&view, &v, &v).unwrap().is_empty());
        let left_flat = Matching::new([edge(&g, (0, 0), (1, 0)), edge(&g, (0, 1), (1, 1)), edge(&g, (2, 0), (2, 1))]);
        let cycles = symmetric_difference_cycles(&view, &v, &left_flat).unwrap();
        assert_eq!(cycles.len(), 1);
        let left = g.square_at(CellCoord::new(0, 0)).unwrap();
        assert_eq!(cycles[0].vertex_set(), g.square(left).vertices.iter().copied().collect());
        let not_perfect = Matching::new([edge(&g, (0, 0), (1, 0))]);
        assert_eq!(symmetric_difference_cycles(&view, &v, &not_perfect), Err(Error::MismatchedGraphs));
    }

    #[test]
    fn alternating_square_sets() {
        let g = graph("##");
        let view = Subgraph::full(&g);
        assert_eq!(alternating_squares(&view, &all_vertical(&g)), vec![SquareId(0), SquareId(1)]);
        let left_flat = Matching::new([edge(&g, (0, 0), (1, 0)), edge(&g, (0, 1), (1, 1)), edge(&g, (2, 0), (2, 1))]);
        assert_eq!(alternating_squares(&view, &left_flat), vec![SquareId(0)]);
    }

    #[test]
    fn flipping_a_cycle_gives_a_matching_in_which_it_alternates() {
        let g = graph("###\n###\n##.");
        let view = Subgraph::full(&g);
        for m in enumerate_perfect_matchings(&view, &Limits::default()).unwrap() {
            for c in enumerate_alternating_cycles(&view, &m, &Limits::default()).unwrap() {
                assert!(c.alternates_with(&m));
                let flipped = m.flipped(&c.edges);
                assert!(flipped.is_perfect_in(&view));
                assert!(c.alternates_with(&flipped));
            }
        }
    }
}
