//! Allowed and forbidden edges, elementary components, nice cycles and their
//! interiors, and the weakly-elementary predicate.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{CellCoord, EdgeId, PolyominoGraph, SquareId, VertexId};
use crate::limits::Limits;
use crate::matching::{has_perfect_matching, max_matching, AlternatingCycle, Matching};
use crate::view::Subgraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClassification {
    pub allowed: Vec<EdgeId>,
    pub forbidden: Vec<EdgeId>,
}

impl EdgeClassification {
    pub fn is_allowed(&self, e: EdgeId) -> bool {
        self.allowed.binary_search(&e).is_ok()
    }

    pub fn is_elementary(&self) -> bool {
        self.forbidden.is_empty()
    }
}

/// An edge is allowed iff deleting its endpoints leaves a graph with a
/// perfect matching.
pub fn classify_edges(g: &PolyominoGraph) -> Result<EdgeClassification> {
    let full = Subgraph::full(g);
    if !has_perfect_matching(&full) {
        return Err(Error::NoPerfectMatching);
    }
    let (allowed, forbidden) = g.edge_ids().partition(|e| {
        let rest = full.without_edge_endpoints([e]);
        has_perfect_matching(&rest)
    });
    Ok(EdgeClassification { allowed, forbidden })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    /// Squares whose four sides all lie in the component.
    pub squares: Vec<SquareId>,
}

impl Component {
    pub fn view<'g>(&self, g: &'g PolyominoGraph) -> Subgraph<'g> {
        Subgraph::from_edges(g, self.edges.iter().copied())
    }

    pub fn cell_list(&self, g: &PolyominoGraph) -> Vec<[i64; 2]> {
        self.squares.iter().map(|&s| g.square(s).cell).map(|c| [c.x, c.y]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementaryDecomposition {
    /// Ordered by lowest vertex id.
    pub components: Vec<Component>,
    pub isolated_vertices: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Connected components, with at least one edge, of `g` minus its forbidden
/// edges.
pub fn elementary_components(g: &PolyominoGraph) -> Result<ElementaryDecomposition> {
    let classes = classify_edges(g)?;
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    for &e in &classes.allowed {
        let (a, b) = g.endpoints(e);
        let (ra, rb) = (find(&mut parent, a.index()), find(&mut parent, b.index()));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut slot = vec![usize::MAX; n];
    let mut components: Vec<Component> = Vec::new();
    let mut touched = vec![false; n];
    for &e in &classes.allowed {
        let (a, b) = g.endpoints(e);
        touched[a.index()] = true;
        touched[b.index()] = true;
    }
    for v in g.vertex_ids() {
        if !touched[v.index()] {
            continue;
        }
        let root = find(&mut parent, v.index());
        if slot[root] == usize::MAX {
            slot[root] = components.len();
            components.push(Component { vertices: Vec::new(), edges: Vec::new(), squares: Vec::new() });
        }
        components[slot[root]].vertices.push(v);
    }
    for &e in &classes.allowed {
        let (a, _) = g.endpoints(e);
        let root = find(&mut parent, a.index());
        components[slot[root]].edges.push(e);
    }
    for c in &mut components {
        let view = Subgraph::from_edges(g, c.edges.iter().copied());
        c.squares = view.squares().collect();
    }
    let isolated_vertices = touched.iter().filter(|&&t| !t).count();
    Ok(ElementaryDecomposition { components, isolated_vertices })
}

/// A cycle alternating under some perfect matching of the whole graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceCycle {
    pub cycle: AlternatingCycle,
    /// A perfect matching of the graph under which the cycle alternates.
    #[serde(skip)]
    pub witness: Matching,
}

/// Every simple cycle of `view`, each once: anchored at its lowest vertex,
/// with the second vertex lower than the last.
pub fn simple_cycles(view: &Subgraph<'_>, limits: &Limits) -> Result<Vec<AlternatingCycle>> {
    limits.check_vertices(view.vertex_count())?;
    let g = view.graph();
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in view.vertices() {
        on_path[s.index()] = true;
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        extend_path(view, s, s, &mut on_path, &mut vertices, &mut edges, &mut out);
        on_path[s.index()] = false;
    }
    Ok(out)
}

fn extend_path(
    view: &Subgraph<'_>,
    anchor: VertexId,
    v: VertexId,
    on_path: &mut [bool],
    vertices: &mut Vec<VertexId>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<AlternatingCycle>,
) {
    for (w, e) in view.neighbors(v) {
        if w == anchor {
            if vertices.len() >= 4 && vertices[1] < vertices[vertices.len() - 1] {
                edges.push(e);
                out.push(AlternatingCycle { vertices: vertices.clone(), edges: edges.clone() });
                edges.pop();
            }
        } else if w > anchor && !on_path[w.index()] {
            on_path[w.index()] = true;
            vertices.push(w);
            edges.push(e);
            extend_path(view, anchor, w, on_path, vertices, edges, out);
            edges.pop();
            vertices.pop();
            on_path[w.index()] = false;
        }
    }
}

/// All nice cycles of `g`: simple cycles `C` with `g - V(C)` empty or
/// perfectly matchable.
pub fn nice_cycles(g: &PolyominoGraph, limits: &Limits) -> Result<Vec<NiceCycle>> {
    let full = Subgraph::full(g);
    let mut out = Vec::new();
    for cycle in simple_cycles(&full, limits)? {
        let rest = full.without_vertices(cycle.vertices.iter().copied());
        let m = max_matching(&rest);
        if 2 * m.len() != rest.vertex_count() {
            continue;
        }
        let witness = m.edges().iter().copied().chain(cycle.edges.iter().step_by(2).copied()).collect();
        out.push(NiceCycle { cycle, witness });
    }
    Ok(out)
}

/// Cells of `g` whose centers lie inside `cycle`.
///
/// A ray from a cell center towards +x crosses the vertical cycle edges at
/// the same height to its right; an odd count means inside.
pub fn interior_cells(g: &PolyominoGraph, cycle: &AlternatingCycle) -> Vec<CellCoord> {
    let crossings: Vec<(i64, i64)> = cycle
        .edges
        .iter()
        .filter_map(|&e| {
            let (a, b) = g.endpoints(e);
            let (pa, pb) = (g.point(a), g.point(b));
            (pa.x == pb.x).then(|| (pa.x, pa.y.min(pb.y)))
        })
        .collect();
    g.cells()
        .iter()
        .copied()
        .filter(|c| crossings.iter().filter(|&&(x, y)| y == c.y && x > c.x).count() % 2 == 1)
        .collect()
}

/// `I[C]`: the cycle with its interior, as a polyomino graph of the interior
/// cells.
pub fn interior_graph(g: &PolyominoGraph, cycle: &AlternatingCycle) -> Result<PolyominoGraph> {
    PolyominoGraph::from_cells(interior_cells(g, cycle))
}

/// Edges of `g` inside `cycle`: sides of interior cells not on the cycle.
pub fn interior_edges(g: &PolyominoGraph, cycle: &AlternatingCycle) -> Vec<EdgeId> {
    let on_cycle: BTreeSet<EdgeId> = cycle.edges.iter().copied().collect();
    let edges: BTreeSet<EdgeId> = interior_cells(g, cycle)
        .into_iter()
        .filter_map(|c| g.square_at(c))
        .flat_map(|s| g.square(s).edges)
        .filter(|e| !on_cycle.contains(e))
        .collect();
    edges.into_iter().collect()
}

/// Whether every nice cycle with edges in its interior has an allowed
/// interior edge incident with one of its vertices.
pub fn is_weakly_elementary(g: &PolyominoGraph, limits: &Limits) -> Result<bool> {
    let classes = classify_edges(g)?;
    for nice in nice_cycles(g, limits)? {
        let inside = interior_edges(g, &nice.cycle);
        if inside.is_empty() {
            continue;
        }
        let touches = inside.iter().any(|&e| {
            let (a, b) = g.endpoints(e);
            classes.is_allowed(e) && (nice.cycle.vertices.contains(&a) || nice.cycle.vertices.contains(&b))
        });
        if !touches {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `g` is connected and has no cut vertex.
pub fn is_two_connected(g: &PolyominoGraph) -> bool {
    let n = g.vertex_count();
    if n < 3 {
        return n > 0;
    }
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut counter = 0;
    let mut root_children = 0;
    let mut cut = false;
    // iterative depth-first search: (vertex, parent, next neighbor index)
    let mut stack = vec![(0usize, usize::MAX, 0usize)];
    order[0] = 0;
    low[0] = 0;
    counter += 1;
    while let Some(top) = stack.last_mut() {
        let (v, parent, next) = *top;
        let nbrs = g.neighbors(VertexId::from_index(v));
        if next < nbrs.len() {
            let w = nbrs[next].0.index();
            top.2 += 1;
            if order[w] == usize::MAX {
                order[w] = counter;
                low[w] = counter;
                counter += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(order[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= order[parent] {
                    cut = true;
                }
            }
        }
    }
    counter == n && !cut && root_children <= 1
}
