//! Vertex- and edge-deleted subgraphs of a polyomino graph.

use crate::grid::{EdgeId, PolyominoGraph, SquareId, VertexId};

/// A subgraph of a [`PolyominoGraph`] obtained by deleting vertices and edges.
///
/// An edge is present only when both endpoints are present. A square counts
/// as a face of the subgraph when all four of its sides are present.
#[derive(Clone, Debug)]
pub struct Subgraph<'g> {
    graph: &'g PolyominoGraph,
    vertex_alive: Vec<bool>,
    edge_alive: Vec<bool>,
}

impl<'g> Subgraph<'g> {
    pub fn full(graph: &'g PolyominoGraph) -> Self {
        Self {
            graph,
            vertex_alive: vec![true; graph.vertex_count()],
            edge_alive: vec![true; graph.edge_count()],
        }
    }

    /// The subgraph induced by `vertices` with every lattice edge between them.
    pub fn induced(graph: &'g PolyominoGraph, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut vertex_alive = vec![false; graph.vertex_count()];
        for v in vertices {
            vertex_alive[v.index()] = true;
        }
        let edge_alive = graph
            .edge_ids()
            .map(|e| {
                let (a, b) = graph.endpoints(e);
                vertex_alive[a.index()] && vertex_alive[b.index()]
            })
            .collect();
        Self { graph, vertex_alive, edge_alive }
    }

    /// Vertices and exactly the given edges (plus their endpoints).
    pub fn from_edges(graph: &'g PolyominoGraph, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut vertex_alive = vec![false; graph.vertex_count()];
        let mut edge_alive = vec![false; graph.edge_count()];
        for e in edges {
            edge_alive[e.index()] = true;
            let (a, b) = graph.endpoints(e);
            vertex_alive[a.index()] = true;
            vertex_alive[b.index()] = true;
        }
        Self { graph, vertex_alive, edge_alive }
    }

    pub fn graph(&self) -> &'g PolyominoGraph {
        self.graph
    }

    pub fn without_vertices(&self, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut out = self.clone();
        out.delete_vertices(vertices);
        out
    }

    /// Deletes the four corners of every listed square.
    pub fn without_squares<'a>(&self, squares: impl IntoIterator<Item = &'a SquareId>) -> Self {
        let g = self.graph;
        self.without_vertices(squares.into_iter().flat_map(|&s| g.square(s).vertices))
    }

    /// Deletes both endpoints of every listed edge.
    pub fn without_edge_endpoints<'a>(&self, edges: impl IntoIterator<Item = &'a EdgeId>) -> Self {
        let g = self.graph;
        self.without_vertices(edges.into_iter().flat_map(|&e| {
            let (a, b) = g.endpoints(e);
            [a, b]
        }))
    }

    pub fn without_edges(&self, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut out = self.clone();
        for e in edges {
            out.edge_alive[e.index()] = false;
        }
        out
    }

    fn delete_vertices(&mut self, vertices: impl IntoIterator<Item = VertexId>) {
        for v in vertices {
            if std::mem::replace(&mut self.vertex_alive[v.index()], false) {
                for &(_, e) in self.graph.neighbors(v) {
                    self.edge_alive[e.index()] = false;
                }
            }
        }
    }

    #[inline]
    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertex_alive[v.index()]
    }

    #[inline]
    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edge_alive[e.index()]
    }

    pub fn has_square(&self, s: SquareId) -> bool {
        self.graph.square(s).edges.iter().all(|&e| self.has_edge(e))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.graph.vertex_ids().filter(|&v| self.has_vertex(v))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.graph.edge_ids().filter(|&e| self.has_edge(e))
    }

    pub fn squares(&self) -> impl Iterator<Item = SquareId> + '_ {
        self.graph.square_ids().filter(|&s| self.has_square(s))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.graph.neighbors(v).iter().copied().filter(|&(_, e)| self.has_edge(e))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_alive.iter().filter(|&&a| a).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.vertex_alive.iter().any(|&a| a)
    }
}

impl<'g> From<&'g PolyominoGraph> for Subgraph<'g> {
    fn from(g: &'g PolyominoGraph) -> Self {
        Subgraph::full(g)
    }
}
