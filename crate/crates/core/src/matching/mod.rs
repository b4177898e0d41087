//! Perfect matchings: maximum matching, enumeration, exact counting, and
//! alternating-cycle machinery.

mod count;
mod cycles;
mod enumerate;
mod hopcroft_karp;

pub use count::{count_perfect_matchings, count_perfect_matchings_as};
pub use cycles::{
    alternating_squares, enumerate_alternating_cycles, has_unique_perfect_matching,
    symmetric_difference_cycles, AlternatingCycle,
};
pub use enumerate::{enumerate_perfect_matchings, for_each_perfect_matching};
pub use hopcroft_karp::{has_perfect_matching, max_matching};

use serde::{Serialize, Serializer};

use crate::grid::{EdgeId, PolyominoGraph, VertexId};
use crate::view::Subgraph;

/// A set of pairwise non-adjacent edges, kept sorted by id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Self { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// True when all edges are present in `view` and no two share a vertex.
    pub fn is_matching_in(&self, view: &Subgraph<'_>) -> bool {
        let g = view.graph();
        let mut covered = vec![false; g.vertex_count()];
        for &e in &self.edges {
            if e.index() >= g.edge_count() || !view.has_edge(e) {
                return false;
            }
            let (a, b) = g.endpoints(e);
            if covered[a.index()] || covered[b.index()] {
                return false;
            }
            covered[a.index()] = true;
            covered[b.index()] = true;
        }
        true
    }

    pub fn is_perfect_in(&self, view: &Subgraph<'_>) -> bool {
        self.is_matching_in(view) && 2 * self.len() == view.vertex_count()
    }

    /// Mate of every vertex of the parent graph.
    pub fn mates(&self, g: &PolyominoGraph) -> Vec<Option<VertexId>> {
        let mut mate = vec![None; g.vertex_count()];
        for &e in &self.edges {
            let (a, b) = g.endpoints(e);
            mate[a.index()] = Some(b);
            mate[b.index()] = Some(a);
        }
        mate
    }

    /// Symmetric difference with a set of edges.
    pub fn flipped(&self, edges: &[EdgeId]) -> Matching {
        let mut out: Vec<EdgeId> = self.edges.iter().copied().filter(|e| !edges.contains(e)).collect();
        out.extend(edges.iter().copied().filter(|e| !self.contains(*e)));
        Matching::new(out)
    }

    /// Edges as sorted endpoint coordinate pairs, the JSON wire form.
    pub fn endpoint_pairs(&self, g: &PolyominoGraph) -> Vec<[[i64; 2]; 2]> {
        let mut pairs: Vec<[[i64; 2]; 2]> = self
            .edges
            .iter()
            .map(|&e| {
                let (a, b) = g.endpoints(e);
                let (pa, pb) = (g.point(a), g.point(b));
                [[pa.x, pa.y], [pb.x, pb.y]]
            })
            .collect();
        pairs.sort();
        pairs
    }
}

impl FromIterator<EdgeId> for Matching {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        Matching::new(iter)
    }
}

/// Serializes a matching as sorted endpoint pairs of its parent graph.
pub struct MatchingJson<'a> {
    pub graph: &'a PolyominoGraph,
    pub matching: &'a Matching,
}

impl Serialize for MatchingJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.matching.endpoint_pairs(self.graph).serialize(s)
    }
}
