//! Resonant and alternating face sets, and the Clar number by exhaustive
//! search.
//!
//! For pairwise vertex-disjoint squares `K`, a perfect matching making every
//! square of `K` alternating exists iff `G - V(K)` has a perfect matching:
//! given one, add a pair of opposite sides of each square; conversely, such a
//! matching restricted to `G - V(K)` is perfect there, because each square's
//! four corners are matched inside the square. Resonance is tested that way.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{EdgeId, PolyominoGraph, SquareId, VertexId};
use crate::limits::Limits;
use crate::matching::{
    alternating_squares, for_each_perfect_matching, has_perfect_matching,
    has_unique_perfect_matching, max_matching, Matching,
};
use crate::view::Subgraph;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceSetKind {
    ResonantCandidate,
    AlternatingCandidate,
}

/// Squares sorted by id, with an optional matching under which they all
/// alternate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub squares: Vec<SquareId>,
    pub kind: FaceSetKind,
    pub witness: Option<Matching>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    /// Cell coordinates of the squares, the JSON wire form.
    pub fn cell_list(&self, g: &PolyominoGraph) -> Vec<[i64; 2]> {
        let mut cells: Vec<[i64; 2]> = self
            .squares
            .iter()
            .map(|&s| {
                let c = g.square(s).cell;
                [c.x, c.y]
            })
            .collect();
        cells.sort();
        cells
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClarBackend {
    Exhaustive,
    IntegerProgram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClarResult {
    pub clar_number: usize,
    /// All maximum resonant sets (exhaustive backend) or one (integer program).
    pub witness_sets: Vec<FaceSet>,
    pub backend: ClarBackend,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResonanceCheck {
    Resonant { witness: Matching },
    Overlap(SquareId, SquareId),
    NoMatching,
}

impl ResonanceCheck {
    pub fn is_resonant(&self) -> bool {
        matches!(self, ResonanceCheck::Resonant { .. })
    }

    pub fn witness(&self) -> Option<&Matching> {
        match self {
            ResonanceCheck::Resonant { witness } => Some(witness),
            _ => None,
        }
    }
}

fn sorted_unique(k: &[SquareId]) -> Vec<SquareId> {
    let set: BTreeSet<SquareId> = k.iter().copied().collect();
    set.into_iter().collect()
}

/// Whether `k` is a resonant set of the subgraph `view`.
pub fn is_resonant_set_in(view: &Subgraph<'_>, k: &[SquareId]) -> ResonanceCheck {
    let g = view.graph();
    let k = sorted_unique(k);
    for (i, &a) in k.iter().enumerate() {
        let va = g.square(a).vertices;
        for &b in &k[i + 1..] {
            if g.square(b).vertices.iter().any(|v| va.contains(v)) {
                return ResonanceCheck::Overlap(a, b);
            }
        }
    }
    if k.iter().any(|&s| !view.has_square(s)) {
        return ResonanceCheck::NoMatching;
    }
    let rest = view.without_squares(&k);
    let m = max_matching(&rest);
    if 2 * m.len() != rest.vertex_count() {
        return ResonanceCheck::NoMatching;
    }
    let witness = m
        .edges()
        .iter()
        .copied()
        .chain(k.iter().flat_map(|&s| {
            let e = g.square(s).edges;
            [e[0], e[2]]
        }))
        .collect();
    ResonanceCheck::Resonant { witness }
}

pub fn is_resonant_set(g: &PolyominoGraph, k: &[SquareId]) -> ResonanceCheck {
    is_resonant_set_in(&Subgraph::full(g), k)
}

/// A perfect matching under which every square of `k` alternates, if any.
///
/// Each square alternates exactly when one pair of its opposite sides is
/// matched. The search branches over that choice per square, prunes choices
/// that collide on a vertex, and finishes with a matching of the rest.
pub fn is_alternating_set(g: &PolyominoGraph, k: &[SquareId], limits: &Limits) -> Result<Option<Matching>> {
    limits.check_vertices(g.vertex_count())?;
    let k = sorted_unique(k);
    let view = Subgraph::full(g);
    let mut mate: Vec<Option<VertexId>> = vec![None; g.vertex_count()];
    let mut chosen = Vec::new();
    Ok(choose_sides(&view, &k, 0, &mut mate, &mut chosen))
}

fn choose_sides(
    view: &Subgraph<'_>,
    k: &[SquareId],
    i: usize,
    mate: &mut [Option<VertexId>],
    chosen: &mut Vec<EdgeId>,
) -> Option<Matching> {
    let g = view.graph();
    if i == k.len() {
        let covered = g.vertex_ids().filter(|v| mate[v.index()].is_some());
        let rest = view.without_vertices(covered);
        let m = max_matching(&rest);
        if 2 * m.len() != rest.vertex_count() {
            return None;
        }
        return Some(m.edges().iter().chain(chosen.iter()).copied().collect());
    }
    let sides = g.square(k[i]).edges;
    for pair in [[sides[0], sides[2]], [sides[1], sides[3]]] {
        let mut added = Vec::new();
        let mut ok = true;
        for e in pair {
            let (a, b) = g.endpoints(e);
            match (mate[a.index()], mate[b.index()]) {
                (Some(x), Some(y)) if x == b && y == a => {}
                (None, None) => {
                    mate[a.index()] = Some(b);
                    mate[b.index()] = Some(a);
                    chosen.push(e);
                    added.push(e);
                }
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        let found = if ok { choose_sides(view, k, i + 1, mate, chosen) } else { None };
        for e in added {
            let (a, b) = g.endpoints(e);
            mate[a.index()] = None;
            mate[b.index()] = None;
            chosen.pop();
        }
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Exact Clar number of `g`, with every maximum resonant set.
pub fn clar_exhaustive(g: &PolyominoGraph, limits: &Limits) -> Result<ClarResult> {
    clar_exhaustive_in(&Subgraph::full(g), limits)
}

/// Clar number of a subgraph, whose faces are the squares it fully contains.
///
/// Branch and bound over pairwise-disjoint square sets in id order; the bound
/// is the current size plus the number of later squares still disjoint from
/// the current set.
pub fn clar_exhaustive_in(view: &Subgraph<'_>, limits: &Limits) -> Result<ClarResult> {
    limits.check_vertices(view.vertex_count())?;
    if !has_perfect_matching(view) {
        return Err(Error::NoPerfectMatching);
    }
    let g = view.graph();
    let squares: Vec<SquareId> = view.squares().collect();
    let mut search = ClarSearch {
        view,
        squares: &squares,
        used: vec![false; g.vertex_count()],
        current: Vec::new(),
        best: 0,
        best_sets: vec![Vec::new()],
    };
    search.descend(0);
    let mut sets = search.best_sets;
    sets.sort();
    let witness_sets = sets
        .into_iter()
        .map(|squares| {
            let witness = is_resonant_set_in(view, &squares).witness().cloned();
            FaceSet { squares, kind: FaceSetKind::ResonantCandidate, witness }
        })
        .collect();
    Ok(ClarResult { clar_number: search.best, witness_sets, backend: ClarBackend::Exhaustive })
}

struct ClarSearch<'a, 'g> {
    view: &'a Subgraph<'g>,
    squares: &'a [SquareId],
    used: Vec<bool>,
    current: Vec<SquareId>,
    best: usize,
    best_sets: Vec<Vec<SquareId>>,
}

impl ClarSearch<'_, '_> {
    fn fits(&self, s: SquareId) -> bool {
        self.view.graph().square(s).vertices.iter().all(|v| !self.used[v.index()])
    }

    fn mark(&mut self, s: SquareId, on: bool) {
        for v in self.view.graph().square(s).vertices {
            self.used[v.index()] = on;
        }
    }

    fn descend(&mut self, from: usize) {
        let size = self.current.len();
        if size > 0 && size >= self.best {
            let rest = self.view.without_squares(&self.current);
            if has_perfect_matching(&rest) {
                if size > self.best {
                    self.best = size;
                    self.best_sets.clear();
                }
                self.best_sets.push(self.current.clone());
            }
        }
        for j in from..self.squares.len() {
            let s = self.squares[j];
            if !self.fits(s) {
                continue;
            }
            let room = self.squares[j..].iter().filter(|&&t| self.fits(t)).count();
            if size + room < self.best {
                return;
            }
            self.mark(s, true);
            self.current.push(s);
            self.descend(j + 1);
            self.current.pop();
            self.mark(s, false);
        }
    }
}

/// The inclusion-maximal alternating sets of `g`.
///
/// Every alternating set lies inside `A(M)`, the set of squares alternating
/// under its witness `M`, so the maximal alternating sets are exactly the
/// maximal members of `{A(M)}` over all perfect matchings.
pub fn maximal_alternating_sets(g: &PolyominoGraph, limits: &Limits) -> Result<Vec<FaceSet>> {
    let view = Subgraph::full(g);
    limits.check_vertices(view.vertex_count())?;
    let mut family: Vec<(Vec<SquareId>, Matching)> = Vec::new();
    let mut seen = BTreeSet::new();
    let _ = for_each_perfect_matching(&view, |edges| {
        let m = Matching::new(edges.iter().copied());
        let a = alternating_squares(&view, &m);
        if seen.insert(a.clone()) {
            family.push((a, m));
        }
        std::ops::ControlFlow::Continue(())
    });
    if family.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let is_proper_subset = |a: &[SquareId], b: &[SquareId]| a.len() < b.len() && a.iter().all(|s| b.contains(s));
    let mut maximal: Vec<FaceSet> = family
        .iter()
        .filter(|(a, _)| !family.iter().any(|(b, _)| is_proper_subset(a, b)))
        .map(|(a, m)| FaceSet {
            squares: a.clone(),
            kind: FaceSetKind::AlternatingCandidate,
            witness: Some(m.clone()),
        })
        .collect();
    maximal.sort_by(|x, y| x.squares.cmp(&y.squares));
    Ok(maximal)
}

/// Whether `g - V(k)` has a unique perfect matching.
pub fn verify_unique_after_deletion(g: &PolyominoGraph, k: &[SquareId]) -> Result<bool> {
    verify_unique_after_deletion_in(&Subgraph::full(g), k)
}

pub fn verify_unique_after_deletion_in(view: &Subgraph<'_>, k: &[SquareId]) -> Result<bool> {
    has_unique_perfect_matching(&view.without_squares(k))
}
