//! Polyomino graphs: construction from unit cells, classification of the
//! boundary, and the ASCII / JSON cell formats.
//!
//! All coordinates use a bottom-left origin with `y` increasing upward.
//! Cells are translation-normalized at construction, so two graphs are equal
//! exactly when their normalized cell sets are equal. Ids are dense and
//! assigned in row-major order (by `y`, then `x`).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

macro_rules! dense_id {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub u32);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0 as usize
            }

            #[inline]
            pub(crate) fn from_index(i: usize) -> Self {
                Self(i as u32)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

dense_id!(
    /// Handle of a lattice vertex.
    VertexId
);
dense_id!(
    /// Handle of a unit edge.
    EdgeId
);
dense_id!(
    /// Handle of a unit square face.
    SquareId
);

/// A unit cell, addressed by its bottom-left corner.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellCoord {
    pub x: i64,
    pub y: i64,
}

impl CellCoord {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl Ord for CellCoord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for CellCoord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A lattice point (cell corner).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// How cells must touch for a cell set to count as connected.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connectivity {
    /// Cells must be connected through shared sides (standard polyominoes).
    #[default]
    Edge,
    /// Corner contact is enough; only the resulting graph must be connected.
    Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    pub cell: CellCoord,
    /// Corners in counterclockwise order starting bottom-left.
    pub vertices: [VertexId; 4],
    /// Sides in the order bottom, right, top, left.
    pub edges: [EdgeId; 4],
}

#[derive(Clone, Debug)]
pub struct PolyominoGraph {
    mode: Connectivity,
    cells: Vec<CellCoord>,
    filled_holes: Vec<CellCoord>,
    width: i64,
    height: i64,
    points: Vec<Point>,
    point_index: HashMap<Point, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
    squares: Vec<Square>,
    square_index: HashMap<CellCoord, SquareId>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    edge_squares: Vec<Vec<SquareId>>,
    vertex_squares: Vec<Vec<SquareId>>,
    boundary_edge: Vec<bool>,
    external_vertex: Vec<bool>,
    internal_square: Vec<bool>,
}

impl PartialEq for PolyominoGraph {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for PolyominoGraph {}

fn normalize(cells: impl IntoIterator<Item = CellCoord>) -> Result<BTreeSet<CellCoord>> {
    let raw: Vec<CellCoord> = cells.into_iter().collect();
    let min_x = raw.iter().map(|c| c.x).min().ok_or(Error::EmptyInput)?;
    let min_y = raw.iter().map(|c| c.y).min().ok_or(Error::EmptyInput)?;
    Ok(raw
        .into_iter()
        .map(|c| CellCoord::new(c.x - min_x, c.y - min_y))
        .collect())
}

/// Whether a normalized cell set is connected under `mode`.
pub fn cells_connected(cells: &BTreeSet<CellCoord>, mode: Connectivity) -> bool {
    let Some(&start) = cells.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for (dx, dy) in neighbor_offsets(mode) {
            let n = CellCoord::new(c.x + dx, c.y + dy);
            if cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == cells.len()
}

pub(crate) fn neighbor_offsets(mode: Connectivity) -> &'static [(i64, i64)] {
    match mode {
        Connectivity::Edge => &[(1, 0), (-1, 0), (0, 1), (0, -1)],
        Connectivity::Vertex => &[
            (1, 0),
            (-1, 0),
            (0, 1),
            (0, -1),
            (1, 1),
            (1, -1),
            (-1, 1),
            (-1, -1),
        ],
    }
}

/// Finds enclosed regions of absent cells. Single-cell regions are returned
/// (their four sides are graph edges, so the region is a unit square face);
/// larger regions make the graph something other than a polyomino graph.
fn enclosed_holes(cells: &BTreeSet<CellCoord>, width: i64, height: i64) -> Result<Vec<CellCoord>> {
    let inside = |c: CellCoord| c.x >= -1 && c.y >= -1 && c.x <= width && c.y <= height;
    let mut outer = BTreeSet::new();
    let start = CellCoord::new(-1, -1);
    outer.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for &(dx, dy) in neighbor_offsets(Connectivity::Edge) {
            let n = CellCoord::new(c.x + dx, c.y + dy);
            if inside(n) && !cells.contains(&n) && outer.insert(n) {
                queue.push_back(n);
            }
        }
    }
    let mut visited = BTreeSet::new();
    let mut holes = Vec::new();
    for y in 0..height {
        for x in 0..width {
            let c = CellCoord::new(x, y);
            if cells.contains(&c) || outer.contains(&c) || visited.contains(&c) {
                continue;
            }
            let mut region = vec![c];
            visited.insert(c);
            let mut queue = VecDeque::from([c]);
            while let Some(h) = queue.pop_front() {
                for &(dx, dy) in neighbor_offsets(Connectivity::Edge) {
                    let n = CellCoord::new(h.x + dx, h.y + dy);
                    if !cells.contains(&n) && visited.insert(n) {
                        region.push(n);
                        queue.push_back(n);
                    }
                }
            }
            if region.len() > 1 {
                return Err(Error::NonSquareFace { x: c.x, y: c.y });
            }
            holes.push(c);
        }
    }
    Ok(holes)
}

impl PolyominoGraph {
    /// Builds the graph of an edge-connected cell set.
    pub fn from_cells(cells: impl IntoIterator<Item = CellCoord>) -> Result<Self> {
        Self::from_cells_with(cells, Connectivity::Edge)
    }

    /// Builds the graph of a cell set under the given connectivity rule.
    ///
    /// An enclosed absent cell whose four sides all belong to present cells
    /// bounds a unit square face of the resulting graph, so it is added as a
    /// square. Larger enclosed regions are rejected with
    /// [`Error::NonSquareFace`].
    pub fn from_cells_with(
        cells: impl IntoIterator<Item = CellCoord>,
        mode: Connectivity,
    ) -> Result<Self> {
        let mut cells = normalize(cells)?;
        if !cells_connected(&cells, mode) {
            return Err(Error::Disconnected);
        }
        let width = cells.iter().map(|c| c.x).max().unwrap_or(0) + 1;
        let height = cells.iter().map(|c| c.y).max().unwrap_or(0) + 1;
        let filled_holes = enclosed_holes(&cells, width, height)?;
        cells.extend(filled_holes.iter().copied());

        let corner_set: BTreeSet<Point> = cells
            .iter()
            .flat_map(|c| {
                [
                    Point::new(c.x, c.y),
                    Point::new(c.x + 1, c.y),
                    Point::new(c.x + 1, c.y + 1),
                    Point::new(c.x, c.y + 1),
                ]
            })
            .collect();
        let points: Vec<Point> = corner_set.into_iter().collect();
        let point_index: HashMap<Point, VertexId> = points
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, VertexId::from_index(i)))
            .collect();

        let corners = |c: &CellCoord| -> [VertexId; 4] {
            [
                point_index[&Point::new(c.x, c.y)],
                point_index[&Point::new(c.x + 1, c.y)],
                point_index[&Point::new(c.x + 1, c.y + 1)],
                point_index[&Point::new(c.x, c.y + 1)],
            ]
        };
        let ordered = |a: VertexId, b: VertexId| if a < b { (a, b) } else { (b, a) };

        let edge_set: BTreeSet<(VertexId, VertexId)> = cells
            .iter()
            .flat_map(|c| {
                let v = corners(c);
                (0..4).map(move |i| ordered(v[i], v[(i + 1) % 4]))
            })
            .collect();
        let edges: Vec<(VertexId, VertexId)> = edge_set.into_iter().collect();
        let edge_index: HashMap<(VertexId, VertexId), EdgeId> = edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, EdgeId::from_index(i)))
            .collect();

        let cell_list: Vec<CellCoord> = cells.into_iter().collect();
        let squares: Vec<Square> = cell_list
            .iter()
            .map(|c| {
                let v = corners(c);
                let side = |i: usize| edge_index[&ordered(v[i], v[(i + 1) % 4])];
                Square { cell: *c, vertices: v, edges: [side(0), side(1), side(2), side(3)] }
            })
            .collect();
        let square_index = squares
            .iter()
            .enumerate()
            .map(|(i, s)| (s.cell, SquareId::from_index(i)))
            .collect();

        let mut adjacency = vec![Vec::new(); points.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            adjacency[a.index()].push((b, EdgeId::from_index(i)));
            adjacency[b.index()].push((a, EdgeId::from_index(i)));
        }
        for list in &mut adjacency {
            list.sort();
        }

        let mut edge_squares = vec![Vec::new(); edges.len()];
        let mut vertex_squares = vec![Vec::new(); points.len()];
        for (i, s) in squares.iter().enumerate() {
            for e in s.edges {
                edge_squares[e.index()].push(SquareId::from_index(i));
            }
            for v in s.vertices {
                vertex_squares[v.index()].push(SquareId::from_index(i));
            }
        }
        let boundary_edge: Vec<bool> = edge_squares.iter().map(|s| s.len() == 1).collect();
        let mut external_vertex = vec![false; points.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if boundary_edge[i] {
                external_vertex[a.index()] = true;
                external_vertex[b.index()] = true;
            }
        }
        let internal_square = squares
            .iter()
            .map(|s| s.vertices.iter().all(|v| !external_vertex[v.index()]))
            .collect();

        Ok(Self {
            mode,
            cells: cell_list,
            filled_holes,
            width,
            height,
            points,
            point_index,
            edges,
            edge_index,
            squares,
            square_index,
            adjacency,
            edge_squares,
            vertex_squares,
            boundary_edge,
            external_vertex,
            internal_square,
        })
    }

    /// Parses rows of `#` (cell) and `.` (no cell); the last row is `y = 0`.
    pub fn parse_ascii(text: &str) -> Result<Self> {
        Self::parse_ascii_with(text, Connectivity::Edge)
    }

    pub fn parse_ascii_with(text: &str, mode: Connectivity) -> Result<Self> {
        Self::from_cells_with(parse_ascii_cells(text)?, mode)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_json_with(text, Connectivity::Edge)
    }

    pub fn from_json_with(text: &str, mode: Connectivity) -> Result<Self> {
        let doc: CellsDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_cells_with(doc.cells.into_iter().map(|[x, y]| CellCoord::new(x, y)), mode)
    }

    /// `{"cells": [[x, y], ...]}` with normalized coordinates in id order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.cells_doc()).expect("cell list serializes")
    }

    pub fn cells_doc(&self) -> CellsDoc {
        CellsDoc { cells: self.cells.iter().map(|c| [c.x, c.y]).collect() }
    }

    pub fn to_ascii(&self) -> String {
        let mut rows = Vec::with_capacity(self.height as usize);
        for y in (0..self.height).rev() {
            let row: String = (0..self.width)
                .map(|x| if self.square_at(CellCoord::new(x, y)).is_some() { '#' } else { '.' })
                .collect();
            rows.push(row);
        }
        rows.join("\n")
    }

    pub fn mode(&self) -> Connectivity {
        self.mode
    }

    pub fn cells(&self) -> &[CellCoord] {
        &self.cells
    }

    /// Enclosed unit holes that were added as squares during construction.
    pub fn filled_holes(&self) -> &[CellCoord] {
        &self.filled_holes
    }

    /// Bounding box width in cells.
    pub fn width(&self) -> i64 {
        self.width
    }

    /// Bounding box height in cells.
    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn square_count(&self) -> usize {
        self.squares.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.points.len()).map(VertexId::from_index)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId::from_index)
    }

    pub fn square_ids(&self) -> impl Iterator<Item = SquareId> + '_ {
        (0..self.squares.len()).map(SquareId::from_index)
    }

    pub fn point(&self, v: VertexId) -> Point {
        self.points[v.index()]
    }

    pub fn vertex_at(&self, p: Point) -> Option<VertexId> {
        self.point_index.get(&p).copied()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.index()]
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edge_index.get(&key).copied()
    }

    pub fn square(&self, s: SquareId) -> &Square {
        &self.squares[s.index()]
    }

    pub fn square_at(&self, c: CellCoord) -> Option<SquareId> {
        self.square_index.get(&c).copied()
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v.index()]
    }

    pub fn squares_of_edge(&self, e: EdgeId) -> &[SquareId] {
        &self.edge_squares[e.index()]
    }

    pub fn squares_of_vertex(&self, v: VertexId) -> &[SquareId] {
        &self.vertex_squares[v.index()]
    }

    pub fn color(&self, v: VertexId) -> Color {
        let p = self.point(v);
        if (p.x + p.y).rem_euclid(2) == 0 {
            Color::Black
        } else {
            Color::White
        }
    }

    pub fn is_boundary_edge(&self, e: EdgeId) -> bool {
        self.boundary_edge[e.index()]
    }

    pub fn is_external_vertex(&self, v: VertexId) -> bool {
        self.external_vertex[v.index()]
    }

    pub fn is_internal_square(&self, s: SquareId) -> bool {
        self.internal_square[s.index()]
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_ids().filter(|&e| self.is_boundary_edge(e))
    }

    /// The boundary of the infinite face as a counterclockwise vertex cycle,
    /// starting at the lowest-id boundary vertex.
    pub fn boundary_cycle(&self) -> Result<Vec<VertexId>> {
        let mut next: Vec<Option<VertexId>> = vec![None; self.vertex_count()];
        for s in &self.squares {
            for i in 0..4 {
                if !self.is_boundary_edge(s.edges[i]) {
                    continue;
                }
                let (from, to) = (s.vertices[i], s.vertices[(i + 1) % 4]);
                if next[from.index()].replace(to).is_some() {
                    let p = self.point(from);
                    return Err(Error::NotSimple { x: p.x, y: p.y });
                }
            }
        }
        let start = self
            .vertex_ids()
            .find(|v| next[v.index()].is_some())
            .expect("a nonempty polyomino has boundary edges");
        let mut cycle = vec![start];
        let mut cur = next[start.index()].expect("start is on the boundary");
        while cur != start {
            cycle.push(cur);
            cur = next[cur.index()].expect("boundary edges close up");
        }
        Ok(cycle)
    }
}

/// JSON cell document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellsDoc {
    pub cells: Vec<[i64; 2]>,
}

impl Serialize for PolyominoGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.cells_doc().serialize(serializer)
    }
}

/// Parses the ASCII cell format without building a graph.
pub fn parse_ascii_cells(text: &str) -> Result<Vec<CellCoord>> {
    let mut rows: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect();
    while rows.last().is_some_and(|r| r.trim().is_empty()) {
        rows.pop();
    }
    while rows.first().is_some_and(|r| r.trim().is_empty()) {
        rows.remove(0);
    }
    let n = rows.len() as i64;
    let mut cells = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, ch) in row.chars().enumerate() {
            match ch {
                '#' => cells.push(CellCoord::new(c as i64, n - 1 - r as i64)),
                '.' => {}
                _ => return Err(Error::BadCharacter { line: r + 1, column: c + 1, ch }),
            }
        }
    }
    if cells.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(cells)
}
