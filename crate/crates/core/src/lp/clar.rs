//! The Clar integer program and its branch-and-bound solver.
//!
//! One binary variable per face and per edge; for every vertex, the edges
//! and faces touching it sum to exactly one; maximize the number of faces.
//! Feasible 0/1 points are exactly a resonant set plus a perfect matching of
//! the remaining vertices.
//!
//! The plain-text listing produced by [`IntegerProgram::to_text`] has the
//! grammar
//!
//! ```text
//! listing    := "maximize" NL "  clar: " terms NL
//!               "subject to" NL { "  v" ID ": " terms " = 1" NL }
//!               "binary" NL { "  " NAME NL } "end" NL
//! terms      := NAME { " + " NAME } | "0"
//! NAME       := "f" SQUARE_ID | "e" EDGE_ID
//! ```

use std::fmt::Write as _;

use super::simplex::{LinearProgram, LpSolution};
use crate::error::{Error, Result};
use crate::grid::{EdgeId, PolyominoGraph, SquareId, VertexId};
use crate::scalar::LpScalar;
use crate::view::Subgraph;
use crate::Rational;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Variable {
    Face(SquareId),
    Edge(EdgeId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerProgram {
    /// Face variables first, then edge variables, each in id order.
    pub variables: Vec<Variable>,
    pub face_count: usize,
    /// One equality row per vertex.
    pub row_vertices: Vec<VertexId>,
    /// Variable indices (coefficient 1) of each row, ascending.
    pub rows: Vec<Vec<usize>>,
}

pub fn build_clar_ip(g: &PolyominoGraph) -> IntegerProgram {
    build_clar_ip_in(&Subgraph::full(g))
}

/// The program for a subgraph; its faces are the squares it fully contains.
pub fn build_clar_ip_in(view: &Subgraph<'_>) -> IntegerProgram {
    let g = view.graph();
    let faces: Vec<SquareId> = view.squares().collect();
    let edges: Vec<EdgeId> = view.edges().collect();
    let mut face_var = vec![None; g.square_count()];
    let mut edge_var = vec![None; g.edge_count()];
    let mut variables = Vec::with_capacity(faces.len() + edges.len());
    for &f in &faces {
        face_var[f.index()] = Some(variables.len());
        variables.push(Variable::Face(f));
    }
    for &e in &edges {
        edge_var[e.index()] = Some(variables.len());
        variables.push(Variable::Edge(e));
    }
    let row_vertices: Vec<VertexId> = view.vertices().collect();
    let rows = row_vertices
        .iter()
        .map(|&v| {
            let mut vars: Vec<usize> = g
                .squares_of_vertex(v)
                .iter()
                .filter_map(|s| face_var[s.index()])
                .chain(view.neighbors(v).filter_map(|(_, e)| edge_var[e.index()]))
                .collect();
            vars.sort_unstable();
            vars
        })
        .collect();
    IntegerProgram { variables, face_count: faces.len(), row_vertices, rows }
}

impl IntegerProgram {
    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.rows.len()
    }

    pub fn is_face(&self, var: usize) -> bool {
        var < self.face_count
    }

    pub fn var_name(&self, var: usize) -> String {
        match self.variables[var] {
            Variable::Face(s) => format!("f{s}"),
            Variable::Edge(e) => format!("e{e}"),
        }
    }

    /// The continuous relaxation with some variables fixed. Returns the
    /// program over the free variables, their original indices, and the
    /// objective contribution of variables fixed to one.
    fn relaxation<T: LpScalar>(&self, fixed: &[Option<bool>]) -> (LinearProgram<T>, Vec<usize>, usize) {
        let free: Vec<usize> = (0..self.num_vars()).filter(|&j| fixed[j].is_none()).collect();
        let mut column = vec![usize::MAX; self.num_vars()];
        for (k, &j) in free.iter().enumerate() {
            column[j] = k;
        }
        let mut constraints = Vec::with_capacity(self.rows.len());
        let mut rhs = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut dense = vec![T::zero(); free.len()];
            let mut b: i64 = 1;
            for &j in row {
                match fixed[j] {
                    None => dense[column[j]] = T::one(),
                    Some(true) => b -= 1,
                    Some(false) => {}
                }
            }
            constraints.push(dense);
            rhs.push(T::from_i64(b).expect("small integer"));
        }
        let objective = free
            .iter()
            .map(|&j| if self.is_face(j) { T::one() } else { T::zero() })
            .collect();
        let constant = (0..self.face_count).filter(|&j| fixed[j] == Some(true)).count();
        (LinearProgram { constraints, rhs, objective }, free, constant)
    }

    /// The equality system over all variables, for residual checks.
    pub fn as_linear_program<T: LpScalar>(&self) -> LinearProgram<T> {
        self.relaxation(&vec![None; self.num_vars()]).0
    }

    pub fn to_text(&self) -> String {
        let terms = |vars: &mut dyn Iterator<Item = usize>| {
            let names: Vec<String> = vars.map(|j| self.var_name(j)).collect();
            if names.is_empty() {
                "0".to_string()
            } else {
                names.join(" + ")
            }
        };
        let mut out = String::new();
        out.push_str("maximize\n");
        let _ = writeln!(out, "  clar: {}", terms(&mut (0..self.face_count)));
        out.push_str("subject to\n");
        for (v, row) in self.row_vertices.iter().zip(&self.rows) {
            let _ = writeln!(out, "  v{v}: {} = 1", terms(&mut row.iter().copied()));
        }
        out.push_str("binary\n");
        for j in 0..self.num_vars() {
            let _ = writeln!(out, "  {}", self.var_name(j));
        }
        out.push_str("end\n");
        out
    }
}

/// Optimal solution of the continuous relaxation in scalar type `T`.
pub fn solve_lp_with<T: LpScalar>(ip: &IntegerProgram) -> Result<LpSolution<T>> {
    ip.as_linear_program::<T>().solve()
}

/// Optimal solution of the continuous relaxation in exact rationals.
pub fn solve_lp_exact(ip: &IntegerProgram) -> Result<LpSolution<Rational>> {
    solve_lp_with::<Rational>(ip)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IpSolution {
    pub optimum: usize,
    /// 0/1 value of every variable, in program order.
    pub assignment: Vec<bool>,
    pub faces: Vec<SquareId>,
    pub edges: Vec<EdgeId>,
    /// Number of relaxations solved.
    pub nodes: usize,
}

/// Exact integer optimum by depth-first branch and bound over exact LPs.
pub fn solve_ip(ip: &IntegerProgram) -> Result<IpSolution> {
    solve_ip_with::<Rational>(ip)
}

/// Branch and bound with relaxations solved in scalar type `T`.
///
/// Branches on the most fractional face variable (lowest index on ties),
/// exploring the branch that selects the face first. When every face is
/// integral but some edge is not, branches on the most fractional edge.
pub fn solve_ip_with<T: LpScalar>(ip: &IntegerProgram) -> Result<IpSolution> {
    let n = ip.num_vars();
    let mut stack: Vec<Vec<Option<bool>>> = vec![vec![None; n]];
    let mut best: Option<(usize, Vec<bool>)> = None;
    let mut nodes = 0;
    while let Some(fixed) = stack.pop() {
        nodes += 1;
        let (program, free, constant) = ip.relaxation::<T>(&fixed);
        let sol = match program.solve() {
            Ok(sol) => sol,
            Err(Error::Infeasible) => continue,
            Err(e) => return Err(e),
        };
        let bound = (sol.objective.clone() + T::tolerance()).floor_value().to_i64().unwrap_or(0) as usize + constant;
        if best.as_ref().is_some_and(|(b, _)| bound <= *b) {
            continue;
        }
        let pick = |faces: bool| {
            let mut choice: Option<(usize, T)> = None;
            for (k, &j) in free.iter().enumerate() {
                if ip.is_face(j) != faces || sol.values[k].is_integral() {
                    continue;
                }
                let frac = sol.values[k].fractionality();
                if choice.as_ref().is_none_or(|(_, f)| frac > *f) {
                    choice = Some((j, frac));
                }
            }
            choice.map(|(j, _)| j)
        };
        match pick(true).or_else(|| pick(false)) {
            Some(j) => {
                let mut zero = fixed.clone();
                zero[j] = Some(false);
                let mut one = fixed;
                one[j] = Some(true);
                stack.push(zero);
                stack.push(one);
            }
            None => {
                let mut assignment: Vec<bool> = fixed.iter().map(|f| f == &Some(true)).collect();
                for (k, &j) in free.iter().enumerate() {
                    assignment[j] = !(sol.values[k].clone() - T::one()).abs().is_clearly_positive()
                        && !sol.values[k].is_negligible();
                }
                let value = (0..ip.face_count).filter(|&j| assignment[j]).count();
                if best.as_ref().is_none_or(|(b, _)| value > *b) {
                    best = Some((value, assignment));
                }
            }
        }
    }
    let (optimum, assignment) = best.ok_or(Error::Infeasible)?;
    let mut faces = Vec::new();
    let mut edges = Vec::new();
    for (j, &on) in assignment.iter().enumerate() {
        if on {
            match ip.variables[j] {
                Variable::Face(s) => faces.push(s),
                Variable::Edge(e) => edges.push(e),
            }
        }
    }
    Ok(IpSolution { optimum, assignment, faces, edges, nodes })
}
