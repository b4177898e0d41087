//! Clar number as an exact integer program.

mod clar;
mod simplex;

pub use clar::{
    build_clar_ip, build_clar_ip_in, solve_ip, solve_ip_with, solve_lp_exact, solve_lp_with,
    IntegerProgram, IpSolution, Variable,
};
pub use simplex::{LinearProgram, LpSolution};
