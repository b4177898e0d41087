//! Fixed polyominoes by Redelmeier's growth method.
//!
//! Every polyomino is counted once, anchored at its lowest cell (smallest
//! `y`, then smallest `x`) placed at the origin; all other cells then lie in
//! the half-plane `y > 0` or `y = 0, x > 0`. Growth adds one untried cell at a
//! time from a shared frontier, so no shape is produced twice.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{neighbor_offsets, CellCoord, Connectivity};

pub const MAX_GENERATED_CELLS: usize = 10;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorConfig {
    pub max_cells: usize,
    pub mode: Connectivity,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        Self { max_cells: 7, mode: Connectivity::Edge }
    }
}

fn in_region(c: CellCoord) -> bool {
    c.y > 0 || (c.y == 0 && c.x >= 0)
}

/// All fixed polyominoes with exactly `n` cells, each translated to touch
/// both axes, cells sorted, and the list sorted.
pub fn generate_polyominoes(n: usize, cfg: &GeneratorConfig) -> Result<Vec<Vec<CellCoord>>> {
    if !(1..=MAX_GENERATED_CELLS).contains(&n) {
        return Err(Error::OutOfRange { what: "cell count", value: n, min: 1, max: MAX_GENERATED_CELLS });
    }
    let mut out = Vec::new();
    let origin = CellCoord::new(0, 0);
    let mut grower = Grower {
        n,
        offsets: neighbor_offsets(cfg.mode),
        cells: Vec::with_capacity(n),
        seen: BTreeSet::from([origin]),
        out: &mut out,
    };
    grower.grow(vec![origin]);
    for shape in &mut out {
        let dx = shape.iter().map(|c| c.x).min().unwrap_or(0);
        for c in shape.iter_mut() {
            c.x -= dx;
        }
        shape.sort();
    }
    out.sort();
    Ok(out)
}

/// Polyominoes of every size from 1 to `cfg.max_cells`, smallest first.
pub fn generate_up_to(cfg: &GeneratorConfig) -> Result<Vec<Vec<CellCoord>>> {
    let mut all = Vec::new();
    for n in 1..=cfg.max_cells {
        all.extend(generate_polyominoes(n, cfg)?);
    }
    Ok(all)
}

struct Grower<'a> {
    n: usize,
    offsets: &'static [(i64, i64)],
    cells: Vec<CellCoord>,
    /// Cells ever placed on the frontier along the current branch.
    seen: BTreeSet<CellCoord>,
    out: &'a mut Vec<Vec<CellCoord>>,
}

impl Grower<'_> {
    fn grow(&mut self, mut untried: Vec<CellCoord>) {
        while let Some(c) = untried.pop() {
            self.cells.push(c);
            if self.cells.len() == self.n {
                self.out.push(self.cells.clone());
            } else {
                let mut added = Vec::new();
                for &(dx, dy) in self.offsets {
                    let d = CellCoord::new(c.x + dx, c.y + dy);
                    if in_region(d) && self.seen.insert(d) {
                        added.push(d);
                    }
                }
                let mut next = untried.clone();
                next.extend(added.iter().copied());
                self.grow(next);
                for d in added {
                    self.seen.remove(&d);
                }
            }
            self.cells.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let cfg = GeneratorConfig::default();
        let counts: Vec<usize> = (1..=5).map(|n| generate_polyominoes(n, &cfg).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 19, 63]);
    }

    #[test]
    fn dominoes() {
        let cfg = GeneratorConfig::default();
        let d = generate_polyominoes(2, &cfg).unwrap();
        assert_eq!(
            d,
            vec![
                vec![CellCoord::new(0, 0), CellCoord::new(1, 0)],
                vec![CellCoord::new(0, 0), CellCoord::new(0, 1)],
            ]
        );
    }

    #[test]
    fn corner_contact_mode_counts_more() {
        let cfg = GeneratorConfig { max_cells: 2, mode: Connectivity::Vertex };
        assert_eq!(generate_polyominoes(2, &cfg).unwrap().len(), 4);
    }

    #[test]
    fn size_guard() {
        let cfg = GeneratorConfig::default();
        assert!(matches!(generate_polyominoes(0, &cfg), Err(Error::OutOfRange { .. })));
        assert!(matches!(generate_polyominoes(11, &cfg), Err(Error::OutOfRange { .. })));
    }
}
