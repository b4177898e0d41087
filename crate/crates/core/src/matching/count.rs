//! Exact perfect-matching counts by broken-profile dynamic programming.
//!
//! Lattice vertices are scanned column by column, bottom to top. The profile
//! holds one bit per row: for rows already processed in the current column it
//! marks the vertex one column to the right as taken by a horizontal edge;
//! for rows not yet processed it marks the vertex in this column as taken
//! (from the left, or from below by a vertical edge).

use crate::error::{Error, Result};
use crate::grid::{Point, PolyominoGraph};
use crate::limits::Limits;
use crate::scalar::Tally;
use crate::Count;

/// Number of perfect matchings of `g` as a big integer.
pub fn count_perfect_matchings(g: &PolyominoGraph, limits: &Limits) -> Result<Count> {
    count_perfect_matchings_as::<Count>(g, limits)
}

/// Number of perfect matchings of `g` in counter type `T`; fixed-width
/// counters report [`Error::Overflow`] instead of wrapping.
pub fn count_perfect_matchings_as<T: Tally>(g: &PolyominoGraph, limits: &Limits) -> Result<T> {
    let narrow = g.width().min(g.height()) as usize;
    if narrow > limits.max_profile_width {
        return Err(Error::TooWide { width: narrow, limit: limits.max_profile_width });
    }
    // Scan along the long side so the profile spans the short side.
    let transpose = g.height() > g.width();
    let (cols, rows) = if transpose {
        (g.height() + 1, g.width() + 1)
    } else {
        (g.width() + 1, g.height() + 1)
    };
    let at = |c: i64, r: i64| if transpose { Point::new(r, c) } else { Point::new(c, r) };
    let has_vertex = |c: i64, r: i64| g.vertex_at(at(c, r)).is_some();
    let has_edge = |c0: i64, r0: i64, c1: i64, r1: i64| match (g.vertex_at(at(c0, r0)), g.vertex_at(at(c1, r1))) {
        (Some(a), Some(b)) => g.edge_between(a, b).is_some(),
        _ => false,
    };

    let states = 1usize << rows;
    let mut cur: Vec<T> = vec![T::zero(); states];
    cur[0] = T::one();
    for c in 0..cols {
        for r in 0..rows {
            let mut next: Vec<T> = vec![T::zero(); states];
            let bit = 1usize << r;
            let present = has_vertex(c, r);
            let up = r + 1 < rows && has_edge(c, r, c, r + 1);
            let right = has_edge(c, r, c + 1, r);
            for (mask, ways) in cur.iter().enumerate() {
                if ways.is_zero() {
                    continue;
                }
                if !present || mask & bit != 0 {
                    add(&mut next[mask & !bit], ways)?;
                    continue;
                }
                if up && mask & (bit << 1) == 0 {
                    add(&mut next[mask | (bit << 1)], ways)?;
                }
                if right {
                    add(&mut next[mask | bit], ways)?;
                }
            }
            cur = next;
        }
    }
    Ok(cur.swap_remove(0))
}

fn add<T: Tally>(slot: &mut T, ways: &T) -> Result<()> {
    *slot = slot.checked_add(ways).ok_or(Error::Overflow)?;
    Ok(())
}
