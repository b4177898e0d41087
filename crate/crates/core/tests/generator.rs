use std::collections::BTreeSet;

use polyclar::grid::cells_connected;
use polyclar::harness::{generate_polyominoes, GeneratorConfig};
use polyclar::{CellCoord, Connectivity};

/// Every connected `n`-subset of every `w x h` box that touches all four
/// sides of the box. Each fixed polyomino has exactly one such box.
fn brute_force(n: usize, mode: Connectivity) -> BTreeSet<Vec<CellCoord>> {
    let mut found = BTreeSet::new();
    for w in 1..=n {
        for h in 1..=n {
            if w * h < n || w + h > n + 1 && mode == Connectivity::Edge {
                continue;
            }
            let all: Vec<CellCoord> = (0..h as i64)
                .flat_map(|y| (0..w as i64).map(move |x| CellCoord::new(x, y)))
                .collect();
            let mut pick = Vec::with_capacity(n);
            subsets(&all, n, 0, &mut pick, &mut |cells| {
                let set: BTreeSet<CellCoord> = cells.iter().copied().collect();
                let touches = set.iter().any(|c| c.x == 0)
                    && set.iter().any(|c| c.y == 0)
                    && set.iter().any(|c| c.x == w as i64 - 1)
                    && set.iter().any(|c| c.y == h as i64 - 1);
                if touches && cells_connected(&set, mode) {
                    found.insert(set.into_iter().collect());
                }
            });
        }
    }
    found
}

fn subsets(all: &[CellCoord], k: usize, from: usize, pick: &mut Vec<CellCoord>, visit: &mut dyn FnMut(&[CellCoord])) {
    if pick.len() == k {
        visit(pick);
        return;
    }
    for i in from..all.len() {
        if all.len() - i < k - pick.len() {
            break;
        }
        pick.push(all[i]);
        subsets(all, k, i + 1, pick, visit);
        pick.pop();
    }
}

#[test]
fn edge_mode_matches_brute_force() {
    let cfg = GeneratorConfig::default();
    for n in 1..=6 {
        let generated = generate_polyominoes(n, &cfg).unwrap();
        let unique: BTreeSet<Vec<CellCoord>> = generated.iter().cloned().collect();
        assert_eq!(unique.len(), generated.len(), "duplicates at n = {n}");
        assert_eq!(unique, brute_force(n, Connectivity::Edge), "n = {n}");
    }
}

#[test]
fn vertex_mode_matches_brute_force() {
    let cfg = GeneratorConfig { max_cells: 4, mode: Connectivity::Vertex };
    for n in 1..=4 {
        let generated: BTreeSet<Vec<CellCoord>> = generate_polyominoes(n, &cfg).unwrap().into_iter().collect();
        assert_eq!(generated, brute_force(n, Connectivity::Vertex), "n = {n}");
    }
}

#[test]
fn output_is_sorted_and_normalized() {
    let cfg = GeneratorConfig::default();
    let shapes = generate_polyominoes(5, &cfg).unwrap();
    assert!(shapes.windows(2).all(|w| w[0] < w[1]));
    for s in &shapes {
        assert_eq!(s.iter().map(|c| c.x).min(), Some(0));
        assert_eq!(s.iter().map(|c| c.y).min(), Some(0));
        assert!(s.windows(2).all(|w| w[0] < w[1]));
    }
}
