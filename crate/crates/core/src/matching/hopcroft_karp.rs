//! Hopcroft-Karp maximum matching on the black/white bipartition.

use std::collections::VecDeque;

use super::Matching;
use crate::grid::{Color, EdgeId};
use crate::view::Subgraph;

const INF: usize = usize::MAX;

/// A maximum matching of `view`.
pub fn max_matching(view: &Subgraph<'_>) -> Matching {
    let g = view.graph();
    let n = g.vertex_count();
    let left: Vec<usize> = view
        .vertices()
        .filter(|&v| g.color(v) == Color::Black)
        .map(|v| v.index())
        .collect();
    let adj: Vec<Vec<(usize, EdgeId)>> = (0..n)
        .map(|i| {
            if view.has_vertex(crate::grid::VertexId::from_index(i)) {
                view.neighbors(crate::grid::VertexId::from_index(i))
                    .map(|(u, e)| (u.index(), e))
                    .collect()
            } else {
                Vec::new()
            }
        })
        .collect();

    let mut mate: Vec<Option<(usize, EdgeId)>> = vec![None; n];
    // greedy start
    for &u in &left {
        if let Some(&(w, e)) = adj[u].iter().find(|&&(w, _)| mate[w].is_none()) {
            mate[u] = Some((w, e));
            mate[w] = Some((u, e));
        }
    }

    let mut dist = vec![INF; n];
    loop {
        // BFS layers from free left vertices
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &adj[u] {
                match mate[w] {
                    None => found = true,
                    Some((u2, _)) if dist[u2] == INF => {
                        dist[u2] = dist[u] + 1;
                        queue.push_back(u2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut iter = vec![0usize; n];
        for &u in &left {
            if mate[u].is_none() {
                augment(u, &adj, &mut mate, &mut dist, &mut iter);
            }
        }
    }

    left.iter().filter_map(|&u| mate[u].map(|(_, e)| e)).collect()
}

fn augment(
    u: usize,
    adj: &[Vec<(usize, EdgeId)>],
    mate: &mut [Option<(usize, EdgeId)>],
    dist: &mut [usize],
    iter: &mut [usize],
) -> bool {
    while iter[u] < adj[u].len() {
        let (w, e) = adj[u][iter[u]];
        iter[u] += 1;
        let ok = match mate[w] {
            None => true,
            Some((u2, _)) => dist[u2] == dist[u] + 1 && augment(u2, adj, mate, dist, iter),
        };
        if ok {
            mate[u] = Some((w, e));
            mate[w] = Some((u, e));
            return true;
        }
    }
    dist[u] = INF;
    false
}

pub fn has_perfect_matching(view: &Subgraph<'_>) -> bool {
    2 * max_matching(view).len() == view.vertex_count()
}
