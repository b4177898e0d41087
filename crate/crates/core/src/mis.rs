//! Exact maximum independent set by branch and bound.
//!
//! The bound is the size of a greedy clique cover of the candidate set:
//! an independent set takes at most one vertex from each clique.

/// Fixed-size bitset over `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn empty(n: usize) -> Self {
        Self { words: vec![0; n.div_ceil(64)] }
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }
}

/// Undirected conflict graph on `0..n`.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    adj: Vec<Bits>,
}

impl ConflictGraph {
    pub fn new(n: usize) -> Self {
        Self { adj: (0..n).map(|_| Bits::empty(n)).collect() }
    }

    pub fn from_predicate(n: usize, mut conflict: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if conflict(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// A maximum independent set, sorted. Among maxima the search keeps the
    /// first one found in branching order (lower vertices tried first).
    pub fn maximum_independent_set(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.branch(Bits::full(self.len()), &mut current, &mut best);
        best.sort_unstable();
        best
    }

    fn clique_cover_size(&self, cand: &Bits) -> usize {
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        for v in cand.iter() {
            match cliques.iter_mut().find(|c| c.iter().all(|&u| self.adjacent(u, v))) {
                Some(c) => c.push(v),
                None => cliques.push(vec![v]),
            }
        }
        cliques.len()
    }

    fn branch(&self, mut cand: Bits, current: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + self.clique_cover_size(&cand) <= best.len() {
            return;
        }
        let v = cand.iter().next().expect("nonempty");
        // take v
        current.push(v);
        let mut rest = cand.and_not(&self.adj[v]);
        rest.remove(v);
        self.branch(rest, current, best);
        current.pop();
        // skip v
        cand.remove(v);
        self.branch(cand, current, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force(g: &ConflictGraph) -> usize {
        let n = g.len();
        (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|i| (0..n).all(|j| !(mask >> i & 1 == 1 && mask >> j & 1 == 1 && g.adjacent(i, j))))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn cycle_of_five() {
        let g = ConflictGraph::from_predicate(5, |a, b| (a + 1) % 5 == b || (b + 1) % 5 == a);
        assert_eq!(g.maximum_independent_set(), vec![0, 2]);
    }

    #[test]
    fn empty_graph() {
        assert!(ConflictGraph::new(0).maximum_independent_set().is_empty());
        assert_eq!(ConflictGraph::new(3).maximum_independent_set(), vec![0, 1, 2]);
    }

    #[test]
    fn wide_sets_cross_word_boundaries() {
        let g = ConflictGraph::from_predicate(130, |a, b| a / 2 == b / 2);
        assert_eq!(g.maximum_independent_set().len(), 65);
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 0usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut k = 0;
            let g = ConflictGraph::from_predicate(n, |_, _| { k += 1; bits[k % bits.len()] });
            let mis = g.maximum_independent_set();
            for (i, &a) in mis.iter().enumerate() {
                for &b in &mis[i + 1..] {
                    prop_assert!(!g.adjacent(a, b));
                }
            }
            prop_assert_eq!(mis.len(), brute_force(&g));
        }
    }
}
