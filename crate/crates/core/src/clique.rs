//! Exact maximum clique by branch and bound with greedy-coloring bounds.
//!
//! Candidates are colored greedily in ascending index order; a branch is cut
//! when the current clique plus the number of color classes left cannot beat
//! the incumbent. The search order depends only on vertex indices, so the
//! returned witness is reproducible.

use crate::bitset::BitSet;
use crate::graph::Graph;

struct Search {
    adj: Vec<BitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
}

pub(crate) fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let adj = (0..n)
        .map(|v| {
            let mut b = BitSet::new(n);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let mut s = Search {
        adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    s.expand(BitSet::full(n));
    let mut best = s.best;
    best.sort_unstable();
    best
}

impl Search {
    /// Candidates ordered by color class, paired with the class number.
    fn color_sort(&self, cand: &BitSet) -> Vec<(usize, usize)> {
        let mut uncolored = cand.clone();
        let mut order = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, mut cand: BitSet) {
        let order = self.color_sort(&cand);
        for &(v, bound) in order.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = cand.intersect(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_force_clique(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                let vs: Vec<_> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(0..12);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        e.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &e).unwrap();
            let c = max_clique(&g);
            assert!(g.is_clique(&c));
            assert_eq!(c.len(), brute_force_clique(&g));
        }
    }

    #[test]
    fn complete_and_empty() {
        assert_eq!(max_clique(&Graph::complete(7)), (0..7).collect::<Vec<_>>());
        assert_eq!(max_clique(&Graph::empty(3)).len(), 1);
        assert!(max_clique(&Graph::empty(0)).is_empty());
    }
}
