//! Simple undirected graphs and the distance-based derived graphs built on them.
//!
//! Vertices are dense indices `0..n`. Every derived graph (exact powers,
//! complements, common-neighbour graphs) keeps the vertex set of its source,
//! so a coloring of a derived graph is a coloring of the original by identity.

use std::collections::VecDeque;
use std::fmt;

use crate::clique;
use crate::error::{Error, Result};

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Wraps adjacency lists that are already known to be symmetric and loop-free.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The star `K_{1,t}`: vertex 0 is the centre.
    pub fn star(t: usize) -> Self {
        let edges: Vec<_> = (1..=t).map(|i| (0, i)).collect();
        Graph::from_edges(t + 1, &edges).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|l| l.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Shortest-path distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        if source >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: source,
                n: self.n(),
            });
        }
        Ok(self.bfs_bounded(source, usize::MAX))
    }

    fn bfs_bounded(&self, source: usize, limit: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            if du >= limit {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Eccentricity maximum over all pairs; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.bfs_bounded(v, usize::MAX) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// The exact distance-`p` power: `uv` is an edge iff `dist(u, v) == p`.
    pub fn exact_power(&self, p: usize) -> Result<Graph> {
        if p == 0 {
            return Err(Error::ZeroPower);
        }
        if p == 1 {
            return Ok(self.clone());
        }
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for (u, list) in adj.iter_mut().enumerate() {
            let dist = self.bfs_bounded(u, p);
            list.extend((0..n).filter(|&v| dist[v] == Some(p)));
        }
        Ok(Graph { adj })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(v, u)).collect())
            .collect();
        Graph { adj }
    }

    /// Conflict graph for injective coloring: `uv` is an edge iff `u` and `v`
    /// share a neighbour.
    pub fn common_neighbor_graph(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for list in &self.adj {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-coloring of the vertex set, or `None` if an odd cycle exists.
    /// In every component the side holding the smallest index goes to `X`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        let x = (0..n).filter(|&v| side[v] == 0).collect();
        let y = (0..n).filter(|&v| side[v] == 1).collect();
        Some((x, y))
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<_> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        Graph { adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + off).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_edge_subgraph_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Largest clique, as a sorted witness vertex set.
    pub fn max_clique(&self) -> Vec<usize> {
        clique::max_clique(self)
    }

    /// Largest independent set, as a sorted witness vertex set.
    pub fn max_independent_set(&self) -> Vec<usize> {
        clique::max_clique(&self.complement())
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn bfs_examples() {
        let p = Graph::path(3);
        assert_eq!(p.bfs_distances(0).unwrap(), vec![Some(0), Some(1), Some(2)]);
        assert_eq!(Graph::empty(1).bfs_distances(0).unwrap(), vec![Some(0)]);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two.bfs_distances(0).unwrap(),
            vec![Some(0), Some(1), None, None]
        );
        assert!(matches!(
            p.bfs_distances(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn exact_power_examples() {
        for n in 1..7 {
            for p in 2..4 {
                assert_eq!(Graph::complete(n).exact_power(p).unwrap().m(), 0);
            }
        }
        // star K_{1,t}^2 = K_t + K_1
        let sq = Graph::star(4).exact_power(2).unwrap();
        assert_eq!(sq.degree(0), 0);
        assert_eq!(sq.m(), 6);
        assert!(sq.is_clique(&[1, 2, 3, 4]));
        let pet = petersen();
        assert_eq!(pet.exact_power(2).unwrap(), pet.complement());
        assert_eq!(pet.exact_power(0), Err(Error::ZeroPower));
        assert_eq!(pet.exact_power(1).unwrap(), pet);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement().m(), 0);
        assert_eq!(Graph::empty(3).complement(), Graph::complete(3));
        let c5 = Graph::cycle(5).complement();
        assert!(!c5.is_cubic() && c5.m() == 5 && c5.max_degree() == 2);
        assert_eq!(c5.girth(), Some(5));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(Graph::path(6).girth(), None);
        assert_eq!(Graph::star(5).girth(), None);
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::cycle(8).girth(), Some(8));
    }

    #[test]
    fn bipartition_examples() {
        let (x, y) = Graph::cycle(6).bipartition().unwrap();
        assert_eq!(x, vec![0, 2, 4]);
        assert_eq!(y, vec![1, 3, 5]);
        assert!(Graph::cycle(5).bipartition().is_none());
        // second component's smallest vertex also lands in X
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.bipartition().unwrap(), (vec![0, 2], vec![1, 3]));
    }

    #[test]
    fn components_and_cliques() {
        let g = Graph::from_edges(5, &[(3, 4), (0, 2)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 2], vec![1], vec![3, 4]]
        );
        // diameter 2 makes the exact square the complement, whose cliques
        // are the independent sets of the Petersen graph (largest: 4)
        let sq = petersen().exact_power(2).unwrap();
        assert_eq!(sq, petersen().complement());
        assert_eq!(sq.max_clique().len(), 4);
        assert_eq!(sq.max_independent_set().len(), 2);
        assert_eq!(Graph::complete(6).max_independent_set().len(), 1);
        assert_eq!(Graph::empty(5).max_independent_set().len(), 5);
    }

    #[test]
    fn common_neighbor_examples() {
        assert_eq!(
            Graph::complete(3).common_neighbor_graph(),
            Graph::complete(3)
        );
        let p = Graph::path(3).common_neighbor_graph();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        let pet = petersen();
        assert_eq!(pet.common_neighbor_graph(), pet.exact_power(2).unwrap());
    }

    #[test]
    fn induced_and_union() {
        let c = Graph::cycle(5);
        let h = c.induced_subgraph(&[0, 1, 2]);
        assert_eq!(h, Graph::path(3));
        let u = h.disjoint_union(&Graph::complete(2));
        assert_eq!(u.n(), 5);
        assert!(u.has_edge(3, 4));
        assert_eq!(petersen().diameter(), Some(2));
        assert_eq!(u.diameter(), None);
    }
}
