//! Seeded random graph families for the property and acceptance suites.
//!
//! All generators take the caller's RNG so a fixed seed reproduces the same
//! sequence of graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::planarity::{is_outerplanar, is_planar};

/// Random tree on `n` vertices with maximum degree 3: each new vertex hangs
/// off a uniformly chosen earlier vertex that still has room.
pub fn random_subcubic_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| adj[u].len() < 3).collect();
        let u = *open.choose(rng).expect("a subcubic tree always has a leaf");
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn to_graph(adj: &[Vec<usize>]) -> Graph {
    let mut edges = Vec::new();
    for (u, list) in adj.iter().enumerate() {
        edges.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
    }
    Graph::from_edges(adj.len(), &edges).expect("generated edges are valid")
}

/// Adds up to `attempts` random edges between vertices of degree below 3,
/// keeping each one only if `keep` accepts the enlarged graph.
fn densify<R: Rng + ?Sized>(
    adj: &mut [Vec<usize>],
    attempts: usize,
    rng: &mut R,
    allowed: impl Fn(usize, usize) -> bool,
    keep: impl Fn(&Graph) -> bool,
) {
    let n = adj.len();
    if n < 2 {
        return;
    }
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || adj[u].len() >= 3 || adj[v].len() >= 3 || adj[u].contains(&v) || !allowed(u, v)
        {
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
        if !keep(&to_graph(adj)) {
            adj[u].pop();
            adj[v].pop();
        }
    }
}

/// Connected graph with maximum degree at most 3.
pub fn random_connected_subcubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut adj = random_subcubic_tree(n, rng);
    densify(&mut adj, 2 * n, rng, |_, _| true, |_| true);
    to_graph(&adj)
}

/// Even depth in a breadth-first search from vertex 0.
fn two_coloring(adj: &[Vec<usize>]) -> Vec<bool> {
    let mut side = vec![None; adj.len()];
    let mut stack = vec![0];
    if !adj.is_empty() {
        side[0] = Some(false);
    }
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if side[v].is_none() {
                side[v] = Some(!side[u].unwrap());
                stack.push(v);
            }
        }
    }
    side.into_iter().map(|s| s.unwrap_or(false)).collect()
}

/// Connected bipartite planar graph with maximum degree at most 3.
pub fn random_bipartite_subcubic_planar<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut adj = random_subcubic_tree(n, rng);
    let side = two_coloring(&adj);
    densify(
        &mut adj,
        2 * n,
        rng,
        |u, v| side[u] != side[v],
        |g| is_planar(g).is_some(),
    );
    to_graph(&adj)
}

/// Connected bipartite outerplanar graph with maximum degree at most 3.
pub fn random_bipartite_subcubic_outerplanar<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut adj = random_subcubic_tree(n, rng);
    let side = two_coloring(&adj);
    densify(
        &mut adj,
        2 * n,
        rng,
        |u, v| side[u] != side[v],
        is_outerplanar,
    );
    to_graph(&adj)
}

/// Connected subcubic graph built only by series-parallel operations, so it
/// has no K4 minor by construction. Starting from a single edge, each step
/// subdivides an edge, adds a path of length at least 2 alongside an edge
/// whose ends have degree at most 2, or hangs a path off a vertex of degree
/// at most 2, until `n` vertices exist.
pub fn random_series_parallel_subcubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2, "need at least one edge");
    let mut adj: Vec<Vec<usize>> = vec![vec![1], vec![0]];
    let add_vertex = |adj: &mut Vec<Vec<usize>>| {
        adj.push(Vec::new());
        adj.len() - 1
    };
    let link = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
    };
    while adj.len() < n {
        let room = n - adj.len();
        let edges: Vec<(usize, usize)> = (0..adj.len())
            .flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        match rng.gen_range(0..3) {
            0 => {
                let &(u, v) = edges.choose(rng).unwrap();
                let w = add_vertex(&mut adj);
                adj[u].retain(|&x| x != v);
                adj[v].retain(|&x| x != u);
                link(&mut adj, u, w);
                link(&mut adj, w, v);
            }
            1 => {
                let open: Vec<_> = edges
                    .iter()
                    .filter(|&&(u, v)| adj[u].len() <= 2 && adj[v].len() <= 2)
                    .collect();
                let Some(&&(u, v)) = open.choose(rng) else {
                    continue;
                };
                let len = rng.gen_range(1..=room.min(3));
                let mut prev = u;
                for _ in 0..len {
                    let w = add_vertex(&mut adj);
                    link(&mut adj, prev, w);
                    prev = w;
                }
                link(&mut adj, prev, v);
            }
            _ => {
                let open: Vec<usize> = (0..adj.len()).filter(|&u| adj[u].len() <= 2).collect();
                let Some(&u) = open.choose(rng) else {
                    continue;
                };
                let len = rng.gen_range(1..=room.min(3));
                let mut prev = u;
                for _ in 0..len {
                    let w = add_vertex(&mut adj);
                    link(&mut adj, prev, w);
                    prev = w;
                }
            }
        }
    }
    to_graph(&adj)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn families_have_their_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1, 2, 5, 12, 20] {
            let g = random_connected_subcubic(n, &mut rng);
            assert!(g.is_connected() && g.is_subcubic());
            let b = random_bipartite_subcubic_planar(n, &mut rng);
            assert!(b.is_connected() && b.is_subcubic() && b.bipartition().is_some());
            let o = random_bipartite_subcubic_outerplanar(n, &mut rng);
            assert!(o.is_connected() && o.is_subcubic() && o.bipartition().is_some());
        }
        for n in [2, 3, 9, 25] {
            let s = random_series_parallel_subcubic(n, &mut rng);
            assert_eq!(s.n(), n);
            assert!(s.is_connected() && s.is_subcubic());
        }
    }

    #[test]
    fn same_seed_same_graphs() {
        let a = random_connected_subcubic(15, &mut ChaCha8Rng::seed_from_u64(5));
        let b = random_connected_subcubic(15, &mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(a, b);
    }
}
