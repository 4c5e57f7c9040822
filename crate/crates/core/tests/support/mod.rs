//! Oracles and fixture helpers shared by the integration tests. Everything
//! here is written from the definitions, without calling the solvers it is
//! used to check.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashSet;
use std::path::PathBuf;

use exact_square::formats::{decode_graph6_lines, decode_planar_code, PlanarCodeEntry};
use exact_square::Graph;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn graph6_fixture(name: &str) -> Vec<Graph> {
    let bytes = std::fs::read(fixture_path(name)).expect("fixture readable");
    decode_graph6_lines(&bytes).expect("fixture decodes")
}

pub fn planar_code_fixture(name: &str) -> Vec<PlanarCodeEntry> {
    let bytes = std::fs::read(fixture_path(name)).expect("fixture readable");
    decode_planar_code(&bytes).expect("fixture decodes")
}

/// Adjacency matrix of `g`.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// All-pairs distances by Floyd–Warshall; `None` = unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let adj = matrix(g);
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if adj[u][v] {
                d[u][v] = Some(1);
            }
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if let (Some(a), Some(b)) = (d[u][w], d[w][v]) {
                    if d[u][v].is_none_or(|c| a + b < c) {
                        d[u][v] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Pairs `u < v` at distance exactly `p`.
pub fn naive_exact_power_edges(g: &Graph, p: usize) -> Vec<(usize, usize)> {
    let d = floyd_warshall(g);
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d[u][v] == Some(p) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Whether some assignment of `k` colors makes every edge bichromatic,
/// by trying all `k^n` assignments.
pub fn brute_force_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let edges: Vec<_> = g.edges().collect();
    let mut col = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| col[u] != col[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            col[i] += 1;
            if col[i] < k {
                break;
            }
            col[i] = 0;
            i += 1;
        }
    }
}

/// Chromatic number by brute force.
pub fn brute_force_chromatic(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| brute_force_colorable(g, k)).unwrap()
}

/// Clique number by subset enumeration (n <= 20).
pub fn brute_force_clique(g: &Graph) -> usize {
    let n = g.n();
    let adj = matrix(g);
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            vs.iter()
                .enumerate()
                .all(|(i, &a)| vs[i + 1..].iter().all(|&b| adj[a][b]))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Number of orbits of list tuples of the given sizes over a 5-color
/// palette under color permutations, by Burnside's lemma.
pub fn burnside_list_classes(sizes: &[usize]) -> u64 {
    fn perms(prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == 5 {
            out.push(prefix.clone());
            return;
        }
        for c in 0..5 {
            if !prefix.contains(&c) {
                prefix.push(c);
                perms(prefix, out);
                prefix.pop();
            }
        }
    }
    let mut all = Vec::new();
    perms(&mut Vec::new(), &mut all);
    let total: u64 = all
        .iter()
        .map(|p| {
            sizes
                .iter()
                .map(|&s| {
                    (0u32..32)
                        .filter(|m| m.count_ones() as usize == s)
                        .filter(|&m| {
                            let image = (0..5)
                                .filter(|&c| m >> c & 1 == 1)
                                .fold(0u32, |acc, c| acc | 1 << p[c]);
                            image == m
                        })
                        .count() as u64
                })
                .product::<u64>()
        })
        .sum();
    total / all.len() as u64
}

// ---------------------------------------------------------------------------
// exhaustive enumeration of small connected graphs

/// Canonical code of a graph on at most 8 vertices: the largest upper
/// triangle bit string over all relabelings that respect an iterated degree
/// refinement.
pub fn canonical_code(adj: &[u8]) -> u64 {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let mut sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| color[u])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig
            .iter_mut()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let classes_before = {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let stable = distinct.len() == classes_before;
        color = next;
        if stable {
            break;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| color[v]);
    let cells: Vec<Vec<usize>> = {
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match cells.last_mut() {
                Some(c) if color[c[0]] == color[v] => c.push(v),
                _ => cells.push(vec![v]),
            }
        }
        cells
    };
    let mut best = 0u64;
    let mut labeling = Vec::with_capacity(n);
    permute_cells(&cells, 0, &mut labeling, &mut |lab: &[usize]| {
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = code << 1 | (adj[lab[i]] >> lab[j] & 1) as u64;
            }
        }
        best = best.max(code);
    });
    best
}

fn permute_cells(
    cells: &[Vec<usize>],
    i: usize,
    lab: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if i == cells.len() {
        visit(lab);
        return;
    }
    let mut cell = cells[i].clone();
    let len = cell.len();
    heap_permutations(&mut cell, len, &mut |p: &[usize]| {
        let mark = lab.len();
        lab.extend_from_slice(p);
        permute_cells(cells, i + 1, lab, visit);
        lab.truncate(mark);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

/// One representative per isomorphism class of connected graphs on `1..=max_n`
/// vertices, as bit-row adjacency. Every connected graph arises from a
/// connected graph with one vertex fewer by adding a vertex with a
/// non-empty neighbourhood (delete a non-cut vertex to see this).
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Vec<Vec<u8>>> {
    assert!(max_n <= 8);
    let mut levels: Vec<Vec<Vec<u8>>> = vec![vec![vec![0u8]]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 2] {
            for s in 1u8..(1u16 << (n - 1)) as u8 {
                let mut h: Vec<u8> = g.clone();
                for (u, row) in h.iter_mut().enumerate() {
                    if s >> u & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                h.push(s);
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        levels.push(next);
    }
    levels
}

pub fn graph_from_rows(rows: &[u8]) -> Graph {
    let n = rows.len();
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rows[u] >> v & 1 == 1 {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

pub fn rows_from_graph(g: &Graph) -> Vec<u8> {
    (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(0u8, |acc, &v| acc | 1 << v))
        .collect()
}
