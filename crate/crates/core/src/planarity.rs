//! Rotation systems, face tracing, and the planarity-family recognizers
//! (planar, outerplanar, K4-minor-free).
//!
//! Planarity is decided per biconnected block with the
//! Demoucron–Malgrange–Pertuiset path-addition procedure, which yields the
//! faces of a plane embedding directly. Faces are then oriented consistently
//! and turned into a rotation system; blocks meeting at a cut vertex are
//! merged by splicing their cyclic orders.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::formats::PlanarCodeEntry;
use crate::graph::Graph;

/// A graph together with a cyclic order of neighbours at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

/// Face boundary walks of an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Number of faces of each length.
    pub fn census(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut m = std::collections::BTreeMap::new();
        for f in &self.faces {
            *m.entry(f.len()).or_insert(0) += 1;
        }
        m
    }
}

impl Embedding {
    /// Checks that every rotation is a permutation of the vertex's neighbours.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != graph.n() {
            return Err(Error::Rotation(format!(
                "{} rotations for {} vertices",
                rotation.len(),
                graph.n()
            )));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::Rotation(format!(
                    "rotation at {v} is {rot:?}, neighbours are {:?}",
                    graph.neighbors(v)
                )));
            }
        }
        Ok(Embedding { graph, rotation })
    }

    pub fn from_planar_code(entry: &PlanarCodeEntry) -> Result<Self> {
        entry.validate()?;
        Embedding::new(entry.graph(), entry.rotations.clone())
    }

    pub fn to_planar_code(&self) -> PlanarCodeEntry {
        PlanarCodeEntry {
            rotations: self.rotation.clone(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Neighbour following `u` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, u: usize) -> Option<usize> {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&w| w == u)?;
        Some(rot[(i + 1) % rot.len()])
    }

    /// Traces all faces. The dart after `u -> v` is `v -> successor(v, u)`;
    /// each walk starts at the smallest unused dart.
    pub fn faces(&self) -> FaceSet {
        let n = self.graph.n();
        let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; self.graph.degree(v)]).collect();
        let mut faces = Vec::new();
        for u in 0..n {
            for (i, &v) in self.graph.neighbors(u).iter().enumerate() {
                if used[u][i] {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    let idx = self.graph.neighbors(a).binary_search(&b).unwrap();
                    if used[a][idx] {
                        break;
                    }
                    used[a][idx] = true;
                    walk.push(a);
                    let c = self
                        .successor(b, a)
                        .expect("rotation consistent with graph");
                    (a, b) = (b, c);
                }
                faces.push(walk);
            }
        }
        FaceSet { faces }
    }

    /// Euler's formula holds on every connected component, i.e. the rotation
    /// system describes a plane (genus 0) embedding.
    pub fn is_plane(&self) -> bool {
        let comps = self.graph.connected_components();
        let mut comp_of = vec![0; self.graph.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut faces = vec![0i64; comps.len()];
        for f in self.faces().faces {
            faces[comp_of[f[0]]] += 1;
        }
        comps.iter().enumerate().all(|(i, c)| {
            let n = c.len() as i64;
            let m = c.iter().map(|&v| self.graph.degree(v)).sum::<usize>() as i64 / 2;
            let f = if m == 0 { 1 } else { faces[i] };
            n - m + f == 2
        })
    }
}

/// Returns a plane embedding of `g`, or `None` if `g` is not planar.
pub fn is_planar(g: &Graph) -> Option<Embedding> {
    let n = g.n();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let block_rot = embed_block(&block)?;
        for (v, order) in block_rot {
            rotation[v].extend(order);
        }
    }
    Some(Embedding::new(g.clone(), rotation).expect("assembled rotation is a permutation"))
}

/// True iff `g` plus an apex adjacent to every vertex is planar.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, n)));
    let apexed = Graph::from_edges(n + 1, &edges).expect("apex edges are valid");
    is_planar(&apexed).is_some()
}

/// Series-parallel reduction: strip vertices of degree at most one and
/// suppress degree-two vertices, collapsing parallel edges. The graph has no
/// K4 minor iff the reduction deletes everything.
pub fn is_k4_minor_free(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| adj[v].len() <= 2).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] || adj[v].len() > 2 {
            continue;
        }
        alive[v] = false;
        remaining -= 1;
        let nbrs: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &u in &nbrs {
            adj[u].remove(&v);
        }
        if let [a, b] = nbrs[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        for &u in &nbrs {
            if adj[u].len() <= 2 {
                queue.push_back(u);
            }
        }
    }
    remaining == 0
}

/// Edge sets of the biconnected blocks (bridges are singleton blocks).
pub(crate) fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    const UNSET: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, UNSET, 0));
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == UNSET {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected block with at least two edges; returns the cyclic
/// neighbour order at each of its vertices.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nb = verts.len();
    let mut adj = vec![Vec::new(); nb];
    for &(u, v) in edges {
        let (a, b) = (local[&u], local[&v]);
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    // planar simple graphs have m <= 3n - 6
    if nb >= 3 && edges.len() > 3 * nb - 6 {
        return None;
    }
    let faces = dmp_faces(&adj)?;
    let oriented = orient_faces(faces);
    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for f in &oriented {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ.insert((v, u), w);
        }
    }
    let mut out = Vec::with_capacity(nb);
    for v in 0..nb {
        let start = adj[v][0];
        let mut order = vec![verts[start]];
        let mut u = succ[&(v, start)];
        while u != start {
            order.push(verts[u]);
            u = succ[&(v, u)];
        }
        debug_assert_eq!(order.len(), adj[v].len());
        out.push((verts[v], order));
    }
    Some(out)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // DFS from 0 until a back edge closes a cycle
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx == adj[v].len() {
            stack.pop();
            continue;
        }
        let w = adj[v][*idx];
        *idx += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cyc = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cyc.push(x);
            }
            return cyc;
        }
    }
    unreachable!("biconnected block with two or more edges has a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    path: Vec<usize>,
}

fn dmp_faces(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let cycle = find_cycle(adj);
    let mut in_h = vec![false; n];
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        h_edges.insert(key(v, cycle[(i + 1) % cycle.len()]));
    }
    let total_edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut faces = vec![cycle.clone(), cycle];

    while h_edges.len() < total_edges {
        let fragments = fragments(adj, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = &fragments[fi].path;
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let k = face.len();
        let interior = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut i = ia;
        loop {
            f1.push(face[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % k;
        }
        f1.extend(interior.iter().rev());
        let mut f2 = Vec::new();
        let mut i = ib;
        loop {
            f2.push(face[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % k;
        }
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in path {
            in_h[v] = true;
        }
    }
    Some(faces)
}

fn fragments(
    adj: &[Vec<usize>],
    in_h: &[bool],
    h_edges: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    path: vec![u, v],
                });
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = s;
        comp[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        let mut attachments = BTreeSet::new();
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if in_h[y] {
                    attachments.insert(y);
                } else if comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        let attachments: Vec<usize> = attachments.into_iter().collect();
        // path from the first attachment through the component to another one
        let a = attachments[0];
        let mut parent: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for &y in &adj[a] {
            if !in_h[y] && comp[y] == id && !parent.contains_key(&y) {
                parent.insert(y, a);
                queue.push_back(y);
            }
        }
        let mut path = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if in_h[y] && y != a {
                    let mut p = vec![y, x];
                    let mut z = x;
                    while parent[&z] != a {
                        z = parent[&z];
                        p.push(z);
                    }
                    p.push(a);
                    p.reverse();
                    path = Some(p);
                    break 'bfs;
                }
                if !in_h[y] && !parent.contains_key(&y) {
                    parent.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment {
            attachments,
            path: path.expect("fragment of a biconnected block has two attachments"),
        });
    }
    out
}

/// Reverses faces as needed so every edge is traversed once in each direction.
fn orient_faces(mut faces: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for j in 0..f.len() {
            by_edge
                .entry(key(f[j], f[(j + 1) % f.len()]))
                .or_default()
                .push(i);
        }
    }
    let mut done = vec![false; faces.len()];
    done[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let f = faces[i].clone();
        for j in 0..f.len() {
            let (x, y) = (f[j], f[(j + 1) % f.len()]);
            for &o in &by_edge[&key(x, y)] {
                if o == i || done[o] {
                    continue;
                }
                let g = &faces[o];
                let k = g.len();
                let same_dir = (0..k).any(|t| g[t] == x && g[(t + 1) % k] == y);
                if same_dir {
                    faces[o].reverse();
                }
                done[o] = true;
                queue.push_back(o);
            }
        }
    }
    faces
}
