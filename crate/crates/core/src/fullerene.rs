//! Fullerene recognition, drums, and the batch verification harness.
//!
//! A k-drum is built as concentric layers around a hexagon `F`: `F`, then
//! `k` rings of twelve vertices, then a second hexagon `F'`. Between `F` and
//! the first ring sit six pentagons, between consecutive rings six hexagons,
//! and between the last ring and `F'` six more pentagons. In the dual graph
//! `F'` is therefore `k + 2` steps from `F`; a drum's parameter is recovered
//! as the number of face layers strictly between the two hexagons minus one.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::coloring::{is_k_colorable, validate_coloring, Coloring, Mode};
use crate::error::{Error, Result};
use crate::formats::PlanarCodeEntry;
use crate::graph::Graph;
use crate::planarity::Embedding;
use crate::report::{BatchEntry, ChiValue};

/// Structural audit of an embedded graph against the fullerene definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullereneReport {
    pub is_cubic: bool,
    /// The rotation system is a plane embedding of a connected graph.
    pub is_plane: bool,
    pub face_census: BTreeMap<usize, usize>,
    pub pentagon_count: usize,
    pub hexagon_count: usize,
    pub girth: Option<usize>,
    /// No cycle of length 3 or 4, and every 5- and 6-cycle bounds a face.
    pub small_cycle_check: bool,
    pub verdict: bool,
}

/// Faces of an embedding and their edge-sharing adjacency.
#[derive(Clone, Debug)]
pub struct FaceGraph {
    pub faces: Vec<Vec<usize>>,
    pub adjacency: Vec<Vec<usize>>,
}

impl FaceGraph {
    pub fn new(e: &Embedding) -> Self {
        let faces = e.faces().faces;
        let mut dart_face = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for j in 0..f.len() {
                dart_face.insert((f[j], f[(j + 1) % f.len()]), i);
            }
        }
        let mut adjacency = vec![Vec::new(); faces.len()];
        for (&(u, v), &i) in &dart_face {
            let j = dart_face[&(v, u)];
            if i != j {
                adjacency[i].push(j);
            }
        }
        for a in &mut adjacency {
            a.sort_unstable();
            a.dedup();
        }
        FaceGraph { faces, adjacency }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Breadth-first distances from `face` in the dual graph.
    pub fn distances(&self, face: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[face] = Some(0);
        let mut queue = VecDeque::from([face]);
        while let Some(a) = queue.pop_front() {
            let d = dist[a].unwrap();
            for &b in &self.adjacency[a] {
                if dist[b].is_none() {
                    dist[b] = Some(d + 1);
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    /// Faces grouped by dual distance from `face`; `layers[0] == [face]`.
    pub fn layers(&self, face: usize) -> Vec<Vec<usize>> {
        let mut layers: Vec<Vec<usize>> = Vec::new();
        for (f, d) in self.distances(face).into_iter().enumerate() {
            if let Some(d) = d {
                if layers.len() <= d {
                    layers.resize(d + 1, Vec::new());
                }
                layers[d].push(f);
            }
        }
        layers
    }

    /// Pentagons sharing an edge with `face`, if there are exactly six
    /// distinct ones and `face` is a hexagon.
    fn pentagon_ring(&self, face: usize) -> Option<Vec<usize>> {
        if self.faces[face].len() != 6 {
            return None;
        }
        let ring = &self.adjacency[face];
        (ring.len() == 6 && ring.iter().all(|&p| self.faces[p].len() == 5)).then(|| ring.clone())
    }
}

/// Rotates a cycle to start at its smallest vertex and picks the direction
/// with the smaller second vertex.
fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..n).map(|i| cycle[(start + i) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|i| cycle[(start + n - i) % n]).collect();
    fwd.min(bwd)
}

/// All cycles of length at most `max_len`, each listed once.
fn short_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, max_len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == s && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if w > s && path.len() < max_len && !path.contains(&w) {
                path.push(w);
                extend(g, max_len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        extend(g, max_len, &mut vec![s], &mut out);
    }
    out
}

pub fn is_fullerene(e: &Embedding) -> FullereneReport {
    let g = e.graph();
    let faces = e.faces();
    let census = faces.census();
    let pentagon_count = census.get(&5).copied().unwrap_or(0);
    let hexagon_count = census.get(&6).copied().unwrap_or(0);
    let is_cubic = g.n() > 0 && g.is_cubic();
    let is_plane = g.is_connected() && e.is_plane();
    let facial: HashSet<Vec<usize>> = faces
        .faces
        .iter()
        .filter(|f| f.len() <= 6)
        .map(|f| canonical_cycle(f))
        .collect();
    let small_cycle_check = is_cubic
        && short_cycles(g, 6)
            .iter()
            .all(|c| c.len() >= 5 && facial.contains(&canonical_cycle(c)));
    let only_5_6 = census.keys().all(|&l| l == 5 || l == 6);
    FullereneReport {
        is_cubic,
        is_plane,
        verdict: is_cubic && is_plane && only_5_6 && pentagon_count == 12,
        face_census: census,
        pentagon_count,
        hexagon_count,
        girth: g.girth(),
        small_cycle_check,
    }
}

/// Witness that an embedded fullerene is a k-drum. Face ids index
/// [`Embedding::faces`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrumCertificate {
    pub k: usize,
    pub f: usize,
    pub f_prime: usize,
    /// Pentagons around `f` and around `f_prime`, sorted.
    pub pentagon_sets: [Vec<usize>; 2],
}

/// Vertex index of `f_i` (i = 1..6).
fn drum_f(i: usize) -> usize {
    (i - 1) % 6
}

/// Vertex index of `z_{j,m}` (j = 1..k, m = 1..12, wrapping).
fn drum_z(j: usize, m: usize) -> usize {
    6 + 12 * (j - 1) + (m + 11) % 12
}

/// Vertex index of `g_i` in a k-drum.
fn drum_g(k: usize, i: usize) -> usize {
    6 + 12 * k + (i - 1) % 6
}

/// The k-drum on `12(k + 1)` vertices.
///
/// Vertices: `f_1..f_6` are 0..6, ring `j` vertex `z_{j,m}` is
/// `6 + 12(j-1) + (m-1)`, and `g_1..g_6` follow. Rotations list neighbours
/// counter-clockwise in the concentric drawing: a ring vertex with an inward
/// spoke sees (next, inward, previous), one with an outward spoke sees
/// (outward, next, previous).
pub fn make_drum(k: usize) -> Result<Embedding> {
    if k == 0 {
        return Err(Error::ZeroDrum);
    }
    let n = 12 * (k + 1);
    let mut rot = vec![Vec::new(); n];
    for i in 1..=6 {
        rot[drum_f(i)] = vec![drum_z(1, 2 * i - 1), drum_f(i + 1), drum_f(i + 5)];
        rot[drum_g(k, i)] = vec![drum_g(k, i + 1), drum_z(k, 2 * i), drum_g(k, i + 5)];
    }
    for j in 1..=k {
        for m in 1..=12 {
            let (next, prev) = (drum_z(j, m + 1), drum_z(j, m + 11));
            rot[drum_z(j, m)] = if m % 2 == 1 {
                let inward = if j == 1 {
                    drum_f(m.div_ceil(2))
                } else {
                    drum_z(j - 1, m + 1)
                };
                vec![next, inward, prev]
            } else {
                let outward = if j == k {
                    drum_g(k, m / 2)
                } else {
                    drum_z(j + 1, m - 1)
                };
                vec![outward, next, prev]
            };
        }
    }
    let mut edges = Vec::with_capacity(18 * (k + 1));
    for (v, r) in rot.iter().enumerate() {
        edges.extend(r.iter().filter(|&&w| v < w).map(|&w| (v, w)));
    }
    let g = Graph::from_edges(n, &edges)?;
    Embedding::new(g, rot)
}

/// Finds two hexagons each ringed by six distinct pentagons, with disjoint
/// rings. The first such pair in face order is returned.
pub fn is_drum(e: &Embedding) -> Result<Option<DrumCertificate>> {
    if !is_fullerene(e).verdict {
        return Err(Error::NotFullerene(
            "drum recognition needs a fullerene".into(),
        ));
    }
    let fg = FaceGraph::new(e);
    let rings: Vec<(usize, Vec<usize>)> = (0..fg.len())
        .filter_map(|f| fg.pentagon_ring(f).map(|r| (f, r)))
        .collect();
    for (a, (f, ring_f)) in rings.iter().enumerate() {
        for (f_prime, ring_g) in &rings[a + 1..] {
            if ring_f.iter().any(|p| ring_g.contains(p)) {
                continue;
            }
            let d = fg.distances(*f)[*f_prime].expect("fullerene dual is connected");
            if d < 3 {
                continue;
            }
            return Ok(Some(DrumCertificate {
                k: d - 2,
                f: *f,
                f_prime: *f_prime,
                pentagon_sets: [ring_f.clone(), ring_g.clone()],
            }));
        }
    }
    Ok(None)
}

fn check_certificate(fg: &FaceGraph, cert: &DrumCertificate) -> Result<()> {
    let bad = |msg: String| Err(Error::Certificate(msg));
    if cert.f >= fg.len() || cert.f_prime >= fg.len() || cert.f == cert.f_prime {
        return bad(format!("face ids {} and {} invalid", cert.f, cert.f_prime));
    }
    for (i, face) in [cert.f, cert.f_prime].into_iter().enumerate() {
        match fg.pentagon_ring(face) {
            Some(ring) if ring == cert.pentagon_sets[i] => {}
            _ => {
                return bad(format!(
                    "face {face} is not a hexagon ringed by the listed pentagons"
                ))
            }
        }
    }
    if cert.pentagon_sets[0]
        .iter()
        .any(|p| cert.pentagon_sets[1].contains(p))
    {
        return bad("pentagon rings overlap".into());
    }
    let d = fg.distances(cert.f)[cert.f_prime];
    if d != Some(cert.k + 2) {
        return bad(format!("dual distance {d:?} does not match k = {}", cert.k));
    }
    Ok(())
}

/// True iff, for every `l <= k`, the faces at dual distance `l` from `F` all
/// have the same length.
pub fn layers_uniform(e: &Embedding, cert: &DrumCertificate) -> bool {
    let fg = FaceGraph::new(e);
    let layers = fg.layers(cert.f);
    layers.iter().take(cert.k + 1).all(|layer| {
        layer
            .iter()
            .all(|&f| fg.faces[f].len() == fg.faces[layer[0]].len())
    })
}

/// Colors at distance exactly two, as adjacency lists.
struct Propagator {
    sq: Graph,
    color: Vec<usize>,
}

impl Propagator {
    fn seen(&self, v: usize) -> u8 {
        self.sq.neighbors(v).iter().fold(0, |acc, &u| {
            if self.color[u] > 0 {
                acc | 1 << self.color[u]
            } else {
                acc
            }
        })
    }

    /// Colors `face` cyclically with `1, 2, 3, ...` starting at `offset`,
    /// reversed if `flip`; false on a clash with an existing color.
    fn seed(&mut self, face: &[usize], offset: usize, flip: bool) -> bool {
        let len = face.len();
        for i in 0..len {
            let v = if flip { face[(len - i) % len] } else { face[i] };
            let c = (i + offset) % 3 + 1;
            if self.color[v] != 0 && self.color[v] != c {
                return false;
            }
            self.color[v] = c;
        }
        true
    }

    /// Repeatedly gives the third color to any vertex whose distance-two
    /// neighbourhood already shows two. False on a vertex seeing all three.
    fn run(&mut self) -> bool {
        let mut queue: VecDeque<usize> = (0..self.sq.n()).collect();
        let mut queued = vec![true; self.sq.n()];
        while let Some(v) = queue.pop_front() {
            queued[v] = false;
            if self.color[v] != 0 {
                continue;
            }
            let seen = self.seen(v) >> 1;
            match seen.count_ones() {
                3 => return false,
                2 => {
                    self.color[v] = (!seen & 0b111).trailing_zeros() as usize + 1;
                    for &u in self.sq.neighbors(v) {
                        if self.color[u] == 0 && !queued[u] {
                            queued[u] = true;
                            queue.push_back(u);
                        }
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn complete(&self) -> bool {
        self.color.iter().all(|&c| c != 0)
    }
}

/// Constructs an exact-square 3-coloring of a drum: `F` is seeded with
/// `1,2,3,1,2,3` and colors are forced outward. If the forcing does not
/// reach every vertex, each of the twelve rotations and reflections of the
/// pattern is tried on `F'` and the first that completes consistently wins.
pub fn drum_3_coloring(e: &Embedding, cert: &DrumCertificate) -> Result<Coloring> {
    let fg = FaceGraph::new(e);
    check_certificate(&fg, cert)?;
    let g = e.graph();
    let mut base = Propagator {
        sq: g.exact_power(2)?,
        color: vec![0; g.n()],
    };
    base.seed(&fg.faces[cert.f], 0, false);
    if !base.run() {
        return Err(Error::DrumColoring(
            "conflict while propagating from F".into(),
        ));
    }
    let mut candidates = Vec::new();
    if base.complete() {
        candidates.push(base.color);
    } else {
        for flip in [false, true] {
            for offset in 0..6 {
                let mut p = Propagator {
                    sq: base.sq.clone(),
                    color: base.color.clone(),
                };
                if p.seed(&fg.faces[cert.f_prime], offset, flip) && p.run() && p.complete() {
                    candidates.push(p.color);
                }
            }
        }
    }
    for colors in candidates {
        let c = Coloring::from_colors(colors, 3)?;
        if validate_coloring(g, &c, Mode::ExactSquare)?.is_valid() {
            return Ok(c);
        }
    }
    Err(Error::DrumColoring(
        "no seed alignment on F' completes to a valid coloring".into(),
    ))
}

/// Exact solver versus drum recognition on one fullerene.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreeColorability {
    pub solver_says_3: bool,
    pub is_drum: bool,
    /// The solver finds a 3-coloring exactly when the graph is a drum.
    pub consistent: bool,
}

pub fn classify_3_colorability(e: &Embedding) -> Result<ThreeColorability> {
    let sq = e.graph().exact_power(2)?;
    let solver_says_3 = is_k_colorable(&sq, 3, None)?.is_some();
    let is_drum = is_drum(e)?.is_some();
    Ok(ThreeColorability {
        solver_says_3,
        is_drum,
        consistent: solver_says_3 == is_drum,
    })
}

fn verify_entry(index: usize, entry: &PlanarCodeEntry, max_chi: usize) -> BatchEntry {
    let mut out = BatchEntry {
        index,
        n: entry.n(),
        fullerene: false,
        chi_exact_square: None,
        drum_k: None,
        consistent: false,
        pass: false,
    };
    let Ok(e) = Embedding::from_planar_code(entry) else {
        return out;
    };
    if !is_fullerene(&e).verdict {
        return out;
    }
    out.fullerene = true;
    let sq = e.graph().exact_power(2).expect("p = 2");
    let cap = max_chi + 1;
    let says_3 = is_k_colorable(&sq, 3, None)
        .expect("no precoloring")
        .is_some();
    // Any vertex's three neighbours are pairwise at distance two, so 3 is a
    // lower bound, and 4 once the 3-coloring search fails.
    let lower = if says_3 { 3 } else { 4 };
    let chi = (lower..=cap)
        .find(|&k| {
            is_k_colorable(&sq, k, None)
                .expect("no precoloring")
                .is_some()
        })
        .map_or(ChiValue::Above(cap), ChiValue::Exact);
    out.chi_exact_square = Some(chi);
    out.drum_k = is_drum(&e).expect("fullerene checked").map(|c| c.k);
    out.consistent = says_3 == out.drum_k.is_some();
    out.pass = out.consistent && matches!(chi, ChiValue::Exact(k) if k <= max_chi);
    out
}

/// Checks every entry: fullerene verdict, exact-square chromatic number
/// searched up to `max_chi + 1`, drum consistency, and the bound `max_chi`.
/// Work is spread over `workers` threads; results keep input order.
pub fn verify_batch(
    entries: &[PlanarCodeEntry],
    max_chi: usize,
    workers: usize,
) -> Vec<BatchEntry> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        entries
            .par_iter()
            .enumerate()
            .map(|(i, entry)| verify_entry(i, entry, max_chi))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drum_sizes_and_census() {
        for k in 1..=6 {
            let e = make_drum(k).unwrap();
            assert_eq!(e.graph().n(), 12 * (k + 1));
            assert_eq!(e.graph().m(), 18 * (k + 1));
            let r = is_fullerene(&e);
            assert!(r.verdict, "{r:?}");
            assert!(r.small_cycle_check);
            assert_eq!(r.girth, Some(5));
            assert_eq!(r.pentagon_count, 12);
            assert_eq!(r.hexagon_count, 6 * k - 4);
        }
    }

    #[test]
    fn zero_drum_rejected() {
        assert_eq!(make_drum(0).unwrap_err(), Error::ZeroDrum);
    }

    #[test]
    fn drum_round_trip() {
        for k in 1..=6 {
            let e = make_drum(k).unwrap();
            let cert = is_drum(&e).unwrap().unwrap();
            assert_eq!(cert.k, k);
            assert!(layers_uniform(&e, &cert));
            let c = drum_3_coloring(&e, &cert).unwrap();
            assert!(validate_coloring(e.graph(), &c, Mode::ExactSquare)
                .unwrap()
                .is_valid());
        }
    }

    #[test]
    fn corrupted_certificate_rejected() {
        let e = make_drum(2).unwrap();
        let mut cert = is_drum(&e).unwrap().unwrap();
        cert.f = cert.pentagon_sets[0][0];
        assert!(matches!(
            drum_3_coloring(&e, &cert),
            Err(Error::Certificate(_))
        ));
        let mut cert = is_drum(&e).unwrap().unwrap();
        cert.k += 1;
        assert!(drum_3_coloring(&e, &cert).is_err());
    }

    #[test]
    fn short_cycles_of_small_graphs() {
        assert_eq!(short_cycles(&Graph::complete(4), 6).len(), 7);
        assert_eq!(short_cycles(&Graph::cycle(7), 6).len(), 0);
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[3, 2, 1]), vec![1, 2, 3]);
    }

    #[test]
    fn empty_batch() {
        assert!(verify_batch(&[], 4, 1).is_empty());
    }
}
