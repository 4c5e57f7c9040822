//! Exact coloring solvers and the certificate checker.
//!
//! Colors are `1..=k`. Every solver is a depth-first search with a
//! saturation (fewest remaining colors) vertex order and forward checking;
//! ties go to the higher degree, then the lower index, so runs are
//! reproducible.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Total or partial assignment of colors `1..=k` to vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
    k: usize,
}

impl Coloring {
    /// Partial coloring with nothing assigned.
    pub fn empty(n: usize, k: usize) -> Self {
        Coloring {
            colors: vec![None; n],
            k,
        }
    }

    /// Total coloring from a color per vertex.
    pub fn from_colors(colors: Vec<usize>, k: usize) -> Result<Self> {
        let mut c = Coloring::empty(colors.len(), k);
        for (v, col) in colors.into_iter().enumerate() {
            c.set(v, col)?;
        }
        Ok(c)
    }

    pub fn set(&mut self, v: usize, color: usize) -> Result<()> {
        if color == 0 || color > self.k {
            return Err(Error::Coloring(format!(
                "color {color} at vertex {v} outside 1..={}",
                self.k
            )));
        }
        if v >= self.colors.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.colors.len(),
            });
        }
        self.colors[v] = Some(color);
        Ok(())
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Colors of a total coloring.
    pub fn to_vec(&self) -> Option<Vec<usize>> {
        self.colors.iter().copied().collect()
    }

    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

impl fmt::Display for Coloring {
    /// Comma-separated colors, `-` for unassigned vertices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match c {
                Some(c) => write!(f, "{c}")?,
                None => f.write_str("-")?,
            }
        }
        Ok(())
    }
}

/// Which pairs of vertices must receive distinct colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Adjacent vertices.
    Proper,
    /// Vertices at distance exactly two.
    ExactSquare,
    /// Vertices with a common neighbour.
    Injective,
}

impl Mode {
    /// The graph whose proper colorings are the colorings of this mode.
    pub fn conflict_graph(self, g: &Graph) -> Graph {
        match self {
            Mode::Proper => g.clone(),
            Mode::ExactSquare => g.exact_power(2).expect("p = 2 is valid"),
            Mode::Injective => g.common_neighbor_graph(),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Mode::Proper => "proper",
            Mode::ExactSquare => "exact-square",
            Mode::Injective => "injective",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "proper" => Ok(Mode::Proper),
            "exact-square" => Ok(Mode::ExactSquare),
            "injective" => Ok(Mode::Injective),
            _ => Err(format!(
                "unknown mode `{s}` (expected proper, exact-square, injective)"
            )),
        }
    }
}

// ---------------------------------------------------------------------------
// k-colorability

const NONE: usize = usize::MAX;

struct Solver<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    /// `conflicts[v * k + c]`: colored neighbours of `v` holding color `c`.
    conflicts: Vec<u32>,
    avail: Vec<usize>,
    uncolored: usize,
    symmetry_breaking: bool,
    used: usize,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, k: usize, symmetry_breaking: bool) -> Self {
        let n = g.n();
        Solver {
            g,
            k,
            color: vec![NONE; n],
            conflicts: vec![0; n * k],
            avail: vec![k; n],
            uncolored: n,
            symmetry_breaking,
            used: 0,
        }
    }

    /// Colors `v` and prunes neighbour domains; false on a domain wipeout.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        self.uncolored -= 1;
        let mut ok = true;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.conflicts[u * self.k + c];
            *slot += 1;
            if *slot == 1 && self.color[u] == NONE {
                self.avail[u] -= 1;
                if self.avail[u] == 0 {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: usize) {
        for &u in self.g.neighbors(v) {
            let slot = &mut self.conflicts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 && self.color[u] == NONE {
                self.avail[u] += 1;
            }
        }
        self.color[v] = NONE;
        self.uncolored += 1;
    }

    fn select(&self) -> usize {
        let mut best = NONE;
        for v in 0..self.g.n() {
            if self.color[v] != NONE {
                continue;
            }
            if best == NONE
                || self.avail[v] < self.avail[best]
                || (self.avail[v] == self.avail[best] && self.g.degree(v) > self.g.degree(best))
            {
                best = v;
            }
        }
        best
    }

    fn search(&mut self) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let v = self.select();
        let limit = if self.symmetry_breaking {
            self.k.min(self.used + 1)
        } else {
            self.k
        };
        for c in 0..limit {
            if self.conflicts[v * self.k + c] != 0 {
                continue;
            }
            let prev_used = self.used;
            self.used = self.used.max(c + 1);
            if self.assign(v, c) && self.search() {
                return true;
            }
            self.unassign(v, c);
            self.used = prev_used;
        }
        false
    }
}

/// Decides whether `h` has a proper `k`-coloring extending `pre`.
///
/// Symmetry breaking (a fresh color may only be the next unused one) applies
/// only when there is no precoloring.
pub fn is_k_colorable(h: &Graph, k: usize, pre: Option<&Coloring>) -> Result<Option<Coloring>> {
    let n = h.n();
    if let Some(p) = pre {
        if p.len() != n {
            return Err(Error::Coloring(format!(
                "precoloring covers {} vertices, graph has {n}",
                p.len()
            )));
        }
        for v in 0..n {
            if let Some(c) = p.get(v) {
                if c == 0 || c > k {
                    return Err(Error::Coloring(format!(
                        "precolor {c} at vertex {v} outside 1..={k}"
                    )));
                }
                if let Some(&u) = h.neighbors(v).iter().find(|&&u| p.get(u) == Some(c)) {
                    return Err(Error::Coloring(format!(
                        "precoloring conflict on edge ({v}, {u})"
                    )));
                }
            }
        }
    }
    if n == 0 {
        return Ok(Some(Coloring::empty(0, k)));
    }
    if k == 0 {
        return Ok(None);
    }
    let has_pre = pre.is_some_and(|p| (0..n).any(|v| p.get(v).is_some()));
    let mut s = Solver::new(h, k, !has_pre);
    if let Some(p) = pre {
        for v in 0..n {
            if let Some(c) = p.get(v) {
                if !s.assign(v, c - 1) {
                    return Ok(None);
                }
            }
        }
    }
    if !s.search() {
        return Ok(None);
    }
    let colors = s.color.iter().map(|&c| c + 1).collect();
    Ok(Some(Coloring::from_colors(colors, k)?))
}

/// Chromatic number with a witness. The search starts at the clique number
/// and raises `k` one step at a time.
pub fn chromatic_number(h: &Graph) -> (usize, Coloring) {
    if h.n() == 0 {
        return (0, Coloring::empty(0, 0));
    }
    let mut k = h.max_clique().len();
    loop {
        if let Some(c) = is_k_colorable(h, k, None).expect("no precoloring") {
            return (k, c);
        }
        k += 1;
    }
}

/// Smallest `k <= cap` with a proper `k`-coloring, starting from the clique
/// number; `None` if more than `cap` colors are needed.
pub fn chromatic_number_capped(h: &Graph, cap: usize) -> Option<(usize, Coloring)> {
    if h.n() == 0 {
        return Some((0, Coloring::empty(0, 0)));
    }
    let lower = h.max_clique().len();
    (lower..=cap).find_map(|k| {
        is_k_colorable(h, k, None)
            .expect("no precoloring")
            .map(|c| (k, c))
    })
}

fn checked(g: &Graph, mode: Mode, (k, c): (usize, Coloring)) -> (usize, Coloring) {
    assert!(
        validate_coloring(g, &c, mode)
            .expect("solver returns total colorings")
            .is_valid(),
        "solver witness failed independent validation ({mode})"
    );
    (k, c)
}

/// Exact-square chromatic number: chromatic number of the exact square.
pub fn exact_square_chromatic(g: &Graph) -> (usize, Coloring) {
    checked(
        g,
        Mode::ExactSquare,
        chromatic_number(&Mode::ExactSquare.conflict_graph(g)),
    )
}

/// Injective chromatic number: chromatic number of the common-neighbour graph.
pub fn injective_chromatic(g: &Graph) -> (usize, Coloring) {
    checked(
        g,
        Mode::Injective,
        chromatic_number(&Mode::Injective.conflict_graph(g)),
    )
}

/// Chromatic number of `g` in the given mode.
pub fn chromatic_in_mode(g: &Graph, mode: Mode) -> (usize, Coloring) {
    checked(g, mode, chromatic_number(&mode.conflict_graph(g)))
}

// ---------------------------------------------------------------------------
// list coloring

/// Allowed colors per vertex, stored as bit masks (bit `c` = color `c`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    masks: Vec<u64>,
}

/// Largest color a list may contain.
pub const MAX_LIST_COLOR: usize = 63;

impl ListAssignment {
    pub fn new(lists: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(lists.len());
        for (v, list) in lists.iter().enumerate() {
            let mut m = 0u64;
            for &c in list {
                if c == 0 || c > MAX_LIST_COLOR {
                    return Err(Error::Coloring(format!(
                        "list color {c} at vertex {v} outside 1..={MAX_LIST_COLOR}"
                    )));
                }
                m |= 1 << c;
            }
            if m == 0 {
                return Err(Error::Coloring(format!("empty list at vertex {v}")));
            }
            masks.push(m);
        }
        Ok(ListAssignment { masks })
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn list(&self, v: usize) -> Vec<usize> {
        (1..=MAX_LIST_COLOR)
            .filter(|&c| self.masks[v] >> c & 1 == 1)
            .collect()
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }
}

/// Reusable list-coloring search over a fixed graph. Domains are bit masks;
/// the trail makes backtracking allocation-free.
pub struct ListColorer<'a> {
    g: &'a Graph,
    domain: Vec<u64>,
    color: Vec<u8>,
    trail: Vec<(usize, u64)>,
}

impl<'a> ListColorer<'a> {
    pub fn new(g: &'a Graph) -> Self {
        let n = g.n();
        ListColorer {
            g,
            domain: vec![0; n],
            color: vec![0; n],
            trail: Vec::with_capacity(n * n),
        }
    }

    /// Solves for the given masks; the coloring stays readable through
    /// [`ListColorer::colors`] until the next call.
    pub fn solve(&mut self, masks: &[u64]) -> bool {
        debug_assert_eq!(masks.len(), self.g.n());
        self.domain.copy_from_slice(masks);
        self.color.fill(0);
        self.trail.clear();
        self.search()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.color.iter().map(|&c| c as usize).collect()
    }

    fn search(&mut self) -> bool {
        let mut best = NONE;
        let mut best_size = u32::MAX;
        for v in 0..self.g.n() {
            if self.color[v] == 0 {
                let s = self.domain[v].count_ones();
                if s < best_size {
                    best = v;
                    best_size = s;
                }
            }
        }
        if best == NONE {
            return true;
        }
        let v = best;
        let mut options = self.domain[v];
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            let mark = self.trail.len();
            self.color[v] = c as u8;
            let bit = 1u64 << c;
            let mut ok = true;
            for &u in self.g.neighbors(v) {
                if self.color[u] == 0 && self.domain[u] & bit != 0 {
                    self.trail.push((u, self.domain[u]));
                    self.domain[u] &= !bit;
                    if self.domain[u] == 0 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && self.search() {
                return true;
            }
            while self.trail.len() > mark {
                let (u, d) = self.trail.pop().unwrap();
                self.domain[u] = d;
            }
            self.color[v] = 0;
        }
        false
    }
}

/// Proper coloring of `h` with every vertex colored from its own list.
pub fn list_colorable(h: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>> {
    if lists.len() < h.n() {
        return Err(Error::MissingList(lists.len()));
    }
    let mut solver = ListColorer::new(h);
    if !solver.solve(&lists.masks[..h.n()]) {
        return Ok(None);
    }
    let k = solver.colors().into_iter().max().unwrap_or(0);
    Ok(Some(Coloring::from_colors(solver.colors(), k.max(1))?))
}

// ---------------------------------------------------------------------------
// certificate checking

/// Outcome of [`validate_coloring`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    Valid,
    /// First offending pair `(u, v)`, `u < v`, in lexicographic order.
    Conflict(usize, usize),
}

impl Validation {
    pub fn is_valid(self) -> bool {
        self == Validation::Valid
    }
}

/// Checks `c` against `g` in `mode` straight from the definitions: breadth-first
/// distances for exact-square, shared neighbours for injective.
pub fn validate_coloring(g: &Graph, c: &Coloring, mode: Mode) -> Result<Validation> {
    let n = g.n();
    if c.len() != n {
        return Err(Error::Coloring(format!(
            "coloring covers {} vertices, graph has {n}",
            c.len()
        )));
    }
    let colors = c
        .to_vec()
        .ok_or_else(|| Error::Coloring("partial coloring".into()))?;
    for u in 0..n {
        let conflicts: Vec<usize> = match mode {
            Mode::Proper => g.neighbors(u).iter().copied().filter(|&v| v > u).collect(),
            Mode::ExactSquare => {
                let dist = g.bfs_distances(u)?;
                (u + 1..n).filter(|&v| dist[v] == Some(2)).collect()
            }
            Mode::Injective => (u + 1..n)
                .filter(|&v| g.neighbors(u).iter().any(|w| g.neighbors(v).contains(w)))
                .collect(),
        };
        if let Some(&v) = conflicts.iter().find(|&&v| colors[u] == colors[v]) {
            return Ok(Validation::Conflict(u, v));
        }
    }
    Ok(Validation::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let edges: Vec<_> = g.edges().collect();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let mut col = vec![0; n];
            for c in col.iter_mut() {
                *c = code % k;
                code /= k;
            }
            edges.iter().all(|&(u, v)| col[u] != col[v])
        })
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(1..8);
            let p = rng.gen_range(0.2..0.8);
            let e: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, &e).unwrap();
            for k in 1..5 {
                let got = is_k_colorable(&g, k, None).unwrap();
                assert_eq!(got.is_some(), brute_force_colorable(&g, k), "{g:?} k={k}");
                if let Some(c) = got {
                    assert!(validate_coloring(&g, &c, Mode::Proper).unwrap().is_valid());
                }
            }
        }
    }

    #[test]
    fn precoloring_is_respected() {
        // path 0-1-2, force ends to 1 and 2 with k = 2 -> impossible
        let p = Graph::path(3);
        let mut pre = Coloring::empty(3, 2);
        pre.set(0, 1).unwrap();
        pre.set(2, 2).unwrap();
        assert!(is_k_colorable(&p, 2, Some(&pre)).unwrap().is_none());
        let got = is_k_colorable(&p, 3, Some(&pre)).unwrap().unwrap();
        assert_eq!(got.to_vec().unwrap(), vec![1, 3, 2]);
    }

    #[test]
    fn precoloring_errors() {
        let g = Graph::complete(2);
        let mut pre = Coloring::empty(2, 3);
        pre.set(0, 3).unwrap();
        assert!(is_k_colorable(&g, 2, Some(&pre)).is_err());
        pre.set(0, 1).unwrap();
        pre.set(1, 1).unwrap();
        assert!(is_k_colorable(&g, 3, Some(&pre)).is_err());
        assert!(is_k_colorable(&g, 3, Some(&Coloring::empty(3, 3))).is_err());
    }

    #[test]
    fn enough_colors_always_work() {
        for n in 1..9 {
            let g = Graph::complete(n);
            let c = is_k_colorable(&g, n, None).unwrap().unwrap();
            assert_eq!(c.colors_used(), n);
            assert!(is_k_colorable(&g, n - 1, None).unwrap().is_none());
        }
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::complete(5)).0, 5);
        assert_eq!(chromatic_number(&Graph::cycle(5)).0, 3);
        assert_eq!(chromatic_number(&Graph::cycle(6)).0, 2);
        assert_eq!(chromatic_number(&Graph::empty(4)).0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).0, 0);
        for t in 2..7 {
            assert_eq!(exact_square_chromatic(&Graph::star(t)).0, t);
        }
        assert_eq!(injective_chromatic(&Graph::complete(3)).0, 3);
        assert_eq!(chromatic_number_capped(&Graph::complete(5), 4), None);
        assert_eq!(
            chromatic_number_capped(&Graph::complete(5), 5).unwrap().0,
            5
        );
    }

    #[test]
    fn list_coloring_examples() {
        let g = Graph::path(3);
        let l = ListAssignment::new(&[vec![2], vec![3], vec![2]]).unwrap();
        assert_eq!(
            list_colorable(&g, &l).unwrap().unwrap().to_vec().unwrap(),
            vec![2, 3, 2]
        );
        let e = Graph::complete(2);
        let l = ListAssignment::new(&[vec![1], vec![1]]).unwrap();
        assert!(list_colorable(&e, &l).unwrap().is_none());
        let short = ListAssignment::new(&[vec![1]]).unwrap();
        assert_eq!(list_colorable(&e, &short), Err(Error::MissingList(1)));
        assert!(ListAssignment::new(&[vec![]]).is_err());
        assert!(ListAssignment::new(&[vec![0]]).is_err());
        assert_eq!(
            ListAssignment::new(&[vec![5, 1]]).unwrap().list(0),
            vec![1, 5]
        );
    }

    #[test]
    fn validation_examples() {
        let k2 = Graph::complete(2);
        let same = Coloring::from_colors(vec![1, 1], 1).unwrap();
        assert_eq!(
            validate_coloring(&k2, &same, Mode::Proper).unwrap(),
            Validation::Conflict(0, 1)
        );
        assert!(validate_coloring(&k2, &same, Mode::ExactSquare)
            .unwrap()
            .is_valid());
        assert!(validate_coloring(&k2, &same, Mode::Injective)
            .unwrap()
            .is_valid());
        let p3 = Graph::path(3);
        let c = Coloring::from_colors(vec![1, 1, 1], 1).unwrap();
        assert_eq!(
            validate_coloring(&p3, &c, Mode::ExactSquare).unwrap(),
            Validation::Conflict(0, 2)
        );
        assert!(validate_coloring(&p3, &Coloring::empty(3, 2), Mode::Proper).is_err());
    }

    #[test]
    fn mode_round_trip() {
        for m in [Mode::Proper, Mode::ExactSquare, Mode::Injective] {
            assert_eq!(m.to_string().parse::<Mode>().unwrap(), m);
        }
        assert!("square".parse::<Mode>().is_err());
    }
}
