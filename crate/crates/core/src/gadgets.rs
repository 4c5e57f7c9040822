//! Named fixture graphs and the exhaustive lemma verifiers built on them.
//!
//! Every gadget is a fixed labeled edge list. Labels follow the usual
//! drawings of these graphs (`u1..u14` around the Heawood cycle, `x`, `y`
//! for the two distinguished vertices of `fig7`, `x` for the wheel hub, and
//! so on) and can be looked up with [`Gadget::vertex`].
//!
//! The list-coloring verifiers enumerate list assignments of exact sizes
//! over the palette `{1..5}`. Exact sizes suffice: enlarging a list only
//! adds options. Assignments that differ by a permutation of the five colors
//! are equivalent, so only the lexicographically smallest member of each
//! orbit is solved.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::coloring::{is_k_colorable, Coloring, ListColorer};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::{is_planar, Embedding};
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetId {
    Heawood,
    Petersen,
    Triplex,
    Bip22,
    Theta,
    OuterplanarFig4,
    Fig6a,
    Fig6b,
    Fig7,
    Fig8,
    Fig9,
    Wheel6,
    Triangulation12,
    Dodecahedron,
    C60,
    /// `K_{1,t}`.
    Star(usize),
    DrumCap,
}

impl GadgetId {
    /// Every gadget without a parameter.
    pub const FIXED: [GadgetId; 16] = [
        GadgetId::Heawood,
        GadgetId::Petersen,
        GadgetId::Triplex,
        GadgetId::Bip22,
        GadgetId::Theta,
        GadgetId::OuterplanarFig4,
        GadgetId::Fig6a,
        GadgetId::Fig6b,
        GadgetId::Fig7,
        GadgetId::Fig8,
        GadgetId::Fig9,
        GadgetId::Wheel6,
        GadgetId::Triangulation12,
        GadgetId::Dodecahedron,
        GadgetId::C60,
        GadgetId::DrumCap,
    ];
}

impl fmt::Display for GadgetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GadgetId::Heawood => "heawood",
            GadgetId::Petersen => "petersen",
            GadgetId::Triplex => "triplex",
            GadgetId::Bip22 => "bip22",
            GadgetId::Theta => "theta",
            GadgetId::OuterplanarFig4 => "outerplanar_fig4",
            GadgetId::Fig6a => "fig6a",
            GadgetId::Fig6b => "fig6b",
            GadgetId::Fig7 => "fig7",
            GadgetId::Fig8 => "fig8",
            GadgetId::Fig9 => "fig9",
            GadgetId::Wheel6 => "wheel6",
            GadgetId::Triangulation12 => "triangulation12",
            GadgetId::Dodecahedron => "dodecahedron",
            GadgetId::C60 => "c60",
            GadgetId::Star(t) => return f.pad(&format!("star({t})")),
            GadgetId::DrumCap => "drum_cap",
        };
        f.pad(name)
    }
}

impl FromStr for GadgetId {
    type Err = Error;

    /// Accepts the display names; stars as `star(t)`, `star:t` or `star5`-style.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(id) = GadgetId::FIXED.iter().find(|id| id.to_string() == s) {
            return Ok(*id);
        }
        let t = s
            .strip_prefix("star")
            .map(|r| r.trim_start_matches(['(', ':']).trim_end_matches(')'))
            .and_then(|r| r.parse::<usize>().ok());
        match t {
            Some(t) if t >= 1 => Ok(GadgetId::Star(t)),
            _ => Err(Error::UnknownGadget(s.to_string())),
        }
    }
}

/// A gadget graph with its vertex labels.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl Gadget {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Like [`Gadget::vertex`] but panics on an unknown label.
    pub fn v(&self, label: &str) -> usize {
        self.vertex(label)
            .unwrap_or_else(|| panic!("no vertex labelled {label}"))
    }

    fn from_labels(labels: Vec<String>, edges: &[(String, String)]) -> Gadget {
        let idx = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .unwrap_or_else(|| panic!("edge uses unknown label {l}"))
        };
        let e: Vec<_> = edges.iter().map(|(a, b)| (idx(a), idx(b))).collect();
        let graph = Graph::from_edges(labels.len(), &e).expect("gadget edges are valid");
        Gadget { graph, labels }
    }

    /// Edges written as a whitespace-separated list of `a-b` or paths `a-b-c`.
    fn parse(vertices: &str, edges: &str) -> Gadget {
        let labels = vertices.split_whitespace().map(String::from).collect();
        let mut e = Vec::new();
        for path in edges.split_whitespace() {
            let names: Vec<&str> = path.split('-').collect();
            for w in names.windows(2) {
                e.push((w[0].to_string(), w[1].to_string()));
            }
        }
        Gadget::from_labels(labels, &e)
    }

    /// A `len`-cycle on `prefix1..prefix{len}` plus chords between the given
    /// 1-based positions.
    fn cycle_with_chords(prefix: &str, len: usize, chords: &[(usize, usize)]) -> Gadget {
        let labels: Vec<String> = (1..=len).map(|i| format!("{prefix}{i}")).collect();
        let mut e: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        e.extend(chords.iter().map(|&(a, b)| (a - 1, b - 1)));
        let graph = Graph::from_edges(len, &e).expect("gadget edges are valid");
        Gadget { graph, labels }
    }
}

fn heawood() -> Gadget {
    Gadget::cycle_with_chords(
        "u",
        14,
        &[(1, 6), (2, 11), (3, 8), (4, 13), (5, 10), (7, 12), (9, 14)],
    )
}

/// `C_9` on `u1..u9` with hubs `hub1 ~ u2,u5,u8`, `hub2 ~ u1,u4,u7`,
/// `hub3 ~ u3,u6,u9`.
fn triplex() -> Gadget {
    Gadget::parse(
        "u1 u2 u3 u4 u5 u6 u7 u8 u9 hub1 hub2 hub3",
        "u1-u2-u3-u4-u5-u6-u7-u8-u9-u1 \
         u2-hub1-u5 hub1-u8 u1-hub2-u4 hub2-u7 u3-hub3-u6 hub3-u9",
    )
}

/// The chord `u2-u9` is listed twice in the usual drawing; it is one edge.
fn bip22() -> Gadget {
    Gadget::cycle_with_chords(
        "u",
        22,
        &[
            (1, 16),
            (2, 9),
            (3, 18),
            (4, 11),
            (5, 20),
            (6, 13),
            (7, 22),
            (8, 15),
            (9, 2),
            (10, 17),
            (12, 19),
            (14, 21),
        ],
    )
}

/// Outer 5-cycle `o0..o4`, spokes `o_i - i_i`, inner pentagram.
fn petersen() -> Gadget {
    let labels: Vec<String> = (0..5)
        .map(|i| format!("o{i}"))
        .chain((0..5).map(|i| format!("i{i}")))
        .collect();
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, 5 + (i + 2) % 5));
    }
    Gadget {
        graph: Graph::from_edges(10, &e).unwrap(),
        labels,
    }
}

/// Poles `s`, `t` joined by the paths `s-a1-a2-t`, `s-b1-b2-t`, `s-c1-c2-t`.
fn theta() -> Gadget {
    Gadget::parse("s t a1 a2 b1 b2 c1 c2", "s-a1-a2-t s-b1-b2-t s-c1-c2-t")
}

/// 20-cycle `u0..u19` in the listed angular order plus five chords.
fn outerplanar_fig4() -> Gadget {
    Gadget::parse(
        "u0 u1 u2 u3 u4 u5 u6 u7 u8 u9 u10 u11 u12 u13 u14 u15 u16 u17 u18 u19",
        "u17-u18-u19-u0-u1-u2-u3-u4-u5-u6-u7-u8-u9-u10-u11-u12-u13-u14-u15-u16-u17 \
         u1-u5 u7-u11 u15-u19 u6-u12 u0-u14",
    )
}

/// 5-cycle `v1..v5`, pendants `v_i - u_i` (i = 1..4), the path
/// `u1-t1-t2-u2-t3-t4-u3-t5-t6-u4`, and `u4-w4-w5-v5`.
fn fig6a() -> Gadget {
    Gadget::parse(
        "v1 v2 v3 v4 v5 u1 u2 u3 u4 t1 t2 t3 t4 t5 t6 w4 w5",
        "v1-v2-v3-v4-v5-v1 v1-u1 v2-u2 v3-u3 v4-u4 \
         u1-t1-t2-u2-t3-t4-u3-t5-t6-u4 u4-w4-w5-v5",
    )
}

/// As `fig6a` with the last path lengthened to `u4-w4-s-w5-v5`.
fn fig6b() -> Gadget {
    Gadget::parse(
        "v1 v2 v3 v4 v5 u1 u2 u3 u4 t1 t2 t3 t4 t5 t6 w4 s w5",
        "v1-v2-v3-v4-v5-v1 v1-u1 v2-u2 v3-u3 v4-u4 \
         u1-t1-t2-u2-t3-t4-u3-t5-t6-u4 u4-w4-s-w5-v5",
    )
}

fn fig7() -> Gadget {
    Gadget::parse(
        "u1 u2 u3 u4 u5 v1 v2 v3 v4 v5 x y",
        "u3-u2-x-y-u4-u3 x-v2-v3-v4-y u2-u1-v1-v2 u4-u5-v5-v4",
    )
}

fn fig8() -> Gadget {
    Gadget::parse(
        "h1 h2 h3 h4 z s x y s' u s'' v x' a b t",
        "h1-h2-h3-h4-z-s-h1 z-x-y-s'-s s'-u-s''-v-x'-y h4-a-b-x b-t-x'",
    )
}

fn fig9() -> Gadget {
    Gadget::parse(
        "s1 t1 z1 y2 z2 t2 s2 t3 z3 y3 y1 x1 x2 x3 x4 y4 u v",
        "s1-t1-z1-y2-z2-t2-s1 t2-s2-t3-z3-y3-z2 z1-y1-x1-x2-y2 \
         x2-x3-x4-y4-z3 x3-y3 t3-u-v-y4",
    )
}

/// Rim `a..f`, hub `x`.
fn wheel6() -> Gadget {
    Gadget::parse("a b c d e f x", "a-b-c-d-e-f-a x-a x-b x-c x-d x-e x-f")
}

/// Rim `a..i`, inner triangle `x y z`; `x ~ g,h,i,a`, `y ~ a,b,c,d`,
/// `z ~ d,e,f,g`.
fn triangulation12() -> Gadget {
    Gadget::parse(
        "a b c d e f g h i x y z",
        "a-b-c-d-e-f-g-h-i-a x-y-z-x x-a x-i x-h x-g y-a y-b y-c y-d z-d z-e z-f z-g",
    )
}

/// Neighbourhood of a drum hexagon: `v1..v6`, then `v_i - v_i'`,
/// `v_i' - x_i - v_{i+1}'`, `x_i - y_i`, the 12-cycle
/// `z1-y1-z2-y2-...-z6-y6-z1`, and pendants `z_i - u_i`.
fn drum_cap() -> Gadget {
    let mut labels = Vec::new();
    for p in ["v", "v'", "x", "y", "z", "u"] {
        for i in 1..=6 {
            labels.push(match p {
                "v'" => format!("v{i}'"),
                _ => format!("{p}{i}"),
            });
        }
    }
    let mut e = Vec::new();
    for i in 1..=6 {
        let j = i % 6 + 1;
        let pairs = [
            (format!("v{i}"), format!("v{j}")),
            (format!("v{i}"), format!("v{i}'")),
            (format!("v{i}'"), format!("x{i}")),
            (format!("x{i}"), format!("v{j}'")),
            (format!("x{i}"), format!("y{i}")),
            (format!("z{i}"), format!("y{i}")),
            (format!("y{i}"), format!("z{j}")),
            (format!("z{i}"), format!("u{i}")),
        ];
        e.extend(pairs);
    }
    Gadget::from_labels(labels, &e)
}

/// The generalized Petersen graph `GP(10, 2)`.
fn dodecahedron() -> Gadget {
    let mut e = Vec::new();
    for i in 0..10 {
        e.push((i, (i + 1) % 10));
        e.push((i, i + 10));
        e.push((i + 10, 10 + (i + 2) % 10));
    }
    Gadget {
        graph: Graph::from_edges(20, &e).unwrap(),
        labels: (0..20).map(|i| format!("d{i}")).collect(),
    }
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        let (up, next_up) = (1 + i, 1 + (i + 1) % 5);
        let (low, next_low) = (6 + i, 6 + (i + 1) % 5);
        e.extend([(0, up), (up, next_up), (11, low), (low, next_low)]);
        e.extend([(up, low), (up, next_low)]);
    }
    Graph::from_edges(12, &e).unwrap()
}

/// Truncation: one vertex per dart `u -> v`, joined to its reverse and to
/// the darts next to it in the rotation at `u`.
pub fn truncate(e: &Embedding) -> Graph {
    let g = e.graph();
    let mut darts = Vec::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            darts.push((u, v));
        }
    }
    let id = |d: (usize, usize)| darts.binary_search(&d).unwrap();
    let mut edges = Vec::new();
    for &(u, v) in &darts {
        edges.push((id((u, v)), id((v, u))));
        edges.push((id((u, v)), id((u, e.successor(u, v).unwrap()))));
    }
    Graph::from_edges(darts.len(), &edges).unwrap()
}

/// Truncated icosahedron.
fn c60() -> Gadget {
    let ico = is_planar(&icosahedron()).expect("icosahedron is planar");
    let graph = truncate(&ico);
    Gadget {
        labels: (0..graph.n()).map(|i| format!("c{i}")).collect(),
        graph,
    }
}

fn star(t: usize) -> Gadget {
    let mut labels = vec!["c".to_string()];
    labels.extend((1..=t).map(|i| format!("l{i}")));
    Gadget {
        graph: Graph::star(t),
        labels,
    }
}

/// Labeled gadget.
pub fn gadget(id: GadgetId) -> Gadget {
    match id {
        GadgetId::Heawood => heawood(),
        GadgetId::Petersen => petersen(),
        GadgetId::Triplex => triplex(),
        GadgetId::Bip22 => bip22(),
        GadgetId::Theta => theta(),
        GadgetId::OuterplanarFig4 => outerplanar_fig4(),
        GadgetId::Fig6a => fig6a(),
        GadgetId::Fig6b => fig6b(),
        GadgetId::Fig7 => fig7(),
        GadgetId::Fig8 => fig8(),
        GadgetId::Fig9 => fig9(),
        GadgetId::Wheel6 => wheel6(),
        GadgetId::Triangulation12 => triangulation12(),
        GadgetId::Dodecahedron => dodecahedron(),
        GadgetId::C60 => c60(),
        GadgetId::Star(t) => star(t),
        GadgetId::DrumCap => drum_cap(),
    }
}

pub fn build(id: GadgetId) -> Graph {
    gadget(id).graph
}

/// A plane embedding of the gadget, if it is planar.
pub fn embedding(id: GadgetId) -> Option<Embedding> {
    is_planar(&build(id))
}

// ---------------------------------------------------------------------------
// list-coloring lemmas

/// Size of the palette the list lemmas draw from.
pub const PALETTE: usize = 5;

const FULL: u64 = ((1 << PALETTE) - 1) << 1;

/// All permutations of `0..PALETTE`, acting on list masks (bit `c` = color
/// `c`, colors `1..=PALETTE`).
fn mask_permutations() -> Vec<Vec<u64>> {
    fn perms(prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == PALETTE {
            out.push(prefix.clone());
            return;
        }
        for c in 0..PALETTE {
            if !prefix.contains(&c) {
                prefix.push(c);
                perms(prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    perms(&mut Vec::new(), &mut out);
    out.into_iter()
        .map(|p| {
            (0..1u64 << (PALETTE + 1))
                .map(|m| {
                    (0..PALETTE)
                        .filter(|&c| m >> (c + 1) & 1 == 1)
                        .fold(0, |acc, c| acc | 1 << (p[c] + 1))
                })
                .collect()
        })
        .collect()
}

fn subsets_of_size(size: usize) -> Vec<u64> {
    (0..1u64 << PALETTE)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| m << 1)
        .collect()
}

/// Enumerates one representative per color-permutation orbit of the list
/// tuples with the given sizes: the tuple that is lexicographically
/// smallest (comparing masks as integers) among its images.
pub struct CanonicalLists {
    choices: Vec<Vec<u64>>,
    perms: Vec<Vec<u64>>,
}

impl CanonicalLists {
    pub fn new(sizes: &[usize]) -> Self {
        assert!(sizes.iter().all(|&s| (1..=PALETTE).contains(&s)));
        CanonicalLists {
            choices: sizes.iter().map(|&s| subsets_of_size(s)).collect(),
            perms: mask_permutations(),
        }
    }

    /// Calls `visit` on every canonical tuple whose first entries are
    /// `prefix` (which must itself be a canonical prefix).
    fn walk(&self, tuple: &mut Vec<u64>, tied: &[usize], visit: &mut dyn FnMut(&[u64])) {
        let i = tuple.len();
        if i == self.choices.len() {
            visit(tuple);
            return;
        }
        let mut next_tied = Vec::with_capacity(tied.len());
        'choice: for &m in &self.choices[i] {
            next_tied.clear();
            for &p in tied {
                let image = self.perms[p][m as usize];
                if image < m {
                    continue 'choice;
                }
                if image == m {
                    next_tied.push(p);
                }
            }
            tuple.push(m);
            self.walk(tuple, &next_tied, visit);
            tuple.pop();
        }
    }

    /// Canonical prefixes of length `depth` with the permutations that fix
    /// them, used to split the enumeration across threads.
    fn prefixes(&self, depth: usize) -> Vec<(Vec<u64>, Vec<usize>)> {
        let mut level = vec![(Vec::new(), (0..self.perms.len()).collect::<Vec<_>>())];
        for i in 0..depth.min(self.choices.len()) {
            let mut next = Vec::new();
            for (prefix, tied) in &level {
                'choice: for &m in &self.choices[i] {
                    let mut t = Vec::new();
                    for &p in tied {
                        let image = self.perms[p][m as usize];
                        if image < m {
                            continue 'choice;
                        }
                        if image == m {
                            t.push(p);
                        }
                    }
                    let mut pre = prefix.clone();
                    pre.push(m);
                    next.push((pre, t));
                }
            }
            level = next;
        }
        level
    }

    /// Every canonical tuple, in lexicographic order.
    pub fn for_each(&self, mut visit: impl FnMut(&[u64])) {
        let all: Vec<usize> = (0..self.perms.len()).collect();
        self.walk(&mut Vec::new(), &all, &mut visit);
    }

    pub fn count(&self) -> u64 {
        let mut n = 0;
        self.for_each(|_| n += 1);
        n
    }
}

fn format_lists(g: &Gadget, masks: &[u64]) -> String {
    masks
        .iter()
        .enumerate()
        .filter(|&(_, &m)| m != FULL)
        .map(|(v, &m)| {
            let colors: Vec<String> = (1..=PALETTE)
                .filter(|&c| m >> c & 1 == 1)
                .map(|c| c.to_string())
                .collect();
            format!("{}={{{}}}", g.labels[v], colors.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Most failing assignments kept as witnesses in a report.
const MAX_WITNESSES: usize = 20;

/// Checks that `g` is L-colorable for every assignment where vertex `v` gets
/// a list of exactly `sizes[v]` colors from `{1..5}` (size 5 is the whole
/// palette). One assignment per color-permutation class is solved.
pub fn verify_list_lemma(check: &str, g: &Gadget, sizes: &[usize]) -> VerificationReport {
    assert_eq!(sizes.len(), g.graph.n());
    let start = Instant::now();
    let free: Vec<usize> = (0..sizes.len()).filter(|&v| sizes[v] < PALETTE).collect();
    let free_sizes: Vec<usize> = free.iter().map(|&v| sizes[v]).collect();
    let enumerator = CanonicalLists::new(&free_sizes);
    let prefixes = enumerator.prefixes(2);
    let results: Vec<(u64, Vec<String>)> = prefixes
        .par_iter()
        .map_init(
            || ListColorer::new(&g.graph),
            |solver, (prefix, tied)| {
                let mut masks = vec![FULL; sizes.len()];
                let mut count = 0u64;
                let mut failures = Vec::new();
                enumerator.walk(&mut prefix.clone(), tied, &mut |tuple| {
                    count += 1;
                    for (&v, &m) in free.iter().zip(tuple) {
                        masks[v] = m;
                    }
                    if !solver.solve(&masks) && failures.len() < MAX_WITNESSES {
                        failures.push(format_lists(g, &masks));
                    }
                });
                (count, failures)
            },
        )
        .collect();
    let mut instances = 0;
    let mut failures = Vec::new();
    for (c, f) in results {
        instances += c;
        failures.extend(f);
    }
    failures.truncate(MAX_WITNESSES);
    VerificationReport {
        check: check.to_string(),
        instances,
        failures,
        elapsed: start.elapsed(),
    }
}

/// List sizes of the wheel lemma: 2 on `a..e`, 3 on `f`, full on the hub.
pub const WHEEL_SIZES: [usize; 7] = [2, 2, 2, 2, 2, 3, 5];

/// List sizes of the triangulation lemma: 3 on `a, d, g`, 2 on the other
/// rim vertices, full on `x, y, z`.
pub const TRIANGULATION_SIZES: [usize; 12] = [3, 2, 2, 3, 2, 2, 3, 2, 2, 5, 5, 5];

/// Every list assignment of the wheel sizes admits a proper L-coloring of
/// the 6-wheel.
pub fn verify_lemma_wheel() -> VerificationReport {
    verify_list_lemma("wheel", &wheel6(), &WHEEL_SIZES)
}

/// Every list assignment of the triangulation sizes admits a proper
/// L-coloring of the 12-vertex triangulation.
pub fn verify_lemma_triangulation() -> VerificationReport {
    verify_list_lemma("triangulation", &triangulation12(), &TRIANGULATION_SIZES)
}

// ---------------------------------------------------------------------------
// exact-square gadget lemmas

fn square(g: &Graph) -> Graph {
    g.exact_power(2).expect("p = 2")
}

/// Exact-square 3-colorability of `fig7` with `x` and `y` forced equal.
pub fn fig7_with_equal_xy() -> Option<Coloring> {
    let g = fig7();
    let mut pre = Coloring::empty(g.graph.n(), 3);
    pre.set(g.v("x"), 1).unwrap();
    pre.set(g.v("y"), 1).unwrap();
    is_k_colorable(&square(&g.graph), 3, Some(&pre)).expect("precoloring is conflict-free")
}

/// `fig6a`, `fig6b`, `fig8`, `fig9` have no exact-square 3-coloring; `fig7`
/// has one, but none with `c(x) = c(y)`.
pub fn verify_gadget_lemmas() -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    for id in [
        GadgetId::Fig6a,
        GadgetId::Fig6b,
        GadgetId::Fig8,
        GadgetId::Fig9,
    ] {
        if let Some(c) = is_k_colorable(&square(&build(id)), 3, None).unwrap() {
            failures.push(format!("{id} has an exact-square 3-coloring: {c}"));
        }
    }
    if is_k_colorable(&square(&fig7().graph), 3, None)
        .unwrap()
        .is_none()
    {
        failures.push("fig7 has no exact-square 3-coloring".into());
    }
    if let Some(c) = fig7_with_equal_xy() {
        failures.push(format!(
            "fig7 has an exact-square 3-coloring with c(x) = c(y): {c}"
        ));
    }
    VerificationReport {
        check: "gadgets".into(),
        instances: 6,
        failures,
        elapsed: start.elapsed(),
    }
}
