//! Checks the bundled fixture files and can regenerate them
//! (`cargo test --test fixtures -- --ignored`).

mod support;

use std::collections::HashSet;

use exact_square::formats::{encode_graph6, encode_planar_code, PlanarCodeEntry};
use exact_square::fullerene::{is_drum, is_fullerene, make_drum};
use exact_square::gadgets::{self, GadgetId};
use exact_square::planarity::is_planar;
use exact_square::{Embedding, Graph};

use support::*;

/// Connected graphs on n = 1..8 vertices up to isomorphism.
const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

fn fullerene_corpus() -> Vec<PlanarCodeEntry> {
    let mut out: Vec<PlanarCodeEntry> = (1..=6)
        .map(|k| make_drum(k).unwrap().to_planar_code())
        .collect();
    out.push(
        gadgets::embedding(GadgetId::Dodecahedron)
            .unwrap()
            .to_planar_code(),
    );
    out.push(gadgets::embedding(GadgetId::C60).unwrap().to_planar_code());
    out
}

fn cube() -> Graph {
    let mut e = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ 1 << b;
            if u < v {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &e).unwrap()
}

#[test]
#[ignore = "rewrites tests/fixtures"]
fn regenerate_fixtures() {
    let mut text = Vec::new();
    for level in connected_graphs_up_to(8) {
        for rows in level {
            text.extend(encode_graph6(&graph_from_rows(&rows)));
            text.push(b'\n');
        }
    }
    std::fs::write(fixture_path("connected_le8.g6"), text).unwrap();
    std::fs::write(
        fixture_path("fullerenes.pc"),
        encode_planar_code(&fullerene_corpus()).unwrap(),
    )
    .unwrap();
    let cube = is_planar(&cube()).unwrap().to_planar_code();
    std::fs::write(
        fixture_path("cube.pc"),
        encode_planar_code(&[cube]).unwrap(),
    )
    .unwrap();
}

#[test]
fn connected_fixture_is_complete_and_duplicate_free() {
    let graphs = graph6_fixture("connected_le8.g6");
    let mut counts = [0usize; 8];
    let mut codes = HashSet::new();
    for g in &graphs {
        assert!(g.is_connected());
        counts[g.n() - 1] += 1;
        assert!(codes.insert((g.n(), canonical_code(&rows_from_graph(g)))));
    }
    assert_eq!(counts, CONNECTED_COUNTS);
}

#[test]
fn canonical_code_is_relabeling_invariant() {
    let c5 = rows_from_graph(&Graph::cycle(5));
    let shuffled = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
    assert_eq!(
        canonical_code(&c5),
        canonical_code(&rows_from_graph(&shuffled))
    );
    let p5 = rows_from_graph(&Graph::path(5));
    assert_ne!(canonical_code(&c5), canonical_code(&p5));
}

#[test]
fn fullerene_fixture_matches_constructions() {
    let entries = planar_code_fixture("fullerenes.pc");
    assert_eq!(entries, fullerene_corpus());
    let ns: Vec<usize> = entries.iter().map(PlanarCodeEntry::n).collect();
    assert_eq!(ns, vec![24, 36, 48, 60, 72, 84, 20, 60]);
    for (i, entry) in entries.iter().enumerate() {
        let e = Embedding::from_planar_code(entry).unwrap();
        assert!(is_fullerene(&e).verdict, "entry {i}");
        let k = is_drum(&e).unwrap().map(|c| c.k);
        assert_eq!(k, (i < 6).then_some(i + 1));
    }
}

#[test]
fn cube_fixture_is_not_a_fullerene() {
    let entries = planar_code_fixture("cube.pc");
    assert_eq!(entries.len(), 1);
    let e = Embedding::from_planar_code(&entries[0]).unwrap();
    assert_eq!(
        e.faces().census().into_iter().collect::<Vec<_>>(),
        vec![(4, 6)]
    );
    assert!(!is_fullerene(&e).verdict);
}
