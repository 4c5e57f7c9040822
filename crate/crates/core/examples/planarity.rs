// Planarity with an embedding, faces of a rotation system, outerplanarity
// and K4-minor detection.
//
// ```bash
// cargo run --example planarity
// ```

use exact_square::gadgets::{build, GadgetId};
use exact_square::planarity::{is_k4_minor_free, is_outerplanar, is_planar};
use exact_square::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let theta = build(GadgetId::Theta);
    let e = is_planar(&theta).expect("theta is planar");
    println!("theta faces: {:?}", e.faces().census());
    for v in 0..theta.n() {
        println!("  rotation at {v}: {:?}", e.rotation(v));
    }

    let named = [
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("petersen", build(GadgetId::Petersen)),
        ("theta", theta.clone()),
        ("C8", Graph::cycle(8)),
    ];
    println!("{:<10} planar outerplanar K4-minor-free", "graph");
    for (name, g) in &named {
        println!(
            "{name:<10} {:<6} {:<11} {}",
            is_planar(g).is_some(),
            is_outerplanar(g),
            is_k4_minor_free(g)
        );
    }
    assert!(is_planar(&named[1].1).is_none());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
