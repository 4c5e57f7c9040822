// Exact distance-p powers: `u ~ v` iff `dist(u, v) = p` exactly.
//
// ```bash
// cargo run --example exact_power
// ```

use exact_square::gadgets::{build, GadgetId};
use exact_square::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Path 0-1-2-3-4: the exact square joins vertices two steps apart.
    let path = Graph::path(5);
    let sq = path.exact_power(2)?;
    println!("P5^[#2] edges: {:?}", sq.edges().collect::<Vec<_>>());
    assert_eq!(sq.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3), (2, 4)]);

    let cube = path.exact_power(3)?;
    println!("P5^[#3] edges: {:?}", cube.edges().collect::<Vec<_>>());

    // A star's leaves are pairwise at distance 2, its centre at distance 1.
    let star = Graph::star(4);
    let s2 = star.exact_power(2)?;
    println!(
        "K_1,4^[#2]: {} edges, centre degree {}",
        s2.m(),
        s2.degree(0)
    );

    // Petersen has diameter 2, so its exact square is its complement.
    let p = build(GadgetId::Petersen);
    let p2 = p.exact_power(2)?;
    assert_eq!(p2, p.complement());
    println!(
        "Petersen^[#2] = complement: {} edges, omega {}",
        p2.m(),
        p2.max_clique().len()
    );

    // Without triangles, distance 2 is the same as sharing a neighbour.
    assert_eq!(p.common_neighbor_graph(), p2);

    // p = 0 is rejected rather than silently meaning "no edges".
    assert!(path.exact_power(0).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
