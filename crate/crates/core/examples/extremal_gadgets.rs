// Clique and chromatic numbers of the exact squares of the named subcubic
// graphs.
//
// ```bash
// cargo run --release --example extremal_gadgets
// ```

use exact_square::coloring::exact_square_chromatic;
use exact_square::gadgets::{build, GadgetId};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<16} {:>3} {:>5} {:>5}", "graph", "n", "omega", "chi");
    for id in [
        GadgetId::Heawood,
        GadgetId::Triplex,
        GadgetId::Bip22,
        GadgetId::Petersen,
        GadgetId::Theta,
        GadgetId::OuterplanarFig4,
        GadgetId::Star(5),
    ] {
        let g = build(id);
        let omega = g.exact_power(2)?.max_clique().len();
        let (chi, _) = exact_square_chromatic(&g);
        assert!(omega <= chi);
        println!("{:<16} {:>3} {:>5} {:>5}", id, g.n(), omega, chi);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
