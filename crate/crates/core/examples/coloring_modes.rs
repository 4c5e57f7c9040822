// Chromatic numbers in the three modes, with witnesses that pass the
// independent checker, and a precoloring-extension query.
//
// ```bash
// cargo run --example coloring_modes
// ```

use exact_square::coloring::{
    chromatic_in_mode, is_k_colorable, validate_coloring, Coloring, Mode,
};
use exact_square::gadgets::{build, gadget, GadgetId};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for id in [
        GadgetId::Petersen,
        GadgetId::Heawood,
        GadgetId::Theta,
        GadgetId::Dodecahedron,
    ] {
        let g = build(id);
        let mut row = format!("{id:<14}");
        for mode in [Mode::Proper, Mode::ExactSquare, Mode::Injective] {
            let (k, witness) = chromatic_in_mode(&g, mode);
            assert!(validate_coloring(&g, &witness, mode)?.is_valid());
            row.push_str(&format!(" {mode}={k}"));
        }
        println!("{row}");
    }

    // Precoloring: in this gadget x and y can never share a color when the
    // exact square is 3-colored.
    let t = gadget(GadgetId::Fig7);
    let h = t.graph.exact_power(2)?;
    let mut pre = Coloring::empty(h.n(), 3);
    pre.set(t.v("x"), 1)?;
    pre.set(t.v("y"), 1)?;
    let forced = is_k_colorable(&h, 3, Some(&pre))?;
    println!("x = y = 1 extends: {}", forced.is_some());
    assert!(forced.is_none());

    pre.set(t.v("y"), 2)?;
    let c = is_k_colorable(&h, 3, Some(&pre))?.expect("x != y extends");
    println!("x = 1, y = 2 extends to {c}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
