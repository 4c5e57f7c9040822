// Build k-drums, recognise them from the embedding alone, and 3-color their
// exact squares constructively.
//
// ```bash
// cargo run --example drums
// ```

use exact_square::coloring::{validate_coloring, Mode};
use exact_square::fullerene::{classify_3_colorability, drum_3_coloring, is_drum, make_drum};
use exact_square::gadgets::{embedding, GadgetId};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for k in 1..=4 {
        let e = make_drum(k)?;
        let cert = is_drum(&e)?.expect("a drum is recognised");
        let c = drum_3_coloring(&e, &cert)?;
        assert!(validate_coloring(e.graph(), &c, Mode::ExactSquare)?.is_valid());
        println!(
            "drum k={k}: n={}, hexagons f={} f'={}, 3-coloring {}",
            e.graph().n(),
            cert.f,
            cert.f_prime,
            c
        );
    }

    // The dodecahedron is a fullerene but not a drum; the solver agrees
    // that its exact square needs a fourth color.
    let d = embedding(GadgetId::Dodecahedron).expect("planar");
    let cls = classify_3_colorability(&d)?;
    println!(
        "dodecahedron: drum={} 3-colorable={}",
        cls.is_drum, cls.solver_says_3
    );
    assert!(cls.consistent);

    assert!(make_drum(0).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
