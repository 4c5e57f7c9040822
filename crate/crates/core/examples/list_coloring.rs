// List coloring from {1..5} and the exhaustive checks over all list
// assignments up to permutations of the palette.
//
// ```bash
// cargo run --release --example list_coloring
// ```

use exact_square::coloring::{list_colorable, ListAssignment};
use exact_square::gadgets::{
    gadget, verify_lemma_wheel, verify_list_lemma, CanonicalLists, GadgetId, WHEEL_SIZES,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w = gadget(GadgetId::Wheel6);
    // rim a..f, hub x
    let lists = ListAssignment::new(&[
        vec![1, 2],
        vec![1, 2],
        vec![1, 3],
        vec![2, 3],
        vec![1, 2],
        vec![1, 2, 3],
        vec![1, 2, 3, 4, 5],
    ])?;
    let c = list_colorable(&w.graph, &lists)?.expect("colorable");
    println!("one L-coloring of the wheel: {c}");

    println!(
        "canonical assignments for sizes {:?}: {}",
        WHEEL_SIZES,
        CanonicalLists::new(&WHEEL_SIZES).count()
    );
    let report = verify_lemma_wheel();
    println!("{}", report.summary(true));
    assert!(report.passed());

    // Shrinking the last rim list to two colors breaks the guarantee.
    let shrunk = verify_list_lemma("wheel, all rim lists of size 2", &w, &[2, 2, 2, 2, 2, 2, 5]);
    println!("{}", shrunk.summary(false));
    if let Some(witness) = shrunk.failures.first() {
        println!("  e.g. {witness}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
