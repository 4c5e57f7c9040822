// Audit a batch of plane graphs as fullerenes and check an exact-square
// color bound on each, as the `verify-fullerenes` subcommand does.
//
// ```bash
// cargo run --release --example fullerene_batch
// ```

use exact_square::formats::PlanarCodeEntry;
use exact_square::fullerene::{is_fullerene, make_drum, verify_batch};
use exact_square::gadgets::{embedding, GadgetId};
use exact_square::report::BatchSummary;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut batch: Vec<PlanarCodeEntry> = (1..=3)
        .map(|k| make_drum(k).map(|e| e.to_planar_code()))
        .collect::<Result<_, _>>()?;
    for id in [GadgetId::Dodecahedron, GadgetId::C60, GadgetId::Wheel6] {
        batch.push(embedding(id).expect("planar").to_planar_code());
    }

    let c60 = embedding(GadgetId::C60).expect("planar");
    let audit = is_fullerene(&c60);
    println!(
        "C60: cubic={} faces={:?} girth={:?} fullerene={}",
        audit.is_cubic, audit.face_census, audit.girth, audit.verdict
    );

    let max_chi = 4;
    let results = verify_batch(&batch, max_chi, 2);
    for r in &results {
        println!("{}", serde_json::to_string(r)?);
    }
    let summary = BatchSummary::of(&results, max_chi);
    println!("{}", serde_json::to_string(&summary)?);
    // the wheel is not a fullerene, so the batch as a whole fails
    assert_eq!(summary.failed, 1);
    assert_eq!(summary.drums, 3);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
