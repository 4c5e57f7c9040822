// graph6 and planar_code round trips.
//
// ```bash
// cargo run --example formats
// ```

use exact_square::formats::{
    decode_graph6, decode_graph6_lines, decode_planar_code, encode_graph6, encode_planar_code,
};
use exact_square::fullerene::make_drum;
use exact_square::gadgets::{build, GadgetId};
use exact_square::Embedding;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = build(GadgetId::Petersen);
    let text = encode_graph6(&p);
    println!("petersen as graph6: {}", String::from_utf8_lossy(&text));
    assert_eq!(decode_graph6(&text)?, p);

    // Files may carry a header and several graphs, one per line.
    let file = b">>graph6<<Bw\nC~\n";
    let graphs = decode_graph6_lines(file)?;
    println!(
        "decoded {} graphs with {:?} edges",
        graphs.len(),
        graphs.iter().map(|g| g.m()).collect::<Vec<_>>()
    );

    // planar_code keeps the rotation system.
    let drum = make_drum(1)?;
    let bytes = encode_planar_code(&[drum.to_planar_code()])?;
    println!("1-drum as planar_code: {} bytes", bytes.len());
    let back = decode_planar_code(&bytes)?;
    let e = Embedding::from_planar_code(&back[0])?;
    assert_eq!(e.faces().census(), drum.faces().census());

    assert!(decode_graph6(b"B!").is_err());
    assert!(decode_planar_code(b"no header").is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
