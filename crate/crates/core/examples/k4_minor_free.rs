// Random subcubic graphs without a K4 minor: their exact squares never
// needed more than four colors in this sample.
//
// ```bash
// cargo run --release --example k4_minor_free
// ```

use rand::rngs::StdRng;
use rand::SeedableRng;

use exact_square::coloring::exact_square_chromatic;
use exact_square::generate::random_series_parallel_subcubic;
use exact_square::planarity::is_k4_minor_free;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = StdRng::seed_from_u64(7);
    let mut histogram = [0usize; 6];
    for i in 0..60 {
        let g = random_series_parallel_subcubic(6 + i % 20, &mut rng);
        assert!(is_k4_minor_free(&g));
        let (chi, _) = exact_square_chromatic(&g);
        histogram[chi.min(5)] += 1;
    }
    for (chi, count) in histogram.iter().enumerate().filter(|(_, &c)| c > 0) {
        println!("chi = {chi}: {count} graphs");
    }
    assert_eq!(histogram[5], 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
