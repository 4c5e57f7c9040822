//! Every example under `examples/` runs to completion.

macro_rules! example {
    ($module:ident, $test:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(exact_power_example, exact_power_runs, "exact_power.rs");
example!(
    coloring_modes_example,
    coloring_modes_runs,
    "coloring_modes.rs"
);
example!(
    extremal_gadgets_example,
    extremal_gadgets_runs,
    "extremal_gadgets.rs"
);
example!(drums_example, drums_runs, "drums.rs");
example!(
    fullerene_batch_example,
    fullerene_batch_runs,
    "fullerene_batch.rs"
);
example!(
    list_coloring_example,
    list_coloring_runs,
    "list_coloring.rs"
);
example!(planarity_example, planarity_runs, "planarity.rs");
example!(formats_example, formats_runs, "formats.rs");
example!(
    k4_minor_free_example,
    k4_minor_free_runs,
    "k4_minor_free.rs"
);
