//! Every example under `examples/` runs to completion.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().expect(concat!(stringify!($name), " example failed"));
        }
    };
}

example!(round_sphere);
example!(parse_and_differentiate);
example!(bump_obstruction);
example!(criteria_agreement);
example!(export_mesh);
example!(sampled_profile);
example!(normalize_area);
example!(curvature_dump);
example!(gauss_bonnet);
example!(metric_check);
