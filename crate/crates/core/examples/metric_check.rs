// Differentiate the embedding numerically and compare the pulled-back
// metric with ds² + a² dθ².

use revsurf::embedding::EmbeddingMap;
use revsurf::profile::preset;

pub fn run() -> revsurf::Result<()> {
    for name in ["sphere", "dumbbell:0.25", "bump:-0.5"] {
        let map = EmbeddingMap::new(preset(name)?, 0.0)?;
        let r = map.verify_induced_metric(64, 32, 1e-5)?;
        println!(
            "{name:<14} |E-1| {:.2e}  |F| {:.2e}  |G-a^2| {:.2e}  ({} points, {} in guard bands)",
            r.max_e_error, r.max_f_error, r.max_g_error, r.evaluated, r.skipped
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
