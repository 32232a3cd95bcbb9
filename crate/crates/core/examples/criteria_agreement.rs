// Random trigonometric profiles: the slope, disk and latitude criteria
// always return the same verdict; the one-sided tests never contradict it.

use revsurf::corpus::random_corpus;
use revsurf::embeddability::{full_report, Criterion, Verdict, DEFAULT_GRID, DEFAULT_TOL};

pub fn run() -> revsurf::Result<()> {
    let corpus = random_corpus(42, 40)?;
    let mut embeddable = 0;
    let mut pole_obstructed = 0;
    let mut positively_curved = 0;
    for p in &corpus {
        // full_report fails loudly if any two criteria disagree
        let r = full_report(p, DEFAULT_GRID, DEFAULT_TOL)?;
        if r.is_embeddable() {
            embeddable += 1;
        }
        if r.criterion(Criterion::PoleObstruction).verdict == Verdict::NotEmbeddable {
            pole_obstructed += 1;
        }
        if r.criterion(Criterion::NonnegCurvature).verdict == Verdict::Embeddable {
            positively_curved += 1;
        }
    }
    println!("{} profiles: {embeddable} embeddable", corpus.len());
    println!("{pole_obstructed} ruled out by negative pole curvature alone");
    println!("{positively_curved} certified by K >= 0 alone");

    let first = &corpus[0];
    println!("e.g. {}", first.label().unwrap_or("?"));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
