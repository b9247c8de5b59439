//! Compare indexes over random dictionaries with a brute-force oracle.
//!
//!     cargo run --release --example oracle_check -- 500

use circdict::corpus::{self, TrialShape};
use circdict::oracle::{check_index, Report};
use circdict::{BuildOptions, CdmIndex};

fn main() {
    let trials: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(200);
    let shape = TrialShape::default();
    let mut rng = corpus::rng(42);
    let mut report = Report::default();
    for trial in 0..trials {
        let dict = corpus::random_dictionary(&mut rng, &shape);
        let s = 1 + trial % 4;
        let index = CdmIndex::build(&dict, BuildOptions::with_samples(s, s));
        let patterns: Vec<Vec<u8>> = (0..4)
            .map(|_| corpus::random_pattern(&mut rng, &dict, shape.max_m))
            .collect();
        report.merge(check_index(&dict, &index, &patterns));
    }
    println!(
        "{trials} dictionaries, {} checks, {} failures",
        report.checks,
        report.failures.len()
    );
    for f in report.failures.iter().take(10) {
        println!("  {f}");
    }
    if !report.ok() {
        std::process::exit(1);
    }
}
