//! Build an index over a small dictionary and report circular occurrences.
//!
//!     cargo run --example build_and_query -- abcbca

use circdict::{BuildOptions, CdmIndex, Dictionary};

fn main() {
    let pattern = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "abcbca".to_string());
    let dict = Dictionary::new(&["abcabc", "bcabc", "cab"]).expect("nonempty strings");
    let index = CdmIndex::build(&dict, BuildOptions::default());

    println!(
        "n={} d={} sigma={} classes={} index bytes={}",
        index.n(),
        index.d(),
        index.sigma(),
        index.n_prime(),
        index.size_in_bytes()
    );
    let hits = index.cdm(pattern.as_bytes());
    println!("{} occurrences in {pattern}", hits.len());
    for o in hits {
        let rotation = String::from_utf8_lossy(&dict.circular_suffix(o.k)).into_owned();
        println!(
            "  P[{}..] starts with rotation {rotation} of T{} (global position {}, offset {})",
            o.i, o.string, o.k, o.offset
        );
    }
}
