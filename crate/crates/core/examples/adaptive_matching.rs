//! Queries with heavy output: the adaptive matcher decodes SA and LCP once
//! the reported work reaches `n` and answers the rest from plain arrays.

use std::time::Instant;

use circdict::{BuildOptions, CdmIndex, Dictionary};

fn main() {
    let strings: Vec<String> = (1..=40).map(|k| "a".repeat(k)).collect();
    let dict = Dictionary::new(&strings).unwrap();
    let index = CdmIndex::build(&dict, BuildOptions::default());
    let pattern = vec![b'a'; 2_000];

    let start = Instant::now();
    let (plain, st) = index.cdm_with_stats(&pattern);
    println!(
        "compressed: {} occurrences in {:.2?}",
        plain.len(),
        start.elapsed()
    );
    println!(
        "  marked climbs: {}",
        st.marked_climbs.iter().sum::<usize>()
    );

    let start = Instant::now();
    let (adaptive, st) = index.cdm_adaptive_with_stats(&pattern);
    println!(
        "adaptive:   {} occurrences in {:.2?}",
        adaptive.len(),
        start.elapsed()
    );
    println!(
        "  switched to plain arrays at i={:?} (n={})",
        st.switched_at,
        index.n()
    );
    assert_eq!(plain, adaptive);
}
