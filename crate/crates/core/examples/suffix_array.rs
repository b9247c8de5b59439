//! Sampled suffix array: space against the number of `prev` steps per lookup.

use circdict::corpus;
use circdict::{BuildOptions, CdmIndex};

fn main() {
    let dict = corpus::uniform_dictionary(7, 50_000, 50, 4);
    println!("n={} d={}", dict.n(), dict.d());
    for s in [1, 2, 4, 8, 16] {
        let index = CdmIndex::build(&dict, BuildOptions::with_samples(s, 16));
        let sa = index.suffix_array();
        let slots = index.n_star();
        let (mut total, mut worst) = (0, 0);
        for t in 1..=slots {
            let (_, steps) = sa.lookup_counted(t, index.ebwt());
            total += steps;
            worst = worst.max(steps);
        }
        println!(
            "s={s:>2}: {:>7} samples, {:>8} bytes, mean steps {:.2}, worst {worst}",
            sa.samples().len(),
            sa.size_in_bytes(),
            total as f64 / slots as f64
        );
    }
}
