//! Sampled LCP array and string depths of class intervals.

use circdict::corpus;
use circdict::{BuildOptions, CdmIndex, Dictionary};

fn main() {
    let dict = Dictionary::new(&["abcabc", "bcabc", "cab"]).unwrap();
    let index = CdmIndex::build(&dict, BuildOptions::with_samples(2, 2));
    let lcp = index.lcp();

    println!("LCP  = {:?}", &index.materialize_lcp()[1..]);
    println!("B6   = {}", lcp.b6().to_bit_string());
    println!("LCP* = {:?}", lcp.samples());
    for j in 2..=index.n_prime() {
        let (value, steps) = lcp.lookup_counted(j, index.ebwt());
        println!("LCP[{j}] = {value} after {steps} step(s)");
    }
    for (l, r) in [(1, 3), (4, 5), (6, 8), (1, 8)] {
        println!("lambda[{l}, {r}] = {}", index.lambda(l, r));
    }

    let dict = corpus::uniform_dictionary(11, 200_000, 64, 4);
    for s in [2, 4, 8, 16] {
        let index = CdmIndex::build(&dict, BuildOptions::with_samples(16, s));
        let lcp = index.lcp();
        let worst = (2..=index.n_prime())
            .map(|j| lcp.lookup_counted(j, index.ebwt()).1)
            .max()
            .unwrap_or(0);
        println!(
            "n'={} s={s:>2}: {:>6} samples (n'/s = {:>6}), worst walk {worst} (bound {})",
            index.n_prime(),
            lcp.samples().len(),
            index.n_prime() / s,
            2 * s - 2
        );
    }
}
