//! Backward search over the extended BWT, and the longest prefix match
//! `P[i..t_i]` with its class interval for every start position.

use circdict::{BuildOptions, CdmIndex, Dictionary};

fn main() {
    let dict = Dictionary::new(&["abcabc", "bcabc", "cab"]).unwrap();
    let index = CdmIndex::build(&dict, BuildOptions::default());
    let ebwt = index.ebwt();
    let sym = |c: u32| index.alphabet().byte_of(c) as char;

    println!("BWT  = {}", ebwt.bwt().iter().map(sym).collect::<String>());
    println!(
        "BWT* = {}",
        (1..=index.n_prime())
            .map(|j| sym(ebwt.first_symbol(j)))
            .collect::<String>()
    );

    // Extend "bca" leftwards one symbol at a time.
    let code = index.encode(b"bca");
    let (mut l, mut r) = (1, index.n_prime());
    for (step, &c) in code.iter().rev().enumerate() {
        match ebwt.bws(l, r, c) {
            Some((nl, nr)) => {
                (l, r) = (nl, nr);
                println!("after {} symbol(s): classes [{l}, {r}]", step + 1);
            }
            None => {
                println!("no class starts with the pattern");
                return;
            }
        }
    }

    let pattern = b"abcbca";
    let pm = index.prefix_matches(pattern);
    println!("\nprefix matches of {}:", String::from_utf8_lossy(pattern));
    for i in 0..pm.len() {
        println!(
            "  i={} t={} classes [{}, {}]",
            i + 1,
            pm.t[i],
            pm.l[i],
            pm.r[i]
        );
    }
    println!(
        "quadruple steps: {} (bound {})",
        pm.steps,
        2 * pattern.len() + 1
    );
}
