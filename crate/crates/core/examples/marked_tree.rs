//! Suffix tree topology, marked nodes and nearest marked ancestors.

use circdict::{BuildOptions, CdmIndex, Dictionary};

fn main() {
    let dict = Dictionary::new(&["abcabc", "bcabc", "cab"]).unwrap();
    let index = CdmIndex::build(&dict, BuildOptions::default());
    let tree = index.tree();

    println!("Z  = {}", tree.z().bits().to_bit_string());
    println!("B7 = {}", tree.b7().to_bit_string());
    println!("B8 = {}", tree.b8().to_bit_string());
    println!("Z* = {}", tree.z_star().bits().to_bit_string());
    for v in tree.nodes() {
        let (l, r) = tree.tointer(v);
        let kind = if tree.is_leaf(v) { "leaf" } else { "internal" };
        let depth = if l == r {
            "-".to_string()
        } else {
            index.lambda(l, r).to_string()
        };
        let nma = tree.tointer(tree.fromaux(tree.nma(v)));
        println!(
            "node {v:>2} [{l},{r}] {kind:<8} lambda={depth:<2} marked={:<5} nearest marked ancestor {nma:?}",
            tree.is_marked(v)
        );
    }
}
