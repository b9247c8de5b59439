//! The succinct building blocks on their own.

use circdict::succinct::{BalancedParens, BitVector, Rmq, WaveletMatrix};

fn main() {
    let bv = BitVector::from_str_bits("10110010111");
    println!(
        "bits {}: rank1(6)={} select1(4)={} select0(2)={}",
        bv.to_bit_string(),
        bv.rank1(6),
        bv.select1(4),
        bv.select0(2)
    );

    // c=2, a=0, b=1
    let seq = [2, 2, 0, 2, 0, 1, 1, 1];
    let wm = WaveletMatrix::new(&seq, 3);
    println!(
        "wavelet: access(4)={} rank(b, 7)={} select(c, 3)={}",
        wm.access(4),
        wm.rank(1, 7),
        wm.select(2, 3)
    );

    let bp = BalancedParens::from_str_bits("1110100111010010011101001000");
    let leaf = 3;
    println!(
        "parens: find_close(1)={} enclose({leaf})={:?} lca(3, 5)={}",
        bp.find_close(1),
        bp.enclose(leaf),
        bp.lca(3, 5)
    );

    let values = [5, 3, 7, 3, 9, 1, 4];
    let rmq = Rmq::new(&values);
    println!(
        "rmq over {values:?}: [1,4] -> {} [2,5] -> {} [1,7] -> {}",
        rmq.query(1, 4),
        rmq.query(2, 5),
        rmq.query(1, 7)
    );
    println!(
        "rmq uses {} bytes for {} values",
        rmq.size_in_bytes(),
        rmq.len()
    );
}
