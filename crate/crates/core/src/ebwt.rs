//! Extended BWT of a circular dictionary and backward search on it.
//!
//! Text positions are grouped by the infinite string `T_k^ω` and the groups
//! `D_1 < … < D_{n'}` are sorted lexicographically. `BWT[j]` is the symbol
//! preceding the circular suffixes in `D_j`, and `B2` marks the first class of
//! every run of equal leading symbol. Backward search moves along the edges
//! of the cycle graph whose node `j` has a single out-edge labelled by the
//! first symbol of `D_j`.

use crate::dictionary::Dictionary;
use crate::error::{Error, Result};
use crate::succinct::codec::{Reader, Writer};
use crate::succinct::{BitBuilder, BitVector, WaveletMatrix};

/// Classes of text positions with equal `T_k^ω`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPartition {
    class_of: Vec<u32>,
    offsets: Vec<usize>,
    members: Vec<u32>,
}

impl OmegaPartition {
    /// Number of classes `n'`.
    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorted positions of class `j`.
    pub fn class(&self, j: usize) -> &[u32] {
        &self.members[self.offsets[j - 1]..self.offsets[j]]
    }

    /// Class holding text position `k`.
    pub fn class_of(&self, k: usize) -> usize {
        self.class_of[k - 1] as usize
    }

    /// Smallest position of class `j`.
    pub fn representative(&self, j: usize) -> usize {
        self.members[self.offsets[j - 1]] as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        (1..=self.len()).map(move |j| self.class(j))
    }
}

/// Sorts circular suffixes by `T_k^ω` with prefix doubling over the cyclic
/// successor map, stopping once a round no longer splits any class.
pub fn build_partition(dict: &Dictionary) -> OmegaPartition {
    let n = dict.n();
    let mut succ = vec![0u32; n];
    for h in 1..=dict.d() {
        let s = dict.string_start(h) - 1;
        let len = dict.string_len(h);
        for g in 0..len {
            succ[s + g] = (s + (g + 1) % len) as u32;
        }
    }
    let mut rank: Vec<u32> = dict.text().iter().map(|&c| c as u32).collect();
    let mut classes = dict.sigma();
    let mut order: Vec<u32> = (0..n as u32).collect();
    let mut jump = succ;
    let mut keys = vec![0u64; n];
    loop {
        for k in 0..n {
            keys[k] = (rank[k] as u64) << 32 | rank[jump[k] as usize] as u64;
        }
        order.sort_unstable_by_key(|&k| keys[k as usize]);
        let mut next = vec![0u32; n];
        let mut r = 0u32;
        for w in 0..n {
            if w > 0 && keys[order[w] as usize] != keys[order[w - 1] as usize] {
                r += 1;
            }
            next[order[w] as usize] = r;
        }
        let count = r as usize + 1;
        rank = next;
        if count == classes {
            break;
        }
        classes = count;
        jump = jump.iter().map(|&x| jump[x as usize]).collect();
    }
    // members sorted by (class, position)
    let mut offsets = vec![0usize; classes + 1];
    for &r in &rank {
        offsets[r as usize + 1] += 1;
    }
    for j in 0..classes {
        offsets[j + 1] += offsets[j];
    }
    let mut fill = offsets.clone();
    let mut members = vec![0u32; n];
    for k in 0..n {
        let r = rank[k] as usize;
        members[fill[r]] = k as u32 + 1;
        fill[r] += 1;
    }
    OmegaPartition {
        class_of: rank.into_iter().map(|r| r + 1).collect(),
        offsets,
        members,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ebwt {
    bwt: WaveletMatrix,
    b2: BitVector,
}

impl Ebwt {
    pub fn new(dict: &Dictionary, part: &OmegaPartition) -> Self {
        let pm = dict.position_maps();
        let n_prime = part.len();
        let mut bwt = Vec::with_capacity(n_prime);
        let mut b2 = BitBuilder::with_capacity(n_prime);
        let mut last = None;
        for j in 1..=n_prime {
            let k = part.representative(j);
            bwt.push(dict.symbol(pm.pred(k)) as u32);
            let first = dict.symbol(k);
            b2.push(last != Some(first));
            last = Some(first);
        }
        Ebwt {
            bwt: WaveletMatrix::new(&bwt, dict.sigma()),
            b2: b2.build(),
        }
    }

    pub fn from_parts(bwt: WaveletMatrix, b2: BitVector) -> Result<Self> {
        if bwt.len() != b2.len() || b2.count_ones() != bwt.sigma() || bwt.is_empty() || !b2.get(1) {
            return Err(Error::corrupt("BWT and run bitvector disagree"));
        }
        Ok(Ebwt { bwt, b2 })
    }

    /// Number of classes `n'`.
    pub fn len(&self) -> usize {
        self.bwt.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bwt.is_empty()
    }

    pub fn sigma(&self) -> usize {
        self.bwt.sigma()
    }

    pub fn bwt(&self) -> &WaveletMatrix {
        &self.bwt
    }

    pub fn b2(&self) -> &BitVector {
        &self.b2
    }

    /// `BWT[j]`.
    pub fn bwt_at(&self, j: usize) -> u32 {
        self.bwt.access(j)
    }

    /// First symbol of `S_j`, i.e. `BWT*[j]`.
    pub fn first_symbol(&self, j: usize) -> u32 {
        self.b2.rank1(j) as u32 - 1
    }

    /// Classes whose out-edge labelled `c` enters `[l, r]`, or `None` if there are none.
    /// Symbols at or above `σ` never match.
    pub fn bws(&self, l: usize, r: usize, c: u32) -> Option<(usize, usize)> {
        debug_assert!(1 <= l && l <= r && r <= self.len());
        if c as usize >= self.sigma() {
            return None;
        }
        let a = self.bwt.rank(c, l - 1);
        let b = self.bwt.rank(c, r);
        if a == b {
            return None;
        }
        let base = self.b2.select1(c as usize + 1);
        Some((base + a, base + b - 1))
    }

    pub fn try_bws(&self, l: usize, r: usize, c: u32) -> Result<Option<(usize, usize)>> {
        if l == 0 || l > r || r > self.len() {
            return Err(Error::OutOfRange {
                what: "class interval end",
                index: if l == 0 || l > r { l } else { r },
                bound: self.len(),
            });
        }
        Ok(self.bws(l, r, c))
    }

    /// Source of the unique edge entering class `j`.
    pub fn prev(&self, j: usize) -> usize {
        let c = self.bwt.access(j);
        self.b2.select1(c as usize + 1) + self.bwt.rank(c, j) - 1
    }

    /// Target of the out-edge of class `j`.
    pub fn follow(&self, j: usize) -> usize {
        let q = self.b2.rank1(j);
        let offset = j - self.b2.select1(q) + 1;
        self.bwt.select(q as u32 - 1, offset)
    }

    pub fn size_in_bytes(&self) -> usize {
        self.bwt.size_in_bytes() + self.b2.size_in_bytes()
    }

    pub fn write(&self, w: &mut Writer) {
        self.bwt.write(w);
        self.b2.write(w);
    }

    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let bwt = WaveletMatrix::read(r)?;
        let b2 = BitVector::read(r)?;
        Self::from_parts(bwt, b2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn running() -> (Dictionary, OmegaPartition, Ebwt) {
        let t = Dictionary::new(&["abcabc", "bcabc", "cab"]).unwrap();
        let p = build_partition(&t);
        let e = Ebwt::new(&t, &p);
        (t, p, e)
    }

    #[test]
    fn running_example_partition() {
        let (_, p, _) = running();
        let expect: [&[u32]; 8] = [
            &[1, 4, 13],
            &[9],
            &[2, 5, 14],
            &[7],
            &[10],
            &[3, 6, 12],
            &[8],
            &[11],
        ];
        assert_eq!(p.len(), 8);
        for (j, e) in expect.iter().enumerate() {
            assert_eq!(p.class(j + 1), *e);
        }
        assert_eq!(p.class_of(12), 6);
    }

    #[test]
    fn running_example_columns() {
        let (t, _, e) = running();
        let bwt: Vec<u8> = e.bwt().iter().map(|c| t.alphabet().byte_of(c)).collect();
        assert_eq!(bwt, b"ccacabbb");
        let star: Vec<u8> = (1..=8)
            .map(|j| t.alphabet().byte_of(e.first_symbol(j)))
            .collect();
        assert_eq!(star, b"aabbbccc");
        assert_eq!(e.b2().to_bit_string(), "10100100");
    }

    #[test]
    fn running_example_navigation() {
        let (_, _, e) = running();
        let (a, b, c) = (0, 1, 2);
        assert_eq!(e.bws(1, 1, a), None);
        assert_eq!(e.bws(6, 8, b), Some((3, 5)));
        assert_eq!(e.bws(1, 8, c), Some((6, 8)));
        assert_eq!(e.bws(1, 8, 3), None);
        assert_eq!(e.prev(1), 6);
        assert_eq!(e.prev(2), 7);
        assert_eq!(e.follow(6), 1);
        assert_eq!(e.follow(3), 6);
        let edges = [
            (1, 3),
            (3, 6),
            (6, 1),
            (2, 5),
            (5, 8),
            (8, 4),
            (4, 7),
            (7, 2),
        ];
        for (from, to) in edges {
            assert_eq!(e.follow(from), to);
            assert_eq!(e.prev(to), from);
        }
        assert!(e.try_bws(0, 3, a).is_err());
        assert!(e.try_bws(2, 9, a).is_err());
    }

    #[test]
    fn equal_strings_share_classes() {
        let t = Dictionary::new(&["ab", "ab"]).unwrap();
        let p = build_partition(&t);
        assert_eq!(p.len(), 2);
        assert_eq!(p.class(1), &[1, 3]);
        assert_eq!(p.class(2), &[2, 4]);
    }

    fn omega_key(t: &Dictionary, k: usize) -> Vec<u8> {
        let s = t.circular_suffix_symbols(k);
        s.iter().copied().cycle().take(2 * t.n()).collect()
    }

    proptest! {
        #[test]
        fn partition_matches_expansion_sort(strings in proptest::collection::vec(proptest::collection::vec(0u8..3, 1..8), 1..6)) {
            let t = Dictionary::new(&strings).unwrap();
            let p = build_partition(&t);
            let mut keys: Vec<(Vec<u8>, usize)> = (1..=t.n()).map(|k| (omega_key(&t, k), k)).collect();
            keys.sort();
            let mut groups: Vec<Vec<u32>> = Vec::new();
            for w in 0..keys.len() {
                if w == 0 || keys[w].0 != keys[w - 1].0 {
                    groups.push(Vec::new());
                }
                groups.last_mut().unwrap().push(keys[w].1 as u32);
            }
            prop_assert_eq!(p.len(), groups.len());
            for (j, g) in groups.iter().enumerate() {
                prop_assert_eq!(p.class(j + 1), &g[..]);
            }
            let e = Ebwt::new(&t, &p);
            for j in 1..=p.len() {
                prop_assert_eq!(e.prev(e.follow(j)), j);
                let k = p.representative(j) as usize;
                prop_assert_eq!(e.follow(j), p.class_of(t.position_maps().phi_inv(t.phi(k).0, t.phi(k).1 % t.string_len(t.phi(k).0) + 1)));
            }
        }
    }
}
