//! Balanced parentheses with a range min-excess tree.
//!
//! `1` is an open parenthesis and `0` a close one. Positions are 1-based and
//! `excess(i)` is the number of opens minus closes in `Z[1..=i]`, with
//! `excess(0) = 0`. Every navigation primitive reduces to two searches:
//! the first position at or after `i` (or at or before `i`) whose excess is
//! at most a target.
//!
//! Minima are kept per 1024-bit block in a complete binary tree, about 6% of
//! the payload; in-block scans step a byte at a time through lookup tables.

use super::bitvec::BitVector;
use super::codec::{Reader, Writer};
use crate::error::{Error, Result};

const BLOCK: usize = 1024;

const fn byte_tables() -> ([i8; 256], [i8; 256]) {
    let mut total = [0i8; 256];
    let mut min_prefix = [0i8; 256];
    let mut v = 0;
    while v < 256 {
        let mut e = 0i8;
        let mut m = i8::MAX;
        let mut k = 0;
        while k < 8 {
            e += if (v >> k) & 1 == 1 { 1 } else { -1 };
            if e < m {
                m = e;
            }
            k += 1;
        }
        total[v] = e;
        min_prefix[v] = m;
        v += 1;
    }
    (total, min_prefix)
}

const TABLES: ([i8; 256], [i8; 256]) = byte_tables();
const BYTE_TOTAL: [i8; 256] = TABLES.0;
const BYTE_MIN: [i8; 256] = TABLES.1;

#[derive(Clone, Debug)]
pub struct BalancedParens {
    bits: BitVector,
    nblocks: usize,
    leaves: usize,
    tree: Vec<i32>,
}

impl PartialEq for BalancedParens {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for BalancedParens {}

impl BalancedParens {
    pub fn new(bits: BitVector) -> Self {
        let len = bits.len();
        let nblocks = len.div_ceil(BLOCK).max(1);
        let leaves = nblocks.next_power_of_two();
        let mut tree = vec![i32::MAX; 2 * leaves];
        let mut e: i32 = 0;
        for (w, &word) in bits.words().iter().enumerate() {
            let base = w * 64;
            let take = (len - base).min(64);
            for k in 0..take {
                e += if (word >> k) & 1 == 1 { 1 } else { -1 };
                let slot = &mut tree[leaves + (base + k) / BLOCK];
                if e < *slot {
                    *slot = e;
                }
            }
        }
        for x in (1..leaves).rev() {
            tree[x] = tree[2 * x].min(tree[2 * x + 1]);
        }
        BalancedParens {
            bits,
            nblocks,
            leaves,
            tree,
        }
    }

    pub fn from_str_bits(s: &str) -> Self {
        Self::new(BitVector::from_str_bits(s))
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn is_open(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    #[inline]
    pub fn excess(&self, i: usize) -> i64 {
        2 * self.bits.rank1(i) as i64 - i as i64
    }

    /// Opens in `Z[1..=i]`.
    pub fn rank_open(&self, i: usize) -> usize {
        self.bits.rank1(i)
    }

    /// Position of the `k`-th open.
    pub fn select_open(&self, k: usize) -> usize {
        self.bits.select1(k)
    }

    #[inline]
    fn byte(&self, q: usize) -> usize {
        ((self.bits.words()[q / 8] >> (8 * (q % 8))) & 0xFF) as usize
    }

    #[inline]
    fn step(&self, j: usize) -> i64 {
        if self.bits.get(j) {
            1
        } else {
            -1
        }
    }

    /// Smallest `j` in `from..=to` with `excess(j) <= target`.
    fn scan_fwd(&self, from: usize, to: usize, target: i64) -> Option<usize> {
        let mut e = self.excess(from - 1);
        let mut j = from;
        while j <= to {
            if (j - 1) % 8 == 0 && j + 7 <= to {
                let b = self.byte((j - 1) / 8);
                if e + BYTE_MIN[b] as i64 > target {
                    e += BYTE_TOTAL[b] as i64;
                    j += 8;
                    continue;
                }
            }
            e += self.step(j);
            if e <= target {
                return Some(j);
            }
            j += 1;
        }
        None
    }

    /// Largest `j` in `lo..=from` with `excess(j) <= target`, `lo >= 1`.
    fn scan_bwd(&self, from: usize, lo: usize, target: i64) -> Option<usize> {
        let mut e = self.excess(from);
        let mut j = from;
        while j >= lo {
            if j % 8 == 0 && j >= lo + 7 {
                let b = self.byte(j / 8 - 1);
                let before = e - BYTE_TOTAL[b] as i64;
                if before + BYTE_MIN[b] as i64 > target {
                    e = before;
                    j -= 8;
                    continue;
                }
            }
            if e <= target {
                return Some(j);
            }
            e -= self.step(j);
            j -= 1;
        }
        None
    }

    fn scan_min(&self, from: usize, to: usize) -> i64 {
        let mut e = self.excess(from - 1);
        let mut m = i64::MAX;
        let mut j = from;
        while j <= to {
            if (j - 1) % 8 == 0 && j + 7 <= to {
                let b = self.byte((j - 1) / 8);
                m = m.min(e + BYTE_MIN[b] as i64);
                e += BYTE_TOTAL[b] as i64;
                j += 8;
                continue;
            }
            e += self.step(j);
            m = m.min(e);
            j += 1;
        }
        m
    }

    fn block_range(&self, b: usize) -> (usize, usize) {
        (b * BLOCK + 1, ((b + 1) * BLOCK).min(self.len()))
    }

    fn first_block(&self, from: usize, target: i64) -> Option<usize> {
        if from >= self.nblocks {
            return None;
        }
        let mut x = self.leaves + from;
        while self.tree[x] as i64 > target {
            while x & 1 == 1 {
                x >>= 1;
            }
            if x == 0 {
                return None;
            }
            x += 1;
        }
        while x < self.leaves {
            x = if self.tree[2 * x] as i64 <= target {
                2 * x
            } else {
                2 * x + 1
            };
        }
        Some(x - self.leaves)
    }

    fn last_block(&self, to: usize, target: i64) -> Option<usize> {
        let mut x = self.leaves + to;
        while self.tree[x] as i64 > target {
            while x & 1 == 0 {
                x >>= 1;
            }
            if x == 1 {
                return None;
            }
            x -= 1;
        }
        while x < self.leaves {
            x = if self.tree[2 * x + 1] as i64 <= target {
                2 * x + 1
            } else {
                2 * x
            };
        }
        Some(x - self.leaves)
    }

    fn tree_min(&self, a: usize, b: usize) -> i64 {
        let (mut lo, mut hi) = (a + self.leaves, b + self.leaves + 1);
        let mut m = i32::MAX;
        while lo < hi {
            if lo & 1 == 1 {
                m = m.min(self.tree[lo]);
                lo += 1;
            }
            if hi & 1 == 1 {
                hi -= 1;
                m = m.min(self.tree[hi]);
            }
            lo >>= 1;
            hi >>= 1;
        }
        m as i64
    }

    /// Smallest `j >= from` with `excess(j) <= target`.
    pub fn fwd_search_le(&self, from: usize, target: i64) -> Option<usize> {
        if from == 0 {
            if target >= 0 {
                return Some(0);
            }
            return self.fwd_search_le(1, target);
        }
        if from > self.len() {
            return None;
        }
        let blk = (from - 1) / BLOCK;
        let (_, end) = self.block_range(blk);
        if let Some(j) = self.scan_fwd(from, end, target) {
            return Some(j);
        }
        let nb = self.first_block(blk + 1, target)?;
        let (s, e) = self.block_range(nb);
        self.scan_fwd(s, e, target)
    }

    /// Largest `j <= from` (possibly 0) with `excess(j) <= target`.
    pub fn bwd_search_le(&self, from: usize, target: i64) -> Option<usize> {
        if from > 0 {
            let blk = (from - 1) / BLOCK;
            let (s, _) = self.block_range(blk);
            if let Some(j) = self.scan_bwd(from, s, target) {
                return Some(j);
            }
            if blk > 0 {
                if let Some(nb) = self.last_block(blk - 1, target) {
                    let (s, e) = self.block_range(nb);
                    return self.scan_bwd(e, s, target);
                }
            }
        }
        (target >= 0).then_some(0)
    }

    /// Minimum of `excess` over `i..=j`.
    pub fn range_min(&self, i: usize, j: usize) -> i64 {
        assert!(1 <= i && i <= j && j <= self.len(), "bad range {i}..={j}");
        let (bi, bj) = ((i - 1) / BLOCK, (j - 1) / BLOCK);
        if bi == bj {
            return self.scan_min(i, j);
        }
        let mut m = self
            .scan_min(i, self.block_range(bi).1)
            .min(self.scan_min(self.block_range(bj).0, j));
        if bj > bi + 1 {
            m = m.min(self.tree_min(bi + 1, bj - 1));
        }
        m
    }

    /// Leftmost position of the minimum excess in `i..=j`.
    pub fn leftmost_min(&self, i: usize, j: usize) -> (usize, i64) {
        let m = self.range_min(i, j);
        (self.fwd_search_le(i, m).expect("minimum exists"), m)
    }

    /// Rightmost position of the minimum excess in `i..=j`.
    pub fn rightmost_min(&self, i: usize, j: usize) -> (usize, i64) {
        let m = self.range_min(i, j);
        (self.bwd_search_le(j, m).expect("minimum exists"), m)
    }

    /// Matching close of the open at `i`.
    pub fn find_close(&self, i: usize) -> usize {
        debug_assert!(self.is_open(i));
        self.fwd_search_le(i + 1, self.excess(i) - 1)
            .expect("unbalanced parentheses")
    }

    /// Matching open of the close at `i`.
    pub fn find_open(&self, i: usize) -> usize {
        debug_assert!(!self.is_open(i));
        self.bwd_search_le(i - 1, self.excess(i))
            .expect("unbalanced parentheses")
            + 1
    }

    /// Open of the node enclosing the node opened at `i`, `None` at a root.
    pub fn enclose(&self, i: usize) -> Option<usize> {
        debug_assert!(self.is_open(i));
        let d = self.excess(i - 1);
        if d == 0 {
            return None;
        }
        self.bwd_search_le(i - 1, d - 1).map(|r| r + 1)
    }

    /// Lowest common ancestor of the nodes opened at `i` and `j`.
    pub fn lca(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        if i == j || self.find_close(i) > j {
            return i;
        }
        let (m, _) = self.leftmost_min(i, j);
        self.enclose(m + 1).expect("nodes share a root")
    }

    pub fn size_in_bytes(&self) -> usize {
        self.bits.size_in_bytes() + self.tree.len() * 4
    }

    pub fn write(&self, w: &mut Writer) {
        self.bits.write(w);
    }

    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let bits = BitVector::read(r)?;
        if 2 * bits.count_ones() != bits.len() {
            return Err(Error::corrupt("unbalanced parentheses"));
        }
        Ok(Self::new(bits))
    }
}
