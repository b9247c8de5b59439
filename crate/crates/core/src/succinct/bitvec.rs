//! Static bitvector with rank and select.
//!
//! Positions are 1-based. `rank1(i)` counts ones in `B[1..=i]` and
//! `select1(k)` returns the position of the `k`-th one, or `len + 1` when
//! `k == count_ones() + 1`.
//!
//! The rank directory is two-level: an absolute `u64` count every 2^16 bits
//! and a relative `u16` count every 512 bits, roughly 3.2% on top of the raw
//! bits. Select samples every 8192-th one (and zero) and binary searches the
//! block directory between samples.

use super::codec::{Reader, Writer};
use crate::error::{Error, Result};

const WORD: usize = 64;
const BLOCK_WORDS: usize = 8;
const BLOCK_BITS: usize = WORD * BLOCK_WORDS;
const SUPER_BITS: usize = 1 << 16;
const BLOCKS_PER_SUPER: usize = SUPER_BITS / BLOCK_BITS;
const SELECT_SAMPLE: usize = 8192;

const MAGIC: u32 = u32::from_le_bytes(*b"BVRS");
const VERSION: u8 = 1;

/// Growable bit buffer used while constructing a [`BitVector`].
#[derive(Clone, Debug, Default)]
pub struct BitBuilder {
    words: Vec<u64>,
    len: usize,
}

impl BitBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            words: Vec::with_capacity(bits.div_ceil(WORD)),
            len: 0,
        }
    }

    /// All-zero buffer of `len` bits.
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len % WORD == 0 {
            self.words.push(0);
        }
        if bit {
            self.words[self.len / WORD] |= 1 << (self.len % WORD);
        }
        self.len += 1;
    }

    /// Sets the bit at 1-based position `i`.
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i >= 1 && i <= self.len, "bit {i} out of 1..={}", self.len);
        let b = i - 1;
        if bit {
            self.words[b / WORD] |= 1 << (b % WORD);
        } else {
            self.words[b / WORD] &= !(1 << (b % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn build(self) -> BitVector {
        BitVector::from_words(self.words, self.len)
    }
}

impl FromIterator<bool> for BitBuilder {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut b = BitBuilder::new();
        for bit in iter {
            b.push(bit);
        }
        b
    }
}

/// Immutable bitvector supporting constant-time rank and logarithmic select.
#[derive(Clone, Debug)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
    ones: usize,
    supers: Vec<u64>,
    blocks: Vec<u16>,
    select1_hints: Vec<u32>,
    select0_hints: Vec<u32>,
}

impl PartialEq for BitVector {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.words == other.words
    }
}

impl Eq for BitVector {}

impl BitVector {
    /// Builds from raw little-endian words. Bits beyond `len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(WORD), 0);
        if len % WORD != 0 {
            let last = words.len() - 1;
            words[last] &= (1u64 << (len % WORD)) - 1;
        }
        let nblocks = len / BLOCK_BITS + 1;
        let mut supers = Vec::with_capacity(len / SUPER_BITS + 1);
        let mut blocks = Vec::with_capacity(nblocks);
        let mut select1_hints = Vec::new();
        let mut select0_hints = Vec::new();
        let mut total = 0usize;
        let mut super_base = 0usize;
        for blk in 0..nblocks {
            if blk % BLOCKS_PER_SUPER == 0 {
                supers.push(total as u64);
                super_base = total;
            }
            blocks.push((total - super_base) as u16);
            let lo = blk * BLOCK_WORDS;
            let hi = (lo + BLOCK_WORDS).min(words.len());
            let start_bit = blk * BLOCK_BITS;
            let end_bit = (start_bit + BLOCK_BITS).min(len);
            if lo >= hi {
                continue;
            }
            let ones: usize = words[lo..hi].iter().map(|w| w.count_ones() as usize).sum();
            let zeros = (end_bit - start_bit) - ones;
            let zeros_before = start_bit - total;
            // record the block holding every SELECT_SAMPLE-th one / zero
            while select1_hints.len() * SELECT_SAMPLE < total + ones {
                select1_hints.push(blk as u32);
            }
            while select0_hints.len() * SELECT_SAMPLE < zeros_before + zeros {
                select0_hints.push(blk as u32);
            }
            total += ones;
        }
        select1_hints.push((nblocks - 1) as u32);
        select0_hints.push((nblocks - 1) as u32);
        BitVector {
            words,
            len,
            ones: total,
            supers,
            blocks,
            select1_hints,
            select0_hints,
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        bits.into_iter().collect::<BitBuilder>().build()
    }

    /// Parses a string of `0`/`1` characters; other characters are ignored.
    pub fn from_str_bits(s: &str) -> Self {
        Self::from_bits(s.chars().filter_map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        }))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> usize {
        self.ones
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.ones
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Bit at 1-based position `i`. Panics if `i` is outside `1..=len`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len, "bit {i} out of 1..={}", self.len);
        let b = i - 1;
        (self.words[b / WORD] >> (b % WORD)) & 1 == 1
    }

    pub fn try_get(&self, i: usize) -> Result<bool> {
        self.check(i, 1, self.len, "bit")?;
        Ok(self.get(i))
    }

    /// Ones in `B[1..=i]`, for `i` in `0..=len`.
    #[inline]
    pub fn rank1(&self, i: usize) -> usize {
        assert!(i <= self.len, "rank position {i} beyond {}", self.len);
        if i == self.len {
            return self.ones;
        }
        let blk = i / BLOCK_BITS;
        let mut r = self.supers[i / SUPER_BITS] as usize + self.blocks[blk] as usize;
        let w_end = i / WORD;
        for w in &self.words[blk * BLOCK_WORDS..w_end] {
            r += w.count_ones() as usize;
        }
        if i % WORD != 0 {
            r += (self.words[w_end] & ((1u64 << (i % WORD)) - 1)).count_ones() as usize;
        }
        r
    }

    #[inline]
    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    pub fn rank(&self, bit: bool, i: usize) -> usize {
        if bit {
            self.rank1(i)
        } else {
            self.rank0(i)
        }
    }

    pub fn try_rank(&self, bit: bool, i: usize) -> Result<usize> {
        self.check(i, 0, self.len, "rank position")?;
        Ok(self.rank(bit, i))
    }

    #[inline]
    fn ones_before_block(&self, blk: usize) -> usize {
        self.supers[blk / BLOCKS_PER_SUPER] as usize + self.blocks[blk] as usize
    }

    /// Position of the `k`-th one; `len + 1` for `k == count_ones() + 1`.
    pub fn select1(&self, k: usize) -> usize {
        assert!(
            k >= 1 && k <= self.ones + 1,
            "select1({k}) with {} ones",
            self.ones
        );
        if k == self.ones + 1 {
            return self.len + 1;
        }
        let s = (k - 1) / SELECT_SAMPLE;
        let (mut lo, mut hi) = (
            self.select1_hints[s] as usize,
            self.select1_hints[s + 1] as usize,
        );
        // largest block with fewer than k ones before it
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.ones_before_block(mid) < k {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut need = k - self.ones_before_block(lo);
        let mut w = lo * BLOCK_WORDS;
        loop {
            let c = self.words[w].count_ones() as usize;
            if c >= need {
                return w * WORD + select_in_word(self.words[w], need) + 1;
            }
            need -= c;
            w += 1;
        }
    }

    /// Position of the `k`-th zero; `len + 1` for `k == count_zeros() + 1`.
    pub fn select0(&self, k: usize) -> usize {
        let zeros = self.count_zeros();
        assert!(k >= 1 && k <= zeros + 1, "select0({k}) with {zeros} zeros");
        if k == zeros + 1 {
            return self.len + 1;
        }
        let zeros_before = |blk: usize| blk * BLOCK_BITS - self.ones_before_block(blk);
        let s = (k - 1) / SELECT_SAMPLE;
        let (mut lo, mut hi) = (
            self.select0_hints[s] as usize,
            self.select0_hints[s + 1] as usize,
        );
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if zeros_before(mid) < k {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut need = k - zeros_before(lo);
        let mut w = lo * BLOCK_WORDS;
        loop {
            let inv = !self.words[w];
            let c = inv.count_ones() as usize;
            if c >= need {
                return w * WORD + select_in_word(inv, need) + 1;
            }
            need -= c;
            w += 1;
        }
    }

    pub fn select(&self, bit: bool, k: usize) -> usize {
        if bit {
            self.select1(k)
        } else {
            self.select0(k)
        }
    }

    pub fn try_select(&self, bit: bool, k: usize) -> Result<usize> {
        let count = if bit { self.ones } else { self.count_zeros() };
        self.check(k, 1, count + 1, "select rank")?;
        Ok(self.select(bit, k))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |i| self.get(i))
    }

    /// Renders as a `0`/`1` string, position 1 first.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Approximate heap footprint in bytes, directories included.
    pub fn size_in_bytes(&self) -> usize {
        self.words.len() * 8
            + self.supers.len() * 8
            + self.blocks.len() * 2
            + (self.select1_hints.len() + self.select0_hints.len()) * 4
    }

    pub fn write(&self, w: &mut Writer) {
        w.u32(MAGIC);
        w.u8(VERSION);
        w.u64(self.len as u64);
        let nbytes = self.len.div_ceil(8);
        for (i, word) in self.words.iter().enumerate() {
            let bytes = word.to_le_bytes();
            let take = (nbytes - i * 8).min(8);
            w.bytes(&bytes[..take]);
        }
    }

    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let magic = r.u32()?;
        if magic != MAGIC {
            return Err(Error::corrupt(format!("bad bitvector magic {magic:#010x}")));
        }
        let version = r.u8()?;
        if version != VERSION {
            return Err(Error::Version {
                found: version as u32,
                expected: VERSION as u32,
            });
        }
        let len = r.count(1)?;
        let raw = r.bytes(len.div_ceil(8))?;
        let mut words = Vec::with_capacity(len.div_ceil(WORD));
        for chunk in raw.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            words.push(u64::from_le_bytes(buf));
        }
        if len % 8 != 0 && raw[raw.len() - 1] >> (len % 8) != 0 {
            return Err(Error::corrupt("nonzero bitvector padding"));
        }
        Ok(Self::from_words(words, len))
    }

    fn check(&self, i: usize, lo: usize, hi: usize, what: &'static str) -> Result<()> {
        if i < lo || i > hi {
            return Err(Error::OutOfRange {
                what,
                index: i,
                bound: hi,
            });
        }
        Ok(())
    }
}

/// 0-based offset of the `k`-th (1-based) set bit of `w`.
#[inline]
fn select_in_word(mut w: u64, k: usize) -> usize {
    for _ in 1..k {
        w &= w - 1;
    }
    w.trailing_zeros() as usize
}
