//! Wavelet matrix over a small integer alphabet.
//!
//! Supports `access`, `rank` and `select` in `O(log σ)` bitvector operations
//! with `n⌈log σ⌉` bits of payload. Positions are 1-based, symbols are
//! `0..sigma`.

use super::bitvec::{BitBuilder, BitVector};
use super::codec::{Reader, Writer};
use crate::error::{Error, Result};

const MAGIC: u32 = u32::from_le_bytes(*b"WVMX");
const VERSION: u8 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveletMatrix {
    len: usize,
    sigma: usize,
    levels: Vec<BitVector>,
    zeros: Vec<usize>,
}

fn bits_for(sigma: usize) -> usize {
    if sigma <= 1 {
        1
    } else {
        (usize::BITS - (sigma - 1).leading_zeros()) as usize
    }
}

impl WaveletMatrix {
    /// Builds over `seq`; every symbol must be below `sigma`.
    pub fn new(seq: &[u32], sigma: usize) -> Self {
        let nbits = bits_for(sigma);
        let mut cur: Vec<u32> = seq.to_vec();
        let mut levels = Vec::with_capacity(nbits);
        let mut zeros = Vec::with_capacity(nbits);
        let mut next = Vec::with_capacity(seq.len());
        for level in 0..nbits {
            let shift = nbits - 1 - level;
            let mut bv = BitBuilder::with_capacity(cur.len());
            for &c in &cur {
                assert!(
                    (c as usize) < sigma.max(1),
                    "symbol {c} outside alphabet of {sigma}"
                );
                bv.push((c >> shift) & 1 == 1);
            }
            next.clear();
            next.extend(cur.iter().filter(|&&c| (c >> shift) & 1 == 0));
            zeros.push(next.len());
            next.extend(cur.iter().filter(|&&c| (c >> shift) & 1 == 1));
            std::mem::swap(&mut cur, &mut next);
            levels.push(bv.build());
        }
        WaveletMatrix {
            len: seq.len(),
            sigma,
            levels,
            zeros,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Symbol at 1-based position `i`.
    pub fn access(&self, i: usize) -> u32 {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} out of 1..={}",
            self.len
        );
        let mut pos = i - 1;
        let mut c = 0u32;
        for (bv, &z) in self.levels.iter().zip(&self.zeros) {
            let bit = bv.get(pos + 1);
            c = (c << 1) | bit as u32;
            pos = if bit {
                z + bv.rank1(pos)
            } else {
                bv.rank0(pos)
            };
        }
        c
    }

    /// Occurrences of `c` in `S[1..=i]`.
    pub fn rank(&self, c: u32, i: usize) -> usize {
        assert!(i <= self.len, "rank position {i} beyond {}", self.len);
        assert!(
            (c as usize) < self.sigma,
            "symbol {c} outside alphabet of {}",
            self.sigma
        );
        let nbits = self.levels.len();
        let (mut lo, mut hi) = (0usize, i);
        for (level, (bv, &z)) in self.levels.iter().zip(&self.zeros).enumerate() {
            if (c >> (nbits - 1 - level)) & 1 == 1 {
                lo = z + bv.rank1(lo);
                hi = z + bv.rank1(hi);
            } else {
                lo = bv.rank0(lo);
                hi = bv.rank0(hi);
            }
        }
        hi - lo
    }

    /// Position of the `k`-th `c`; `len + 1` when `k` is one past the count.
    pub fn select(&self, c: u32, k: usize) -> usize {
        assert!(
            (c as usize) < self.sigma,
            "symbol {c} outside alphabet of {}",
            self.sigma
        );
        let total = self.rank(c, self.len);
        assert!(
            k >= 1 && k <= total + 1,
            "select({c}, {k}) with {total} occurrences"
        );
        if k == total + 1 {
            return self.len + 1;
        }
        let nbits = self.levels.len();
        let mut lo = 0usize;
        for (level, (bv, &z)) in self.levels.iter().zip(&self.zeros).enumerate() {
            lo = if (c >> (nbits - 1 - level)) & 1 == 1 {
                z + bv.rank1(lo)
            } else {
                bv.rank0(lo)
            };
        }
        // 0-based position within the last level's ordering, walked back up
        let mut pos = lo + k - 1;
        for (level, (bv, &z)) in self.levels.iter().zip(&self.zeros).enumerate().rev() {
            pos = if (c >> (nbits - 1 - level)) & 1 == 1 {
                bv.select1(pos - z + 1) - 1
            } else {
                bv.select0(pos + 1) - 1
            };
        }
        pos + 1
    }

    pub fn try_access(&self, i: usize) -> Result<u32> {
        if i < 1 || i > self.len {
            return Err(Error::OutOfRange {
                what: "sequence position",
                index: i,
                bound: self.len,
            });
        }
        Ok(self.access(i))
    }

    pub fn try_rank(&self, c: u32, i: usize) -> Result<usize> {
        self.check_symbol(c)?;
        if i > self.len {
            return Err(Error::OutOfRange {
                what: "rank position",
                index: i,
                bound: self.len,
            });
        }
        Ok(self.rank(c, i))
    }

    pub fn try_select(&self, c: u32, k: usize) -> Result<usize> {
        self.check_symbol(c)?;
        let total = self.rank(c, self.len);
        if k < 1 || k > total + 1 {
            return Err(Error::OutOfRange {
                what: "select rank",
                index: k,
                bound: total + 1,
            });
        }
        Ok(self.select(c, k))
    }

    fn check_symbol(&self, c: u32) -> Result<()> {
        if c as usize >= self.sigma {
            return Err(Error::OutOfRange {
                what: "symbol",
                index: c as usize,
                bound: self.sigma.saturating_sub(1),
            });
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.len).map(move |i| self.access(i))
    }

    pub fn size_in_bytes(&self) -> usize {
        self.levels
            .iter()
            .map(BitVector::size_in_bytes)
            .sum::<usize>()
            + self.zeros.len() * 8
    }

    pub fn write(&self, w: &mut Writer) {
        w.u32(MAGIC);
        w.u8(VERSION);
        w.u64(self.len as u64);
        w.u32(self.sigma as u32);
        for bv in &self.levels {
            bv.write(w);
        }
    }

    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let magic = r.u32()?;
        if magic != MAGIC {
            return Err(Error::corrupt(format!("bad sequence magic {magic:#010x}")));
        }
        let version = r.u8()?;
        if version != VERSION {
            return Err(Error::Version {
                found: version as u32,
                expected: VERSION as u32,
            });
        }
        let len = r.count(1)?;
        let sigma = r.u32()? as usize;
        let mut levels = Vec::new();
        let mut zeros = Vec::new();
        for _ in 0..bits_for(sigma) {
            let bv = BitVector::read(r)?;
            if bv.len() != len {
                return Err(Error::corrupt("sequence level length mismatch"));
            }
            zeros.push(bv.count_zeros());
            levels.push(bv);
        }
        Ok(WaveletMatrix {
            len,
            sigma,
            levels,
            zeros,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn running_bwt() -> WaveletMatrix {
        // ccacabbb with a=0, b=1, c=2
        WaveletMatrix::new(&[2, 2, 0, 2, 0, 1, 1, 1], 3)
    }

    #[test]
    fn running_example_ranks() {
        let s = running_bwt();
        assert_eq!(s.access(4), 2);
        assert_eq!(s.rank(2, 8), 3);
        assert_eq!(s.rank(0, 4), 1);
        assert_eq!(s.select(1, 1), 6);
        assert_eq!(s.select(2, 3), 4);
        assert_eq!(s.select(2, 4), 9);
    }

    #[test]
    fn unary_alphabet() {
        let s = WaveletMatrix::new(&[0, 0, 0], 1);
        assert_eq!(s.rank(0, 2), 2);
        assert_eq!(s.select(0, 3), 3);
        assert_eq!(s.access(1), 0);
    }

    #[test]
    fn checked_errors() {
        let s = running_bwt();
        assert!(s.try_rank(3, 1).is_err());
        assert!(s.try_rank(0, 9).is_err());
        assert!(s.try_access(0).is_err());
        assert!(s.try_select(0, 4).is_err());
        assert_eq!(s.try_select(0, 3).unwrap(), 9);
    }

    #[test]
    fn persistence_round_trip() {
        let s = running_bwt();
        let mut w = Writer::new();
        s.write(&mut w);
        let buf = w.into_inner();
        let back = WaveletMatrix::read(&mut Reader::new(&buf)).unwrap();
        assert_eq!(back, s);
    }

    proptest! {
        #[test]
        fn matches_naive(sigma in 1usize..20, raw in proptest::collection::vec(any::<u32>(), 0..400)) {
            let seq: Vec<u32> = raw.iter().map(|x| x % sigma as u32).collect();
            let s = WaveletMatrix::new(&seq, sigma);
            for c in 0..sigma as u32 {
                let mut count = 0;
                for (idx, &x) in seq.iter().enumerate() {
                    if x == c {
                        count += 1;
                        prop_assert_eq!(s.select(c, count), idx + 1);
                    }
                    prop_assert_eq!(s.rank(c, idx + 1), count);
                }
            }
            for (idx, &x) in seq.iter().enumerate() {
                prop_assert_eq!(s.access(idx + 1), x);
            }
        }
    }
}
