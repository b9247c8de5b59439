//! Sampled suffix array over string roots.
//!
//! `SA` lists, class by class, the positions of `D_j` that fall inside the
//! root `ρ_h` of their string; every other member of `D_j` is recovered with
//! [`PositionMaps::expand_class`]. `B4` marks the first `SA` slot of each
//! class. Positions at root offsets divisible by `s` are kept in `SA*` and
//! flagged in `B5`; the rest are reached by walking `prev` at most `s - 1`
//! times.

use crate::dictionary::PositionMaps;
use crate::ebwt::{Ebwt, OmegaPartition};
use crate::error::{Error, Result};
use crate::succinct::codec::{Reader, Writer};
use crate::succinct::{BitBuilder, BitVector};

/// Default sampling factor `max(1, ⌊log2(n + 1)⌋)`.
pub fn default_sample_rate(n: usize) -> usize {
    ((n + 1).ilog2() as usize).max(1)
}

/// Full `SA`, built directly from the partition.
pub fn full_suffix_array(part: &OmegaPartition, maps: &PositionMaps) -> Vec<u32> {
    let mut sa = Vec::with_capacity(maps.n_star());
    for class in part.iter() {
        for &k in class {
            let (h, g) = maps.phi(k as usize);
            if g <= maps.root_len(h) {
                sa.push(k);
            }
        }
    }
    sa
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledSuffixArray {
    s: usize,
    b4: BitVector,
    b5: BitVector,
    samples: Vec<u32>,
}

impl SampledSuffixArray {
    pub fn new(part: &OmegaPartition, maps: &PositionMaps, s: usize) -> Self {
        assert!(s >= 1, "sampling factor must be positive");
        let mut b4 = BitBuilder::with_capacity(maps.n_star());
        let mut b5 = BitBuilder::with_capacity(maps.n_star());
        let mut samples = Vec::new();
        for class in part.iter() {
            let mut first = true;
            for &k in class {
                let (h, g) = maps.phi(k as usize);
                if g > maps.root_len(h) {
                    continue;
                }
                b4.push(first);
                first = false;
                let sampled = (g - 1) % s == 0;
                b5.push(sampled);
                if sampled {
                    samples.push(k);
                }
            }
        }
        SampledSuffixArray {
            s,
            b4: b4.build(),
            b5: b5.build(),
            samples,
        }
    }

    pub fn sample_rate(&self) -> usize {
        self.s
    }

    /// `n*`, the number of `SA` slots.
    pub fn len(&self) -> usize {
        self.b4.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b4.is_empty()
    }

    pub fn b4(&self) -> &BitVector {
        &self.b4
    }

    pub fn b5(&self) -> &BitVector {
        &self.b5
    }

    pub fn samples(&self) -> &[u32] {
        &self.samples
    }

    /// First and last `SA` slot of class `j`.
    pub fn class_range(&self, j: usize) -> (usize, usize) {
        (self.b4.select1(j), self.b4.select1(j + 1) - 1)
    }

    /// `SA` slots covering classes `l..=r`.
    pub fn slot_range(&self, l: usize, r: usize) -> (usize, usize) {
        (self.b4.select1(l), self.b4.select1(r + 1) - 1)
    }

    /// Class holding slot `t`.
    pub fn class_of_slot(&self, t: usize) -> usize {
        self.b4.rank1(t)
    }

    /// `SA[t]` and the number of `prev` steps taken to reach a sample.
    pub fn lookup_counted(&self, t: usize, ebwt: &Ebwt) -> (usize, usize) {
        let mut t = t;
        let mut steps = 0;
        while !self.b5.get(t) {
            let j = self.b4.rank1(t);
            let q = t - self.b4.select1(j) + 1;
            t = self.b4.select1(ebwt.prev(j)) + q - 1;
            steps += 1;
        }
        (self.samples[self.b5.rank1(t) - 1] as usize + steps, steps)
    }

    pub fn lookup(&self, t: usize, ebwt: &Ebwt) -> usize {
        self.lookup_counted(t, ebwt).0
    }

    pub fn try_lookup(&self, t: usize, ebwt: &Ebwt) -> Result<usize> {
        if t == 0 || t > self.len() {
            return Err(Error::OutOfRange {
                what: "suffix array slot",
                index: t,
                bound: self.len(),
            });
        }
        Ok(self.lookup(t, ebwt))
    }

    /// All text positions of class `D_j`, sorted.
    pub fn expand_class_set(&self, j: usize, ebwt: &Ebwt, maps: &PositionMaps) -> Vec<usize> {
        let (lo, hi) = self.class_range(j);
        let mut out: Vec<usize> = (lo..=hi)
            .flat_map(|t| maps.expand_class(self.lookup(t, ebwt)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Replaces the first sample by another valid position `1..=n`.
    pub(crate) fn corrupt_first_sample(&mut self, n: usize) {
        if let Some(k) = self.samples.first_mut() {
            *k = *k % n as u32 + 1;
        }
    }

    pub fn size_in_bytes(&self) -> usize {
        self.b4.size_in_bytes() + self.b5.size_in_bytes() + self.samples.len() * 4
    }

    pub fn write(&self, w: &mut Writer) {
        w.u32(self.s as u32);
        self.b4.write(w);
        self.b5.write(w);
        w.u64(self.samples.len() as u64);
        for &k in &self.samples {
            w.u32(k);
        }
    }

    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let s = r.u32()? as usize;
        let b4 = BitVector::read(r)?;
        let b5 = BitVector::read(r)?;
        let count = r.count(32)?;
        let samples = (0..count).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
        if s == 0
            || b4.len() != b5.len()
            || count != b5.count_ones()
            || (!b4.is_empty() && !b4.get(1))
        {
            return Err(Error::corrupt("suffix array samples inconsistent"));
        }
        Ok(SampledSuffixArray { s, b4, b5, samples })
    }
}
