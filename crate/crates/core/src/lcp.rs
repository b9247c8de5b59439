//! Sampled LCP array between consecutive classes.
//!
//! `LCP[j]` is the longest common prefix of `S_{j-1}` and `S_j` for
//! `j` in `2..=n'`. Only a few values are stored. Any other value follows from
//! `LCP[j] = 1 + LCP[j']` with `j' = rmq(follow(j-1) + 1, follow(j))`, so a
//! lookup walks a chain of strictly decreasing depths until it meets a
//! sample or a class that starts a new symbol run (`LCP = 0`).
//!
//! Class `j` is sampled when `LCP[j] ≡ s - 1 (mod s)` and the longest chain
//! ending at `j` has at least `s - 1` edges. Any walk therefore stops within
//! `2s - 2` steps, and the roots of short chains stay unsampled.

use crate::dictionary::Dictionary;
use crate::ebwt::{Ebwt, OmegaPartition};
use crate::error::{Error, Result};
use crate::succinct::codec::{Reader, Writer};
use crate::succinct::{BitVector, Rmq};

/// Value returned by [`SampledLcp::lambda`] for a single-class interval.
pub const LAMBDA_INFINITY: usize = usize::MAX;

/// Full LCP array, `lcp[j - 1] = LCP[j]` with `LCP[1] = 0`.
///
/// Walks each cycle of `follow` using `LCP[follow(j)] >= LCP[j] - 1`, so
/// character comparisons stay linear per cycle.
pub fn full_lcp(dict: &Dictionary, part: &OmegaPartition) -> Vec<u32> {
    let n_prime = part.len();
    let mut base = Vec::with_capacity(n_prime);
    let mut off = Vec::with_capacity(n_prime);
    let mut len = Vec::with_capacity(n_prime);
    for j in 1..=n_prime {
        let k = part.representative(j);
        let (h, g) = dict.phi(k);
        base.push(dict.string_start(h) - 1);
        off.push(g - 1);
        len.push(dict.string_len(h));
    }
    let text = dict.text();
    let at = |j: usize, x: usize| text[base[j - 1] + (off[j - 1] + x) % len[j - 1]];
    let follow = |j: usize| {
        let k = part.representative(j);
        let (h, g) = dict.phi(k);
        part.class_of(dict.string_start(h) + g % dict.string_len(h))
    };
    let mut lcp = vec![0u32; n_prime];
    let mut seen = vec![false; n_prime + 1];
    for j0 in 1..=n_prime {
        let mut j = j0;
        let mut h = 0usize;
        while !seen[j] {
            seen[j] = true;
            if j == 1 {
                h = 0;
            } else {
                while at(j - 1, h) == at(j, h) {
                    h += 1;
                }
                lcp[j - 1] = h as u32;
            }
            h = h.saturating_sub(1);
            j = follow(j);
        }
    }
    lcp
}

/// Chooses the sampled classes for factor `s` from the full LCP array.
pub fn sample_classes(lcp: &[u32], ebwt: &Ebwt, rmq: &Rmq, s: usize) -> Vec<bool> {
    let n_prime = lcp.len();
    let target = |j: usize| -> Option<usize> {
        (j >= 2 && lcp[j - 1] > 0).then(|| rmq.query(ebwt.follow(j - 1), ebwt.follow(j) - 1) + 1)
    };
    // longest chain ending at each class, settled in decreasing LCP order
    let max = lcp.iter().copied().max().unwrap_or(0) as usize;
    let mut buckets = vec![0usize; max + 2];
    for &v in lcp {
        buckets[v as usize + 1] += 1;
    }
    for v in 0..=max {
        buckets[v + 1] += buckets[v];
    }
    let mut order = vec![0usize; n_prime];
    for (idx, &v) in lcp.iter().enumerate() {
        order[buckets[v as usize]] = idx + 1;
        buckets[v as usize] += 1;
    }
    let mut height = vec![0usize; n_prime + 1];
    for &j in order.iter().rev() {
        if let Some(t) = target(j) {
            debug_assert_eq!(lcp[t - 1] + 1, lcp[j - 1]);
            height[t] = height[t].max(height[j] + 1);
        }
    }
    (1..=n_prime)
        .map(|j| j >= 2 && lcp[j - 1] as usize % s == s - 1 && height[j] >= s - 1)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledLcp {
    s: usize,
    b6: BitVector,
    samples: Vec<u32>,
    rmq: Rmq,
}

impl SampledLcp {
    pub fn new(lcp: &[u32], ebwt: &Ebwt, s: usize) -> Self {
        assert!(s >= 1, "sampling factor must be positive");
        let rmq = Rmq::new(lcp.get(1..).unwrap_or(&[]));
        let chosen = sample_classes(lcp, ebwt, &rmq, s);
        let b6 = BitVector::from_bits(chosen.iter().skip(1).copied());
        let samples = (2..=lcp.len())
            .filter(|&j| chosen[j - 1])
            .map(|j| lcp[j - 1])
            .collect();
        SampledLcp {
            s,
            b6,
            samples,
            rmq,
        }
    }

    pub fn sample_rate(&self) -> usize {
        self.s
    }

    /// `B6` over `j = 2..=n'`.
    pub fn b6(&self) -> &BitVector {
        &self.b6
    }

    pub fn samples(&self) -> &[u32] {
        &self.samples
    }

    /// Leftmost minimum of `LCP[a..=b]`, `2 <= a <= b`.
    pub fn rmq(&self, a: usize, b: usize) -> usize {
        self.rmq.query(a - 1, b - 1) + 1
    }

    /// `LCP[j]` and the number of chain steps taken.
    pub fn lookup_counted(&self, j: usize, ebwt: &Ebwt) -> (usize, usize) {
        let mut j = j;
        let mut steps = 0;
        loop {
            if ebwt.b2().get(j) {
                return (steps, steps);
            }
            if self.b6.get(j - 1) {
                return (
                    self.samples[self.b6.rank1(j - 1) - 1] as usize + steps,
                    steps,
                );
            }
            let j1 = ebwt.follow(j - 1);
            let j2 = ebwt.follow(j);
            j = self.rmq(j1 + 1, j2);
            steps += 1;
        }
    }

    pub fn lookup(&self, j: usize, ebwt: &Ebwt) -> usize {
        self.lookup_counted(j, ebwt).0
    }

    pub fn try_lookup(&self, j: usize, ebwt: &Ebwt) -> Result<usize> {
        if j < 2 || j > ebwt.len() {
            return Err(Error::OutOfRange {
                what: "LCP index",
                index: j,
                bound: ebwt.len(),
            });
        }
        Ok(self.lookup(j, ebwt))
    }

    /// Longest common prefix of every class in `l..=r`; [`LAMBDA_INFINITY`] when `l == r`.
    pub fn lambda(&self, l: usize, r: usize, ebwt: &Ebwt) -> usize {
        if l == r {
            LAMBDA_INFINITY
        } else {
            self.lookup(self.rmq(l + 1, r), ebwt)
        }
    }

    pub fn size_in_bytes(&self) -> usize {
        self.b6.size_in_bytes() + self.samples.len() * 4 + self.rmq.size_in_bytes()
    }

    pub fn write(&self, w: &mut Writer) {
        w.u32(self.s as u32);
        self.b6.write(w);
        w.u64(self.samples.len() as u64);
        for &v in &self.samples {
            w.u32(v);
        }
        self.rmq.write(w);
    }

    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let s = r.u32()? as usize;
        let b6 = BitVector::read(r)?;
        let count = r.count(32)?;
        let samples = (0..count).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
        let rmq = Rmq::read(r)?;
        if s == 0 || count != b6.count_ones() || rmq.len() != b6.len() {
            return Err(Error::corrupt("LCP samples inconsistent"));
        }
        Ok(SampledLcp {
            s,
            b6,
            samples,
            rmq,
        })
    }
}
