//! The assembled compressed index.

use crate::csa::{default_sample_rate, full_suffix_array, SampledSuffixArray};
use crate::dictionary::{Alphabet, Dictionary, PositionMaps};
use crate::ebwt::{build_partition, Ebwt};
use crate::lcp::{full_lcp, SampledLcp};
use crate::succinct::Rmq;
use crate::sufftree::SuffixTreeTopology;

/// Sampling factors; `None` picks `max(1, ⌊log2(n + 1)⌋)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    pub sa_sample: Option<usize>,
    pub lcp_sample: Option<usize>,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl BuildOptions {
    pub fn with_samples(sa: usize, lcp: usize) -> Self {
        BuildOptions {
            sa_sample: Some(sa),
            lcp_sample: Some(lcp),
            fault: None,
        }
    }
}

/// Deliberate corruption used to check that verification catches errors.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Shifts the first suffix array sample by one position.
    SaSample,
}

/// Compressed circular dictionary matching index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdmIndex {
    pub(crate) alphabet: Alphabet,
    pub(crate) maps: PositionMaps,
    pub(crate) ebwt: Ebwt,
    pub(crate) sa: SampledSuffixArray,
    pub(crate) lcp: SampledLcp,
    pub(crate) tree: SuffixTreeTopology,
    pub(crate) len_rmq: Rmq,
}

impl CdmIndex {
    pub fn build(dict: &Dictionary, opts: BuildOptions) -> Self {
        let s_default = default_sample_rate(dict.n());
        let s_sa = opts.sa_sample.unwrap_or(s_default).max(1);
        let s_lcp = opts.lcp_sample.unwrap_or(s_default).max(1);
        let part = build_partition(dict);
        let maps = dict.position_maps();
        let ebwt = Ebwt::new(dict, &part);
        let full_sa = full_suffix_array(&part, &maps);
        let lens: Vec<u32> = full_sa
            .iter()
            .map(|&k| maps.len_at(k as usize) as u32)
            .collect();
        let len_rmq = Rmq::new(&lens);
        drop(lens);
        drop(full_sa);
        let mut sa = SampledSuffixArray::new(&part, &maps, s_sa);
        if opts.fault == Some(Fault::SaSample) {
            sa.corrupt_first_sample(maps.n());
        }
        let lcp_full = full_lcp(dict, &part);
        let min_len: Vec<usize> = part
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|&k| maps.len_at(k as usize))
                    .min()
                    .expect("nonempty class")
            })
            .collect();
        drop(part);
        let lcp = SampledLcp::new(&lcp_full, &ebwt, s_lcp);
        let tree = SuffixTreeTopology::new(&lcp_full, &min_len);
        CdmIndex {
            alphabet: dict.alphabet().clone(),
            maps,
            ebwt,
            sa,
            lcp,
            tree,
            len_rmq,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn maps(&self) -> &PositionMaps {
        &self.maps
    }

    pub fn ebwt(&self) -> &Ebwt {
        &self.ebwt
    }

    pub fn suffix_array(&self) -> &SampledSuffixArray {
        &self.sa
    }

    pub fn lcp(&self) -> &SampledLcp {
        &self.lcp
    }

    pub fn tree(&self) -> &SuffixTreeTopology {
        &self.tree
    }

    pub fn len_rmq(&self) -> &Rmq {
        &self.len_rmq
    }

    pub fn n(&self) -> usize {
        self.maps.n()
    }

    pub fn d(&self) -> usize {
        self.maps.d()
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.sigma()
    }

    pub fn n_prime(&self) -> usize {
        self.ebwt.len()
    }

    pub fn n_star(&self) -> usize {
        self.sa.len()
    }

    pub fn sa_lookup(&self, t: usize) -> usize {
        self.sa.lookup(t, &self.ebwt)
    }

    pub fn lcp_lookup(&self, j: usize) -> usize {
        self.lcp.lookup(j, &self.ebwt)
    }

    pub fn lambda(&self, l: usize, r: usize) -> usize {
        self.lcp.lambda(l, r, &self.ebwt)
    }

    /// Sorted text positions of class `D_j`.
    pub fn expand_dj(&self, j: usize) -> Vec<usize> {
        self.sa.expand_class_set(j, &self.ebwt, &self.maps)
    }

    /// Every `SA` entry, decoded.
    pub fn materialize_sa(&self) -> Vec<u32> {
        (1..=self.n_star())
            .map(|t| self.sa_lookup(t) as u32)
            .collect()
    }

    /// Every `LCP` entry, decoded (`lcp[j - 1] = LCP[j]`, `LCP[1] = 0`).
    pub fn materialize_lcp(&self) -> Vec<u32> {
        (1..=self.n_prime())
            .map(|j| if j == 1 { 0 } else { self.lcp_lookup(j) as u32 })
            .collect()
    }

    /// `Len[t] = |T_{SA[t]}|`.
    pub fn len_at_slot(&self, t: usize) -> usize {
        self.maps.len_at(self.sa_lookup(t))
    }

    /// Approximate in-memory footprint in bytes.
    pub fn size_in_bytes(&self) -> usize {
        self.maps.size_in_bytes()
            + self.ebwt.size_in_bytes()
            + self.sa.size_in_bytes()
            + self.lcp.size_in_bytes()
            + self.tree.size_in_bytes()
            + self.len_rmq.size_in_bytes()
            + 256
    }
}
