//! Circular dictionary matching queries.
//!
//! `Cdm(P)` is the set of pairs `(i, k)` such that the circular suffix `T_k`
//! occurs in `P` starting at `i`. For every `i` the matcher first finds the
//! longest `P[i..t_i]` that prefixes some `T_k^ω`, together with its class
//! interval `[l_i, r_i]`. The occurrences at `i` are then the members of
//! `[l_i, r_i]` no longer than `t_i - i + 1`, plus, for every marked ancestor
//! `u` of that node with parent `v`, the members of `v \ u` no longer than
//! `λ(v)`.

use crate::index::CdmIndex;

/// One reported occurrence: `T_k` occurs in `P` at `i`, with `phi(k) = (string, offset)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub i: usize,
    pub k: usize,
    pub string: usize,
    pub offset: usize,
}

/// `t_i` and `[l_i, r_i]` for every `i` in `1..=m`, stored at `i - 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrefixMatches {
    pub t: Vec<usize>,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    /// Iterations of the backward quadruple walk.
    pub steps: usize,
}

impl PrefixMatches {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

/// Work counters gathered during a query.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub quadruple_steps: usize,
    /// `find_min_len` calls per start position.
    pub find_min_len_calls: Vec<usize>,
    /// Marked ancestors visited per start position.
    pub marked_climbs: Vec<usize>,
    /// Occurrences per start position.
    pub occurrences: Vec<usize>,
    /// Start position at which the adaptive query switched to plain arrays.
    pub switched_at: Option<usize>,
}

/// Query engine over an index, optionally backed by decoded `SA` and `LCP`.
#[derive(Debug)]
pub struct Matcher<'a> {
    idx: &'a CdmIndex,
    sa: Option<Vec<u32>>,
    lcp: Option<Vec<u32>>,
}

impl<'a> Matcher<'a> {
    pub fn new(idx: &'a CdmIndex) -> Self {
        Matcher {
            idx,
            sa: None,
            lcp: None,
        }
    }

    /// Decodes `SA` and `LCP` once so later lookups are direct reads.
    pub fn materialize(&mut self) {
        if self.sa.is_none() {
            self.sa = Some(self.idx.materialize_sa());
            self.lcp = Some(self.idx.materialize_lcp());
        }
    }

    pub fn is_materialized(&self) -> bool {
        self.sa.is_some()
    }

    fn sa(&self, t: usize) -> usize {
        match &self.sa {
            Some(sa) => sa[t - 1] as usize,
            None => self.idx.sa_lookup(t),
        }
    }

    fn lambda(&self, l: usize, r: usize) -> usize {
        match &self.lcp {
            Some(lcp) if l < r => lcp[self.idx.lcp.rmq(l + 1, r) - 1] as usize,
            _ => self.idx.lambda(l, r),
        }
    }

    /// Longest prefix matches of every suffix of `pattern` (encoded ranks).
    pub fn prefix_matches(&self, pattern: &[u32]) -> PrefixMatches {
        let m = pattern.len();
        let n1 = self.idx.n_prime();
        let tree = &self.idx.tree;
        let mut out = PrefixMatches {
            t: vec![0; m],
            l: vec![0; m],
            r: vec![0; m],
            steps: 0,
        };
        let (mut i, mut j, mut l, mut r) = (m + 1, m, 1, n1);
        while i > 1 {
            out.steps += 1;
            if let Some((l2, r2)) = self.idx.ebwt.bws(l, r, pattern[i - 2]) {
                (l, r) = (l2, r2);
                i -= 1;
                out.t[i - 1] = j;
                out.l[i - 1] = l;
                out.r[i - 1] = r;
            } else if j == i - 1 {
                i -= 1;
                j = i - 1;
                (l, r) = (1, n1);
                out.t[i - 1] = j;
                out.l[i - 1] = l;
                out.r[i - 1] = r;
            } else {
                match tree.parent(tree.frominter(l, r)) {
                    Some(p) => {
                        (l, r) = tree.tointer(p);
                        j = self.lambda(l, r) + i - 1;
                    }
                    None => {
                        (l, r) = (1, n1);
                        j = i - 1;
                    }
                }
            }
        }
        out
    }

    /// Slot in `t1..=t2` of a shortest string, if that string has length at most `x`.
    pub fn find_min_len(&self, t1: usize, t2: usize, x: usize) -> Option<(usize, usize)> {
        if t1 > t2 {
            return None;
        }
        let t = self.idx.len_rmq.query(t1, t2);
        let k = self.sa(t);
        (self.idx.maps.len_at(k) <= x).then_some((t, k))
    }

    /// Text positions in classes `l..=r` whose string has length at most `y`.
    fn enumerate_range(
        &self,
        l: usize,
        r: usize,
        y: usize,
        calls: &mut usize,
        out: &mut Vec<usize>,
    ) {
        if l > r || y == 0 {
            return;
        }
        let (t1, t2) = self.idx.sa.slot_range(l, r);
        let mut work = vec![(t1, t2)];
        while let Some((a, b)) = work.pop() {
            if a > b {
                continue;
            }
            *calls += 1;
            if let Some((t, k)) = self.find_min_len(a, b, y) {
                out.extend(self.idx.maps.expand_class(k));
                work.push((t + 1, b));
                work.push((a, t - 1));
            }
        }
    }

    /// Positions `k` with `T_k` occurring at `i`, given the prefix matches.
    pub fn cdm_at(&self, pm: &PrefixMatches, i: usize, stats: &mut QueryStats) -> Vec<usize> {
        let tree = &self.idx.tree;
        let (t_i, l_i, r_i) = (pm.t[i - 1], pm.l[i - 1], pm.r[i - 1]);
        let mut calls = 0;
        let mut climbs = 0;
        let mut out = Vec::new();
        self.enumerate_range(l_i, r_i, t_i + 1 - i, &mut calls, &mut out);
        let mut x = tree.nma(tree.frominter(l_i, r_i));
        while x != 1 {
            climbs += 1;
            let u = tree.fromaux(x);
            let (lu, ru) = tree.tointer(u);
            let v = tree.parent(u).expect("non-root node has a parent");
            let (lv, rv) = tree.tointer(v);
            let lam = self.lambda(lv, rv);
            self.enumerate_range(lv, lu - 1, lam, &mut calls, &mut out);
            self.enumerate_range(ru + 1, rv, lam, &mut calls, &mut out);
            x = tree.aux_parent(x).expect("non-root node has a parent");
        }
        stats.find_min_len_calls.push(calls);
        stats.marked_climbs.push(climbs);
        stats.occurrences.push(out.len());
        out
    }

    /// Marked ancestors visited by [`Matcher::cdm_at`] for start `i`.
    fn climbs(&self, pm: &PrefixMatches, i: usize) -> usize {
        let tree = &self.idx.tree;
        let mut x = tree.nma(tree.frominter(pm.l[i - 1], pm.r[i - 1]));
        let mut d = 0;
        while x != 1 {
            d += 1;
            x = tree.aux_parent(x).expect("non-root node has a parent");
        }
        d
    }

    fn occurrence(&self, i: usize, k: usize) -> Occurrence {
        let (string, offset) = self.idx.maps.phi(k);
        Occurrence {
            i,
            k,
            string,
            offset,
        }
    }

    /// All occurrences sorted by `(i, k)`.
    pub fn cdm(&self, pattern: &[u32], stats: &mut QueryStats) -> Vec<Occurrence> {
        let pm = self.prefix_matches(pattern);
        stats.quadruple_steps = pm.steps;
        let mut out = Vec::new();
        for i in 1..=pattern.len() {
            let mut ks = self.cdm_at(&pm, i, stats);
            ks.sort_unstable();
            out.extend(ks.into_iter().map(|k| self.occurrence(i, k)));
        }
        out
    }

    /// Same output as [`Matcher::cdm`], switching to decoded arrays once the
    /// running count of occurrences and marked climbs reaches `n`.
    pub fn cdm_adaptive(&mut self, pattern: &[u32], stats: &mut QueryStats) -> Vec<Occurrence> {
        let pm = self.prefix_matches(pattern);
        stats.quadruple_steps = pm.steps;
        let n = self.idx.n();
        let mut total = 0usize;
        let mut out = Vec::new();
        for i in 1..=pattern.len() {
            if !self.is_materialized() && total + self.climbs(&pm, i) >= n {
                self.materialize();
                stats.switched_at = Some(i);
            }
            let mut ks = self.cdm_at(&pm, i, stats);
            total += ks.len() + stats.marked_climbs[i - 1];
            ks.sort_unstable();
            out.extend(ks.into_iter().map(|k| self.occurrence(i, k)));
            if !self.is_materialized() && total >= n && i < pattern.len() {
                self.materialize();
                stats.switched_at = Some(i + 1);
            }
        }
        out
    }
}

impl CdmIndex {
    /// Maps pattern bytes to ranks; bytes absent from the dictionary never match.
    pub fn encode(&self, pattern: &[u8]) -> Vec<u32> {
        self.alphabet.encode_pattern(pattern)
    }

    pub fn cdm(&self, pattern: &[u8]) -> Vec<Occurrence> {
        Matcher::new(self).cdm(&self.encode(pattern), &mut QueryStats::default())
    }

    pub fn cdm_with_stats(&self, pattern: &[u8]) -> (Vec<Occurrence>, QueryStats) {
        let mut stats = QueryStats::default();
        let out = Matcher::new(self).cdm(&self.encode(pattern), &mut stats);
        (out, stats)
    }

    pub fn cdm_adaptive(&self, pattern: &[u8]) -> Vec<Occurrence> {
        self.cdm_adaptive_with_stats(pattern).0
    }

    pub fn cdm_adaptive_with_stats(&self, pattern: &[u8]) -> (Vec<Occurrence>, QueryStats) {
        let mut stats = QueryStats::default();
        let out = Matcher::new(self).cdm_adaptive(&self.encode(pattern), &mut stats);
        (out, stats)
    }

    pub fn prefix_matches(&self, pattern: &[u8]) -> PrefixMatches {
        Matcher::new(self).prefix_matches(&self.encode(pattern))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::Dictionary;
    use crate::index::BuildOptions;

    fn running() -> CdmIndex {
        let t = Dictionary::new(&["abcabc", "bcabc", "cab"]).unwrap();
        CdmIndex::build(&t, BuildOptions::with_samples(2, 2))
    }

    fn pairs(occ: &[Occurrence]) -> Vec<(usize, usize)> {
        occ.iter().map(|o| (o.i, o.k)).collect()
    }

    #[test]
    fn running_example_query() {
        let idx = running();
        let pm = idx.prefix_matches(b"abcbca");
        assert_eq!(pm.t, vec![6; 6]);
        assert_eq!((pm.l[0], pm.r[0]), (2, 2));
        let occ = idx.cdm(b"abcbca");
        assert_eq!(pairs(&occ), vec![(1, 9), (1, 13), (2, 10), (4, 14)]);
        assert_eq!((occ[0].string, occ[0].offset), (2, 3));
        assert_eq!(pairs(&idx.cdm(b"cab")), vec![(1, 12)]);
        assert_eq!(pairs(&idx.cdm_adaptive(b"abcbca")), pairs(&occ));
    }

    #[test]
    fn find_min_len_on_running_example() {
        let idx = running();
        let m = Matcher::new(&idx);
        assert_eq!(m.find_min_len(1, 4, 3), Some((2, 13)));
        assert_eq!(m.find_min_len(1, 4, 2), None);
        assert_eq!(m.find_min_len(3, 2, 9), None);
    }

    #[test]
    fn enumerate_ranges() {
        let idx = running();
        let m = Matcher::new(&idx);
        let mut calls = 0;
        let mut out = Vec::new();
        m.enumerate_range(1, 2, 3, &mut calls, &mut out);
        assert_eq!(out, vec![13]);
        out.clear();
        m.enumerate_range(3, 3, 5, &mut calls, &mut out);
        assert_eq!(out, vec![14]);
        out.clear();
        m.enumerate_range(1, 2, 6, &mut calls, &mut out);
        out.sort_unstable();
        assert_eq!(out, vec![1, 4, 9, 13]);
    }

    #[test]
    fn pattern_outside_alphabet() {
        let idx = running();
        assert!(idx.cdm(b"zzz").is_empty());
        assert_eq!(pairs(&idx.cdm(b"zcabz")), vec![(2, 12)]);
        assert!(idx.cdm(b"").is_empty());
    }

    #[test]
    fn unary_dictionary_forces_switch() {
        let t = Dictionary::new(&["a"]).unwrap();
        let idx = CdmIndex::build(&t, BuildOptions::default());
        let (occ, stats) = idx.cdm_adaptive_with_stats(b"aaaaaaaaaa");
        assert_eq!(pairs(&occ), (1..=10).map(|i| (i, 1)).collect::<Vec<_>>());
        assert_eq!(stats.switched_at, Some(2));
        assert_eq!(occ, idx.cdm(b"aaaaaaaaaa"));
        assert_eq!(pairs(&idx.cdm(b"aba")), vec![(1, 1), (3, 1)]);
    }
}
