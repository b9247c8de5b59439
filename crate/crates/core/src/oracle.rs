//! Brute-force reference implementation used to check the index.
//!
//! Everything here is computed straight from the definitions over
//! explicit strings, with no shared code on the compressed path. Circular
//! suffixes are compared through their first `2n` symbols, which separates
//! any two distinct infinite powers.

use std::collections::BTreeSet;

use crate::dictionary::Dictionary;
use crate::index::CdmIndex;

/// Naive tables of a small dictionary.
#[derive(Clone, Debug)]
pub struct NaiveIndex {
    dict: Dictionary,
    /// Classes `D_1..D_{n'}` of sorted positions.
    pub classes: Vec<Vec<usize>>,
    /// First `2n` symbols of each `S_j`.
    keys: Vec<Vec<u8>>,
}

impl NaiveIndex {
    pub fn new(dict: &Dictionary) -> Self {
        let n = dict.n();
        let expand = |k: usize| -> Vec<u8> {
            let s = dict.circular_suffix_symbols(k);
            s.iter().copied().cycle().take(2 * n).collect()
        };
        let mut all: Vec<(Vec<u8>, usize)> = (1..=n).map(|k| (expand(k), k)).collect();
        all.sort();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut keys: Vec<Vec<u8>> = Vec::new();
        for (key, k) in all {
            if keys.last() != Some(&key) {
                keys.push(key);
                classes.push(Vec::new());
            }
            classes.last_mut().expect("just pushed").push(k);
        }
        NaiveIndex {
            dict: dict.clone(),
            classes,
            keys,
        }
    }

    pub fn dict(&self) -> &Dictionary {
        &self.dict
    }

    pub fn n_prime(&self) -> usize {
        self.classes.len()
    }

    fn in_root(&self, k: usize) -> bool {
        let (h, g) = self.dict.phi(k);
        let s = self.dict.string_start(h) - 1;
        let t = &self.dict.text()[s..s + self.dict.string_len(h)];
        let root = (1..=t.len())
            .find(|&r| t.len() % r == 0 && (0..t.len()).all(|x| t[x] == t[x % r]))
            .expect("whole string is a root");
        g <= root
    }

    pub fn bwt(&self) -> Vec<u8> {
        self.classes
            .iter()
            .map(|c| {
                let s = self.dict.circular_suffix_symbols(c[0]);
                s[s.len() - 1]
            })
            .collect()
    }

    pub fn bwt_star(&self) -> Vec<u8> {
        self.keys.iter().map(|k| k[0]).collect()
    }

    pub fn sa(&self) -> Vec<usize> {
        self.classes
            .iter()
            .flat_map(|c| c.iter().copied().filter(|&k| self.in_root(k)))
            .collect()
    }

    /// `lcp[j - 1] = LCP[j]`, `LCP[1] = 0`.
    pub fn lcp(&self) -> Vec<usize> {
        let mut out = vec![0];
        for j in 1..self.keys.len() {
            let (a, b) = (&self.keys[j - 1], &self.keys[j]);
            out.push(a.iter().zip(b).take_while(|(x, y)| x == y).count());
        }
        out
    }

    pub fn len_array(&self) -> Vec<usize> {
        self.sa()
            .into_iter()
            .map(|k| self.dict.string_len(self.dict.phi(k).0))
            .collect()
    }

    fn min_len(&self, j: usize) -> usize {
        self.classes[j - 1]
            .iter()
            .map(|&k| self.dict.string_len(self.dict.phi(k).0))
            .min()
            .expect("nonempty class")
    }

    /// Every node `[l, r]` of the suffix tree: maximal intervals of classes sharing a prefix.
    pub fn nodes(&self) -> BTreeSet<(usize, usize)> {
        let lcp = self.lcp();
        let n1 = self.n_prime();
        let mut out = BTreeSet::new();
        for j in 1..=n1 {
            out.insert((j, j));
            // lcp(S_x, S_j) for every x
            let mut to = vec![0usize; n1 + 1];
            let mut m = usize::MAX;
            for x in (1..j).rev() {
                m = m.min(lcp[x]);
                to[x] = m;
            }
            m = usize::MAX;
            for x in j + 1..=n1 {
                m = m.min(lcp[x - 1]);
                to[x] = m;
            }
            let thresholds: BTreeSet<usize> = (1..=n1).filter(|&x| x != j).map(|x| to[x]).collect();
            for t in thresholds {
                let mut l = j;
                while l > 1 && to[l - 1] >= t {
                    l -= 1;
                }
                let mut r = j;
                while r < n1 && to[r + 1] >= t {
                    r += 1;
                }
                out.insert((l, r));
            }
        }
        out
    }

    /// `λ` of a node with `l < r`.
    pub fn lambda(&self, l: usize, r: usize) -> usize {
        let lcp = self.lcp();
        (l + 1..=r).map(|x| lcp[x - 1]).min().expect("l < r")
    }

    /// Marked nodes, sorted.
    pub fn marked(&self) -> BTreeSet<(usize, usize)> {
        let nodes = self.nodes();
        let mut out = BTreeSet::new();
        out.insert((1, self.n_prime()));
        for &(l, r) in &nodes {
            let parent = nodes
                .iter()
                .filter(|&&(pl, pr)| pl <= l && r <= pr && (pl, pr) != (l, r))
                .min_by_key(|&&(pl, pr)| pr - pl);
            let Some(&(pl, pr)) = parent else { continue };
            let lam = self.lambda(pl, pr);
            if (pl..=pr)
                .filter(|&x| x < l || x > r)
                .any(|x| self.min_len(x) <= lam)
            {
                out.insert((l, r));
            }
        }
        out
    }

    /// Symbol `x` (0-based) of `S_j`, unbounded.
    fn symbol(&self, j: usize, x: usize) -> u8 {
        let s = self.dict.circular_suffix_symbols(self.classes[j - 1][0]);
        s[x % s.len()]
    }

    /// `t_i` and `[l_i, r_i]` for every `i`.
    pub fn prefix_matches(&self, pattern: &[u8]) -> Vec<(usize, usize, usize)> {
        let p = self.dict.alphabet().encode_pattern(pattern);
        let m = p.len();
        (1..=m)
            .map(|i| {
                let common: Vec<usize> = (1..=self.n_prime())
                    .map(|j| {
                        (i..=m)
                            .take_while(|&x| p[x - 1] == self.symbol(j, x - i) as u32)
                            .count()
                    })
                    .collect();
                let best = *common.iter().max().expect("nonempty");
                let l = common.iter().position(|&c| c >= best).expect("max exists") + 1;
                let r = common.iter().rposition(|&c| c >= best).expect("max exists") + 1;
                (i + best - 1, l, r)
            })
            .collect()
    }

    /// `Cdm(P)` as sorted `(i, k)` pairs, by direct comparison.
    pub fn cdm(&self, pattern: &[u8]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=pattern.len() {
            for k in 1..=self.dict.n() {
                let t = self.dict.circular_suffix(k);
                if pattern[i - 1..].starts_with(&t) {
                    out.push((i, k));
                }
            }
        }
        out
    }
}

/// Outcome of comparing an index with the naive tables.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check<T: PartialEq + std::fmt::Debug>(
        &mut self,
        what: impl FnOnce() -> String,
        got: T,
        want: T,
    ) {
        self.checks += 1;
        if got != want {
            self.failures
                .push(format!("{}: got {got:?}, want {want:?}", what()));
        }
    }

    fn bound(&mut self, what: impl FnOnce() -> String, got: usize, limit: usize) {
        self.checks += 1;
        if got > limit {
            self.failures
                .push(format!("{}: {got} exceeds {limit}", what()));
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// Compares every table and every query of `idx` against the naive oracle.
pub fn check_index(dict: &Dictionary, idx: &CdmIndex, patterns: &[Vec<u8>]) -> Report {
    let naive = NaiveIndex::new(dict);
    let mut rep = Report::default();
    rep.check(|| "n'".into(), idx.n_prime(), naive.n_prime());
    if idx.n_prime() != naive.n_prime() {
        return rep;
    }
    let bwt: Vec<u8> = idx.ebwt().bwt().iter().map(|c| c as u8).collect();
    rep.check(|| "BWT".into(), bwt, naive.bwt());
    let star: Vec<u8> = (1..=idx.n_prime())
        .map(|j| idx.ebwt().first_symbol(j) as u8)
        .collect();
    rep.check(|| "BWT*".into(), star, naive.bwt_star());
    for j in 1..=idx.n_prime() {
        rep.check(
            || format!("D_{j}"),
            idx.expand_dj(j),
            naive.classes[j - 1].clone(),
        );
    }
    let sa = naive.sa();
    rep.check(|| "n*".into(), idx.n_star(), sa.len());
    let lens = naive.len_array();
    for t in 1..=sa.len().min(idx.n_star()) {
        rep.check(|| format!("SA[{t}]"), idx.sa_lookup(t), sa[t - 1]);
        rep.check(|| format!("Len[{t}]"), idx.len_at_slot(t), lens[t - 1]);
    }
    let lcp = naive.lcp();
    for j in 2..=idx.n_prime() {
        rep.check(|| format!("LCP[{j}]"), idx.lcp_lookup(j), lcp[j - 1]);
    }
    let marked: BTreeSet<(usize, usize)> = idx.tree().marked_intervals().into_iter().collect();
    rep.check(|| "marked nodes".into(), marked, naive.marked());
    let nodes: BTreeSet<(usize, usize)> =
        idx.tree().nodes().map(|i| idx.tree().tointer(i)).collect();
    rep.check(|| "tree nodes".into(), nodes, naive.nodes());
    rep.merge(check_bounds(idx, patterns));
    for p in patterns {
        let label = String::from_utf8_lossy(p).into_owned();
        let want = naive.cdm(p);
        let pairs =
            |o: Vec<crate::Occurrence>| o.into_iter().map(|o| (o.i, o.k)).collect::<Vec<_>>();
        rep.check(|| format!("cdm({label})"), pairs(idx.cdm(p)), want.clone());
        rep.check(
            || format!("cdm_adaptive({label})"),
            pairs(idx.cdm_adaptive(p)),
            want,
        );
        let pm = idx.prefix_matches(p);
        let got: Vec<(usize, usize, usize)> =
            (0..pm.len()).map(|x| (pm.t[x], pm.l[x], pm.r[x])).collect();
        rep.check(
            || format!("prefix matches({label})"),
            got,
            naive.prefix_matches(p),
        );
    }
    rep
}

/// Checks the work counters against their worst-case bounds: fewer than
/// `s_sa` steps per SA lookup, at most `2 s_lcp - 2` per LCP lookup, at most
/// `2m + 1` quadruple steps per pattern and at most `3(occ_i + 1) + 2(d + 1)`
/// `find_min_len` calls per start position.
pub fn check_bounds(idx: &CdmIndex, patterns: &[Vec<u8>]) -> Report {
    let mut rep = Report::default();
    let (s_sa, s_lcp) = (idx.suffix_array().sample_rate(), idx.lcp().sample_rate());
    for t in 1..=idx.n_star() {
        let (_, steps) = idx.suffix_array().lookup_counted(t, idx.ebwt());
        rep.bound(|| format!("SA[{t}] steps"), steps, s_sa - 1);
    }
    for j in 2..=idx.n_prime() {
        let (_, steps) = idx.lcp().lookup_counted(j, idx.ebwt());
        rep.bound(|| format!("LCP[{j}] steps"), steps, 2 * s_lcp - 2);
    }
    for p in patterns {
        let label = String::from_utf8_lossy(p);
        let (_, st) = idx.cdm_with_stats(p);
        rep.bound(
            || format!("quadruple steps({label})"),
            st.quadruple_steps,
            2 * p.len() + 1,
        );
        for (x, (&calls, &occ)) in st
            .find_min_len_calls
            .iter()
            .zip(&st.occurrences)
            .enumerate()
        {
            let limit = 3 * (occ + 1) + 2 * (idx.d() + 1);
            rep.bound(
                || format!("find_min_len calls({label}, i={})", x + 1),
                calls,
                limit,
            );
        }
    }
    rep
}
