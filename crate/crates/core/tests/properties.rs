//! Structural invariants of built indexes on small random dictionaries.

use circdict::oracle::NaiveIndex;
use circdict::{BuildOptions, CdmIndex, Dictionary};
use proptest::collection::vec;
use proptest::prelude::*;

/// Random strings plus rotated, repeated or duplicated copies of earlier ones.
fn dictionary() -> impl Strategy<Value = Dictionary> {
    let base = vec(vec(0u8..3, 1..7), 1..4);
    let copies = vec((any::<usize>(), any::<usize>(), 1usize..3), 0..3);
    (base, copies).prop_map(|(mut strings, copies)| {
        for (pick, shift, reps) in copies {
            let s = strings[pick % strings.len()].clone();
            let by = shift % s.len();
            let rotated: Vec<u8> = s[by..].iter().chain(&s[..by]).copied().collect();
            strings.push(rotated.repeat(reps));
        }
        let strings: Vec<Vec<u8>> = strings
            .into_iter()
            .map(|s| s.into_iter().map(|c| b'a' + c).collect())
            .collect();
        Dictionary::new(&strings).unwrap()
    })
}

fn index(dict: &Dictionary, s: usize) -> CdmIndex {
    CdmIndex::build(dict, BuildOptions::with_samples(s, s))
}

fn class_of(naive: &NaiveIndex, n: usize) -> Vec<usize> {
    let mut of = vec![0; n + 1];
    for (j, class) in naive.classes.iter().enumerate() {
        for &k in class {
            of[k] = j + 1;
        }
    }
    of
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pred_is_a_permutation_of_cycles(dict in dictionary()) {
        let maps = dict.position_maps();
        for k in 1..=dict.n() {
            let (h, g) = maps.phi(k);
            prop_assert_eq!(maps.phi_inv(h, g), k);
            let mut x = k;
            for _ in 0..dict.string_len(h) {
                x = maps.pred(x);
            }
            prop_assert_eq!(x, k);
            let p = maps.pred(k);
            let mut expect = vec![dict.symbol(p)];
            expect.extend(dict.circular_suffix_symbols(k));
            expect.pop();
            prop_assert_eq!(dict.circular_suffix_symbols(p), expect);
        }
    }

    #[test]
    fn prev_and_follow_are_inverse_and_edges_monotone(dict in dictionary()) {
        let idx = index(&dict, 2);
        let e = idx.ebwt();
        let n1 = idx.n_prime();
        let mut seen = vec![false; n1 + 1];
        for j in 1..=n1 {
            prop_assert_eq!(e.follow(e.prev(j)), j);
            prop_assert_eq!(e.prev(e.follow(j)), j);
            prop_assert!(!seen[e.prev(j)]);
            seen[e.prev(j)] = true;
        }
        let mut edges: Vec<(usize, u32, usize)> = (1..=n1).map(|j| (e.prev(j), e.bwt_at(j), j)).collect();
        edges.sort();
        for w in edges.windows(2) {
            prop_assert!(w[0].1 <= w[1].1);
            if w[0].1 == w[1].1 {
                prop_assert!(w[0].2 < w[1].2);
            }
        }
    }

    #[test]
    fn backward_search_matches_brute_force(dict in dictionary(), a in any::<usize>(), b in any::<usize>()) {
        let idx = index(&dict, 3);
        let naive = NaiveIndex::new(&dict);
        let maps = dict.position_maps();
        let of = class_of(&naive, dict.n());
        let n1 = idx.n_prime();
        let (l, r) = {
            let (x, y) = (1 + a % n1, 1 + b % n1);
            (x.min(y), x.max(y))
        };
        for c in 0..=idx.sigma() as u32 {
            let mut want: Vec<usize> = (l..=r)
                .flat_map(|j| naive.classes[j - 1].iter().copied())
                .map(|k| maps.pred(k))
                .filter(|&p| dict.symbol(p) as u32 == c)
                .map(|p| of[p])
                .collect();
            want.sort_unstable();
            want.dedup();
            let got: Vec<usize> = match idx.ebwt().bws(l, r, c) {
                Some((x, y)) => (x..=y).collect(),
                None => vec![],
            };
            prop_assert_eq!(got, want, "bws([{}, {}], {})", l, r, c);
        }
    }

    #[test]
    fn dictionary_is_recoverable_from_classes(dict in dictionary()) {
        // `text` holds alphabet ranks, as does BWT*.
        let idx = index(&dict, 2);
        let mut text = vec![0u8; dict.n()];
        for j in 1..=idx.n_prime() {
            let c = idx.ebwt().first_symbol(j) as u8;
            for k in idx.expand_dj(j) {
                text[k - 1] = c;
            }
        }
        prop_assert_eq!(text.as_slice(), dict.text());
    }

    #[test]
    fn lcp_values_are_downward_closed(dict in dictionary()) {
        let lcp = index(&dict, 2).materialize_lcp();
        let max = lcp.iter().skip(1).copied().max().unwrap_or(0);
        for g in 0..max {
            prop_assert!(lcp.iter().skip(1).any(|&v| v == g), "missing {} below {}", g, max);
        }
    }

    #[test]
    fn tree_intervals_nest_and_nma_is_nearest(dict in dictionary()) {
        let idx = index(&dict, 2);
        let tree = idx.tree();
        let lcp = idx.materialize_lcp();
        let n1 = idx.n_prime();
        let nodes: Vec<usize> = tree.nodes().collect();
        let ancestors = |v: usize| {
            let mut out = vec![];
            let mut x = v;
            while let Some(p) = tree.parent(x) {
                out.push(p);
                x = p;
            }
            out
        };
        for &v in &nodes {
            let (l, r) = tree.tointer(v);
            let anc = ancestors(v);
            for &u in &nodes {
                let (ul, ur) = tree.tointer(u);
                if anc.contains(&u) {
                    prop_assert!(ul <= l && r <= ur && (ul, ur) != (l, r));
                } else if u != v && !ancestors(u).contains(&v) {
                    prop_assert!(ur < l || r < ul);
                }
            }
            if l < r {
                let lambda = idx.lambda(l, r);
                if l >= 2 {
                    prop_assert!((lcp[l - 1] as usize) < lambda);
                }
                if r < n1 {
                    prop_assert!((lcp[r] as usize) < lambda);
                }
            }
            let want = std::iter::once(v).chain(anc).find(|&x| tree.is_marked(x)).unwrap();
            prop_assert_eq!(tree.fromaux(tree.nma(v)), want);
        }
        for bp in [tree.z(), tree.z_star()] {
            let bits = bp.bits();
            prop_assert_eq!(bits.count_ones() * 2, bits.len());
            prop_assert!((1..=bits.len()).all(|i| bits.rank1(i) * 2 >= i));
        }
    }

    #[test]
    fn cdm_matches_oracle_without_duplicates(dict in dictionary(), raw in vec(0u8..4, 1..30), s in 1usize..5) {
        let idx = index(&dict, s);
        let naive = NaiveIndex::new(&dict);
        let pattern: Vec<u8> = raw.into_iter().map(|c| b'a' + c).collect();
        let got: Vec<(usize, usize)> = idx.cdm(&pattern).iter().map(|o| (o.i, o.k)).collect();
        let mut unique = got.clone();
        unique.dedup();
        prop_assert_eq!(unique.len(), got.len());
        prop_assert_eq!(got, naive.cdm(&pattern));
        let t: Vec<usize> = naive.prefix_matches(&pattern).into_iter().map(|(t, _, _)| t).collect();
        prop_assert!(t.windows(2).all(|w| w[0] <= w[1]));
    }
}
