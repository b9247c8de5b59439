//! Seeded random dictionaries and patterns for verification.
//!
//! Uniform strings rarely exercise the interesting cases, so the generator
//! mixes in periodic strings, exact duplicates and rotations of earlier
//! strings, and patterns assembled from dictionary rotations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dictionary::Dictionary;

/// Limits for one random trial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialShape {
    pub max_n: usize,
    pub max_d: usize,
    pub max_sigma: usize,
    pub max_m: usize,
}

impl Default for TrialShape {
    fn default() -> Self {
        TrialShape {
            max_n: 60,
            max_d: 6,
            max_sigma: 4,
            max_m: 40,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_string<R: Rng>(rng: &mut R, len: usize, sigma: usize) -> Vec<u8> {
    (0..len)
        .map(|_| b'a' + rng.gen_range(0..sigma) as u8)
        .collect()
}

fn rotate(s: &[u8], by: usize) -> Vec<u8> {
    let by = by % s.len();
    s[by..].iter().chain(&s[..by]).copied().collect()
}

/// A dictionary with at most `max_n` symbols over at most `max_sigma` letters.
pub fn random_dictionary<R: Rng>(rng: &mut R, shape: &TrialShape) -> Dictionary {
    let sigma = rng.gen_range(1..=shape.max_sigma.max(1));
    let d = rng.gen_range(1..=shape.max_d.max(1).min(shape.max_n));
    let mut budget = shape.max_n;
    let mut strings: Vec<Vec<u8>> = Vec::with_capacity(d);
    for h in 0..d {
        let reserve = d - h - 1;
        let cap = (budget - reserve).clamp(1, 16);
        let len = rng.gen_range(1..=cap);
        let s = match rng.gen_range(0..10) {
            0 | 1 if !strings.is_empty() => strings.choose(rng).expect("nonempty").clone(),
            2 | 3 if !strings.is_empty() => {
                let base = strings.choose(rng).expect("nonempty").clone();
                let by = rng.gen_range(0..base.len());
                rotate(&base, by)
            }
            4..=6 => {
                let period = rng.gen_range(1..=3.min(len));
                let root = random_string(rng, period, sigma);
                root.iter().copied().cycle().take(len).collect()
            }
            _ => random_string(rng, len, sigma),
        };
        let s = if s.len() > budget - reserve {
            s[..budget - reserve].to_vec()
        } else {
            s
        };
        budget -= s.len();
        strings.push(s);
    }
    Dictionary::new(&strings).expect("generated strings are nonempty")
}

/// A pattern of length `1..=max_m`, usually stitched from dictionary rotations.
pub fn random_pattern<R: Rng>(rng: &mut R, dict: &Dictionary, max_m: usize) -> Vec<u8> {
    let m = rng.gen_range(1..=max_m.max(1));
    let mut p = Vec::with_capacity(m);
    let symbols = dict.alphabet().symbols();
    while p.len() < m {
        match rng.gen_range(0..10) {
            0 => p.push(*symbols.choose(rng).expect("nonempty alphabet")),
            1 => p.push(b'#'),
            _ => {
                let s = dict.strings().choose(rng).expect("nonempty dictionary");
                let rot = rotate(s, rng.gen_range(0..s.len()));
                let take = rng.gen_range(1..=2 * rot.len());
                p.extend(rot.iter().cycle().take(take));
            }
        }
    }
    p.truncate(m);
    p
}

/// Large dictionary of uniform random strings of length `len` over `sigma` letters.
pub fn uniform_dictionary(seed: u64, n: usize, len: usize, sigma: usize) -> Dictionary {
    let mut rng = rng(seed);
    let mut strings = Vec::with_capacity(n / len + 1);
    let mut left = n;
    while left > 0 {
        let l = len.min(left);
        strings.push(random_string(&mut rng, l, sigma));
        left -= l;
    }
    Dictionary::new(&strings).expect("generated strings are nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_are_respected() {
        let shape = TrialShape::default();
        let mut r = rng(7);
        for _ in 0..500 {
            let t = random_dictionary(&mut r, &shape);
            assert!(t.n() <= shape.max_n && t.d() <= shape.max_d && t.sigma() <= shape.max_sigma);
            let p = random_pattern(&mut r, &t, shape.max_m);
            assert!(!p.is_empty() && p.len() <= shape.max_m);
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let shape = TrialShape::default();
        let a = random_dictionary(&mut rng(3), &shape);
        let b = random_dictionary(&mut rng(3), &shape);
        assert_eq!(a, b);
        assert_eq!(uniform_dictionary(1, 1000, 30, 4).n(), 1000);
    }
}
