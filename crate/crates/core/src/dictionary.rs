//! Dictionary input and the position maps between text offsets and strings.
//!
//! A dictionary `T = (T_1, …, T_d)` is laid out as the concatenation
//! `T_1 T_2 … T_d` of length `n`. Position `k` (1-based) belongs to string
//! `h` at offset `g`, written `phi(k) = (h, g)`. Bytes are remapped to dense
//! ranks `0..σ` in byte order.

use crate::error::{Error, Result};
use crate::succinct::codec::{Reader, Writer};
use crate::succinct::{BitBuilder, BitVector};

/// Smallest `r` such that `s` is `s[..r]` repeated `|s| / r` times.
pub fn compute_root<T: PartialEq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    // failure function; border[i] is the longest proper border of s[..=i]
    let mut border = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    let p = n - border[n - 1];
    if n % p == 0 {
        p
    } else {
        n
    }
}

/// Byte to rank mapping over the symbols occurring in a dictionary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    ranks: [u16; 256],
}

const NO_RANK: u16 = u16::MAX;

impl Alphabet {
    pub fn from_symbols(mut symbols: Vec<u8>) -> Self {
        symbols.sort_unstable();
        symbols.dedup();
        let mut ranks = [NO_RANK; 256];
        for (r, &b) in symbols.iter().enumerate() {
            ranks[b as usize] = r as u16;
        }
        Alphabet { symbols, ranks }
    }

    pub fn sigma(&self) -> usize {
        self.symbols.len()
    }

    pub fn rank_of(&self, byte: u8) -> Option<u32> {
        match self.ranks[byte as usize] {
            NO_RANK => None,
            r => Some(r as u32),
        }
    }

    pub fn byte_of(&self, rank: u32) -> u8 {
        self.symbols[rank as usize]
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Maps a pattern to ranks; bytes outside the alphabet get the reserved rank `σ`.
    pub fn encode_pattern(&self, pattern: &[u8]) -> Vec<u32> {
        pattern
            .iter()
            .map(|&b| self.rank_of(b).unwrap_or(self.sigma() as u32))
            .collect()
    }

    pub fn write(&self, w: &mut Writer) {
        w.u16(self.symbols.len() as u16);
        w.bytes(&self.symbols);
    }

    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let sigma = r.u16()? as usize;
        if sigma > 256 {
            return Err(Error::corrupt(format!("alphabet size {sigma}")));
        }
        let symbols = r.bytes(sigma)?.to_vec();
        if symbols.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::corrupt("alphabet not strictly increasing"));
        }
        Ok(Self::from_symbols(symbols))
    }
}

/// Owned dictionary used as build input and by the naive oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dictionary {
    strings: Vec<Vec<u8>>,
    alphabet: Alphabet,
    text: Vec<u8>,
    starts: Vec<usize>,
}

impl Dictionary {
    pub fn new<S: AsRef<[u8]>>(strings: &[S]) -> Result<Self> {
        if strings.is_empty() {
            return Err(Error::invalid("dictionary has no strings"));
        }
        let strings: Vec<Vec<u8>> = strings.iter().map(|s| s.as_ref().to_vec()).collect();
        if let Some(h) = strings.iter().position(Vec::is_empty) {
            return Err(Error::invalid(format!("string {} is empty", h + 1)));
        }
        let alphabet = Alphabet::from_symbols(strings.iter().flatten().copied().collect());
        let n: usize = strings.iter().map(Vec::len).sum();
        let mut text = Vec::with_capacity(n);
        let mut starts = Vec::with_capacity(strings.len() + 1);
        for s in &strings {
            starts.push(text.len() + 1);
            text.extend(
                s.iter()
                    .map(|&b| alphabet.rank_of(b).expect("own symbol") as u8),
            );
        }
        starts.push(n + 1);
        Ok(Dictionary {
            strings,
            alphabet,
            text,
            starts,
        })
    }

    /// One string per line. A single trailing newline and `\r` line endings are accepted.
    pub fn from_text(input: &[u8]) -> Result<Self> {
        let body = input.strip_suffix(b"\n").unwrap_or(input);
        if body.is_empty() {
            return Err(Error::invalid("dictionary has no strings"));
        }
        let lines: Vec<&[u8]> = body
            .split(|&b| b == b'\n')
            .map(|l| l.strip_suffix(b"\r").unwrap_or(l))
            .collect();
        if let Some(h) = lines.iter().position(|l| l.is_empty()) {
            return Err(Error::invalid(format!("line {} is empty", h + 1)));
        }
        Self::new(&lines)
    }

    /// `u32` count, then a `u32` length and the raw bytes of each string.
    pub fn from_binary(input: &[u8]) -> Result<Self> {
        let mut r = Reader::new(input);
        let bad = |e: Error| Error::invalid(format!("binary dictionary: {e}"));
        let d = r.u32().map_err(bad)? as usize;
        let mut strings = Vec::with_capacity(d.min(input.len()));
        for _ in 0..d {
            let len = r.u32().map_err(bad)? as usize;
            strings.push(r.bytes(len).map_err(bad)?.to_vec());
        }
        r.expect_end().map_err(bad)?;
        Self::new(&strings)
    }

    pub fn to_binary(&self) -> Vec<u8> {
        let mut w = Writer::new();
        w.u32(self.strings.len() as u32);
        for s in &self.strings {
            w.u32(s.len() as u32);
            w.bytes(s);
        }
        w.into_inner()
    }

    pub fn to_text(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.n() + self.d());
        for s in &self.strings {
            out.extend_from_slice(s);
            out.push(b'\n');
        }
        out
    }

    pub fn d(&self) -> usize {
        self.strings.len()
    }

    pub fn n(&self) -> usize {
        self.text.len()
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.sigma()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn strings(&self) -> &[Vec<u8>] {
        &self.strings
    }

    /// Remapped concatenation `T_1 … T_d`, 0-based slice.
    pub fn text(&self) -> &[u8] {
        &self.text
    }

    /// Remapped symbol at 1-based position `k`.
    pub fn symbol(&self, k: usize) -> u8 {
        self.text[k - 1]
    }

    pub fn string_start(&self, h: usize) -> usize {
        self.starts[h - 1]
    }

    pub fn string_len(&self, h: usize) -> usize {
        self.starts[h] - self.starts[h - 1]
    }

    pub fn root_len(&self, h: usize) -> usize {
        let s = self.string_start(h);
        compute_root(&self.text[s - 1..s - 1 + self.string_len(h)])
    }

    /// `(h, g)` for 1-based text position `k`.
    pub fn phi(&self, k: usize) -> (usize, usize) {
        let h = self.starts.partition_point(|&s| s <= k);
        (h, k - self.starts[h - 1] + 1)
    }

    /// Remapped symbols of the circular suffix `T_k`, as a cyclic rotation of its string.
    pub fn circular_suffix_symbols(&self, k: usize) -> Vec<u8> {
        let (h, g) = self.phi(k);
        let s = self.string_start(h) - 1;
        let t = &self.text[s..s + self.string_len(h)];
        t[g - 1..].iter().chain(&t[..g - 1]).copied().collect()
    }

    /// Original bytes of the circular suffix `T_k`.
    pub fn circular_suffix(&self, k: usize) -> Vec<u8> {
        self.circular_suffix_symbols(k)
            .into_iter()
            .map(|c| self.alphabet.byte_of(c as u32))
            .collect()
    }

    /// Bitvectors `B1` (string starts over `1..=n`) and `B3` (root starts over `1..=n*`).
    pub fn position_maps(&self) -> PositionMaps {
        let mut b1 = BitBuilder::zeros(self.n());
        let mut b3 = BitBuilder::new();
        for h in 1..=self.d() {
            b1.set(self.string_start(h), true);
            let r = self.root_len(h);
            b3.push(true);
            for _ in 1..r {
                b3.push(false);
            }
        }
        PositionMaps {
            b1: b1.build(),
            b3: b3.build(),
        }
    }
}

/// Constant-time conversions between text positions and `(string, offset)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionMaps {
    b1: BitVector,
    b3: BitVector,
}

impl PositionMaps {
    pub fn from_parts(b1: BitVector, b3: BitVector) -> Result<Self> {
        if b1.count_ones() != b3.count_ones() || b1.count_ones() == 0 || !b1.get(1) || !b3.get(1) {
            return Err(Error::corrupt("position maps disagree on string count"));
        }
        Ok(PositionMaps { b1, b3 })
    }

    pub fn b1(&self) -> &BitVector {
        &self.b1
    }

    pub fn b3(&self) -> &BitVector {
        &self.b3
    }

    pub fn n(&self) -> usize {
        self.b1.len()
    }

    pub fn d(&self) -> usize {
        self.b1.count_ones()
    }

    /// Total length of the string roots.
    pub fn n_star(&self) -> usize {
        self.b3.len()
    }

    pub fn string_of(&self, k: usize) -> usize {
        self.b1.rank1(k)
    }

    pub fn phi(&self, k: usize) -> (usize, usize) {
        let h = self.b1.rank1(k);
        (h, k - self.b1.select1(h) + 1)
    }

    pub fn try_phi(&self, k: usize) -> Result<(usize, usize)> {
        if k == 0 || k > self.n() {
            return Err(Error::OutOfRange {
                what: "text position",
                index: k,
                bound: self.n(),
            });
        }
        Ok(self.phi(k))
    }

    pub fn phi_inv(&self, h: usize, g: usize) -> usize {
        self.b1.select1(h) + g - 1
    }

    pub fn try_phi_inv(&self, h: usize, g: usize) -> Result<usize> {
        if h == 0 || h > self.d() {
            return Err(Error::OutOfRange {
                what: "string index",
                index: h,
                bound: self.d(),
            });
        }
        if g == 0 || g > self.string_len(h) {
            return Err(Error::OutOfRange {
                what: "string offset",
                index: g,
                bound: self.string_len(h),
            });
        }
        Ok(self.phi_inv(h, g))
    }

    /// Cyclic predecessor of `k` within its string.
    pub fn pred(&self, k: usize) -> usize {
        let h = self.b1.rank1(k);
        let start = self.b1.select1(h);
        if k == start {
            self.b1.select1(h + 1) - 1
        } else {
            k - 1
        }
    }

    pub fn string_start(&self, h: usize) -> usize {
        self.b1.select1(h)
    }

    pub fn string_len(&self, h: usize) -> usize {
        self.b1.select1(h + 1) - self.b1.select1(h)
    }

    pub fn root_len(&self, h: usize) -> usize {
        self.b3.select1(h + 1) - self.b3.select1(h)
    }

    /// `|T_k|`, the length of the string holding position `k`.
    pub fn len_at(&self, k: usize) -> usize {
        self.string_len(self.b1.rank1(k))
    }

    /// The class `[k]~` of text positions whose circular suffix equals `T_k`.
    pub fn expand_class(&self, k: usize) -> impl Iterator<Item = usize> {
        let h = self.b1.rank1(k);
        let root = self.root_len(h);
        let copies = self.string_len(h) / root;
        let start = self.string_start(h);
        let base = start + (k - start) % root;
        (0..copies).map(move |w| base + w * root)
    }

    pub fn size_in_bytes(&self) -> usize {
        self.b1.size_in_bytes() + self.b3.size_in_bytes()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn running() -> Dictionary {
        Dictionary::new(&["abcabc", "bcabc", "cab"]).unwrap()
    }

    #[test]
    fn running_example_maps() {
        let t = running();
        assert_eq!((t.n(), t.d(), t.sigma()), (14, 3, 3));
        let pm = t.position_maps();
        assert_eq!(pm.b1().to_bit_string(), "10000010000100");
        assert_eq!(pm.b3().to_bit_string(), "10010000100");
        assert_eq!(pm.phi(7), (2, 1));
        assert_eq!(pm.phi_inv(2, 5), 11);
        assert_eq!(pm.pred(1), 6);
        assert_eq!(pm.pred(7), 11);
        assert_eq!(pm.pred(13), 12);
        assert_eq!(pm.string_len(2), 5);
        assert_eq!(pm.root_len(1), 3);
        assert_eq!(pm.n_star(), 11);
        assert_eq!(t.circular_suffix(7), b"bcabc");
        assert_eq!(t.circular_suffix(10), b"bcbca");
        assert_eq!(t.phi(13), (3, 2));
        assert_eq!(pm.expand_class(4).collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(pm.expand_class(13).collect::<Vec<_>>(), vec![13]);
    }

    #[test]
    fn roots() {
        assert_eq!(compute_root(b"aabaab"), 3);
        assert_eq!(compute_root(b"aaaa"), 1);
        assert_eq!(compute_root(b"abcab"), 5);
        assert_eq!(compute_root(b"x"), 1);
    }

    #[test]
    fn range_errors() {
        let pm = running().position_maps();
        assert!(pm.try_phi(0).is_err());
        assert!(pm.try_phi(15).is_err());
        assert!(pm.try_phi_inv(4, 1).is_err());
        assert!(pm.try_phi_inv(3, 4).is_err());
        assert_eq!(pm.try_phi_inv(3, 3).unwrap(), 14);
    }

    #[test]
    fn input_formats() {
        assert!(Dictionary::from_text(b"").is_err());
        assert!(Dictionary::from_text(b"ab\n\ncd\n").is_err());
        let t = Dictionary::from_text(b"abcabc\r\nbcabc\ncab").unwrap();
        assert_eq!(t, running());
        let bin = t.to_binary();
        assert_eq!(Dictionary::from_binary(&bin).unwrap(), t);
        assert!(Dictionary::from_binary(&bin[..bin.len() - 1]).is_err());
        assert_eq!(Dictionary::from_text(&t.to_text()).unwrap(), t);
        assert!(Dictionary::new::<&[u8]>(&[]).is_err());
    }

    #[test]
    fn out_of_alphabet_pattern() {
        let t = running();
        assert_eq!(t.alphabet().encode_pattern(b"azc"), vec![0, 3, 2]);
    }

    fn naive_root(s: &[u8]) -> usize {
        (1..=s.len())
            .find(|&r| s.len() % r == 0 && (0..s.len()).all(|i| s[i] == s[i % r]))
            .unwrap()
    }

    proptest! {
        #[test]
        fn root_matches_divisor_scan(s in proptest::collection::vec(0u8..3, 1..40), reps in 1usize..4) {
            let s: Vec<u8> = s.iter().copied().cycle().take(s.len() * reps).collect();
            prop_assert_eq!(compute_root(&s), naive_root(&s));
        }

        #[test]
        fn phi_round_trip(lens in proptest::collection::vec(1usize..9, 1..8)) {
            let strings: Vec<Vec<u8>> = lens.iter().map(|&l| vec![b'a'; l]).collect();
            let t = Dictionary::new(&strings).unwrap();
            let pm = t.position_maps();
            for k in 1..=t.n() {
                let (h, g) = pm.phi(k);
                prop_assert_eq!((h, g), t.phi(k));
                prop_assert_eq!(pm.phi_inv(h, g), k);
                let p = pm.pred(k);
                prop_assert_eq!(pm.phi(p).0, h);
            }
        }
    }
}
