//! On-disk index format.
//!
//! ```text
//! offset  size  field
//! 0       4     magic "CDMI"
//! 4       2     format version (1)
//! 6       2     reserved, zero
//! 8       8     n
//! 16      8     d
//! 24      8     n'
//! 32      8     n*
//! 40      4     sigma
//! 44      4     SA sampling factor
//! 48      4     LCP sampling factor
//! 52      8     payload length in bytes
//! 60      4     CRC-32 (IEEE) of the payload
//! 64      ...   payload
//! ```
//!
//! The payload is the concatenation of the alphabet, `B1`, `B3`, the BWT
//! levels, `B2`, the suffix array samples, the LCP samples with their RMQ,
//! `Z`, `B7`, `B8` and the `Len` RMQ. All integers are little-endian and
//! bitvectors are stored LSB-first; rank and select directories are rebuilt
//! on load.

use std::path::Path;

use crate::csa::SampledSuffixArray;
use crate::dictionary::{Alphabet, PositionMaps};
use crate::ebwt::Ebwt;
use crate::error::{Error, Result};
use crate::index::CdmIndex;
use crate::lcp::SampledLcp;
use crate::succinct::codec::{Reader, Writer};
use crate::succinct::{BitVector, Rmq};
use crate::sufftree::SuffixTreeTopology;

pub const MAGIC: [u8; 4] = *b"CDMI";
pub const VERSION: u16 = 1;
pub const HEADER_LEN: usize = 64;

pub fn to_bytes(idx: &CdmIndex) -> Vec<u8> {
    let mut p = Writer::new();
    idx.alphabet.write(&mut p);
    idx.maps.b1().write(&mut p);
    idx.maps.b3().write(&mut p);
    idx.ebwt.write(&mut p);
    idx.sa.write(&mut p);
    idx.lcp.write(&mut p);
    idx.tree.write(&mut p);
    idx.len_rmq.write(&mut p);
    let payload = p.into_inner();

    let mut w = Writer::new();
    w.bytes(&MAGIC);
    w.u16(VERSION);
    w.u16(0);
    w.u64(idx.n() as u64);
    w.u64(idx.d() as u64);
    w.u64(idx.n_prime() as u64);
    w.u64(idx.n_star() as u64);
    w.u32(idx.sigma() as u32);
    w.u32(idx.sa.sample_rate() as u32);
    w.u32(idx.lcp.sample_rate() as u32);
    w.u64(payload.len() as u64);
    w.u32(crc32fast::hash(&payload));
    debug_assert_eq!(w.len(), HEADER_LEN);
    w.bytes(&payload);
    w.into_inner()
}

pub fn from_bytes(buf: &[u8]) -> Result<CdmIndex> {
    let mut h = Reader::new(buf);
    if h.bytes(4)? != MAGIC {
        return Err(Error::corrupt("not an index file (bad magic)"));
    }
    let version = h.u16()?;
    if version != VERSION {
        return Err(Error::Version {
            found: version as u32,
            expected: VERSION as u32,
        });
    }
    let _reserved = h.u16()?;
    let n = h.u64()? as usize;
    let d = h.u64()? as usize;
    let n_prime = h.u64()? as usize;
    let n_star = h.u64()? as usize;
    let sigma = h.u32()? as usize;
    let s_sa = h.u32()? as usize;
    let s_lcp = h.u32()? as usize;
    let payload_len = h.u64()? as usize;
    let crc = h.u32()?;
    if h.remaining() != payload_len {
        return Err(Error::corrupt(format!(
            "payload length {} does not match header {payload_len}",
            h.remaining()
        )));
    }
    let payload = h.bytes(payload_len)?;
    if crc32fast::hash(payload) != crc {
        return Err(Error::corrupt("checksum mismatch"));
    }

    let mut r = Reader::new(payload);
    let alphabet = Alphabet::read(&mut r)?;
    let maps = PositionMaps::from_parts(BitVector::read(&mut r)?, BitVector::read(&mut r)?)?;
    let ebwt = Ebwt::read(&mut r)?;
    let sa = SampledSuffixArray::read(&mut r)?;
    let lcp = SampledLcp::read(&mut r)?;
    let tree = SuffixTreeTopology::read(&mut r)?;
    let len_rmq = Rmq::read(&mut r)?;
    r.expect_end()?;

    let idx = CdmIndex {
        alphabet,
        maps,
        ebwt,
        sa,
        lcp,
        tree,
        len_rmq,
    };
    let fields = [
        ("n", idx.n(), n),
        ("d", idx.d(), d),
        ("n'", idx.n_prime(), n_prime),
        ("n*", idx.n_star(), n_star),
        ("sigma", idx.sigma(), sigma),
        ("sigma (BWT)", idx.ebwt.sigma(), sigma),
        ("SA sampling", idx.sa.sample_rate(), s_sa),
        ("LCP sampling", idx.lcp.sample_rate(), s_lcp),
        ("Len RMQ length", idx.len_rmq.len(), n_star),
        ("suffix tree leaves", idx.tree.b7().count_ones(), n_prime),
        ("B4 classes", idx.sa.b4().count_ones(), n_prime),
    ];
    for (what, got, want) in fields {
        if got != want {
            return Err(Error::corrupt(format!(
                "{what} is {got}, header says {want}"
            )));
        }
    }
    Ok(idx)
}

pub fn save(idx: &CdmIndex, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_bytes(idx))?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<CdmIndex> {
    from_bytes(&std::fs::read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BuildOptions, Dictionary};

    fn running() -> CdmIndex {
        let t = Dictionary::new(&["abcabc", "bcabc", "cab"]).unwrap();
        CdmIndex::build(&t, BuildOptions::with_samples(2, 2))
    }

    #[test]
    fn round_trip() {
        let idx = running();
        let bytes = to_bytes(&idx);
        assert_eq!(&bytes[..4], b"CDMI");
        let back = from_bytes(&bytes).unwrap();
        assert_eq!(back, idx);
        assert_eq!(back.cdm(b"abcbca"), idx.cdm(b"abcbca"));
    }

    #[test]
    fn every_flipped_payload_byte_is_rejected() {
        let bytes = to_bytes(&running());
        for pos in HEADER_LEN..bytes.len() {
            let mut bad = bytes.clone();
            bad[pos] ^= 0x5A;
            assert!(
                matches!(from_bytes(&bad), Err(Error::Corrupt(_))),
                "byte {pos}"
            );
        }
    }

    #[test]
    fn header_damage_is_rejected() {
        let bytes = to_bytes(&running());
        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert!(from_bytes(&bad).is_err());
        let mut bad = bytes.clone();
        bad[4] = 9;
        assert!(matches!(from_bytes(&bad), Err(Error::Version { .. })));
        let mut bad = bytes.clone();
        bad[8] ^= 1;
        assert!(from_bytes(&bad).is_err());
        assert!(from_bytes(&bytes[..bytes.len() - 1]).is_err());
        assert!(from_bytes(&bytes[..10]).is_err());
    }
}
