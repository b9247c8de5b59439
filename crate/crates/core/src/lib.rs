//! Compressed index for circular dictionary matching.
//!
//! Given strings `T_1, …, T_d`, the index reports every position of a
//! pattern `P` at which some rotation (circular suffix) of some `T_h` occurs,
//! using space close to the extended BWT of the dictionary.
//!
//! ```
//! use circdict::{CdmIndex, BuildOptions, Dictionary};
//!
//! let dict = Dictionary::new(&["abcabc", "bcabc", "cab"]).unwrap();
//! let index = CdmIndex::build(&dict, BuildOptions::default());
//! let hits: Vec<(usize, usize)> = index.cdm(b"abcbca").iter().map(|o| (o.i, o.k)).collect();
//! assert_eq!(hits, vec![(1, 9), (1, 13), (2, 10), (4, 14)]);
//! ```

pub mod cli;
pub mod corpus;
pub mod csa;
pub mod dictionary;
pub mod ebwt;
pub mod error;
pub mod index;
pub mod lcp;
pub mod matcher;
pub mod oracle;
pub mod persist;
pub mod succinct;
pub mod sufftree;
pub mod tables;

pub use dictionary::{Alphabet, Dictionary, PositionMaps};
pub use error::{Error, Result};
pub use index::{BuildOptions, CdmIndex};
pub use matcher::{Matcher, Occurrence, PrefixMatches, QueryStats};
