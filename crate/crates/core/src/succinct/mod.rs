//! Succinct building blocks: bitvectors, sequences, parentheses and RMQ.

pub mod bitvec;
pub mod bp;
pub mod codec;
pub mod rmq;
pub mod wavelet;

pub use bitvec::{BitBuilder, BitVector};
pub use bp::BalancedParens;
pub use rmq::Rmq;
pub use wavelet::WaveletMatrix;
