//! Range minimum queries in `2n + o(n)` bits.
//!
//! The array is encoded as the parenthesis sequence of its min-stack sweep:
//! element `x` pops every strictly larger element (one `0` each) and then
//! pushes itself (one `1`). Element `x` owns the `x`-th open. The leftmost
//! minimum of `A[l..=r]` is then `l` when no excess in the open range dips
//! below `excess(open(l))`, and otherwise the element whose open follows the
//! rightmost excess minimum.

use super::bitvec::BitBuilder;
use super::bp::BalancedParens;
use super::codec::{Reader, Writer};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rmq {
    len: usize,
    bp: BalancedParens,
}

impl Rmq {
    pub fn new<T: Ord + Copy>(values: &[T]) -> Self {
        let mut bits = BitBuilder::with_capacity(2 * values.len());
        let mut stack: Vec<T> = Vec::new();
        for &v in values {
            while stack.last().is_some_and(|&top| top > v) {
                stack.pop();
                bits.push(false);
            }
            stack.push(v);
            bits.push(true);
        }
        for _ in stack {
            bits.push(false);
        }
        Rmq {
            len: values.len(),
            bp: BalancedParens::new(bits.build()),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// 1-based position of the leftmost minimum of `A[l..=r]`.
    pub fn query(&self, l: usize, r: usize) -> usize {
        assert!(
            1 <= l && l <= r && r <= self.len,
            "bad rmq range {l}..={r} of {}",
            self.len
        );
        if l == r {
            return l;
        }
        let p = self.bp.select_open(l);
        let q = self.bp.select_open(r);
        let (m, v) = self.bp.rightmost_min(p, q);
        if v == self.bp.excess(p) {
            l
        } else {
            self.bp.rank_open(m + 1)
        }
    }

    pub fn size_in_bytes(&self) -> usize {
        self.bp.size_in_bytes() + 8
    }

    pub fn write(&self, w: &mut Writer) {
        self.bp.write(w);
    }

    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let bp = BalancedParens::read(r)?;
        Ok(Rmq {
            len: bp.len() / 2,
            bp,
        })
    }
}
