//! Suffix tree topology over the classes and its marked subtree.
//!
//! Node `[l, r]` of `Suff` is a maximal class interval sharing a prefix of
//! length `λ = min LCP[l+1..=r]` (a leaf when `l = r`). The tree is kept as
//! a parenthesis sequence `Z` in preorder with children by increasing `l`;
//! `B7` flags the opens of leaves.
//!
//! A non-root node `u` with parent `v` is marked when some class of
//! `v \ u` holds a string of length at most `λ(v)`. `B8` flags both
//! parentheses of marked nodes, so `Z*`, the subsequence of `Z` under `B8`,
//! is the marked subtree `Suff*` induced by ancestry.

use crate::error::{Error, Result};
use crate::succinct::codec::{Reader, Writer};
use crate::succinct::{BalancedParens, BitBuilder, BitVector};

const LEAF: u32 = u32::MAX;

/// Explicit lcp-interval tree, nodes in postorder.
#[derive(Clone, Debug, Default)]
pub struct IntervalTree {
    pub l: Vec<u32>,
    pub r: Vec<u32>,
    /// `λ` of each node, `u32::MAX` at leaves.
    pub lambda: Vec<u32>,
    first_child: Vec<u32>,
    child_count: Vec<u32>,
    children: Vec<u32>,
}

impl IntervalTree {
    /// Builds from the full LCP array (`lcp[j - 1] = LCP[j]`).
    pub fn new(lcp: &[u32]) -> Self {
        let n = lcp.len();
        let mut t = IntervalTree::default();
        if n == 1 {
            t.add(1, 1, LEAF, &[]);
            return t;
        }
        let mut frames: Vec<(i64, u32, usize)> = vec![(0, 1, 0)];
        let mut pending: Vec<u32> = Vec::new();
        for i in 1..=n {
            let mut last = t.add(i as u32, i as u32, LEAF, &[]);
            let next = if i < n { lcp[i] as i64 } else { -1 };
            while let Some(&(lam, l, start)) = frames.last() {
                if next >= lam {
                    break;
                }
                frames.pop();
                pending.push(last);
                let kids = pending.split_off(start);
                last = t.add(l, i as u32, lam as u32, &kids);
            }
            match frames.last() {
                None => break,
                Some(&(lam, _, _)) if next > lam => {
                    frames.push((next, t.l[last as usize], pending.len()));
                    pending.push(last);
                }
                Some(_) => pending.push(last),
            }
        }
        t
    }

    fn add(&mut self, l: u32, r: u32, lambda: u32, kids: &[u32]) -> u32 {
        self.l.push(l);
        self.r.push(r);
        self.lambda.push(lambda);
        self.first_child.push(self.children.len() as u32);
        self.child_count.push(kids.len() as u32);
        self.children.extend_from_slice(kids);
        (self.l.len() - 1) as u32
    }

    pub fn len(&self) -> usize {
        self.l.len()
    }

    pub fn is_empty(&self) -> bool {
        self.l.is_empty()
    }

    pub fn root(&self) -> usize {
        self.len() - 1
    }

    pub fn children(&self, v: usize) -> &[u32] {
        let s = self.first_child[v] as usize;
        &self.children[s..s + self.child_count[v] as usize]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.lambda[v] == LEAF
    }

    /// Marked flags given the shortest string length of every class.
    pub fn marked(&self, min_len: &[usize]) -> Vec<bool> {
        let mut lo = vec![usize::MAX; self.len()];
        let mut marked = vec![false; self.len()];
        for v in 0..self.len() {
            let kids = self.children(v);
            if kids.is_empty() {
                lo[v] = min_len[self.l[v] as usize - 1];
                continue;
            }
            let mins: Vec<usize> = kids.iter().map(|&c| lo[c as usize]).collect();
            lo[v] = mins.iter().copied().min().unwrap_or(usize::MAX);
            let mut suffix = vec![usize::MAX; mins.len() + 1];
            for x in (0..mins.len()).rev() {
                suffix[x] = suffix[x + 1].min(mins[x]);
            }
            let mut prefix = usize::MAX;
            for (x, &c) in kids.iter().enumerate() {
                let others = prefix.min(suffix[x + 1]);
                marked[c as usize] = others <= self.lambda[v] as usize;
                prefix = prefix.min(mins[x]);
            }
        }
        let root = self.root();
        marked[root] = true;
        marked
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixTreeTopology {
    z: BalancedParens,
    b7: BitVector,
    b8: BitVector,
    z_star: BalancedParens,
}

impl SuffixTreeTopology {
    pub fn new(lcp: &[u32], min_len: &[usize]) -> Self {
        let tree = IntervalTree::new(lcp);
        let marked = tree.marked(min_len);
        Self::from_tree(&tree, &marked)
    }

    pub fn from_tree(tree: &IntervalTree, marked: &[bool]) -> Self {
        let cap = 2 * tree.len();
        let mut z = BitBuilder::with_capacity(cap);
        let mut b7 = BitBuilder::with_capacity(cap);
        let mut b8 = BitBuilder::with_capacity(cap);
        let mut zs = BitBuilder::new();
        let mut stack: Vec<(usize, usize)> = vec![(tree.root(), 0)];
        let enter = |v: usize,
                     z: &mut BitBuilder,
                     b7: &mut BitBuilder,
                     b8: &mut BitBuilder,
                     zs: &mut BitBuilder| {
            z.push(true);
            b7.push(tree.is_leaf(v));
            b8.push(marked[v]);
            if marked[v] {
                zs.push(true);
            }
        };
        enter(tree.root(), &mut z, &mut b7, &mut b8, &mut zs);
        while let Some((v, next)) = stack.pop() {
            let kids = tree.children(v);
            if next < kids.len() {
                stack.push((v, next + 1));
                let c = kids[next] as usize;
                enter(c, &mut z, &mut b7, &mut b8, &mut zs);
                stack.push((c, 0));
            } else {
                z.push(false);
                b7.push(false);
                b8.push(marked[v]);
                if marked[v] {
                    zs.push(false);
                }
            }
        }
        SuffixTreeTopology {
            z: BalancedParens::new(z.build()),
            b7: b7.build(),
            b8: b8.build(),
            z_star: BalancedParens::new(zs.build()),
        }
    }

    pub fn z(&self) -> &BalancedParens {
        &self.z
    }

    pub fn b7(&self) -> &BitVector {
        &self.b7
    }

    pub fn b8(&self) -> &BitVector {
        &self.b8
    }

    pub fn z_star(&self) -> &BalancedParens {
        &self.z_star
    }

    pub fn node_count(&self) -> usize {
        self.z.len() / 2
    }

    pub fn root(&self) -> usize {
        1
    }

    pub fn is_leaf(&self, i: usize) -> bool {
        self.b7.get(i)
    }

    pub fn is_marked(&self, i: usize) -> bool {
        self.b8.get(i)
    }

    /// Open of node `[l, r]`; `(l, r)` must be a node of `Suff`.
    pub fn frominter(&self, l: usize, r: usize) -> usize {
        self.z.lca(self.b7.select1(l), self.b7.select1(r))
    }

    pub fn try_frominter(&self, l: usize, r: usize) -> Result<usize> {
        let leaves = self.b7.count_ones();
        if l == 0 || l > r || r > leaves {
            return Err(Error::OutOfRange {
                what: "class interval end",
                index: if l == 0 || l > r { l } else { r },
                bound: leaves,
            });
        }
        let i = self.frominter(l, r);
        if self.tointer(i) != (l, r) {
            return Err(Error::invalid(format!(
                "[{l}, {r}] is not a suffix tree node"
            )));
        }
        Ok(i)
    }

    /// Class interval `[l, r]` of the node opened at `i`.
    pub fn tointer(&self, i: usize) -> (usize, usize) {
        let l = self.b7.rank1(i - 1) + 1;
        let r = self.b7.rank1(self.z.find_close(i));
        (l, r)
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.z.enclose(i)
    }

    /// Position in `Z*` of the nearest marked ancestor (or self) of node `i`.
    pub fn nma(&self, i: usize) -> usize {
        let x = self.b8.rank1(i);
        if self.z_star.is_open(x) {
            x
        } else {
            self.z_star
                .enclose(self.z_star.find_open(x))
                .expect("root is marked")
        }
    }

    /// `Z` position to `Z*` position of a marked node.
    pub fn toaux(&self, i: usize) -> usize {
        self.b8.rank1(i)
    }

    /// `Z*` position to `Z` position.
    pub fn fromaux(&self, x: usize) -> usize {
        self.b8.select1(x)
    }

    pub fn aux_parent(&self, x: usize) -> Option<usize> {
        self.z_star.enclose(x)
    }

    /// Opens of every node in preorder.
    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.z.len()).filter(move |&i| self.z.is_open(i))
    }

    /// Class intervals of marked nodes in preorder.
    pub fn marked_intervals(&self) -> Vec<(usize, usize)> {
        self.nodes()
            .filter(|&i| self.is_marked(i))
            .map(|i| self.tointer(i))
            .collect()
    }

    pub fn size_in_bytes(&self) -> usize {
        self.z.size_in_bytes()
            + self.b7.size_in_bytes()
            + self.b8.size_in_bytes()
            + self.z_star.size_in_bytes()
    }

    pub fn write(&self, w: &mut Writer) {
        self.z.write(w);
        self.b7.write(w);
        self.b8.write(w);
    }

    /// `Z*` is not stored; it is re-extracted from `Z` and `B8`.
    pub fn read(r: &mut Reader<'_>) -> Result<Self> {
        let z = BalancedParens::read(r)?;
        let b7 = BitVector::read(r)?;
        let b8 = BitVector::read(r)?;
        if b7.len() != z.len() || b8.len() != z.len() || z.is_empty() || !b8.get(1) {
            return Err(Error::corrupt("suffix tree bitvectors disagree"));
        }
        let zs = (1..=z.len()).filter(|&i| b8.get(i)).map(|i| z.is_open(i));
        let z_star = BitVector::from_bits(zs);
        if 2 * z_star.count_ones() != z_star.len() {
            return Err(Error::corrupt("marked parentheses unbalanced"));
        }
        Ok(SuffixTreeTopology {
            z,
            b7,
            b8,
            z_star: BalancedParens::new(z_star),
        })
    }
}
