//! Dense GF(2) linear algebra on bit vectors, written independently of the sparse
//! reduction code so it can serve as ground truth.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        Self::from_indices(len, [i])
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Highest set bit.
    pub fn top(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn ones(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut v = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            v.flip(i);
        }
        for i in other.ones() {
            v.flip(self.len + i);
        }
        v
    }

    /// Bits `range` as a new vector.
    pub fn slice(&self, from: usize, to: usize) -> BitVec {
        BitVec::from_indices(to - from, (from..to).filter(|&i| self.get(i)).map(|i| i - from))
    }
}

/// A subspace kept in echelon form: at most one stored vector per top bit.
#[derive(Clone, Debug)]
pub struct Echelon {
    by_top: Vec<Option<BitVec>>,
    dim: usize,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { by_top: vec![None; ambient], dim: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the stored vectors.
    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        while let Some(t) = v.top() {
            match &self.by_top[t] {
                Some(b) => v.xor_assign(b),
                None => break,
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let r = self.reduce(v);
        match r.top() {
            Some(t) => {
                self.by_top[t] = Some(r);
                self.dim += 1;
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    pub fn basis(&self) -> Vec<BitVec> {
        self.by_top.iter().flatten().cloned().collect()
    }
}

pub fn rank(vectors: &[BitVec], ambient: usize) -> usize {
    span(vectors, ambient).dim()
}

pub fn span(vectors: &[BitVec], ambient: usize) -> Echelon {
    let mut e = Echelon::new(ambient);
    for v in vectors {
        e.insert(v.clone());
    }
    e
}

/// Basis of the null space of the matrix whose columns are `columns` (each of length
/// `rows`), as vectors of length `columns.len()`.
pub fn kernel(columns: &[BitVec], rows: usize) -> Vec<BitVec> {
    let n = columns.len();
    // Reduce (column | unit) pairs; zero image means the tag lies in the kernel.
    let mut pivots: Vec<Option<(BitVec, BitVec)>> = vec![None; rows];
    let mut out = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        let mut v = c.clone();
        let mut tag = BitVec::unit(n, j);
        while let Some(t) = v.top() {
            match &pivots[t] {
                Some((pv, pt)) => {
                    v.xor_assign(pv);
                    tag.xor_assign(pt);
                }
                None => break,
            }
        }
        match v.top() {
            Some(t) => pivots[t] = Some((v, tag)),
            None => out.push(tag),
        }
    }
    out
}

/// Basis of `U ∩ V` (Zassenhaus).
pub fn intersection(u: &[BitVec], v: &[BitVec], ambient: usize) -> Vec<BitVec> {
    let zero = BitVec::zeros(ambient);
    let mut e = Echelon::new(2 * ambient);
    // Put the copy in the high half so echelon tops see it first.
    for a in u {
        e.insert(a.concat(a));
    }
    for b in v {
        e.insert(zero.concat(b));
    }
    e.basis().into_iter().filter(|w| w.slice(ambient, 2 * ambient).is_zero()).map(|w| w.slice(0, ambient)).collect()
}

/// Dimension of the sum of the given subspaces.
pub fn sum_dim(spaces: &[&[BitVec]], ambient: usize) -> usize {
    let mut e = Echelon::new(ambient);
    for s in spaces {
        for v in *s {
            e.insert(v.clone());
        }
    }
    e.dim()
}
