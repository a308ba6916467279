//! Sparse GF(2) columns.

use alloc::vec::Vec;
use core::fmt;

/// Support of a GF(2) column: strictly ascending row indices.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseColumn {
    rows: Vec<usize>,
}

impl SparseColumn {
    pub const fn new() -> Self {
        SparseColumn { rows: Vec::new() }
    }

    /// Wraps an already strictly ascending list. Panics otherwise.
    pub fn from_sorted(rows: Vec<usize>) -> Self {
        assert!(rows.windows(2).all(|w| w[0] < w[1]), "row indices must be strictly ascending");
        SparseColumn { rows }
    }

    /// Builds the GF(2) sum of unit vectors: indices are sorted and repeated indices cancel
    /// in pairs.
    pub fn from_indices(mut rows: Vec<usize>) -> Self {
        rows.sort_unstable();
        let mut out: Vec<usize> = Vec::with_capacity(rows.len());
        for r in rows {
            if out.last() == Some(&r) {
                out.pop();
            } else {
                out.push(r);
            }
        }
        SparseColumn { rows: out }
    }

    pub fn unit(row: usize) -> Self {
        SparseColumn { rows: alloc::vec![row] }
    }

    #[inline]
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<usize> {
        self.rows
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Largest row index in the support, `None` for the zero column.
    #[inline]
    pub fn pivot(&self) -> Option<usize> {
        self.rows.last().copied()
    }

    pub fn contains(&self, row: usize) -> bool {
        self.rows.binary_search(&row).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.rows.iter().copied()
    }

    pub fn clear(&mut self) {
        self.rows.clear();
    }

    /// Flips a single entry.
    pub fn toggle(&mut self, row: usize) {
        match self.rows.binary_search(&row) {
            Ok(pos) => {
                self.rows.remove(pos);
            }
            Err(pos) => self.rows.insert(pos, row),
        }
    }

    /// Removes the largest entry.
    pub fn pop_pivot(&mut self) -> Option<usize> {
        self.rows.pop()
    }

    /// `self += other` over GF(2) (symmetric difference by linear merge).
    ///
    /// Returns the merge cost: the number of entries read from both operands.
    pub fn add_assign(&mut self, other: &SparseColumn) -> usize {
        let cost = self.rows.len() + other.rows.len();
        if other.rows.is_empty() {
            return cost;
        }
        let mut out = Vec::with_capacity(cost);
        let (a, b) = (&self.rows, &other.rows);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        self.rows = out;
        cost
    }

    /// Keeps the entries for which `f` returns `Some`, replaced by the returned index.
    /// The mapping must be strictly increasing on the kept entries.
    pub fn filter_map_rows(&self, mut f: impl FnMut(usize) -> Option<usize>) -> SparseColumn {
        let rows: Vec<usize> = self.rows.iter().filter_map(|&r| f(r)).collect();
        debug_assert!(rows.windows(2).all(|w| w[0] < w[1]));
        SparseColumn { rows }
    }
}

impl fmt::Debug for SparseColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.rows.iter()).finish()
    }
}

impl From<Vec<usize>> for SparseColumn {
    fn from(rows: Vec<usize>) -> Self {
        SparseColumn::from_sorted(rows)
    }
}

impl<const N: usize> From<[usize; N]> for SparseColumn {
    fn from(rows: [usize; N]) -> Self {
        SparseColumn::from_sorted(rows.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::collection::btree_set;
    use proptest::prelude::*;

    #[test]
    fn symmetric_difference() {
        let mut c = SparseColumn::from([1, 2, 5]);
        c.add_assign(&SparseColumn::from([2, 4]));
        assert_eq!(c.rows(), &[1, 4, 5]);
    }

    #[test]
    fn pivot_is_max_index() {
        assert_eq!(SparseColumn::from([0, 1]).pivot(), Some(1));
        assert_eq!(SparseColumn::new().pivot(), None);
    }

    #[test]
    fn from_indices_cancels_pairs() {
        assert_eq!(SparseColumn::from_indices(vec![3, 1, 3, 2, 1, 1]).rows(), &[1, 2]);
    }

    #[test]
    #[should_panic]
    fn from_sorted_rejects_duplicates() {
        SparseColumn::from_sorted(vec![1, 1]);
    }

    #[test]
    fn toggle_inserts_and_removes() {
        let mut c = SparseColumn::from([1, 4]);
        c.toggle(2);
        assert_eq!(c.rows(), &[1, 2, 4]);
        c.toggle(4);
        assert_eq!(c.rows(), &[1, 2]);
    }

    proptest! {
        #[test]
        fn addition_is_an_involution(a in btree_set(0usize..40, 0..20), b in btree_set(0usize..40, 0..20)) {
            let a = SparseColumn::from_sorted(a.into_iter().collect());
            let b = SparseColumn::from_sorted(b.into_iter().collect());
            let mut c = a.clone();
            c.add_assign(&b);
            prop_assert!(c.rows().windows(2).all(|w| w[0] < w[1]));
            c.add_assign(&b);
            prop_assert_eq!(c, a);
        }

        #[test]
        fn equal_pivots_cancel(a in btree_set(0usize..40, 1..20), b in btree_set(0usize..40, 1..20)) {
            let mut a: Vec<usize> = a.into_iter().collect();
            let mut b: Vec<usize> = b.into_iter().collect();
            // force a shared pivot
            let p = 50;
            a.push(p);
            b.push(p);
            let mut c = SparseColumn::from_sorted(a);
            c.add_assign(&SparseColumn::from_sorted(b));
            prop_assert!(c.pivot().map_or(true, |q| q < p));
        }
    }
}
