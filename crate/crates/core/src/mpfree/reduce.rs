//! Column reduction with a pivot map and optional auxiliary columns.

use alloc::vec;
use alloc::vec::Vec;

use crate::column::SparseColumn;
use crate::grade::Grade;

use super::queue::{GradeQueue, RowQueues};
use super::MpfreeCounters;

const NONE: usize = usize::MAX;

/// `piv[i] = k` records that visited column `k` has pivot `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotMap {
    piv: Vec<usize>,
}

impl PivotMap {
    pub fn new(n_rows: usize) -> Self {
        PivotMap { piv: vec![NONE; n_rows] }
    }

    #[inline]
    pub fn get(&self, row: usize) -> Option<usize> {
        let k = self.piv[row];
        (k != NONE).then_some(k)
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize) {
        self.piv[row] = col;
    }

    /// Every recorded owner is nonzero with the recorded pivot.
    pub fn consistent_with(&self, columns: &[SparseColumn]) -> bool {
        self.piv.iter().enumerate().all(|(i, &k)| k == NONE || columns[k].pivot() == Some(i))
    }
}

/// Working copy of a matrix under reduction: columns, the auxiliary matrix `S` with
/// `B' = B·S` (when enabled), the pivot map and counters.
#[derive(Debug)]
pub struct Reducer<'a> {
    pub(crate) cols: Vec<SparseColumn>,
    pub(crate) aux: Option<Vec<SparseColumn>>,
    pub(crate) piv: PivotMap,
    pub(crate) grades: &'a [Grade],
    pub(crate) counters: MpfreeCounters,
}

impl<'a> Reducer<'a> {
    pub fn new(cols: Vec<SparseColumn>, grades: &'a [Grade], n_rows: usize, use_auxiliary: bool) -> Self {
        let aux = use_auxiliary.then(|| (0..cols.len()).map(SparseColumn::unit).collect());
        Reducer { cols, aux, piv: PivotMap::new(n_rows), grades, counters: MpfreeCounters::default() }
    }

    pub fn column(&self, j: usize) -> &SparseColumn {
        &self.cols[j]
    }

    pub fn pivots(&self) -> &PivotMap {
        &self.piv
    }

    pub fn auxiliary(&self, j: usize) -> Option<&SparseColumn> {
        self.aux.as_ref().map(|a| &a[j])
    }

    pub fn counters(&self) -> &MpfreeCounters {
        &self.counters
    }

    fn add(&mut self, src: usize, dst: usize) {
        debug_assert!(src < dst);
        let (lo, hi) = self.cols.split_at_mut(dst);
        let mut cost = hi[0].add_assign(&lo[src]);
        if let Some(aux) = self.aux.as_mut() {
            let (lo, hi) = aux.split_at_mut(dst);
            cost += hi[0].add_assign(&lo[src]);
        }
        self.counters.additions += 1;
        self.counters.addition_cost += cost as u64;
    }

    /// Grid-scan reduction of column `j`: adds earlier owners until the pivot is free,
    /// owned by `j` itself, or owned by a later column (which then loses it).
    pub fn reduce_lw(&mut self, j: usize) {
        while let Some(i) = self.cols[j].pivot() {
            match self.piv.get(i) {
                None => {
                    self.piv.set(i, j);
                    break;
                }
                Some(k) if k == j => break,
                Some(k) if k > j => {
                    self.piv.set(i, j);
                    break;
                }
                Some(k) => self.add(k, j),
            }
        }
    }

    /// Queue-driven reduction of column `j` while the sweep is at cell `current`.
    ///
    /// When a later column `k` owns the pivot, `j` takes it over and `k` is scheduled:
    /// it goes into the row queue of its y-grade, and the cell `(current.x, y_k)` is
    /// queued if that row lies above the current one.
    pub fn reduce_queued(&mut self, j: usize, current: Grade, grades_q: &mut GradeQueue, rows_q: &mut RowQueues) {
        while let Some(i) = self.cols[j].pivot() {
            match self.piv.get(i) {
                None => {
                    self.piv.set(i, j);
                    break;
                }
                Some(k) if k == j => break,
                Some(k) if k > j => {
                    let yk = self.grades[k].y;
                    rows_q.push(yk, k);
                    if yk > current.y {
                        grades_q.push(Grade::new(current.x, yk));
                        self.counters.grade_pushes += 1;
                    }
                    self.piv.set(i, j);
                    break;
                }
                Some(k) => self.add(k, j),
            }
        }
    }

    pub(crate) fn take_auxiliary(&mut self, j: usize) -> SparseColumn {
        core::mem::take(&mut self.aux.as_mut().expect("auxiliary columns enabled")[j])
    }
}
