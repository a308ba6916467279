//! Priority queues that replace the full grid scan.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::grade::Grade;

/// Min-queue of grid cells in lexicographic order (x first).
///
/// Duplicates are suppressed lazily: since pops are monotone, a repeated cell is
/// recognized by comparing with the previous pop.
#[derive(Debug, Default)]
pub struct GradeQueue {
    heap: BinaryHeap<Reverse<(u32, u32)>>,
    last: Option<(u32, u32)>,
    pushes: u64,
    pops: u64,
    skipped: u64,
}

impl GradeQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, g: Grade) {
        self.heap.push(Reverse((g.x, g.y)));
        self.pushes += 1;
    }

    /// Pops the lex-smallest cell not popped before.
    pub fn pop(&mut self) -> Option<Grade> {
        while let Some(Reverse(cell)) = self.heap.pop() {
            if self.last == Some(cell) {
                self.skipped += 1;
                continue;
            }
            debug_assert!(self.last.map_or(true, |l| l < cell), "grade queue pops must be lex-increasing");
            self.last = Some(cell);
            self.pops += 1;
            return Some(Grade::new(cell.0, cell.1));
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    /// Total pushes, including the initial ones.
    pub fn pushes(&self) -> u64 {
        self.pushes
    }

    /// Distinct cells returned by [`GradeQueue::pop`].
    pub fn pops(&self) -> u64 {
        self.pops
    }

    /// Duplicate entries discarded while popping.
    pub fn skipped(&self) -> u64 {
        self.skipped
    }
}

/// One min-queue of column indices per y-grade.
#[derive(Debug, Default)]
pub struct RowQueues {
    rows: Vec<BinaryHeap<Reverse<usize>>>,
    pops: u64,
}

impl RowQueues {
    /// Queues for y-grades `0..n_rows`.
    pub fn new(n_rows: usize) -> Self {
        RowQueues { rows: (0..n_rows).map(|_| BinaryHeap::new()).collect(), pops: 0 }
    }

    pub fn push(&mut self, y: u32, index: usize) {
        self.rows[y as usize].push(Reverse(index));
    }

    pub fn pop(&mut self, y: u32) -> Option<usize> {
        let r = self.rows[y as usize].pop().map(|Reverse(i)| i);
        if r.is_some() {
            self.pops += 1;
        }
        r
    }

    pub fn pops(&self) -> u64 {
        self.pops
    }
}
