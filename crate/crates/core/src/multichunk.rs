//! Multi-chunk compression: the smallest chain complex quasi-isomorphic to the input.
//!
//! Phase I ([`local_reduction`]) pairs local pivots inside each chunk of equal grade,
//! running from the highest dimension down so that rows claimed as local positive are
//! skipped one level below (clearing). Phase II ([`compress`]) eliminates local entries
//! from every global column. Phase III ([`remove_local`]) drops the local generators.

use alloc::vec::Vec;
use core::ops::Range;

use crate::clock::{Clock, NoClock};
use crate::column::SparseColumn;
use crate::complex::ChainComplex;
use crate::error::Error;
use crate::labels::{partner_of, Label, LabelTable, LevelLabels};
use crate::matrix::GradedMatrix;
use crate::par;

/// Generator counts by label in one dimension.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LevelCounts {
    pub global: usize,
    pub local_positive: usize,
    pub local_negative: usize,
}

impl LevelCounts {
    pub fn total(&self) -> usize {
        self.global + self.local_positive + self.local_negative
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChunkStats {
    /// Label counts per dimension, dimension 0 first.
    pub levels: Vec<LevelCounts>,
    pub phase1_additions: u64,
    pub phase2_additions: u64,
    /// Sum of the merge costs of all column additions.
    pub addition_cost: u64,
    /// Wall time of phases I, II and III in nanoseconds, as read from the supplied clock.
    pub phase_nanos: [u64; 3],
}

impl ChunkStats {
    pub fn additions(&self) -> u64 {
        self.phase1_additions + self.phase2_additions
    }
}

/// Result of one phase on one matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AdditionCount {
    pub additions: u64,
    pub cost: u64,
}

impl core::ops::AddAssign for AdditionCount {
    fn add_assign(&mut self, rhs: Self) {
        self.additions += rhs.additions;
        self.cost += rhs.cost;
    }
}

struct ChunkWork<'a> {
    col_offset: usize,
    row_offset: usize,
    columns: &'a mut [SparseColumn],
    col_labels: &'a mut [Label],
    col_partner: &'a mut [usize],
    row_labels: &'a mut [Label],
    row_partner: &'a mut [usize],
}

/// Splits `slice` into the given ascending, disjoint ranges (gaps are dropped).
fn split_ranges<'a, T>(mut slice: &'a mut [T], ranges: &[Range<usize>]) -> Vec<&'a mut [T]> {
    let mut out = Vec::with_capacity(ranges.len());
    let mut consumed = 0;
    for r in ranges {
        let (_, rest) = slice.split_at_mut(r.start - consumed);
        let (piece, rest) = rest.split_at_mut(r.end - r.start);
        out.push(piece);
        slice = rest;
        consumed = r.end;
    }
    out
}

/// Phase I on `∂^n` (`matrix`): labels every unlabeled column of dimension `n`, reducing
/// local columns within their chunk so that distinct local negative columns have
/// distinct pivots. Columns already marked local positive are left untouched.
///
/// The matrix must be colex-sorted. Chunks are processed in parallel.
pub fn local_reduction(matrix: &mut GradedMatrix, n: usize, labels: &mut LabelTable) -> AdditionCount {
    let chunks = matrix.chunks();
    let row_ranges: Vec<Range<usize>> =
        chunks.iter().map(|c| matrix.rows_with_grade(matrix.col_grades[c.start])).collect();
    let (upper, lower) = labels.pair_mut(n);
    let LevelLabels { labels: col_labels, partner: col_partner } = upper;
    let LevelLabels { labels: row_labels, partner: row_partner } = lower;

    let work: Vec<ChunkWork<'_>> = split_ranges(&mut matrix.columns, &chunks)
        .into_iter()
        .zip(split_ranges(col_labels, &chunks))
        .zip(split_ranges(col_partner, &chunks))
        .zip(split_ranges(row_labels, &row_ranges))
        .zip(split_ranges(row_partner, &row_ranges))
        .zip(chunks.iter().zip(&row_ranges))
        .map(|(((((columns, col_labels), col_partner), row_labels), row_partner), (c, r))| ChunkWork {
            col_offset: c.start,
            row_offset: r.start,
            columns,
            col_labels,
            col_partner,
            row_labels,
            row_partner,
        })
        .collect();

    let counts = par::map_owned(work, reduce_chunk);
    let mut total = AdditionCount::default();
    for c in counts {
        total += c;
    }
    total
}

fn reduce_chunk(w: ChunkWork<'_>) -> AdditionCount {
    let mut count = AdditionCount::default();
    let n_local_rows = w.row_labels.len();
    // Owner (chunk-relative column) of each local pivot row of this chunk.
    let mut owner = alloc::vec![usize::MAX; n_local_rows];
    for j in 0..w.columns.len() {
        if w.col_labels[j] == Label::LocalPositive {
            continue;
        }
        loop {
            let local_pivot =
                w.columns[j].pivot().and_then(|p| p.checked_sub(w.row_offset)).filter(|&p| p < n_local_rows);
            let Some(p) = local_pivot else {
                w.col_labels[j] = Label::Global;
                break;
            };
            let k = owner[p];
            if k == usize::MAX {
                owner[p] = j;
                w.col_labels[j] = Label::LocalNegative;
                w.col_partner[j] = p + w.row_offset;
                w.row_labels[p] = Label::LocalPositive;
                w.row_partner[p] = j + w.col_offset;
                break;
            }
            let (lo, hi) = w.columns.split_at_mut(j);
            count.cost += hi[0].add_assign(&lo[k]) as u64;
            count.additions += 1;
        }
    }
    count
}

/// Phase II on `∂^n`: removes every local row from the global columns of dimension `n`.
///
/// Local negative rows are deleted; a local positive row is cancelled by adding its
/// partner column (a local negative column of this matrix). Requires phase I to be
/// complete on `∂^n` and `∂^(n-1)`. Global columns are processed in parallel.
pub fn compress(matrix: &mut GradedMatrix, n: usize, labels: &LabelTable) -> AdditionCount {
    let cols = labels.level(n);
    let rows = labels.level(n - 1);
    let targets: Vec<usize> = (0..matrix.n_cols()).filter(|&j| cols.labels[j] == Label::Global).collect();
    let m: &GradedMatrix = matrix;
    let results = par::map(&targets, |&j| compress_column(m, j, rows));
    let mut total = AdditionCount::default();
    for (&j, (col, count)) in targets.iter().zip(results) {
        if let Some(col) = col {
            matrix.columns[j] = col;
        }
        total += count;
    }
    total
}

fn compress_column(m: &GradedMatrix, j: usize, rows: &LevelLabels) -> (Option<SparseColumn>, AdditionCount) {
    let source = m.column(j);
    if source.iter().all(|r| rows.labels[r] == Label::Global) {
        return (None, AdditionCount::default());
    }
    let mut count = AdditionCount::default();
    let mut work: Vec<usize> = source.rows().to_vec();
    let mut kept: Vec<usize> = Vec::with_capacity(work.len());
    let mut last = usize::MAX;
    let mut scratch = Vec::new();
    while let Some(r) = work.pop() {
        debug_assert!(r < last, "local index must strictly decrease");
        last = r;
        match rows.labels[r] {
            Label::Global => kept.push(r),
            Label::LocalNegative => {}
            Label::LocalPositive => {
                let q = partner_of(rows.partner[r]).expect("local positive row has a partner");
                debug_assert!(m.col_grade(q) <= m.col_grade(j), "phase II addition is not grade-preserving");
                let src = m.column(q);
                debug_assert_eq!(src.pivot(), Some(r));
                let below = &src.rows()[..src.len() - 1];
                count.additions += 1;
                count.cost += (work.len() + src.len()) as u64;
                merge_xor(&work, below, &mut scratch);
                core::mem::swap(&mut work, &mut scratch);
            }
            Label::Unlabeled => unreachable!("phase I leaves no row unlabeled"),
        }
    }
    kept.reverse();
    (Some(SparseColumn::from_sorted(kept)), count)
}

fn merge_xor(a: &[usize], b: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let (mut i, mut k) = (0, 0);
    while i < a.len() && k < b.len() {
        match a[i].cmp(&b[k]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[k]);
                k += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                k += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[k..]);
}

/// Phase III on `∂^n`: the submatrix on global columns (dimension `n`) and global rows
/// (dimension `n - 1`).
pub fn remove_local(matrix: &GradedMatrix, n: usize, labels: &LabelTable) -> GradedMatrix {
    matrix.submatrix(&labels.global_indices(n), &labels.global_indices(n - 1))
}

/// Runs all three phases and also returns the final labels of the input generators.
pub fn multi_chunk_labeled(
    complex: &ChainComplex,
    clock: &dyn Clock,
) -> Result<(ChainComplex, LabelTable, ChunkStats), Error> {
    let sorted;
    let complex = if complex.is_colex_sorted() {
        complex.validate()?;
        complex
    } else {
        sorted = complex.colex_normalize()?.0;
        &sorted
    };
    let k = complex.length();
    let mut labels = LabelTable::new(&complex.level_sizes());
    let mut stats = ChunkStats::default();
    let mut work = complex.clone();

    let t0 = clock.now_nanos();
    for n in (1..=k).rev() {
        let c = local_reduction(work.boundary_mut(n), n, &mut labels);
        stats.phase1_additions += c.additions;
        stats.addition_cost += c.cost;
    }
    labels.default_to_global(0);
    let t1 = clock.now_nanos();

    for n in 1..=k {
        let c = compress(work.boundary_mut(n), n, &labels);
        stats.phase2_additions += c.additions;
        stats.addition_cost += c.cost;
    }
    let t2 = clock.now_nanos();

    let out = if k == 0 {
        work
    } else {
        let ns: Vec<usize> = (1..=k).rev().collect();
        let w = &work;
        let l = &labels;
        let matrices = par::map(&ns, |&n| remove_local(w.boundary(n), n, l));
        ChainComplex::from_matrices(matrices)?.with_tokens(complex.tokens().cloned())
    };
    let t3 = clock.now_nanos();

    stats.phase_nanos = [t1 - t0, t2 - t1, t3 - t2];
    stats.levels = (0..=k)
        .map(|n| {
            let (global, local_positive, local_negative) = labels.counts(n);
            LevelCounts { global, local_positive, local_negative }
        })
        .collect();
    debug_assert!(labels.partners_consistent());
    Ok((out, labels, stats))
}

/// Compresses `complex` to a homotopy-equivalent complex with the minimal number of
/// generators at every grade and dimension.
///
/// Inputs that are not colex-sorted are sorted first. Output grades are those of the
/// surviving input generators; the relative order of survivors is preserved.
pub fn multi_chunk(complex: &ChainComplex) -> Result<(ChainComplex, ChunkStats), Error> {
    multi_chunk_with_clock(complex, &NoClock)
}

/// [`multi_chunk`] with phase timings read from `clock`.
pub fn multi_chunk_with_clock(complex: &ChainComplex, clock: &dyn Clock) -> Result<(ChainComplex, ChunkStats), Error> {
    let (out, _, stats) = multi_chunk_labeled(complex, clock)?;
    Ok((out, stats))
}
