//! Minimal presentations of the homology of `F^(n+1) → F^n → F^(n-1)`.
//!
//! The pipeline is [`min_gens`] on `∂^(n+1)`, [`ker_basis`] on `∂^n`, [`reparam`] to
//! express the generators in the kernel basis, and [`minimize`] to drop identity
//! summands. The queue-driven versions only visit grid cells where work can happen;
//! the grid-scan versions in [`lw`] visit every cell.

pub mod lw;
pub mod queue;
pub mod reduce;

use alloc::vec::Vec;

use crate::clock::{Clock, NoClock};
use crate::column::SparseColumn;
use crate::complex::ChainComplex;
use crate::error::Error;
use crate::grade::Grade;
use crate::matrix::{grade_runs, GradedMatrix};
use crate::multichunk::{multi_chunk, ChunkStats};
use crate::par;

pub use lw::{ker_basis_lw, min_gens_lw, minimize_lw};
pub use queue::{GradeQueue, RowQueues};
pub use reduce::{PivotMap, Reducer};

/// A presentation: rows are generators, columns are relations.
pub type Presentation = GradedMatrix;

/// Work counters of one reduction sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MpfreeCounters {
    /// Number of column additions.
    pub additions: u64,
    /// Total merge cost of those additions, auxiliary columns included.
    pub addition_cost: u64,
    /// Distinct column grades the grade queue starts with.
    pub initial_grades: u64,
    /// Cells pushed because a column lost its pivot to an earlier one.
    pub grade_pushes: u64,
    /// Distinct cells popped from the grade queue.
    pub grade_pops: u64,
    /// Column indices popped from the row queues.
    pub row_pops: u64,
    /// Grid cells visited by the grid-scan versions.
    pub lw_cells: u64,
}

impl core::ops::AddAssign for MpfreeCounters {
    fn add_assign(&mut self, o: Self) {
        self.additions += o.additions;
        self.addition_cost += o.addition_cost;
        self.initial_grades += o.initial_grades;
        self.grade_pushes += o.grade_pushes;
        self.grade_pops += o.grade_pops;
        self.row_pops += o.row_pops;
        self.lw_cells += o.lw_cells;
    }
}

/// Stable colex sort of `(grade, column)` pairs appended in lex cell order.
pub(crate) fn sort_output(mut out: Vec<(Grade, SparseColumn)>, row_grades: Vec<Grade>) -> GradedMatrix {
    out.sort_by(|a, b| a.0.colex_cmp(&b.0));
    let (grades, cols) = out.into_iter().unzip();
    GradedMatrix::from_parts(cols, grades, row_grades)
}

enum Mode {
    Generators,
    Kernel,
}

fn sweep(m: &GradedMatrix, mode: Mode) -> Result<(GradedMatrix, MpfreeCounters), Error> {
    if !m.is_colex_sorted() {
        return Err(Error::NotColexSorted { level: 1 });
    }
    let grades = m.col_grades();
    let kernel = matches!(mode, Mode::Kernel);
    let n_y = grades.iter().map(|g| g.y + 1).max().unwrap_or(0);
    let mut runs = grade_runs(grades);
    runs.sort_by(|a, b| grades[a.start].lex_cmp(&grades[b.start]));

    let mut r = Reducer::new(m.columns().to_vec(), grades, m.n_rows(), kernel);
    let mut gq = GradeQueue::new();
    let mut rq = RowQueues::new(n_y as usize);
    for run in &runs {
        gq.push(grades[run.start]);
    }
    r.counters.initial_grades = runs.len() as u64;

    let mut visited = alloc::vec![false; m.n_cols()];
    let mut emitted = alloc::vec![false; m.n_cols()];
    let mut out: Vec<(Grade, SparseColumn)> = Vec::new();
    let mut next_run = 0;
    while let Some(cell) = gq.pop() {
        if next_run < runs.len() && grades[runs[next_run].start] == cell {
            for i in runs[next_run].clone() {
                rq.push(cell.y, i);
            }
            next_run += 1;
        }
        while let Some(i) = rq.pop(cell.y) {
            r.reduce_queued(i, cell, &mut gq, &mut rq);
            let first = !visited[i];
            visited[i] = true;
            if kernel {
                if r.cols[i].is_empty() && !emitted[i] {
                    emitted[i] = true;
                    out.push((cell, r.take_auxiliary(i)));
                }
            } else if first && !r.cols[i].is_empty() {
                debug_assert_eq!(grades[i], cell);
                out.push((cell, r.cols[i].clone()));
            }
        }
    }
    debug_assert_eq!(next_run, runs.len());
    r.counters.grade_pops = gq.pops();
    r.counters.row_pops = rq.pops();
    let row_grades = if kernel { grades.to_vec() } else { m.row_grades().to_vec() };
    Ok((sort_output(out, row_grades), r.counters))
}

/// Minimal generating set of the image of `a`, as columns graded where they first
/// become independent. Columns of `a` must be colex-sorted.
pub fn min_gens(a: &GradedMatrix) -> Result<(GradedMatrix, MpfreeCounters), Error> {
    sweep(a, Mode::Generators)
}

/// Basis of the kernel of `b` as a free module. Rows of the result index the columns
/// of `b` and carry their grades. Columns of `b` must be colex-sorted.
pub fn ker_basis(b: &GradedMatrix) -> Result<(GradedMatrix, MpfreeCounters), Error> {
    sweep(b, Mode::Kernel)
}

/// Expresses every column of `g` in the kernel basis `k`, giving a semi-minimal
/// presentation with rows graded like `k`'s columns and columns graded like `g`'s.
///
/// Every column of `k` has a distinct pivot (its own index in the reduced matrix), so
/// the columns of `g` are reduced independently and in parallel. A column that does
/// not reduce to zero is reported as `NotAComplex { level: 2, column }`, indexing `g`.
pub fn reparam(g: &GradedMatrix, k: &GradedMatrix) -> Result<(Presentation, MpfreeCounters), Error> {
    assert_eq!(g.n_rows(), k.n_rows(), "generators and kernel live in the same module");
    let mut piv = PivotMap::new(k.n_rows());
    for c in 0..k.n_cols() {
        let p = k.pivot(c).expect("kernel basis columns are nonzero");
        debug_assert!(piv.get(p).is_none(), "kernel basis pivots are distinct");
        piv.set(p, c);
    }
    let idx: Vec<usize> = (0..g.n_cols()).collect();
    let results = par::map(&idx, |&j| {
        let mut work = g.column(j).clone();
        let mut aux = Vec::new();
        let mut count = MpfreeCounters::default();
        while let Some(p) = work.pivot() {
            let c = piv.get(p).ok_or(Error::NotAComplex { level: 2, column: j })?;
            count.addition_cost += work.add_assign(k.column(c)) as u64;
            count.additions += 1;
            aux.push(c);
        }
        aux.sort_unstable();
        Ok((SparseColumn::from_sorted(aux), count))
    });
    let mut cols = Vec::with_capacity(g.n_cols());
    let mut counters = MpfreeCounters::default();
    for res in results {
        let (col, c) = res?;
        cols.push(col);
        counters += c;
    }
    Ok((GradedMatrix::from_parts(cols, g.col_grades().to_vec(), k.col_grades().to_vec()), counters))
}

/// Removes all identity summands from a presentation by running multi-chunk on the
/// length-1 complex it defines. The input is colex-sorted first if needed.
pub fn minimize(semi: &Presentation) -> Result<(Presentation, ChunkStats), Error> {
    let complex = ChainComplex::from_matrices(alloc::vec![semi.clone()])?;
    let (out, stats) = multi_chunk(&complex)?;
    let p = out.into_matrices().pop().expect("length-1 complex");
    Ok((p, stats))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MpfreeOptions {
    /// Use the grid-scan versions of min_gens and ker_basis.
    pub lw_baseline: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MpfreeOutput {
    pub presentation: Presentation,
    pub min_gens: MpfreeCounters,
    pub ker_basis: MpfreeCounters,
    pub reparam: MpfreeCounters,
    pub minimize: ChunkStats,
    /// `(rows, columns)` of the semi-minimal presentation.
    pub semi_minimal_size: (usize, usize),
    /// Wall time of min_gens, ker_basis, reparam and minimize, from the supplied clock.
    pub phase_nanos: [u64; 4],
}

impl MpfreeOutput {
    /// Sum of the additions and merge costs of all four steps.
    pub fn totals(&self) -> MpfreeCounters {
        let mut t = self.min_gens;
        t += self.ker_basis;
        t += self.reparam;
        t.additions += self.minimize.additions();
        t.addition_cost += self.minimize.addition_cost;
        t
    }
}

/// Minimal presentation of homology in dimension `n` of `complex`, which needs
/// `1 <= n < complex.length()`.
pub fn mpfree(complex: &ChainComplex, n: usize) -> Result<MpfreeOutput, Error> {
    mpfree_with(complex, n, MpfreeOptions::default(), &NoClock)
}

pub fn mpfree_with(
    complex: &ChainComplex,
    n: usize,
    options: MpfreeOptions,
    clock: &dyn Clock,
) -> Result<MpfreeOutput, Error> {
    let k = complex.length();
    if n == 0 || n >= k {
        return Err(Error::MissingLevel { requested: n, length: k });
    }
    let sorted;
    let complex = if complex.is_colex_sorted() {
        complex
    } else {
        sorted = complex.colex_normalize()?.0;
        &sorted
    };
    let a = complex.boundary(n + 1);
    let b = complex.boundary(n);
    a.validate(n + 1)?;
    b.validate(n)?;
    if let Some(column) = b.compose(a).iter().position(|c| !c.is_empty()) {
        return Err(Error::NotAComplex { level: n + 1, column });
    }

    let t0 = clock.now_nanos();
    let (g, gc) = if options.lw_baseline { min_gens_lw(a)? } else { min_gens(a)? };
    let t1 = clock.now_nanos();
    let (kb, kc) = if options.lw_baseline { ker_basis_lw(b)? } else { ker_basis(b)? };
    let t2 = clock.now_nanos();
    let (semi, rc) = reparam(&g, &kb)?;
    let t3 = clock.now_nanos();
    let (presentation, ms) = minimize(&semi)?;
    let t4 = clock.now_nanos();
    Ok(MpfreeOutput {
        semi_minimal_size: (semi.n_rows(), semi.n_cols()),
        presentation,
        min_gens: gc,
        ker_basis: kc,
        reparam: rc,
        minimize: ms,
        phase_nanos: [t1 - t0, t2 - t1, t3 - t2, t4 - t3],
    })
}
