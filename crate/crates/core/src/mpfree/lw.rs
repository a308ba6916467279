//! Grid-scan versions of the generator and kernel computations, and the sequential
//! minimization. They visit every cell of the grid and serve as reference
//! implementations for the queue-driven versions.

use alloc::vec::Vec;
use core::ops::Range;

use crate::column::SparseColumn;
use crate::error::Error;
use crate::grade::Grade;
use crate::matrix::GradedMatrix;

use super::reduce::Reducer;
use super::{sort_output, MpfreeCounters};

/// Column range of each y-grade `0..Y`, for colex-sorted columns.
fn rows_by_y(grades: &[Grade], n_y: u32) -> Vec<Range<usize>> {
    (0..n_y)
        .map(|y| {
            let lo = grades.partition_point(|g| g.y < y);
            let hi = grades.partition_point(|g| g.y <= y);
            lo..hi
        })
        .collect()
}

fn grid_dims(grades: &[Grade]) -> (u32, u32) {
    grades.iter().fold((0, 0), |(x, y), g| (x.max(g.x + 1), y.max(g.y + 1)))
}

enum Mode {
    Generators,
    Kernel,
}

fn scan(m: &GradedMatrix, mode: Mode) -> Result<(GradedMatrix, MpfreeCounters), Error> {
    if !m.is_colex_sorted() {
        return Err(Error::NotColexSorted { level: 1 });
    }
    let grades = m.col_grades();
    let (n_x, n_y) = grid_dims(grades);
    let rows = rows_by_y(grades, n_y);
    let kernel = matches!(mode, Mode::Kernel);
    let mut r = Reducer::new(m.columns().to_vec(), grades, m.n_rows(), kernel);
    let mut emitted = alloc::vec![false; m.n_cols()];
    let mut out: Vec<(Grade, SparseColumn)> = Vec::new();
    for x in 0..n_x {
        for y in 0..n_y {
            r.counters.lw_cells += 1;
            for i in rows[y as usize].clone() {
                let gx = grades[i].x;
                if gx > x {
                    break;
                }
                r.reduce_lw(i);
                if kernel {
                    if r.cols[i].is_empty() && !emitted[i] {
                        emitted[i] = true;
                        out.push((Grade::new(x, y), r.take_auxiliary(i)));
                    }
                } else if gx == x && !r.cols[i].is_empty() {
                    out.push((Grade::new(x, y), r.cols[i].clone()));
                }
            }
        }
    }
    let row_grades = if kernel { grades.to_vec() } else { m.row_grades().to_vec() };
    Ok((sort_output(out, row_grades), r.counters))
}

/// Minimal generators of the column space of `a`, scanning every grid cell.
pub fn min_gens_lw(a: &GradedMatrix) -> Result<(GradedMatrix, MpfreeCounters), Error> {
    scan(a, Mode::Generators)
}

/// Kernel basis of `b`, scanning every grid cell. Rows of the result index `b`'s columns.
pub fn ker_basis_lw(b: &GradedMatrix) -> Result<(GradedMatrix, MpfreeCounters), Error> {
    scan(b, Mode::Kernel)
}

/// Sequential minimization: each local column eliminates its pivot row from all later
/// columns, then local columns and their pivot rows are dropped.
pub fn minimize_lw(semi: &GradedMatrix) -> GradedMatrix {
    let mut m = semi.clone();
    let n = m.n_cols();
    let mut col_marked = alloc::vec![false; n];
    let mut row_marked = alloc::vec![false; m.n_rows()];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        if !m.is_local(i) {
            continue;
        }
        let j = m.pivot(i).expect("local columns are nonzero");
        for k in i + 1..n {
            if m.column(k).contains(j) {
                m.add_column(i, k);
            }
        }
        col_marked[i] = true;
        row_marked[j] = true;
    }
    let keep_cols: Vec<usize> = (0..n).filter(|&i| !col_marked[i]).collect();
    let keep_rows: Vec<usize> = (0..m.n_rows()).filter(|&i| !row_marked[i]).collect();
    m.submatrix(&keep_cols, &keep_rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::fixtures;

    #[test]
    fn min_gens_has_no_work_on_the_example() {
        let a = fixtures::running_example().boundary(2).clone();
        let (g, c) = min_gens_lw(&a).unwrap();
        assert_eq!(g, a);
        assert_eq!(c.lw_cells, 9);
    }

    #[test]
    fn kernel_of_the_example() {
        let b = fixtures::running_example().boundary(1).clone();
        let (k, _) = ker_basis_lw(&b).unwrap();
        assert_eq!(k, fixtures::kernel_basis());
    }

    #[test]
    fn zero_matrix_has_no_generators() {
        let a = GradedMatrix::new(
            alloc::vec![SparseColumn::new(); 2],
            alloc::vec![Grade::new(0, 0), Grade::new(1, 0)],
            alloc::vec![],
        )
        .unwrap();
        let (g, _) = min_gens_lw(&a).unwrap();
        assert_eq!(g.n_cols(), 0);
    }

    #[test]
    fn injective_map_has_no_kernel() {
        let b = GradedMatrix::new(
            alloc::vec![SparseColumn::from([0]), SparseColumn::from([1])],
            alloc::vec![Grade::new(0, 0), Grade::new(1, 1)],
            alloc::vec![Grade::new(0, 0), Grade::new(1, 1)],
        )
        .unwrap();
        assert_eq!(ker_basis_lw(&b).unwrap().0.n_cols(), 0);
    }

    #[test]
    fn minimize_lw_on_the_example() {
        let p = minimize_lw(&fixtures::semi_minimal_presentation());
        assert_eq!(p.col_grades(), &[Grade::new(2, 1), Grade::new(1, 2)]);
        assert_eq!(p.row_grades(), &[Grade::new(0, 0), Grade::new(1, 1)]);
        assert_eq!(p.column(0).rows(), &[1]);
        assert_eq!(p.column(1).rows(), &[0, 1]);
    }

    #[test]
    fn unsorted_input_is_rejected() {
        let a = GradedMatrix::from_parts(
            alloc::vec![SparseColumn::new(); 2],
            alloc::vec![Grade::new(0, 1), Grade::new(1, 0)],
            alloc::vec![],
        );
        assert_eq!(min_gens_lw(&a).unwrap_err(), Error::NotColexSorted { level: 1 });
    }
}
