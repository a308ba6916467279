//! Graded GF(2) matrices in sparse column form.

use alloc::vec::Vec;
use core::ops::Range;

use crate::column::SparseColumn;
use crate::error::Error;
use crate::grade::Grade;

/// A GF(2) matrix whose rows and columns carry grades, representing a homomorphism of
/// free 2-parameter persistence modules.
///
/// Every supported row must have grade `<=` its column's grade. Algorithms additionally
/// expect rows and columns in co-lexicographic grade order; see [`GradedMatrix::is_colex_sorted`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedMatrix {
    pub(crate) columns: Vec<SparseColumn>,
    pub(crate) col_grades: Vec<Grade>,
    pub(crate) row_grades: Vec<Grade>,
}

impl GradedMatrix {
    /// Builds and validates a matrix (row bounds and homogeneity). Errors report it as
    /// the boundary map of dimension 1.
    pub fn new(columns: Vec<SparseColumn>, col_grades: Vec<Grade>, row_grades: Vec<Grade>) -> Result<Self, Error> {
        let m = Self::from_parts(columns, col_grades, row_grades);
        m.validate(1)?;
        Ok(m)
    }

    /// Builds a matrix without checking homogeneity. Panics if the column and grade
    /// counts differ.
    pub fn from_parts(columns: Vec<SparseColumn>, col_grades: Vec<Grade>, row_grades: Vec<Grade>) -> Self {
        assert_eq!(columns.len(), col_grades.len(), "one grade per column");
        GradedMatrix { columns, col_grades, row_grades }
    }

    /// A matrix with no columns over the given rows.
    pub fn empty(row_grades: Vec<Grade>) -> Self {
        GradedMatrix { columns: Vec::new(), col_grades: Vec::new(), row_grades }
    }

    pub fn into_parts(self) -> (Vec<SparseColumn>, Vec<Grade>, Vec<Grade>) {
        (self.columns, self.col_grades, self.row_grades)
    }

    /// Checks row bounds and homogeneity, reporting errors at dimension `level`.
    pub fn validate(&self, level: usize) -> Result<(), Error> {
        let n_rows = self.n_rows();
        for (j, (col, &cg)) in self.columns.iter().zip(&self.col_grades).enumerate() {
            for row in col.iter() {
                if row >= n_rows {
                    return Err(Error::RowOutOfRange { level, column: j, row, n_rows });
                }
                let rg = self.row_grades[row];
                if !rg.is_below(&cg) {
                    return Err(Error::Homogeneity { level, column: j, row, column_grade: cg, row_grade: rg });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.row_grades.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    #[inline]
    pub fn column(&self, j: usize) -> &SparseColumn {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseColumn] {
        &self.columns
    }

    #[inline]
    pub fn col_grade(&self, j: usize) -> Grade {
        self.col_grades[j]
    }

    #[inline]
    pub fn row_grade(&self, i: usize) -> Grade {
        self.row_grades[i]
    }

    pub fn col_grades(&self) -> &[Grade] {
        &self.col_grades
    }

    pub fn row_grades(&self) -> &[Grade] {
        &self.row_grades
    }

    /// Total number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseColumn::len).sum()
    }

    #[inline]
    pub fn pivot(&self, j: usize) -> Option<usize> {
        self.columns[j].pivot()
    }

    /// A column is local if it is nonzero and its pivot row has the column's grade.
    ///
    /// Zero columns are never local: they have no pivot to pair with.
    #[inline]
    pub fn is_local(&self, j: usize) -> bool {
        match self.columns[j].pivot() {
            Some(p) => self.row_grades[p] == self.col_grades[j],
            None => false,
        }
    }

    /// Grade-preserving column addition `columns[dst] += columns[src]`.
    ///
    /// Requires `src != dst` and `col_grade(src) <= col_grade(dst)`; the grade condition
    /// is checked in debug builds. Returns the merge cost.
    pub fn add_column(&mut self, src: usize, dst: usize) -> usize {
        assert_ne!(src, dst, "a column cannot be added to itself");
        debug_assert!(
            self.col_grades[src] <= self.col_grades[dst],
            "column addition {src} -> {dst} is not grade-preserving"
        );
        let (s, d) = if src < dst {
            let (lo, hi) = self.columns.split_at_mut(dst);
            (&lo[src], &mut hi[0])
        } else {
            let (lo, hi) = self.columns.split_at_mut(src);
            (&hi[0], &mut lo[dst])
        };
        d.add_assign(s)
    }

    pub fn is_colex_sorted(&self) -> bool {
        is_colex_sorted(&self.col_grades) && is_colex_sorted(&self.row_grades)
    }

    /// Maximal runs of columns sharing a grade. Only meaningful for colex-sorted columns.
    pub fn chunks(&self) -> Vec<Range<usize>> {
        grade_runs(&self.col_grades)
    }

    /// Range of rows with exactly grade `g`, assuming colex-sorted rows.
    pub fn rows_with_grade(&self, g: Grade) -> Range<usize> {
        let lo = self.row_grades.partition_point(|r| r.colex_cmp(&g).is_lt());
        let hi = self.row_grades.partition_point(|r| r.colex_cmp(&g).is_le());
        lo..hi
    }

    /// Computes `self ∘ upper` column by column; `upper`'s rows index `self`'s columns.
    pub fn compose(&self, upper: &GradedMatrix) -> Vec<SparseColumn> {
        upper
            .columns
            .iter()
            .map(|c| {
                let mut acc = SparseColumn::new();
                for k in c.iter() {
                    acc.add_assign(&self.columns[k]);
                }
                acc
            })
            .collect()
    }

    /// Matrix of the selected columns and rows (each in ascending order), reindexed.
    pub fn submatrix(&self, keep_cols: &[usize], keep_rows: &[usize]) -> GradedMatrix {
        let mut new_index = alloc::vec![usize::MAX; self.n_rows()];
        for (new, &old) in keep_rows.iter().enumerate() {
            new_index[old] = new;
        }
        let columns = keep_cols
            .iter()
            .map(|&j| {
                self.columns[j].filter_map_rows(|r| {
                    let n = new_index[r];
                    (n != usize::MAX).then_some(n)
                })
            })
            .collect();
        GradedMatrix {
            columns,
            col_grades: keep_cols.iter().map(|&j| self.col_grades[j]).collect(),
            row_grades: keep_rows.iter().map(|&i| self.row_grades[i]).collect(),
        }
    }

    /// Reorders columns so that new column `k` is old column `col_perm[k]`, and rows so
    /// that new row `k` is old row `row_perm[k]`.
    pub fn permuted(&self, col_perm: &[usize], row_perm: &[usize]) -> GradedMatrix {
        assert_eq!(col_perm.len(), self.n_cols());
        assert_eq!(row_perm.len(), self.n_rows());
        let inverse = invert_permutation(row_perm);
        let columns = col_perm
            .iter()
            .map(|&j| {
                let mut rows: Vec<usize> = self.columns[j].iter().map(|r| inverse[r]).collect();
                rows.sort_unstable();
                SparseColumn::from_sorted(rows)
            })
            .collect();
        GradedMatrix {
            columns,
            col_grades: col_perm.iter().map(|&j| self.col_grades[j]).collect(),
            row_grades: row_perm.iter().map(|&i| self.row_grades[i]).collect(),
        }
    }
}

pub(crate) fn is_colex_sorted(grades: &[Grade]) -> bool {
    grades.windows(2).all(|w| w[0].colex_cmp(&w[1]).is_le())
}

/// Maximal runs of equal grades.
pub(crate) fn grade_runs(grades: &[Grade]) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=grades.len() {
        if i == grades.len() || grades[i] != grades[start] {
            if i > start {
                out.push(start..i);
            }
            start = i;
        }
    }
    out
}

/// Stable permutation that sorts `grades` co-lexicographically: entry `k` is the old
/// index of the element placed at position `k`.
pub fn colex_permutation(grades: &[Grade]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..grades.len()).collect();
    perm.sort_by(|&a, &b| grades[a].colex_cmp(&grades[b]));
    perm
}

pub(crate) fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    inv
}
