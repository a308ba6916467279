use core::fmt;

use crate::grade::Grade;

/// Validation failures for matrices, complexes and algorithm inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A column references a row index `>= n_rows`.
    RowOutOfRange { level: usize, column: usize, row: usize, n_rows: usize },
    /// A column supports a row whose grade is not `<=` the column grade.
    Homogeneity { level: usize, column: usize, row: usize, column_grade: Grade, row_grade: Grade },
    /// Row grades of `∂^(level+1)` disagree with the column grades of `∂^level`.
    GradeMismatch { level: usize, index: usize },
    /// Row count of `∂^(level+1)` disagrees with the column count of `∂^level`.
    SizeMismatch { level: usize, rows: usize, columns: usize },
    /// `∂^(level-1) ∘ ∂^level` is nonzero on the given column of `∂^level`.
    NotAComplex { level: usize, column: usize },
    /// Rows or columns are not sorted co-lexicographically.
    NotColexSorted { level: usize },
    /// The requested homology level needs boundary maps the complex does not have.
    MissingLevel { requested: usize, length: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RowOutOfRange { level, column, row, n_rows } => write!(
                f,
                "boundary of generator {column} in dimension {level} references index {row}, \
                 but dimension {} has only {n_rows} generators",
                level - 1
            ),
            Error::Homogeneity { level, column, row, column_grade, row_grade } => write!(
                f,
                "generator {column} in dimension {level} at grade {column_grade} has boundary \
                 entry {row} at grade {row_grade}, which is not below it"
            ),
            Error::GradeMismatch { level, index } => {
                write!(f, "inconsistent grade for generator {index} in dimension {level}")
            }
            Error::SizeMismatch { level, rows, columns } => {
                write!(f, "dimension {level} has {columns} generators but the boundary above expects {rows}")
            }
            Error::NotAComplex { level, column } => {
                write!(f, "boundary of the boundary of generator {column} in dimension {level} is nonzero")
            }
            Error::NotColexSorted { level } => {
                write!(f, "generators in dimension {level} are not in co-lexicographic order")
            }
            Error::MissingLevel { requested, length } => write!(
                f,
                "homology in dimension {requested} needs dimensions {}..={}, \
                 but the complex has length {length}",
                requested.saturating_sub(1),
                requested + 1
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
