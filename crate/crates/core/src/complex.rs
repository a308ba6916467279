//! Chain complexes of free 2-parameter persistence modules.

use alloc::string::String;
use alloc::vec::Vec;

use crate::column::SparseColumn;
use crate::error::Error;
use crate::grade::Grade;
use crate::matrix::{colex_permutation, is_colex_sorted, GradedMatrix};

/// Original grade value tokens, indexed by rank, so output reproduces the input text.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradeTokens {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl GradeTokens {
    pub fn x_token(&self, rank: u32) -> Option<&str> {
        self.x.get(rank as usize).map(String::as_str)
    }

    pub fn y_token(&self, rank: u32) -> Option<&str> {
        self.y.get(rank as usize).map(String::as_str)
    }
}

/// A chain complex `F^k → … → F^1 → F^0` of free modules with fixed ordered bases.
///
/// Boundary matrices are stored highest dimension first: `matrices()[0]` is `∂^k` and
/// the last entry is `∂^1`. The rows of `∂^(n+1)` are the columns of `∂^n`; level-0
/// grades are the rows of `∂^1`, or an explicit list for a complex of length 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainComplex {
    matrices: Vec<GradedMatrix>,
    lone_level: Vec<Grade>,
    tokens: Option<GradeTokens>,
}

impl ChainComplex {
    /// Builds a complex from per-dimension grades (`levels[n]` for dimension `n`) and
    /// boundaries (`boundaries[n - 1]` holds the columns of `∂^n`), then validates it.
    pub fn new(levels: Vec<Vec<Grade>>, boundaries: Vec<Vec<SparseColumn>>) -> Result<Self, Error> {
        let c = Self::from_levels_unchecked(levels, boundaries);
        c.validate()?;
        Ok(c)
    }

    /// Same as [`ChainComplex::new`] but skips validation. Panics on count mismatches.
    pub fn from_levels_unchecked(mut levels: Vec<Vec<Grade>>, boundaries: Vec<Vec<SparseColumn>>) -> Self {
        assert!(!levels.is_empty(), "a complex has at least dimension 0");
        assert_eq!(levels.len(), boundaries.len() + 1, "one boundary per positive dimension");
        if boundaries.is_empty() {
            return ChainComplex { matrices: Vec::new(), lone_level: levels.pop().unwrap(), tokens: None };
        }
        let mut matrices = Vec::with_capacity(boundaries.len());
        for (n, cols) in boundaries.into_iter().enumerate().rev() {
            let dim = n + 1;
            matrices.push(GradedMatrix::from_parts(cols, levels[dim].clone(), levels[dim - 1].clone()));
        }
        ChainComplex { matrices, lone_level: Vec::new(), tokens: None }
    }

    /// Builds a complex from boundary matrices, highest dimension first.
    pub fn from_matrices(matrices: Vec<GradedMatrix>) -> Result<Self, Error> {
        assert!(!matrices.is_empty(), "use ChainComplex::trivial for length 0");
        let c = ChainComplex { matrices, lone_level: Vec::new(), tokens: None };
        c.validate()?;
        Ok(c)
    }

    /// A complex of length 0: generators in dimension 0 only.
    pub fn trivial(grades: Vec<Grade>) -> Self {
        ChainComplex { matrices: Vec::new(), lone_level: grades, tokens: None }
    }

    pub fn with_tokens(mut self, tokens: Option<GradeTokens>) -> Self {
        self.tokens = tokens;
        self
    }

    pub fn tokens(&self) -> Option<&GradeTokens> {
        self.tokens.as_ref()
    }

    pub fn set_tokens(&mut self, tokens: Option<GradeTokens>) {
        self.tokens = tokens;
    }

    /// Number of boundary maps.
    pub fn length(&self) -> usize {
        self.matrices.len()
    }

    /// Boundary matrices, highest dimension first.
    pub fn matrices(&self) -> &[GradedMatrix] {
        &self.matrices
    }

    pub fn into_matrices(self) -> Vec<GradedMatrix> {
        self.matrices
    }

    /// The matrix of `∂^n`, for `1 <= n <= length()`.
    pub fn boundary(&self, n: usize) -> &GradedMatrix {
        assert!(n >= 1 && n <= self.length(), "no boundary map in dimension {n}");
        &self.matrices[self.length() - n]
    }

    pub(crate) fn boundary_mut(&mut self, n: usize) -> &mut GradedMatrix {
        let k = self.length();
        &mut self.matrices[k - n]
    }

    /// Grades of the generators in dimension `n`.
    pub fn level_grades(&self, n: usize) -> &[Grade] {
        let k = self.length();
        assert!(n <= k, "no dimension {n} in a complex of length {k}");
        if k == 0 {
            &self.lone_level
        } else if n == 0 {
            self.boundary(1).row_grades()
        } else {
            self.boundary(n).col_grades()
        }
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.level_grades(n).len()
    }

    /// Generator counts, dimension 0 first.
    pub fn level_sizes(&self) -> Vec<usize> {
        (0..=self.length()).map(|n| self.level_size(n)).collect()
    }

    pub fn total_generators(&self) -> usize {
        self.level_sizes().iter().sum()
    }

    /// Boundary of generator `j` in dimension `n` (empty in dimension 0).
    pub fn boundary_of(&self, n: usize, j: usize) -> &SparseColumn {
        static EMPTY: SparseColumn = SparseColumn::new();
        if n == 0 {
            &EMPTY
        } else {
            self.boundary(n).column(j)
        }
    }

    /// Smallest `(X, Y)` such that every grade lies in `[0, X) × [0, Y)`.
    pub fn grid_extent(&self) -> (u32, u32) {
        let mut ext = (0, 0);
        for n in 0..=self.length() {
            for g in self.level_grades(n) {
                ext.0 = ext.0.max(g.x + 1);
                ext.1 = ext.1.max(g.y + 1);
            }
        }
        ext
    }

    /// Checks sizes, grade consistency between adjacent levels, homogeneity and
    /// `∂^n ∘ ∂^(n+1) = 0`.
    pub fn validate(&self) -> Result<(), Error> {
        let k = self.length();
        for n in 1..=k {
            let m = self.boundary(n);
            m.validate(n)?;
            if n < k {
                let upper = self.boundary(n + 1);
                if upper.n_rows() != m.n_cols() {
                    return Err(Error::SizeMismatch { level: n, rows: upper.n_rows(), columns: m.n_cols() });
                }
                if let Some(index) = (0..m.n_cols()).find(|&i| upper.row_grade(i) != m.col_grade(i)) {
                    return Err(Error::GradeMismatch { level: n, index });
                }
            }
        }
        for n in 2..=k {
            let composed = self.boundary(n - 1).compose(self.boundary(n));
            if let Some(column) = composed.iter().position(|c| !c.is_empty()) {
                return Err(Error::NotAComplex { level: n, column });
            }
        }
        Ok(())
    }

    pub fn is_colex_sorted(&self) -> bool {
        (0..=self.length()).all(|n| is_colex_sorted(self.level_grades(n)))
    }

    /// Sorts every level's generators co-lexicographically (stable), permuting the
    /// columns of `∂^n` and the rows of `∂^(n+1)` consistently.
    ///
    /// Returns the new complex and, per dimension (0 first), the permutation whose entry
    /// `k` is the old index of the generator now at position `k`.
    pub fn colex_normalize(&self) -> Result<(ChainComplex, Vec<Vec<usize>>), Error> {
        self.validate()?;
        let k = self.length();
        let perms: Vec<Vec<usize>> = (0..=k).map(|n| colex_permutation(self.level_grades(n))).collect();
        if k == 0 {
            let grades = perms[0].iter().map(|&i| self.lone_level[i]).collect();
            return Ok((ChainComplex::trivial(grades).with_tokens(self.tokens.clone()), perms));
        }
        let matrices = (1..=k).rev().map(|n| self.boundary(n).permuted(&perms[n], &perms[n - 1])).collect();
        let out = ChainComplex { matrices, lone_level: Vec::new(), tokens: self.tokens.clone() };
        Ok((out, perms))
    }

    /// Per-dimension `(grade, boundary)` lists, dimension 0 first.
    pub fn generator_lists(&self) -> Vec<Vec<(Grade, SparseColumn)>> {
        (0..=self.length())
            .map(|n| {
                self.level_grades(n).iter().enumerate().map(|(j, &g)| (g, self.boundary_of(n, j).clone())).collect()
            })
            .collect()
    }

    /// Inverse of [`ChainComplex::generator_lists`] (without validation).
    pub fn from_generator_lists(lists: Vec<Vec<(Grade, SparseColumn)>>) -> Self {
        let mut levels = Vec::with_capacity(lists.len());
        let mut boundaries = Vec::with_capacity(lists.len().saturating_sub(1));
        for (n, list) in lists.into_iter().enumerate() {
            let (grades, cols): (Vec<Grade>, Vec<SparseColumn>) = list.into_iter().unzip();
            levels.push(grades);
            if n > 0 {
                boundaries.push(cols);
            }
        }
        Self::from_levels_unchecked(levels, boundaries)
    }
}
