//! Global/local classification of generators produced by multi-chunk phase I.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Label {
    #[default]
    Unlabeled,
    Global,
    /// Pivot row of a local pair; its partner is a column one dimension up.
    LocalPositive,
    /// Column of a local pair; its partner is its pivot row one dimension down.
    LocalNegative,
}

impl Label {
    pub fn is_local(self) -> bool {
        matches!(self, Label::LocalPositive | Label::LocalNegative)
    }
}

const NO_PARTNER: usize = usize::MAX;

/// Labels and partners for the generators of a single dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct LevelLabels {
    pub(crate) labels: Vec<Label>,
    pub(crate) partner: Vec<usize>,
}

impl LevelLabels {
    fn new(size: usize) -> Self {
        LevelLabels { labels: vec![Label::Unlabeled; size], partner: vec![NO_PARTNER; size] }
    }
}

/// Per-dimension labels plus the partner map of local pairs.
///
/// A `LocalNegative` generator in dimension `n` and a `LocalPositive` generator in
/// dimension `n - 1` are partners of each other and have equal grades.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelTable {
    levels: Vec<LevelLabels>,
}

impl LabelTable {
    /// All generators unlabeled; `sizes[n]` is the generator count in dimension `n`.
    pub fn new(sizes: &[usize]) -> Self {
        LabelTable { levels: sizes.iter().map(|&s| LevelLabels::new(s)).collect() }
    }

    pub fn n_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn labels(&self, n: usize) -> &[Label] {
        &self.levels[n].labels
    }

    pub fn label(&self, n: usize, i: usize) -> Label {
        self.levels[n].labels[i]
    }

    pub fn set_label(&mut self, n: usize, i: usize, label: Label) {
        self.levels[n].labels[i] = label;
    }

    /// Partner of a local generator: for `LocalNegative` in dimension `n` this indexes
    /// dimension `n - 1`, for `LocalPositive` it indexes dimension `n + 1`.
    pub fn partner(&self, n: usize, i: usize) -> Option<usize> {
        let p = self.levels[n].partner[i];
        (p != NO_PARTNER).then_some(p)
    }

    /// Records the local pair (column `col` in dimension `n`, row `row` in dimension `n - 1`).
    pub fn pair(&mut self, n: usize, col: usize, row: usize) {
        self.levels[n].labels[col] = Label::LocalNegative;
        self.levels[n].partner[col] = row;
        self.levels[n - 1].labels[row] = Label::LocalPositive;
        self.levels[n - 1].partner[row] = col;
    }

    /// Relabels every unlabeled generator of dimension `n` as global.
    pub fn default_to_global(&mut self, n: usize) {
        for l in &mut self.levels[n].labels {
            if *l == Label::Unlabeled {
                *l = Label::Global;
            }
        }
    }

    /// `(global, local positive, local negative)` counts in dimension `n`.
    pub fn counts(&self, n: usize) -> (usize, usize, usize) {
        self.levels[n].labels.iter().fold((0, 0, 0), |(g, p, q), l| match l {
            Label::Global => (g + 1, p, q),
            Label::LocalPositive => (g, p + 1, q),
            Label::LocalNegative => (g, p, q + 1),
            Label::Unlabeled => (g, p, q),
        })
    }

    /// Indices of the global generators in dimension `n`.
    pub fn global_indices(&self, n: usize) -> Vec<usize> {
        self.levels[n].labels.iter().enumerate().filter(|(_, l)| **l == Label::Global).map(|(i, _)| i).collect()
    }

    /// Checks that the partner map is an involution between adjacent dimensions.
    pub fn partners_consistent(&self) -> bool {
        self.levels.iter().enumerate().all(|(n, lvl)| {
            lvl.labels.iter().zip(&lvl.partner).enumerate().all(|(i, (&l, &p))| match l {
                Label::LocalNegative => {
                    n > 0
                        && p != NO_PARTNER
                        && self.levels[n - 1].partner[p] == i
                        && self.levels[n - 1].labels[p] == Label::LocalPositive
                }
                Label::LocalPositive => {
                    n + 1 < self.levels.len()
                        && p != NO_PARTNER
                        && self.levels[n + 1].partner[p] == i
                        && self.levels[n + 1].labels[p] == Label::LocalNegative
                }
                _ => p == NO_PARTNER,
            })
        })
    }

    /// Mutable access to dimension `n` (columns of `∂^n`) and `n - 1` (its rows) at once.
    pub(crate) fn pair_mut(&mut self, n: usize) -> (&mut LevelLabels, &mut LevelLabels) {
        let (lo, hi) = self.levels.split_at_mut(n);
        (&mut hi[0], &mut lo[n - 1])
    }

    pub(crate) fn level(&self, n: usize) -> &LevelLabels {
        &self.levels[n]
    }
}

pub(crate) fn partner_of(p: usize) -> Option<usize> {
    (p != NO_PARTNER).then_some(p)
}
