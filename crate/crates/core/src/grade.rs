//! Grades on the integer grid `Z²`.

use core::cmp::Ordering;
use core::fmt;

/// A point of the grid after coordinate-wise rank normalization.
///
/// `PartialOrd` is the product order: `a <= b` iff `a.x <= b.x && a.y <= b.y`, and
/// incomparable grades return `None`. The two total orders used by the algorithms are
/// available as [`Grade::colex_cmp`] (y first) and [`Grade::lex_cmp`] (x first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Grade {
    pub x: u32,
    pub y: u32,
}

impl Grade {
    pub const fn new(x: u32, y: u32) -> Self {
        Grade { x, y }
    }

    /// Co-lexicographic order: compare `y`, then `x`. Refines the product order.
    #[inline]
    pub fn colex_cmp(&self, other: &Grade) -> Ordering {
        self.y.cmp(&other.y).then(self.x.cmp(&other.x))
    }

    /// Lexicographic order: compare `x`, then `y`. This is the grid traversal order.
    #[inline]
    pub fn lex_cmp(&self, other: &Grade) -> Ordering {
        self.x.cmp(&other.x).then(self.y.cmp(&other.y))
    }

    /// `self ≤ other` in the product order.
    #[inline]
    pub fn is_below(&self, other: &Grade) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// Coordinate-wise maximum (least upper bound).
    #[inline]
    pub fn join(&self, other: &Grade) -> Grade {
        Grade::new(self.x.max(other.x), self.y.max(other.y))
    }
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Grade) -> Option<Ordering> {
        match (self.x.cmp(&other.x), self.y.cmp(&other.y)) {
            (Ordering::Equal, o) | (o, Ordering::Equal) => Some(o),
            (a, b) if a == b => Some(a),
            _ => None,
        }
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(u32, u32)> for Grade {
    fn from((x, y): (u32, u32)) -> Self {
        Grade::new(x, y)
    }
}
