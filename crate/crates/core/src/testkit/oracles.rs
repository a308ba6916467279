//! Pointwise brute-force oracles. Every quantity is computed from scratch at each grid
//! point with dense linear algebra.
//!
//! Points are `(x, y)` pairs of signed ranks so that the sentinel row and column below
//! all grades (`-1`) can be addressed.

use alloc::vec::Vec;

use super::linalg::{intersection, kernel, rank, span, sum_dim, BitVec};
use crate::complex::ChainComplex;
use crate::grade::Grade;
use crate::matrix::GradedMatrix;

pub type Point = (i64, i64);

#[inline]
pub fn below(g: Grade, z: Point) -> bool {
    (g.x as i64) <= z.0 && (g.y as i64) <= z.1
}

fn col_vec(m: &GradedMatrix, j: usize) -> BitVec {
    BitVec::from_indices(m.n_rows(), m.column(j).iter())
}

/// Values on the closed grid hull: every rank in `0..nx` × `0..ny` plus one sentinel
/// rank `-1` below in each coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridTable<T> {
    nx: usize,
    ny: usize,
    data: Vec<T>,
}

impl<T> GridTable<T> {
    pub fn build(extent: (u32, u32), mut f: impl FnMut(Point) -> T) -> Self {
        let (nx, ny) = (extent.0 as usize + 1, extent.1 as usize + 1);
        let mut data = Vec::with_capacity(nx * ny);
        for x in 0..nx {
            for y in 0..ny {
                data.push(f((x as i64 - 1, y as i64 - 1)));
            }
        }
        GridTable { nx, ny, data }
    }

    pub fn get(&self, z: Point) -> &T {
        let (x, y) = ((z.0 + 1) as usize, (z.1 + 1) as usize);
        assert!(x < self.nx && y < self.ny, "point outside the hull");
        &self.data[x * self.ny + y]
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let ny = self.ny;
        (0..self.data.len()).map(move |k| ((k / ny) as i64 - 1, (k % ny) as i64 - 1))
    }

    pub fn values(&self) -> &[T] {
        &self.data
    }
}

/// `dim H^n(F_z)` for `n = 0..=length`.
pub fn homology_dims(complex: &ChainComplex, z: Point) -> Vec<usize> {
    let k = complex.length();
    let ranks: Vec<usize> = (0..=k + 1)
        .map(|n| {
            if n == 0 || n > k {
                return 0;
            }
            let m = complex.boundary(n);
            let cols: Vec<BitVec> =
                (0..m.n_cols()).filter(|&j| below(m.col_grade(j), z)).map(|j| col_vec(m, j)).collect();
            rank(&cols, m.n_rows())
        })
        .collect();
    (0..=k)
        .map(|n| {
            let size = complex.level_grades(n).iter().filter(|&&g| below(g, z)).count();
            size - ranks[n] - ranks[n + 1]
        })
        .collect()
}

/// Homology dimensions on the hull of `extent`.
pub fn homology_table(complex: &ChainComplex, extent: (u32, u32)) -> GridTable<Vec<usize>> {
    GridTable::build(extent, |z| homology_dims(complex, z))
}

fn grade_lt(g: Grade, z: Point) -> bool {
    below(g, z) && !((g.x as i64) == z.0 && (g.y as i64) == z.1)
}

/// `(δ_z^n, γ_z^n)` for every dimension `n`, by reducing the boundary matrix of `F_{≤z}`
/// with the generators of `F_{<z}` ordered first.
///
/// The kernel part counts n-columns at grade `z` whose lowest index lies in `F_{<z}`;
/// the cokernel part counts n-columns at `z` that reduce to zero and are not the
/// lowest index of any column.
pub fn delta_gamma(complex: &ChainComplex, z: Point) -> Vec<(usize, usize)> {
    let k = complex.length();
    // Total order: (in F_<z first), then dimension, then index.
    let mut order: Vec<(bool, usize, usize)> = Vec::new();
    for n in 0..=k {
        for (i, &g) in complex.level_grades(n).iter().enumerate() {
            if below(g, z) {
                order.push((!grade_lt(g, z), n, i));
            }
        }
    }
    order.sort();
    let total = order.len();
    let mut pos: Vec<Vec<usize>> = (0..=k).map(|n| alloc::vec![usize::MAX; complex.level_size(n)]).collect();
    for (p, &(_, n, i)) in order.iter().enumerate() {
        pos[n][i] = p;
    }
    let mut cols: Vec<BitVec> = order
        .iter()
        .map(|&(_, n, i)| BitVec::from_indices(total, complex.boundary_of(n, i).iter().map(|r| pos[n - 1][r])))
        .collect();
    let mut low_owner: Vec<Option<usize>> = alloc::vec![None; total];
    for j in 0..total {
        while let Some(t) = cols[j].top() {
            match low_owner[t] {
                Some(o) => {
                    let src = cols[o].clone();
                    cols[j].xor_assign(&src);
                }
                None => {
                    low_owner[t] = Some(j);
                    break;
                }
            }
        }
    }
    let n_lt = order.iter().filter(|o| !o.0).count();
    let mut out = alloc::vec![(0, 0); k + 1];
    for (p, &(at_z, n, _)) in order.iter().enumerate() {
        if !at_z {
            continue;
        }
        out[n].1 += 1;
        match cols[p].top() {
            Some(t) if t < n_lt => out[n].0 += 1,
            Some(_) => {}
            None if low_owner[p].is_none() => out[n].0 += 1,
            None => {}
        }
    }
    out
}

/// δ by ranks: `dim ker η^(n-1) + dim coker η^n` for `η: H(F_{<z}) → H(F_{≤z})`.
pub fn delta_by_ranks(complex: &ChainComplex, z: Point) -> Vec<usize> {
    let k = complex.length();
    // Per dimension: cycles of F_<z, boundaries of F_≤z, in the ambient level space.
    let cycles = |n: usize, strict: bool| -> Vec<BitVec> {
        let grades = complex.level_grades(n);
        let size = grades.len();
        let idx: Vec<usize> =
            (0..size).filter(|&i| if strict { grade_lt(grades[i], z) } else { below(grades[i], z) }).collect();
        let rows = if n == 0 { 0 } else { complex.level_size(n - 1) };
        let cols: Vec<BitVec> =
            idx.iter().map(|&i| BitVec::from_indices(rows, complex.boundary_of(n, i).iter())).collect();
        kernel(&cols, rows)
            .into_iter()
            .map(|t| BitVec::from_indices(size, t.ones().into_iter().map(|a| idx[a])))
            .collect()
    };
    let boundaries = |n: usize, strict: bool| -> Vec<BitVec> {
        if n == k {
            return Vec::new();
        }
        let m = complex.boundary(n + 1);
        (0..m.n_cols())
            .filter(|&j| if strict { grade_lt(m.col_grade(j), z) } else { below(m.col_grade(j), z) })
            .map(|j| col_vec(m, j))
            .collect()
    };
    let mut eta_rank = Vec::new();
    let mut h_lt = Vec::new();
    let mut h_le = Vec::new();
    for n in 0..=k {
        let amb = complex.level_size(n);
        let (za, ba) = (cycles(n, true), boundaries(n, true));
        let (zb, bb) = (cycles(n, false), boundaries(n, false));
        let dim_bb = rank(&bb, amb);
        h_lt.push(rank(&za, amb) - rank(&ba, amb));
        h_le.push(rank(&zb, amb) - dim_bb);
        eta_rank.push(sum_dim(&[&za, &bb], amb) - dim_bb);
    }
    (0..=k)
        .map(|n| {
            let coker = h_le[n] - eta_rank[n];
            let ker_prev = if n == 0 { 0 } else { h_lt[n - 1] - eta_rank[n - 1] };
            coker + ker_prev
        })
        .collect()
}

/// A pointwise module `V_z = Z_z / B_z` with `B_z ⊆ Z_z` inside one fixed ambient space,
/// monotone in `z`, with structure maps induced by inclusion.
pub trait Subquotient {
    fn ambient(&self) -> usize;
    fn cycles(&self, z: Point) -> Vec<BitVec>;
    fn boundaries(&self, z: Point) -> Vec<BitVec>;

    fn dim(&self, z: Point) -> usize {
        if z.0 < 0 || z.1 < 0 {
            return 0;
        }
        rank(&self.cycles(z), self.ambient()) - rank(&self.boundaries(z), self.ambient())
    }
}

/// Cokernel of a presentation: `Z_z` spans rows graded `≤ z`, `B_z` is the image of
/// columns graded `≤ z`.
pub struct PresentedModule<'a>(pub &'a GradedMatrix);

impl Subquotient for PresentedModule<'_> {
    fn ambient(&self) -> usize {
        self.0.n_rows()
    }
    fn cycles(&self, z: Point) -> Vec<BitVec> {
        let m = self.0;
        (0..m.n_rows()).filter(|&i| below(m.row_grade(i), z)).map(|i| BitVec::unit(m.n_rows(), i)).collect()
    }
    fn boundaries(&self, z: Point) -> Vec<BitVec> {
        let m = self.0;
        (0..m.n_cols()).filter(|&j| below(m.col_grade(j), z)).map(|j| col_vec(m, j)).collect()
    }
}

/// Homology of a complex in dimension `n`.
pub struct HomologyModule<'a> {
    pub complex: &'a ChainComplex,
    pub n: usize,
}

impl Subquotient for HomologyModule<'_> {
    fn ambient(&self) -> usize {
        self.complex.level_size(self.n)
    }
    fn cycles(&self, z: Point) -> Vec<BitVec> {
        let c = self.complex;
        let n = self.n;
        let grades = c.level_grades(n);
        let idx: Vec<usize> = (0..grades.len()).filter(|&i| below(grades[i], z)).collect();
        let rows = if n == 0 { 0 } else { c.level_size(n - 1) };
        let cols: Vec<BitVec> = idx.iter().map(|&i| BitVec::from_indices(rows, c.boundary_of(n, i).iter())).collect();
        kernel(&cols, rows)
            .into_iter()
            .map(|t| BitVec::from_indices(grades.len(), t.ones().into_iter().map(|a| idx[a])))
            .collect()
    }
    fn boundaries(&self, z: Point) -> Vec<BitVec> {
        if self.n == self.complex.length() {
            return Vec::new();
        }
        let m = self.complex.boundary(self.n + 1);
        (0..m.n_cols()).filter(|&j| below(m.col_grade(j), z)).map(|j| col_vec(m, j)).collect()
    }
}

fn clamp_empty<M: Subquotient + ?Sized>(m: &M, z: Point, f: fn(&M, Point) -> Vec<BitVec>) -> Vec<BitVec> {
    if z.0 < 0 || z.1 < 0 {
        Vec::new()
    } else {
        f(m, z)
    }
}

/// Rank of the structure map `V_w → V_z` for `w ≤ z`.
pub fn structure_map_rank<M: Subquotient + ?Sized>(m: &M, w: Point, z: Point) -> usize {
    let amb = m.ambient();
    let zw = clamp_empty(m, w, M::cycles);
    let bz = clamp_empty(m, z, M::boundaries);
    sum_dim(&[&zw, &bz], amb) - rank(&bz, amb)
}

/// Koszul Betti numbers `(β₀, β₁)` at `z`.
pub fn koszul_betti<M: Subquotient + ?Sized>(m: &M, z: Point) -> (usize, usize) {
    if z.0 < 0 || z.1 < 0 {
        return (0, 0);
    }
    let amb = m.ambient();
    let z1 = (z.0 - 1, z.1);
    let z2 = (z.0, z.1 - 1);
    let w = (z.0 - 1, z.1 - 1);
    let zz = m.cycles(z);
    let bz = m.boundaries(z);
    let zz1 = clamp_empty(m, z1, M::cycles);
    let zz2 = clamp_empty(m, z2, M::cycles);
    let lower = sum_dim(&[&zz1, &zz2, &bz], amb);
    let dim_bz = rank(&bz, amb);
    let beta0 = rank(&zz, amb) - lower;
    let rank_phi2 = lower - dim_bz;

    let bz1 = clamp_empty(m, z1, M::boundaries);
    let bz2 = clamp_empty(m, z2, M::boundaries);
    let zw = clamp_empty(m, w, M::cycles);
    let bw = clamp_empty(m, w, M::boundaries);
    let inter = intersection(&intersection(&zw, &bz1, amb), &bz2, amb);
    let ker_phi1 = span(&inter, amb).dim() - rank(&bw, amb);
    let dim_w = rank(&zw, amb) - rank(&bw, amb);
    let beta1 = m.dim(z1) + m.dim(z2) - rank_phi2 - (dim_w - ker_phi1);
    (beta0, beta1)
}

/// Multisets of grades with `β₀` and `β₁` on the grid `0..extent`, each sorted colex.
pub fn betti_multisets<M: Subquotient + ?Sized>(m: &M, extent: (u32, u32)) -> (Vec<Grade>, Vec<Grade>) {
    let mut b0 = Vec::new();
    let mut b1 = Vec::new();
    for y in 0..extent.1 {
        for x in 0..extent.0 {
            let (a, b) = koszul_betti(m, (x as i64, y as i64));
            b0.extend(core::iter::repeat(Grade::new(x, y)).take(a));
            b1.extend(core::iter::repeat(Grade::new(x, y)).take(b));
        }
    }
    (b0, b1)
}

/// Colex-sorted multiset of the given grades.
pub fn grade_multiset(grades: &[Grade]) -> Vec<Grade> {
    let mut v = grades.to_vec();
    v.sort_by(|a, b| a.colex_cmp(b));
    v
}

/// Generator count at each grade and dimension: `counts[n]` lists `(grade, count)` colex.
pub fn generator_counts(complex: &ChainComplex) -> Vec<Vec<(Grade, usize)>> {
    (0..=complex.length())
        .map(|n| {
            let ms = grade_multiset(complex.level_grades(n));
            let mut out: Vec<(Grade, usize)> = Vec::new();
            for g in ms {
                match out.last_mut() {
                    Some((h, c)) if *h == g => *c += 1,
                    _ => out.push((g, 1)),
                }
            }
            out
        })
        .collect()
}

/// Rank of `P_{≤z}`'s cokernel, i.e. rows `≤ z` minus the rank of columns `≤ z`.
pub fn coker_dim(p: &GradedMatrix, z: Point) -> usize {
    PresentedModule(p).dim(z)
}
