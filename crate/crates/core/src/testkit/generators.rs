//! Seeded random instances.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::column::SparseColumn;
use crate::complex::ChainComplex;
use crate::grade::Grade;
use crate::matrix::{colex_permutation, GradedMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Default number of distinct values per coordinate drawn for vertex grades.
pub const DEFAULT_LEVELS: u32 = 8;

/// Replaces each coordinate by its rank among the distinct values present.
pub fn rank_normalize(grades: &mut [Grade]) {
    let mut xs: Vec<u32> = grades.iter().map(|g| g.x).collect();
    let mut ys: Vec<u32> = grades.iter().map(|g| g.y).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    for g in grades.iter_mut() {
        g.x = xs.binary_search(&g.x).unwrap() as u32;
        g.y = ys.binary_search(&g.y).unwrap() as u32;
    }
}

/// Lower-star bifiltration of a triangulated `width × height` grid with
/// [`DEFAULT_LEVELS`] values per coordinate.
pub fn gen_lower_star(width: usize, height: usize, seed: u64) -> ChainComplex {
    gen_lower_star_with(width, height, DEFAULT_LEVELS, seed)
}

/// Lower-star bifiltration of a triangulated grid: `(width+1)(height+1)` vertices with
/// independent uniform grades in `0..levels`, horizontal, vertical and diagonal edges,
/// two triangles per cell. Every simplex takes the coordinatewise maximum of its
/// vertices. The result is rank-normalized and colex-sorted.
pub fn gen_lower_star_with(width: usize, height: usize, levels: u32, seed: u64) -> ChainComplex {
    assert!(width >= 1 && height >= 1 && levels >= 1);
    let mut r = rng(seed);
    let v = |row: usize, col: usize| row * (width + 1) + col;
    let n_v = (width + 1) * (height + 1);
    let mut vg: Vec<Grade> = (0..n_v).map(|_| Grade::new(r.gen_range(0..levels), r.gen_range(0..levels))).collect();
    rank_normalize(&mut vg);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for row in 0..=height {
        for col in 0..=width {
            if col < width {
                edges.push((v(row, col), v(row, col + 1)));
            }
            if row < height {
                edges.push((v(row, col), v(row + 1, col)));
            }
            if row < height && col < width {
                edges.push((v(row, col), v(row + 1, col + 1)));
            }
        }
    }
    let mut edge_index = alloc::collections::BTreeMap::new();
    for (i, &e) in edges.iter().enumerate() {
        edge_index.insert(e, i);
    }
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    for row in 0..height {
        for col in 0..width {
            let (a, b, c, d) = (v(row, col), v(row, col + 1), v(row + 1, col), v(row + 1, col + 1));
            triangles.push([a, b, d]);
            triangles.push([a, c, d]);
        }
    }
    let eg: Vec<Grade> = edges.iter().map(|&(a, b)| vg[a].join(&vg[b])).collect();
    let e_bd: Vec<SparseColumn> = edges.iter().map(|&(a, b)| SparseColumn::from_indices(vec![a, b])).collect();
    let tg: Vec<Grade> = triangles.iter().map(|t| vg[t[0]].join(&vg[t[1]]).join(&vg[t[2]])).collect();
    let t_bd: Vec<SparseColumn> = triangles
        .iter()
        .map(|&[a, b, c]| {
            SparseColumn::from_indices(vec![edge_index[&(a, b)], edge_index[&(b, c)], edge_index[&(a, c)]])
        })
        .collect();
    let c = ChainComplex::from_levels_unchecked(vec![vg, eg, tg], vec![e_bd, t_bd]);
    c.colex_normalize().expect("lower-star complexes are valid").0
}

/// Number of simplices of [`gen_lower_star`] for the given grid.
pub fn lower_star_size(width: usize, height: usize) -> usize {
    (width + 1) * (height + 1) + width * (height + 1) + height * (width + 1) + 3 * width * height
}

/// Adds `count` cancelling pairs `(g, r)` in adjacent dimensions at a random grade `z`:
/// `∂g = ∂t` and `∂r = g + t` for a random chain `t` of generators graded `≤ z`. The
/// result is quasi-isomorphic to the input, rank coordinates are kept, and it is
/// colex-sorted.
pub fn inflate_with_local_pairs(complex: &ChainComplex, seed: u64, count: usize) -> ChainComplex {
    if count == 0 || complex.length() == 0 {
        return complex.clone();
    }
    let mut r = rng(seed);
    let k = complex.length();
    let (ex, ey) = complex.grid_extent();
    let mut lists = complex.generator_lists();
    for _ in 0..count {
        let n = r.gen_range(0..k);
        let z = Grade::new(r.gen_range(0..ex.max(1)), r.gen_range(0..ey.max(1)));
        let tail: Vec<usize> = (0..lists[n].len()).filter(|&i| lists[n][i].0 <= z && r.gen_bool(0.3)).collect();
        let mut dg = SparseColumn::new();
        for &i in &tail {
            let b = lists[n][i].1.clone();
            dg.add_assign(&b);
        }
        let g_index = lists[n].len();
        lists[n].push((z, dg));
        let mut dr = tail;
        dr.push(g_index);
        lists[n + 1].push((z, SparseColumn::from_indices(dr)));
    }
    ChainComplex::from_generator_lists(lists).colex_normalize().expect("inflation keeps the complex valid").0
}

/// Random colex-sorted graded matrix on a `grid × grid` grid; each admissible entry
/// (row grade `≤` column grade) is set with probability `density`.
pub fn random_graded_matrix(seed: u64, n_rows: usize, n_cols: usize, grid: u32, density: f64) -> GradedMatrix {
    let mut r = rng(seed);
    let mut draw = |n: usize| -> Vec<Grade> {
        let mut g: Vec<Grade> = (0..n).map(|_| Grade::new(r.gen_range(0..grid), r.gen_range(0..grid))).collect();
        g.sort_by(|a, b| a.colex_cmp(b));
        g
    };
    let rows = draw(n_rows);
    let cols_g = draw(n_cols);
    let cols = cols_g
        .iter()
        .map(|&cg| SparseColumn::from_sorted((0..n_rows).filter(|&i| rows[i] <= cg && r.gen_bool(density)).collect()))
        .collect();
    GradedMatrix::new(cols, cols_g, rows).expect("generated homogeneously")
}

/// Random column-wise duplicates: columns that are sums of earlier compatible columns,
/// giving kernels and dependent generators.
pub fn random_dependent_matrix(seed: u64, n_rows: usize, n_cols: usize, grid: u32, density: f64) -> GradedMatrix {
    let base = random_graded_matrix(seed, n_rows, n_cols, grid, density);
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let (mut cols, grades, rows) = base.into_parts();
    for j in 0..cols.len() {
        if r.gen_bool(0.4) {
            let mut earlier: Vec<usize> = (0..j).filter(|&i| grades[i] <= grades[j]).collect();
            earlier.shuffle(&mut r);
            let mut c = SparseColumn::new();
            for &i in earlier.iter().take(3) {
                c.add_assign(&cols[i]);
            }
            cols[j] = c;
        }
    }
    GradedMatrix::from_parts(cols, grades, rows)
}

/// `n` unit columns at grades `(i, i)` over rows at the same grades.
pub fn diagonal_instance(n: usize) -> GradedMatrix {
    let grades: Vec<Grade> = (0..n as u32).map(|i| Grade::new(i, i)).collect();
    let cols = (0..n).map(SparseColumn::unit).collect();
    GradedMatrix::from_parts(cols, grades.clone(), grades)
}

/// A colex-sorted copy of `m` (columns and rows stably sorted).
pub fn colex_sorted(m: &GradedMatrix) -> GradedMatrix {
    m.permuted(&colex_permutation(m.col_grades()), &colex_permutation(m.row_grades()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::oracles::homology_dims;

    #[test]
    fn one_by_one_grid() {
        let c = gen_lower_star(1, 1, 7);
        assert_eq!(c.level_sizes(), vec![4, 5, 2]);
        assert_eq!(lower_star_size(1, 1), 11);
        for j in 0..5 {
            let e = c.boundary(1).column(j);
            let g = e.iter().map(|v| c.level_grades(0)[v]).fold(Grade::new(0, 0), |a, b| a.join(&b));
            assert_eq!(g, c.level_grades(1)[j]);
        }
    }

    #[test]
    fn generated_complexes_are_valid_disks() {
        for seed in 0..20 {
            let c = gen_lower_star(3, 2, seed);
            c.validate().unwrap();
            assert!(c.is_colex_sorted());
            let (x, y) = c.grid_extent();
            let top = (x as i64 - 1, y as i64 - 1);
            assert_eq!(homology_dims(&c, top), vec![1, 0, 0]);
            let s = c.level_sizes();
            assert_eq!(s[0] as i64 - s[1] as i64 + s[2] as i64, 1);
        }
    }

    #[test]
    fn inflation_preserves_homology() {
        let c = gen_lower_star(2, 2, 3);
        assert_eq!(inflate_with_local_pairs(&c, 1, 0), c);
        let big = inflate_with_local_pairs(&c, 1, 6);
        big.validate().unwrap();
        assert_eq!(big.total_generators(), c.total_generators() + 12);
        let (x, y) = c.grid_extent();
        for px in -1..x as i64 {
            for py in -1..y as i64 {
                assert_eq!(homology_dims(&big, (px, py)), homology_dims(&c, (px, py)));
            }
        }
    }

    #[test]
    fn random_matrices_are_sorted_and_homogeneous() {
        let m = random_graded_matrix(5, 20, 30, 4, 0.3);
        assert!(m.is_colex_sorted());
        m.validate(1).unwrap();
        let d = random_dependent_matrix(5, 20, 30, 4, 0.3);
        d.validate(1).unwrap();
    }
}
