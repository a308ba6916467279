use mpcompress_core::mpfree::{ker_basis, ker_basis_lw, min_gens, min_gens_lw, minimize, minimize_lw, mpfree, reparam};
use mpcompress_core::testkit::generators::{gen_lower_star, random_dependent_matrix};
use mpcompress_core::testkit::linalg::{kernel, rank, sum_dim, BitVec};
use mpcompress_core::testkit::oracles::{
    below, betti_multisets, grade_multiset, structure_map_rank, HomologyModule, PresentedModule, Subquotient,
};
use mpcompress_core::{multi_chunk, ChainComplex, GradedMatrix};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = GradedMatrix> {
    (any::<u64>(), 1usize..30, 0usize..50, 1u32..7, 0.05f64..0.5)
        .prop_map(|(s, r, c, g, d)| random_dependent_matrix(s, r, c, g, d))
}

fn cols_below(m: &GradedMatrix, z: (i64, i64)) -> Vec<BitVec> {
    (0..m.n_cols())
        .filter(|&j| below(m.col_grade(j), z))
        .map(|j| BitVec::from_indices(m.n_rows(), m.column(j).iter()))
        .collect()
}

fn points(m: &GradedMatrix) -> Vec<(i64, i64)> {
    let (x, y) = m.col_grades().iter().fold((0, 0), |a, g| (a.0.max(g.x as i64 + 1), a.1.max(g.y as i64 + 1)));
    (-1..=x).flat_map(|a| (-1..=y).map(move |b| (a, b))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn queue_and_grid_scan_agree(m in matrix()) {
        let (g, gc) = min_gens(&m).unwrap();
        let (g_lw, _) = min_gens_lw(&m).unwrap();
        prop_assert_eq!(&g, &g_lw);
        let (k, kc) = ker_basis(&m).unwrap();
        let (k_lw, _) = ker_basis_lw(&m).unwrap();
        prop_assert_eq!(&k, &k_lw);
        for c in [gc, kc] {
            prop_assert!(c.grade_pops <= c.initial_grades + c.grade_pushes);
        }
    }

    #[test]
    fn kernel_basis_is_sound_and_complete(m in matrix()) {
        let (k, _) = ker_basis(&m).unwrap();
        prop_assert!(m.compose(&k).iter().all(|c| c.is_empty()));
        prop_assert!(k.is_colex_sorted());
        for z in points(&m) {
            let b = cols_below(&m, z);
            let nullity = kernel(&b, m.n_rows()).len();
            prop_assert_eq!(rank(&cols_below(&k, z), k.n_rows()), nullity);
            // K restricted to z is independent.
            prop_assert_eq!(rank(&cols_below(&k, z), k.n_rows()), cols_below(&k, z).len());
        }
    }

    #[test]
    fn generators_are_minimal(m in matrix()) {
        let (g, _) = min_gens(&m).unwrap();
        for z in points(&m) {
            let im = cols_below(&m, z);
            let gens = cols_below(&g, z);
            prop_assert_eq!(sum_dim(&[&im, &gens], m.n_rows()), rank(&im, m.n_rows()));
            prop_assert_eq!(rank(&gens, m.n_rows()), rank(&im, m.n_rows()));
            let lower = sum_dim(&[&cols_below(&m, (z.0 - 1, z.1)), &cols_below(&m, (z.0, z.1 - 1))], m.n_rows());
            let at_z = g.col_grades().iter().filter(|h| h.x as i64 == z.0 && h.y as i64 == z.1).count();
            prop_assert_eq!(at_z, rank(&im, m.n_rows()) - lower);
        }
    }
}

fn check_presentation(c: &ChainComplex, n: usize) {
    let out = mpfree(c, n).unwrap();
    let p = &out.presentation;
    p.validate(1).unwrap();
    assert!(p.is_colex_sorted());
    let h = HomologyModule { complex: c, n };
    let pm = PresentedModule(p);
    let (x, y) = c.grid_extent();
    for a in -1..x as i64 {
        for b in -1..y as i64 {
            let z = (a, b);
            assert_eq!(pm.dim(z), h.dim(z), "dimension at {z:?}");
            for w in [(a - 1, b), (a, b - 1)] {
                assert_eq!(structure_map_rank(&pm, w, z), structure_map_rank(&h, w, z), "map {w:?} -> {z:?}");
            }
        }
    }
    let (b0, b1) = betti_multisets(&h, (x, y));
    assert_eq!(grade_multiset(p.row_grades()), b0);
    assert_eq!(grade_multiset(p.col_grades()), b1);
}

#[test]
fn presentations_of_lower_star_homology() {
    for seed in 0..40 {
        let c = gen_lower_star(1 + (seed % 3) as usize, 1 + (seed % 4) as usize, seed);
        check_presentation(&c, 1);
        let (small, _) = multi_chunk(&c).unwrap();
        check_presentation(&small, 1);
    }
}

#[test]
fn minimize_matches_the_sequential_oracle() {
    for seed in 0..60 {
        let c = gen_lower_star(2, 2 + (seed % 3) as usize, 1000 + seed);
        let (g, _) = min_gens(c.boundary(2)).unwrap();
        let (k, _) = ker_basis(c.boundary(1)).unwrap();
        let (semi, _) = reparam(&g, &k).unwrap();
        let (fast, _) = minimize(&semi).unwrap();
        let slow = minimize_lw(&semi);
        assert_eq!(grade_multiset(fast.col_grades()), grade_multiset(slow.col_grades()));
        assert_eq!(grade_multiset(fast.row_grades()), grade_multiset(slow.row_grades()));
    }
}

#[test]
fn reparam_presents_the_same_module() {
    let c = gen_lower_star(3, 2, 77);
    let (g, _) = min_gens(c.boundary(2)).unwrap();
    let (k, _) = ker_basis(c.boundary(1)).unwrap();
    let (semi, _) = reparam(&g, &k).unwrap();
    let h = HomologyModule { complex: &c, n: 1 };
    let (x, y) = c.grid_extent();
    for a in -1..x as i64 {
        for b in -1..y as i64 {
            assert_eq!(PresentedModule(&semi).dim((a, b)), h.dim((a, b)));
        }
    }
}
