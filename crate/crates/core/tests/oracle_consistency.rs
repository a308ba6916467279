use mpcompress_core::testkit::generators::{gen_lower_star, inflate_with_local_pairs};
use mpcompress_core::testkit::oracles::{below, delta_by_ranks, delta_gamma, homology_dims, GridTable};
use mpcompress_core::{ChainComplex, SparseColumn};

/// Homology from a persistence-style pairing of the slice at `z`: unpaired zero columns.
fn homology_by_pairing(c: &ChainComplex, z: (i64, i64)) -> Vec<usize> {
    let k = c.length();
    let mut ids = Vec::new();
    for n in 0..=k {
        for (i, &g) in c.level_grades(n).iter().enumerate() {
            if below(g, z) {
                ids.push((n, i));
            }
        }
    }
    let pos = |n: usize, i: usize| ids.iter().position(|&p| p == (n, i)).unwrap();
    let mut cols: Vec<SparseColumn> = ids
        .iter()
        .map(|&(n, i)| SparseColumn::from_indices(c.boundary_of(n, i).iter().map(|r| pos(n - 1, r)).collect()))
        .collect();
    let mut owner = vec![usize::MAX; ids.len()];
    for j in 0..cols.len() {
        while let Some(p) = cols[j].pivot() {
            if owner[p] == usize::MAX {
                owner[p] = j;
                break;
            }
            let src = cols[owner[p]].clone();
            cols[j].add_assign(&src);
        }
    }
    let mut out = vec![0; k + 1];
    for (j, &(n, _)) in ids.iter().enumerate() {
        if cols[j].is_empty() && owner[j] == usize::MAX {
            out[n] += 1;
        }
    }
    out
}

#[test]
fn homology_routes_agree() {
    for seed in 0..30 {
        let c = inflate_with_local_pairs(&gen_lower_star(3, 2, seed), seed, 3);
        let t = GridTable::build(c.grid_extent(), |z| z);
        for z in t.points() {
            assert_eq!(homology_dims(&c, z), homology_by_pairing(&c, z), "seed {seed} at {z:?}");
        }
    }
}

#[test]
fn delta_routes_agree_and_delta_is_at_most_gamma() {
    for seed in 0..30 {
        let c = inflate_with_local_pairs(&gen_lower_star(2, 3, seed), seed + 1, 4);
        let t = GridTable::build(c.grid_extent(), |z| z);
        for z in t.points() {
            let dg = delta_gamma(&c, z);
            let d: Vec<usize> = dg.iter().map(|p| p.0).collect();
            assert_eq!(d, delta_by_ranks(&c, z), "seed {seed} at {z:?}");
            assert!(dg.iter().all(|&(d, g)| d <= g));
        }
    }
}

#[test]
fn below_all_grades_everything_vanishes() {
    let c = gen_lower_star(2, 2, 4);
    assert_eq!(homology_dims(&c, (-1, -1)), vec![0, 0, 0]);
    assert_eq!(delta_gamma(&c, (-1, 3)), vec![(0, 0); 3]);
}
