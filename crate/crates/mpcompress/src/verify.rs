//! Oracle cross-checks behind `--verify`. Cost grows quickly with input size; intended
//! for small inputs.

use mpcompress_core::testkit::oracles::{
    betti_multisets, delta_gamma, grade_multiset, homology_dims, GridTable, HomologyModule, PresentedModule,
    Subquotient,
};
use mpcompress_core::{ChainComplex, GradedMatrix};

/// Checks that `output` has the pointwise homology of `input` and the optimal number of
/// generators at every grade.
pub fn verify_multichunk(input: &ChainComplex, output: &ChainComplex) -> Result<(), String> {
    let t = GridTable::build(input.grid_extent(), |z| z);
    for z in t.points() {
        let (a, b) = (homology_dims(input, z), homology_dims(output, z));
        if a != b {
            return Err(format!("homology differs at {z:?}: input {a:?}, output {b:?}"));
        }
        for (n, &(delta, _)) in delta_gamma(input, z).iter().enumerate() {
            let have = output.level_grades(n).iter().filter(|g| g.x as i64 == z.0 && g.y as i64 == z.1).count();
            if have != delta {
                return Err(format!("dimension {n} at {z:?} has {have} generators, expected {delta}"));
            }
        }
    }
    Ok(())
}

/// Checks that `p` presents homology in dimension `n` of `complex` pointwise and that its
/// grades are the Betti numbers of that module.
pub fn verify_presentation(complex: &ChainComplex, n: usize, p: &GradedMatrix) -> Result<(), String> {
    let h = HomologyModule { complex, n };
    let pm = PresentedModule(p);
    let ext = complex.grid_extent();
    let t = GridTable::build(ext, |z| z);
    for z in t.points() {
        let (a, b) = (h.dim(z), pm.dim(z));
        if a != b {
            return Err(format!("H{n} has dimension {a} at {z:?} but the presentation gives {b}"));
        }
    }
    let (b0, b1) = betti_multisets(&h, ext);
    if grade_multiset(p.row_grades()) != b0 || grade_multiset(p.col_grades()) != b1 {
        return Err(format!("presentation of H{n} is not minimal"));
    }
    Ok(())
}
