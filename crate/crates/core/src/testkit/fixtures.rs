//! The small bifiltration on vertices A–E used throughout the documentation and tests.
//!
//! Bases, in order:
//! dimension 0: A, B, C, D at (0,0) and E at (2,0);
//! dimension 1: AB, AC, BD, CD at (0,0), BC at (1,1), CE, DE at (2,2);
//! dimension 2: ABC at (2,1), BCD at (1,2), CDE at (2,2).

use alloc::vec;
use alloc::vec::Vec;

use crate::column::SparseColumn;
use crate::complex::ChainComplex;
use crate::grade::Grade;
use crate::matrix::GradedMatrix;

const fn g(x: u32, y: u32) -> Grade {
    Grade::new(x, y)
}

pub const VERTICES: [&str; 5] = ["A", "B", "C", "D", "E"];
pub const EDGES: [&str; 7] = ["AB", "AC", "BD", "CD", "BC", "CE", "DE"];
pub const TRIANGLES: [&str; 3] = ["ABC", "BCD", "CDE"];

pub fn vertex_grades() -> Vec<Grade> {
    vec![g(0, 0), g(0, 0), g(0, 0), g(0, 0), g(2, 0)]
}

pub fn edge_grades() -> Vec<Grade> {
    vec![g(0, 0), g(0, 0), g(0, 0), g(0, 0), g(1, 1), g(2, 2), g(2, 2)]
}

pub fn triangle_grades() -> Vec<Grade> {
    vec![g(2, 1), g(1, 2), g(2, 2)]
}

fn cols(lists: &[&[usize]]) -> Vec<SparseColumn> {
    lists.iter().map(|l| SparseColumn::from_indices(l.to_vec())).collect()
}

/// The chain complex `F² → F¹ → F⁰` of the bifiltration.
pub fn running_example() -> ChainComplex {
    let d1 = cols(&[&[0, 1], &[0, 2], &[1, 3], &[2, 3], &[1, 2], &[2, 4], &[3, 4]]);
    let d2 = cols(&[&[0, 1, 4], &[2, 3, 4], &[3, 5, 6]]);
    ChainComplex::new(vec![vertex_grades(), edge_grades(), triangle_grades()], vec![d1, d2])
        .expect("running example is a valid complex")
}

/// The compressed complex: `C⁰ = {A, E}`, `C¹ = {CD, BC, CE}`, `C² = {ABC, BCD}`.
pub fn compressed_running_example() -> ChainComplex {
    let d1 = cols(&[&[], &[], &[0, 1]]);
    let d2 = cols(&[&[1], &[0, 1]]);
    ChainComplex::new(
        vec![vec![g(0, 0), g(2, 0)], vec![g(0, 0), g(1, 1), g(2, 2)], vec![g(2, 1), g(1, 2)]],
        vec![d1, d2],
    )
    .expect("compressed example is a valid complex")
}

/// Kernel basis of `∂¹`: cycles AB+BD+DC+CA, AB+AC+BC, AB+AC+BD+CE+DE.
pub fn kernel_basis() -> GradedMatrix {
    GradedMatrix::from_parts(
        cols(&[&[0, 1, 2, 3], &[0, 1, 4], &[0, 1, 2, 5, 6]]),
        vec![g(0, 0), g(1, 1), g(2, 2)],
        edge_grades(),
    )
}

/// Semi-minimal presentation of `H¹` in terms of [`kernel_basis`].
pub fn semi_minimal_presentation() -> GradedMatrix {
    GradedMatrix::from_parts(cols(&[&[1], &[0, 1], &[0, 2]]), triangle_grades(), vec![g(0, 0), g(1, 1), g(2, 2)])
}

/// Minimal presentation `P` of `H¹`, relations at (1,2) and (2,1).
pub fn presentation_p() -> GradedMatrix {
    GradedMatrix::from_parts(cols(&[&[0, 1], &[1]]), vec![g(1, 2), g(2, 1)], vec![g(0, 0), g(1, 1)])
}

/// The alternative minimal presentation `P′` for a different kernel basis.
pub fn presentation_p_prime() -> GradedMatrix {
    GradedMatrix::from_parts(cols(&[&[1], &[0, 1]]), vec![g(1, 2), g(2, 1)], vec![g(0, 0), g(1, 1)])
}
