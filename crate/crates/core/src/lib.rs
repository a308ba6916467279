//! Compression of chain complexes of free 2-parameter persistence modules over GF(2).
//!
//! Two complementary routines are provided:
//!
//! * [`multichunk::multi_chunk`] replaces a chain complex by the smallest chain complex
//!   quasi-isomorphic to it. It labels generators as global or local, eliminates local
//!   entries from global boundaries and then drops every local generator.
//! * [`mpfree::mpfree`] computes a minimal presentation of the homology of a short complex
//!   `F² → F¹ → F⁰` using priority-queue driven column reduction.
//!
//! The [`testkit`] module holds brute-force oracles (pointwise GF(2) linear algebra) and
//! random instance generators used to check both routines.
//!
//! The crate is `no_std` (with `alloc`) unless the `std` feature is enabled. The default
//! `parallel` feature pulls in `rayon` and parallelizes the phases that operate on
//! disjoint columns; results are identical with or without it.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod clock;
pub mod column;
pub mod complex;
pub mod error;
pub mod grade;
pub mod labels;
pub mod matrix;
pub mod mpfree;
pub mod multichunk;
mod par;
pub mod testkit;

pub use clock::{Clock, NoClock};
pub use column::SparseColumn;
pub use complex::{ChainComplex, GradeTokens};
pub use error::Error;
pub use grade::Grade;
pub use labels::{Label, LabelTable};
pub use matrix::GradedMatrix;
pub use mpfree::{mpfree, MpfreeCounters, MpfreeOutput, Presentation};
pub use multichunk::{multi_chunk, ChunkStats};
