//! Test support: the worked example, brute-force oracles and random instances.

pub mod fixtures;
pub mod generators;
pub mod linalg;
pub mod oracles;
