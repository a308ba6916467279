//! scc2020 file format, oracle verification and the `mpcompress` command line.

pub mod cli;
pub mod decimal;
pub mod scc;
pub mod verify;

pub use scc::{parse_scc, read_scc, render_scc, write_scc, SccError};
