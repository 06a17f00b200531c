//! File formats and the command-line front end for [`rotinv_core`].

pub mod cli;
pub mod error;
pub mod io;
pub mod json;

pub use error::{Error, Result};
pub use io::{load_input, read_csv, read_pgm, Input};
