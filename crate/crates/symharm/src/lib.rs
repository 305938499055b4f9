//! File formats, table rendering and the command-line front end for `symharm-core`.

pub mod cli;
pub mod render;
pub mod report;
pub mod scale_file;

pub use scale_file::{parse_scale, serialize_scale, ScaleFileError};
