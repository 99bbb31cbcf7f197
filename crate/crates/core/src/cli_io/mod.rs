//! Persistence, deduplication, Macaulay2 export and the command line.

pub mod archive;
pub mod commands;
pub mod dedup;
pub mod macaulay2;

pub use archive::{load, parse, save, verify, Archive};
pub use dedup::{dedup, CanonicalHash};
pub use macaulay2::export_macaulay2;
