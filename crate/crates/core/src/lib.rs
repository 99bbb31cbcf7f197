pub mod cli_io;
pub mod covers;
pub mod decomp;
pub mod diophantine;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod monoid;
pub mod pairs;
pub mod polyhedral;
