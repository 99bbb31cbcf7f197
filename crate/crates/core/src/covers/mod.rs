//! Covers of the standard monomials by pairs, and the algorithms producing
//! the standard cover.

mod cover;
mod difference;
mod poly;
mod refine;

pub use cover::Cover;
pub use difference::{pair_difference, principal_cover};
pub use poly::{poly_standard_pairs, PolyMonomialIdeal, PolyStdPair};
pub use refine::{cone_to_ctwo, cover_to_standard, czero_to_cone, minimal_holes, DEFAULT_LOOP_CAP};

pub(crate) use refine::standard_cover;
