//! A Macaulay2 script reproducing an ideal and its standard cover.

use std::sync::Arc;

use stdpairs::cli_io::export_macaulay2;
use stdpairs::ideal::MonomialIdeal;
use stdpairs::monoid::AffineMonoid;

fn main() -> stdpairs::error::Result<()> {
    let q = Arc::new(AffineMonoid::from_rows(&[[0, 1, 1, 0], [0, 0, 1, 1], [1, 1, 1, 1]])?);
    let i = MonomialIdeal::from_rows(q, &[[2, 0, 2], [2, 1, 2], [2, 2, 2]])?;
    print!("{}", export_macaulay2(&i, i.standard_cover()?)?);
    Ok(())
}
