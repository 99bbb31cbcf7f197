//! The difference of two pairs, and the principal standard cover it yields.

use std::sync::Arc;

use stdpairs::covers::{pair_difference, principal_cover};
use stdpairs::ideal::MonomialIdeal;
use stdpairs::linalg::IntVector;
use stdpairs::monoid::AffineMonoid;
use stdpairs::pairs::ProperPair;

fn main() -> stdpairs::error::Result<()> {
    let q = Arc::new(AffineMonoid::from_rows(&[[1, 2], [0, 2]])?);
    let zero = MonomialIdeal::empty(q.clone());
    let top = q.top_face();
    let whole = ProperPair::new(IntVector::zeros(2), top.clone(), &zero)?;
    let shifted = ProperPair::new(IntVector::from_i64s(&[4, 4]), top, &zero)?;
    println!("{whole} minus {shifted}:\n{}", pair_difference(&whole, &shifted)?);

    let i = MonomialIdeal::from_rows(q, &[[4, 4]])?;
    println!("principal cover of {i}:\n{}", principal_cover(&i)?);
    Ok(())
}
