//! Proper pairs, divisibility between pairs and maximality.

use std::sync::Arc;

use stdpairs::ideal::MonomialIdeal;
use stdpairs::linalg::{IntMatrix, IntVector};
use stdpairs::monoid::AffineMonoid;
use stdpairs::pairs::ProperPair;
use stdpairs::polyhedral::FaceIndex;

fn main() -> stdpairs::error::Result<()> {
    let q = Arc::new(AffineMonoid::new(IntMatrix::identity(3))?);
    let i = MonomialIdeal::from_rows(q, &[[0, 2, 0], [1, 1, 1]])?;
    let xz = FaceIndex::new([0, 2]);
    let p = ProperPair::new(IntVector::from_i64s(&[0, 0, 0]), FaceIndex::new([0]), &i)?;
    let r = ProperPair::new(IntVector::from_i64s(&[0, 1, 0]), FaceIndex::new([0]), &i)?;
    println!("I: {i}\np = {p}\nr = {r}");
    println!("p divides r with witnesses [u; w]:\n{}", p.divides(&r)?);
    println!("r divides p: {}", r.divides(&p)?.rows() > 0);
    println!("p maximal: {}, r maximal: {}", p.is_maximal(&i)?, r.is_maximal(&i)?);
    let bad = ProperPair::new(IntVector::from_i64s(&[0, 1, 0]), xz, &i);
    println!("(0,1,0) over (0, 2) is rejected: {}", bad.is_err());
    Ok(())
}
