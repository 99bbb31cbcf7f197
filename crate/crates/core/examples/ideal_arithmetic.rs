//! Membership, sums, products, intersections and radicals of monomial ideals.

use std::sync::Arc;

use stdpairs::ideal::MonomialIdeal;
use stdpairs::linalg::IntVector;
use stdpairs::monoid::AffineMonoid;

fn main() -> stdpairs::error::Result<()> {
    let q = Arc::new(AffineMonoid::from_rows(&[[1, 2], [0, 2]])?);
    let i = MonomialIdeal::from_rows(q.clone(), &[[3, 2], [4, 4]])?;
    let j = MonomialIdeal::from_rows(q.clone(), &[[2, 0]])?;
    println!("I: {i}\nJ: {j}");
    let b = IntVector::from_i64s(&[4, 2]);
    match i.contains(&b)? {
        Some((x, g)) => println!("{b} = {g} + A {x}, so it lies in I"),
        None => println!("{b} is a standard monomial of I"),
    }
    println!("I + J: {}", i.add(&j)?);
    println!("I * J: {}", i.multiply(&j)?);
    println!("I ∩ J: {}", i.intersect(&j)?);
    println!("rad I: {}", i.radical()?);
    println!("I prime: {}, primary: {}", i.is_prime(), i.is_primary()?);
    Ok(())
}
