//! Standard covers over a non-normal monoid and over a polynomial ring.

use std::sync::Arc;

use stdpairs::covers::{poly_standard_pairs, PolyMonomialIdeal};
use stdpairs::ideal::MonomialIdeal;
use stdpairs::linalg::{IntMatrix, IntVector};
use stdpairs::monoid::AffineMonoid;

fn main() -> stdpairs::error::Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();

    let q = Arc::new(AffineMonoid::from_rows(&[[0, 1, 1, 0], [0, 0, 1, 1], [1, 1, 1, 1]])?);
    let i = MonomialIdeal::from_rows(q, &[[2, 0, 2], [2, 1, 2], [2, 2, 2]])?;
    println!("{i}\nstandard cover:\n{}", i.standard_cover()?);

    let k3 = Arc::new(AffineMonoid::new(IntMatrix::identity(3))?);
    let gens = [[1, 3, 1], [1, 2, 2], [0, 3, 2], [0, 2, 3]];
    let j = MonomialIdeal::from_rows(k3, &gens)?;
    println!("{j}\nstandard cover:\n{}", j.standard_cover()?);

    let poly = PolyMonomialIdeal::new(3, gens.iter().map(|g| IntVector::from_i64s(g)))?;
    println!("the same ideal through the polynomial-ring routine:");
    for p in poly_standard_pairs(&poly)? {
        println!("  {p}");
    }
    Ok(())
}
