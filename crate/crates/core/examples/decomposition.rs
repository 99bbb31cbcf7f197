//! Overlap classes, associated primes, multiplicities and an irreducible
//! decomposition.

use std::sync::Arc;

use stdpairs::ideal::MonomialIdeal;
use stdpairs::monoid::AffineMonoid;

fn main() -> stdpairs::error::Result<()> {
    let q = Arc::new(AffineMonoid::from_rows(&[[1, 1, 2, 3], [1, 2, 0, 0]])?);
    let i = MonomialIdeal::from_rows(q, &[[3, 2], [5, 1], [6, 1]])?;
    println!("{i}\nstandard cover:\n{}", i.standard_cover()?);
    for class in i.overlap_classes()? {
        let bases: Vec<String> = class.bases().iter().map(ToString::to_string).collect();
        println!("class over {} (maximal: {}): {}", class.face(), class.is_maximal(), bases.join(" "));
    }
    for (f, p) in i.associated_primes()? {
        println!("associated prime {f} with multiplicity {}: {p}", i.multiplicity(&f)?);
    }
    println!("irreducible decomposition:");
    for w in i.irreducible_decomposition()? {
        println!("{w}");
    }
    Ok(())
}
