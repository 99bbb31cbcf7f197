//! Saving an ideal with its computed caches and loading it back.

use std::sync::Arc;

use stdpairs::cli_io::{archive, load, save, Archive};
use stdpairs::ideal::MonomialIdeal;
use stdpairs::monoid::AffineMonoid;

fn main() -> stdpairs::error::Result<()> {
    let q = Arc::new(AffineMonoid::from_rows(&[[1, 2], [0, 2]])?);
    let i = MonomialIdeal::from_rows(q, &[[3, 2], [4, 0]])?;
    i.irreducible_decomposition()?;

    let path = std::env::temp_dir().join(format!("stdpairs-example-{}.txt", std::process::id()));
    let archived = Archive::Ideal(i.clone());
    save(&archived, &path)?;
    println!("{}", archive::to_string(&archived));

    let Archive::Ideal(back) = load(&path)? else { unreachable!("an ideal was saved") };
    println!("reloaded equal: {}", back.hash() == i.hash());
    println!("caches restored: cover {}, decomposition {}", back.has_cached_cover(), back.has_cached_decomposition());
    std::fs::remove_file(&path)?;
    Ok(())
}
