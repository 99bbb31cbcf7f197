//! Faces and supporting hyperplanes of the cone over a generating matrix.

use stdpairs::monoid::AffineMonoid;

fn main() -> stdpairs::error::Result<()> {
    // the cone over a square: four rays, one vertex
    let q = AffineMonoid::from_rows(&[[0, 1, 1, 0], [0, 0, 1, 1], [1, 1, 1, 1]])?;
    println!("{q}");
    println!("{} faces", q.lattice().len());
    for f in q.lattice().iter() {
        println!("  {f}");
    }
    for f in q.lattice().proper_faces() {
        let rows: Vec<String> = q.supports(f)?.rows().iter().map(ToString::to_string).collect();
        println!("supports of {f}: {}", rows.join(" "));
    }
    Ok(())
}
