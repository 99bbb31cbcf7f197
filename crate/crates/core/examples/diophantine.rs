//! Minimal nonnegative solutions of `M x = b` and the Hilbert basis of a kernel.

use stdpairs::diophantine::{has_nonneg_solution, hilbert_kernel, min_nonneg_solutions};
use stdpairs::linalg::{IntMatrix, IntVector};

fn main() -> stdpairs::error::Result<()> {
    let m = IntMatrix::from_rows(&[[1, 2, 0], [0, 2, 1]]);
    let b = IntVector::from_i64s(&[3, 4]);
    println!("M =\n{m}\nb = {b}");
    for x in min_nonneg_solutions(&m, &b)?.iter() {
        println!("  minimal solution {x}");
    }
    println!("(5, 1) reachable: {}", has_nonneg_solution(&m, &IntVector::from_i64s(&[5, 1]))?);

    let k = IntMatrix::from_rows(&[[1, 1, -2]]);
    println!("Hilbert basis of ker {k}:");
    for x in hilbert_kernel(&k).iter() {
        println!("  {x}");
    }
    Ok(())
}
