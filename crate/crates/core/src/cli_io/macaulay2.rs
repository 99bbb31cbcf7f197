//! Macaulay2 script text for a monoid, an ideal and a cover.
//!
//! Rows of `A` become the variables `a, b, c, …`. Monomials inside the ideal
//! list and inside each cover bucket are listed by decreasing lexicographic
//! order of their lex-greatest factorization over the generators.

use crate::covers::Cover;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::IntVector;
use crate::monoid::AffineMonoid;

fn variable(i: usize) -> char {
    (b'a' + i as u8) as char
}

fn check_exportable(monoid: &AffineMonoid) -> Result<()> {
    if monoid.dim() > 26 {
        return Err(Error::Unsupported(format!("{} variables exceed a..z", monoid.dim())));
    }
    if (0..monoid.ngens()).any(|j| !monoid.generator(j).is_nonnegative()) {
        return Err(Error::Unsupported("generators with negative entries are not monomials".into()));
    }
    Ok(())
}

/// `a^2*c`, or `1` for the zero vector.
pub fn monomial(v: &IntVector) -> String {
    let factors: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, e)| !num_traits::Zero::is_zero(*e))
        .map(|(i, e)| if e == &1.into() { variable(i).to_string() } else { format!("{}^{e}", variable(i)) })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

fn by_factorization(monoid: &AffineMonoid, items: impl IntoIterator<Item = IntVector>) -> Result<Vec<IntVector>> {
    let mut keyed = items
        .into_iter()
        .map(|b| {
            let key = monoid.contains(&b)?.into_vec().into_iter().max().unwrap_or_default();
            Ok((key, b))
        })
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| y.1.cmp(&x.1)));
    Ok(keyed.into_iter().map(|(_, b)| b).collect())
}

fn list(items: impl IntoIterator<Item = String>) -> String {
    format!("{{{}}}", items.into_iter().collect::<Vec<_>>().join(", "))
}

pub fn subalgebra_generators(monoid: &AffineMonoid) -> String {
    list((0..monoid.ngens()).map(|j| monomial(&monoid.generator(j))))
}

pub fn ideal_list(ideal: &MonomialIdeal) -> Result<String> {
    let gens = by_factorization(ideal.monoid(), ideal.generators().iter().cloned())?;
    Ok(list(gens.iter().map(monomial)))
}

/// `{{base, {face generators}}, ...}`.
pub fn cover_list(cover: &Cover) -> Result<String> {
    let monoid = cover.monoid();
    let mut entries = Vec::new();
    for face in cover.faces() {
        let face_text = list(face.columns().iter().map(|&j| monomial(&monoid.generator(j))));
        let bases = by_factorization(monoid, cover.bases(face).expect("listed face").iter().cloned())?;
        entries.extend(bases.iter().map(|b| format!("{{{}, {face_text}}}", monomial(b))));
    }
    Ok(list(entries))
}

/// A script defining `R`, the subalgebra `S`, the ideal list `I` and the
/// cover list `C`.
pub fn export_macaulay2(ideal: &MonomialIdeal, cover: &Cover) -> Result<String> {
    let monoid = ideal.monoid();
    check_exportable(monoid)?;
    if cover.monoid().hash() != monoid.hash() {
        return Err(Error::AmbientMismatch);
    }
    let vars: Vec<String> = (0..monoid.dim()).map(|i| variable(i).to_string()).collect();
    Ok(format!(
        "loadPackage \"Normaliz\"\nR = QQ[{}]\nS = createMonomialSubalgebra {}\nI = {}\nC = {}\n",
        vars.join(","),
        subalgebra_generators(monoid),
        ideal_list(ideal)?,
        cover_list(cover)?
    ))
}
