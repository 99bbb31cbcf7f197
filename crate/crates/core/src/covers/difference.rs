use std::sync::Arc;

use crate::covers::poly::{poly_standard_pairs, PolyMonomialIdeal};
use crate::covers::Cover;
use crate::diophantine::min_projected_solutions;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::IntVector;
use crate::monoid::AffineMonoid;
use crate::pairs::{pairs_meet, ProperPair};
use crate::polyhedral::FaceIndex;

/// Pairs whose translated faces partition `(b + ℕG) ∖ (b′ + ℕG′)`, for
/// faces `G ⊆ G′`.
///
/// The minimal `u`-parts of the solutions of `G u − G′ v = b′ − b` generate
/// the ideal `J ⊆ ℕ^|G|` of exponents landing in `b′ + ℕG′`; each standard
/// pair `(w, V)` of `J` becomes `(b + G w, G[V])`.
pub(crate) fn difference_pairs(
    monoid: &AffineMonoid,
    b: &IntVector,
    g: &FaceIndex,
    b2: &IntVector,
    g2: &FaceIndex,
) -> Result<Vec<(IntVector, FaceIndex)>> {
    if !g.is_subface_of(g2) {
        return Err(Error::domain(format!("pair difference needs {g} ⊆ {g2}")));
    }
    let gm = monoid.gens().select_columns(g.columns());
    let system = gm.hstack(&monoid.gens().select_columns(g2.columns()).negated())?;
    let k = g.len();
    let us = min_projected_solutions(&system, &(b2 - b), k)?;
    if us.is_empty() {
        return Ok(vec![(b.clone(), g.clone())]);
    }
    if us.iter().any(IntVector::is_zero) {
        return Ok(Vec::new());
    }
    let j = PolyMonomialIdeal::new(k, us)?;
    let mut out = Vec::new();
    for sp in poly_standard_pairs(&j)? {
        let base = b + &gm.mul_vec(&sp.base)?;
        let cols: Vec<usize> = sp.vars.iter().map(|&i| g.columns()[i]).collect();
        let candidate = FaceIndex::new(cols.iter().copied());
        let face = if monoid.lattice().contains(&candidate) {
            candidate
        } else {
            // The columns G[V] are not a whole face; the smallest face over
            // them is admissible only if it still avoids b′ + ℕG′.
            let hull = monoid.lattice().smallest_face_containing(&cols).clone();
            if pairs_meet(monoid, &base, &hull, b2, g2)? {
                return Err(Error::Unsupported(format!(
                    "columns {candidate} of the pair difference do not span a face"
                )));
            }
            hull
        };
        out.push((base, face));
    }
    Ok(out)
}

/// The pair difference of `p = (b, G)` and `q = (b′, G′)` as a cover whose
/// pairs are anchored to the zero ideal.
pub fn pair_difference(p: &ProperPair, q: &ProperPair) -> Result<Cover> {
    if p.monoid().hash() != q.monoid().hash() {
        return Err(Error::AmbientMismatch);
    }
    let monoid = p.monoid();
    let mut cover = Cover::new(monoid.clone());
    for (base, face) in difference_pairs(monoid, p.base(), p.face(), q.base(), q.face())? {
        cover.insert(base, face);
    }
    Ok(cover)
}

/// The standard cover of a principal ideal `⟨b⟩`: the difference of
/// `(0, A)` and `(b, A)`.
pub fn principal_cover(ideal: &MonomialIdeal) -> Result<Cover> {
    if !ideal.is_principal() {
        return Err(Error::domain("principal_cover needs exactly one generator"));
    }
    let monoid: &Arc<AffineMonoid> = ideal.monoid();
    let top = monoid.top_face();
    let zero = IntVector::zeros(monoid.dim());
    let mut cover = Cover::for_ideal(ideal);
    for (base, face) in difference_pairs(monoid, &zero, &top, &ideal.generators()[0], &top)? {
        cover.insert(base, face);
    }
    Ok(cover)
}
