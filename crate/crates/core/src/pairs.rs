//! Pairs `(a, F)` standing for the translated face `a + ℕF`.

use std::fmt;
use std::sync::Arc;

use crate::diophantine::{has_nonneg_solution, min_nonneg_solutions, SolutionSet};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{IntMatrix, IntVector};
use crate::monoid::AffineMonoid;
use crate::polyhedral::FaceIndex;

/// A pair anchored to an ideal (identified by its hash). Proper, unless built
/// through one of the unchecked constructors.
#[derive(Clone, Debug)]
pub struct ProperPair {
    base: IntVector,
    face: FaceIndex,
    monoid: Arc<AffineMonoid>,
    ideal_hash: Arc<str>,
}

impl ProperPair {
    /// Checks that `a ∈ ℕA`, that `F` is a face, and that `a + ℕF` misses `I`.
    pub fn new(base: IntVector, face: FaceIndex, ideal: &MonomialIdeal) -> Result<Self> {
        let pair = Self::new_unchecked(base, face, ideal)?;
        if !is_proper(&pair.base, &pair.face, ideal)? {
            return Err(Error::NotProper { base: pair.base.to_string(), face: pair.face.to_string() });
        }
        Ok(pair)
    }

    /// Like [`ProperPair::new`] without the properness test.
    pub fn new_unchecked(base: IntVector, face: FaceIndex, ideal: &MonomialIdeal) -> Result<Self> {
        let monoid = ideal.monoid();
        if face.is_bottom() {
            return Err(Error::domain("a pair needs a nonempty face"));
        }
        monoid.check_face(&face)?;
        if !monoid.is_member(&base)? {
            return Err(Error::domain(format!("{base} is not in the monoid")));
        }
        Ok(Self::from_parts(base, face, monoid.clone(), ideal.hash_arc().clone()))
    }

    pub(crate) fn from_parts(
        base: IntVector,
        face: FaceIndex,
        monoid: Arc<AffineMonoid>,
        ideal_hash: Arc<str>,
    ) -> Self {
        ProperPair { base, face, monoid, ideal_hash }
    }

    pub fn base(&self) -> &IntVector {
        &self.base
    }

    pub fn face(&self) -> &FaceIndex {
        &self.face
    }

    pub fn monoid(&self) -> &Arc<AffineMonoid> {
        &self.monoid
    }

    pub fn ideal_hash(&self) -> &str {
        &self.ideal_hash
    }

    pub fn face_matrix(&self) -> IntMatrix {
        self.monoid.gens().select_columns(self.face.columns())
    }

    /// Minimal `x` with `a + F x = b`; empty iff `b ∉ a + ℕF`.
    pub fn contains(&self, b: &IntVector) -> Result<SolutionSet> {
        self.monoid.check_vector(b)?;
        min_nonneg_solutions(&self.face_matrix(), &(b - &self.base))
    }

    pub fn contains_point(&self, b: &IntVector) -> Result<bool> {
        self.monoid.check_vector(b)?;
        has_nonneg_solution(&self.face_matrix(), &(b - &self.base))
    }

    /// Rows `[u; w]` (length `n + |G|`) of minimal solutions of
    /// `a + A u = b + G w`. Nonempty iff `self` divides `other`; empty
    /// whenever `F ⊄ G`.
    pub fn divides(&self, other: &ProperPair) -> Result<IntMatrix> {
        if self.monoid.hash() != other.monoid.hash() {
            return Err(Error::AmbientMismatch);
        }
        let n = self.monoid.ngens();
        let width = n + other.face.len();
        if !self.face.is_subface_of(&other.face) {
            return Ok(IntMatrix::zeros(0, width));
        }
        let system = self.monoid.gens().hstack(&other.face_matrix().negated())?;
        let sols = min_nonneg_solutions(&system, &(&other.base - &self.base))?;
        IntMatrix::from_row_vectors(sols.solutions(), width)
    }

    /// Whether `self` divides `other`, without listing witnesses: `F ⊆ G`
    /// and `b − a ∈ ℕA + ℤG`.
    pub fn divides_some(&self, other: &ProperPair) -> Result<bool> {
        if self.monoid.hash() != other.monoid.hash() {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.face.is_subface_of(&other.face)
            && self.monoid.in_localization(&(&other.base - &self.base), &other.face)?)
    }

    /// `a + ℕF ⊆ b + ℕG` (same ambient monoid assumed).
    pub fn is_contained_in(&self, other: &ProperPair) -> Result<bool> {
        pair_within(&self.monoid, &self.base, &self.face, &other.base, &other.face)
    }

    /// Whether this pair is one of the standard pairs of `ideal`.
    pub fn is_maximal(&self, ideal: &MonomialIdeal) -> Result<bool> {
        if *self.ideal_hash != *ideal.hash() {
            return Err(Error::AmbientMismatch);
        }
        if !is_proper(&self.base, &self.face, ideal)? {
            return Ok(false);
        }
        Ok(ideal.standard_cover()?.contains_pair(&self.base, &self.face))
    }
}

/// `a + ℕF ⊆ b + ℕG`: needs `F ⊆ G` and `a − b ∈ ℕG`.
pub(crate) fn pair_within(
    monoid: &AffineMonoid,
    a: &IntVector,
    f: &FaceIndex,
    b: &IntVector,
    g: &FaceIndex,
) -> Result<bool> {
    if !f.is_subface_of(g) {
        return Ok(false);
    }
    monoid.in_face(&(a - b), g)
}

/// `(a + ℕF) ∩ I = ∅`: no generator `g` has `a + F u = g + A w`.
pub fn is_proper(a: &IntVector, f: &FaceIndex, ideal: &MonomialIdeal) -> Result<bool> {
    let monoid = ideal.monoid();
    for g in ideal.generators() {
        if monoid.in_localization(&(a - g), f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal `[u; v]` with `F u − G v = b − a`; nonempty iff the translated
/// faces `a + ℕF` and `b + ℕG` meet.
pub fn intersect_pairs(
    monoid: &AffineMonoid,
    a: &IntVector,
    f: &FaceIndex,
    b: &IntVector,
    g: &FaceIndex,
) -> Result<SolutionSet> {
    monoid.check_face(f)?;
    monoid.check_face(g)?;
    let system = monoid.face_submatrix(f)?.hstack(&monoid.face_submatrix(g)?.negated())?;
    min_nonneg_solutions(&system, &(b - a))
}

pub(crate) fn pairs_meet(
    monoid: &AffineMonoid,
    a: &IntVector,
    f: &FaceIndex,
    b: &IntVector,
    g: &FaceIndex,
) -> Result<bool> {
    let system =
        monoid.gens().select_columns(f.columns()).hstack(&monoid.gens().select_columns(g.columns()).negated())?;
    has_nonneg_solution(&system, &(b - a))
}

impl PartialEq for ProperPair {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.face == other.face && self.ideal_hash == other.ideal_hash
    }
}

impl Eq for ProperPair {}

fn column_text(v: &IntVector) -> String {
    let parts: Vec<String> = v.iter().map(|e| format!("[{e}]")).collect();
    format!("[{}]", parts.join(", "))
}

fn rows_text(m: &IntMatrix, d: usize) -> String {
    let rows: Vec<String> = (0..d)
        .map(|i| {
            let entries: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

impl fmt::Display for ProperPair {
    /// `([[2], [0]]^T,[[1], [0]])`: the base as a column, then the face
    /// submatrix row by row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}^T,{})", column_text(&self.base), rows_text(&self.face_matrix(), self.monoid.dim()))
    }
}
