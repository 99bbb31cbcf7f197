//! Pointed affine semigroups `ℕA ⊆ ℤ^d`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::diophantine::{has_nonneg_solution, min_nonneg_solutions, SolutionSet};
use crate::error::{Error, Result};
use crate::linalg::{integer_span_contains, IntMatrix, IntVector};
use crate::polyhedral::{is_pointed, Cone, FaceIndex, FaceLattice, SupportMatrix};

/// Depth-first over multiplicities of the off-face columns; `vals` holds
/// the support values of `rest`, which must stay nonnegative and end at zero.
fn localization_search(face: &IntMatrix, off: &[(IntVector, Vec<BigInt>)], rest: IntVector, vals: Vec<BigInt>) -> bool {
    match off.split_first() {
        None => vals.iter().all(Zero::is_zero) && integer_span_contains(face, &rest),
        Some(((c, cv), tail)) => {
            let mut rest = rest;
            let mut vals = vals;
            loop {
                if localization_search(face, tail, rest.clone(), vals.clone()) {
                    return true;
                }
                for (v, d) in vals.iter_mut().zip(cv) {
                    *v -= d;
                }
                if vals.iter().any(Signed::is_negative) {
                    return false;
                }
                rest = &rest - c;
            }
        }
    }
}

/// The semigroup generated by the columns of `gens`.
///
/// Zero columns are dropped on construction (they generate nothing), so
/// column positions in face indices refer to the stored `gens`. Duplicate
/// columns are kept in `gens` and removed from `mingens`.
#[derive(Clone, Debug)]
pub struct AffineMonoid {
    gens: IntMatrix,
    mingens: IntMatrix,
    cone: Cone,
    supports: BTreeMap<FaceIndex, SupportMatrix>,
    hash: String,
}

impl AffineMonoid {
    pub fn new(a: IntMatrix) -> Result<Self> {
        let nonzero: Vec<usize> = (0..a.cols()).filter(|&j| !a.column(j).is_zero()).collect();
        let gens = a.select_columns(&nonzero);
        if !is_pointed(&gens) {
            return Err(Error::NotPointed);
        }
        let cone = Cone::new(&gens);
        let supports = cone
            .lattice()
            .iter()
            .map(|f| (f.clone(), cone.supports(f).expect("lattice faces have supports")))
            .collect();
        let mingens = minimal_columns(&gens);
        let hash = canonical_hash(&mingens);
        Ok(AffineMonoid { gens, mingens, cone, supports, hash })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows))
    }

    /// Ambient dimension `d`.
    pub fn dim(&self) -> usize {
        self.gens.rows()
    }

    pub fn ngens(&self) -> usize {
        self.gens.cols()
    }

    pub fn gens(&self) -> &IntMatrix {
        &self.gens
    }

    pub fn generator(&self, j: usize) -> IntVector {
        self.gens.column(j)
    }

    /// Columns of `gens` not in the semigroup generated by the others,
    /// deduplicated and sorted lexicographically.
    pub fn minimal_generators(&self) -> &IntMatrix {
        &self.mingens
    }

    /// True for the monoid `{0}`.
    pub fn is_empty(&self) -> bool {
        self.gens.cols() == 0
    }

    pub fn lattice(&self) -> &FaceLattice {
        self.cone.lattice()
    }

    pub fn top_face(&self) -> FaceIndex {
        FaceIndex::new(0..self.ngens())
    }

    pub fn facet_normals(&self) -> SupportMatrix {
        self.cone.facet_normals()
    }

    pub fn supports(&self, f: &FaceIndex) -> Result<&SupportMatrix> {
        self.supports.get(f).ok_or_else(|| Error::domain(format!("{f} is not a face")))
    }

    pub fn check_face(&self, f: &FaceIndex) -> Result<()> {
        if self.lattice().contains(f) {
            Ok(())
        } else {
            Err(Error::domain(format!("{f} is not a face")))
        }
    }

    pub fn check_vector(&self, b: &IntVector) -> Result<()> {
        if b.dim() != self.dim() {
            return Err(Error::dim(format!("vector of length {} in a monoid of dimension {}", b.dim(), self.dim())));
        }
        Ok(())
    }

    /// All minimal factorizations `x` with `A x = b`; empty iff `b ∉ ℕA`.
    pub fn contains(&self, b: &IntVector) -> Result<SolutionSet> {
        self.check_vector(b)?;
        min_nonneg_solutions(&self.gens, b)
    }

    pub fn is_member(&self, b: &IntVector) -> Result<bool> {
        self.in_localization(b, &FaceIndex::zero())
    }

    /// Whether `y ∈ ℕG`: a member of `ℕA` on which every support row of `G`
    /// vanishes factors through the columns of `G` alone.
    pub fn in_face(&self, y: &IntVector, g: &FaceIndex) -> Result<bool> {
        self.check_vector(y)?;
        if self.supports(g)?.rows().iter().any(|r| !r.dot(y).is_zero()) {
            return Ok(false);
        }
        self.is_member(y)
    }

    /// Whether `x ∈ ℕA + ℤF`, i.e. whether `x + F u ∈ ℕA` for some `u ∈ ℕ^F`.
    ///
    /// Every support row of `F` vanishes on `F` and is nonnegative on `A`, and
    /// their sum is positive off `F`; so the off-face part of a witness has
    /// bounded multiplicities and must bring every support value of `x` to
    /// zero. What remains must lie in `ℤF`.
    pub fn in_localization(&self, x: &IntVector, f: &FaceIndex) -> Result<bool> {
        self.check_vector(x)?;
        let rows = self.supports(f)?.rows();
        let values = |v: &IntVector| -> Vec<BigInt> { rows.iter().map(|r| r.dot(v)).collect() };
        let off: Vec<(IntVector, Vec<BigInt>)> = self
            .gens
            .columns()
            .into_iter()
            .enumerate()
            .filter(|(j, _)| !f.contains_column(*j))
            .map(|(_, c)| {
                let vals = values(&c);
                (c, vals)
            })
            .collect();
        if off.iter().any(|(_, vals)| vals.iter().all(|e| !e.is_positive())) {
            return Err(Error::domain(format!("{f} is not a proper face")));
        }
        let start = values(x);
        if start.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        let face = self.gens.select_columns(f.columns());
        Ok(localization_search(&face, &off, x.clone(), start))
    }

    /// Columns of `gens` at the positions of `f`.
    pub fn face_submatrix(&self, f: &FaceIndex) -> Result<IntMatrix> {
        self.check_face(f)?;
        Ok(self.gens.select_columns(f.columns()))
    }

    /// The face whose generator columns are exactly the columns of `m`.
    pub fn index_of_face(&self, m: &IntMatrix) -> Result<FaceIndex> {
        if m.rows() != self.dim() && m.cols() > 0 {
            return Err(Error::dim("face matrix has the wrong number of rows"));
        }
        let wanted = m.columns();
        for c in &wanted {
            if !(0..self.ngens()).any(|j| &self.gens.column(j) == c) {
                return Err(Error::domain(format!("{c} is not a generator")));
            }
        }
        let f = FaceIndex::new((0..self.ngens()).filter(|&j| wanted.contains(&self.gens.column(j))));
        self.check_face(&f)?;
        Ok(f)
    }

    /// Canonical text determined by the set of minimal generators.
    pub fn hash(&self) -> &str {
        &self.hash
    }
}

impl PartialEq for AffineMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.hash == other.hash
    }
}

impl Eq for AffineMonoid {}

impl fmt::Display for AffineMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "An affine semigroup whose generating set is\n{}", self.gens)
    }
}

fn minimal_columns(gens: &IntMatrix) -> IntMatrix {
    let mut cols = gens.columns();
    cols.sort();
    cols.dedup();
    let keep: Vec<IntVector> = (0..cols.len())
        .filter(|&i| {
            let others: Vec<IntVector> =
                cols.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, c)| c.clone()).collect();
            let m = IntMatrix::from_columns(gens.rows(), &others).expect("columns share a dimension");
            !has_nonneg_solution(&m, &cols[i]).expect("dimensions agree")
        })
        .map(|i| cols[i].clone())
        .collect();
    IntMatrix::from_columns(gens.rows(), &keep).expect("columns share a dimension")
}

fn canonical_hash(mingens: &IntMatrix) -> String {
    let cols: Vec<String> =
        mingens.columns().iter().map(|c| c.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("{}:{}", mingens.rows(), cols.join("|"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[i64]) -> IntVector {
        IntVector::from_i64s(e)
    }

    fn q() -> AffineMonoid {
        AffineMonoid::from_rows(&[[1, 2], [0, 2]]).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(q().lattice().len(), 5);
        let line = AffineMonoid::from_rows(&[[1, 2, 3]]).unwrap();
        assert_eq!(line.minimal_generators(), &IntMatrix::from_rows(&[[1]]));
        assert!(matches!(AffineMonoid::from_rows(&[[1, -1]]), Err(Error::NotPointed)));
        let trivial = AffineMonoid::new(IntMatrix::zeros(2, 0)).unwrap();
        assert!(trivial.is_empty());
        assert_eq!(trivial.lattice().len(), 2);
    }

    #[test]
    fn minimal_generator_examples() {
        let a = IntMatrix::from_rows(&[[1, 1, 2, 3], [1, 2, 0, 0]]);
        assert_eq!(AffineMonoid::new(a).unwrap().minimal_generators().cols(), 4);
        assert_eq!(AffineMonoid::new(IntMatrix::identity(2)).unwrap().minimal_generators().cols(), 2);
        let dup = AffineMonoid::from_rows(&[[1, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(dup.minimal_generators(), &IntMatrix::from_rows(&[[0, 1], [1, 0]]));
    }

    #[test]
    fn membership() {
        let q = q();
        assert_eq!(q.contains(&v(&[3, 2])).unwrap().solutions(), &[v(&[1, 1])]);
        assert_eq!(q.contains(&v(&[0, 0])).unwrap().solutions(), &[v(&[0, 0])]);
        assert!(q.contains(&v(&[1, 1])).unwrap().is_empty());
        assert!(q.contains(&v(&[1])).is_err());
    }

    #[test]
    fn faces() {
        let q = q();
        let f1 = FaceIndex::new([1]);
        assert_eq!(q.face_submatrix(&f1).unwrap(), IntMatrix::from_rows(&[[2], [2]]));
        assert_eq!(q.face_submatrix(&FaceIndex::zero()).unwrap(), IntMatrix::zeros(2, 0));
        assert_eq!(q.face_submatrix(&q.top_face()).unwrap(), *q.gens());
        assert_eq!(q.index_of_face(&IntMatrix::from_rows(&[[2], [2]])).unwrap(), f1);
        assert_eq!(q.index_of_face(q.gens()).unwrap(), q.top_face());
        assert_eq!(q.index_of_face(&IntMatrix::from_rows(&[[1], [0]])).unwrap(), FaceIndex::new([0]));
        for f in q.lattice().proper_faces() {
            assert_eq!(&q.index_of_face(&q.face_submatrix(f).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn hashes() {
        let a = q();
        let b = AffineMonoid::from_rows(&[[2, 1], [2, 0]]).unwrap();
        assert_eq!(a.hash(), b.hash());
        assert_eq!(a, b);
        let c = AffineMonoid::from_rows(&[[1, 2, 3]]).unwrap();
        let d = AffineMonoid::from_rows(&[[1]]).unwrap();
        assert_eq!(c.hash(), d.hash());
        assert_ne!(AffineMonoid::new(IntMatrix::identity(2)).unwrap().hash(), a.hash());
    }

    #[test]
    fn zero_columns_are_dropped() {
        let z = AffineMonoid::from_rows(&[[1, 0, 2], [0, 0, 2]]).unwrap();
        assert_eq!(z.ngens(), 2);
        assert_eq!(z, q());
    }

    #[test]
    fn display() {
        assert_eq!(q().to_string(), "An affine semigroup whose generating set is\n[[1 2]\n [0 2]]");
    }
}
