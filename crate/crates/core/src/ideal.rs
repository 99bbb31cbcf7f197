//! Monomial ideals of an affine semigroup.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::covers::{standard_cover, Cover, DEFAULT_LOOP_CAP};
use crate::decomp::OverlapClass;
use crate::diophantine::{min_nonneg_solutions, min_projected_solutions};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, IntVector};
use crate::monoid::AffineMonoid;
use crate::polyhedral::FaceIndex;

/// Lazily computed results, filled at most once.
#[derive(Clone, Debug, Default)]
pub(crate) struct IdealCache {
    pub(crate) cover: OnceLock<Cover>,
    pub(crate) overlap: OnceLock<Vec<OverlapClass>>,
    pub(crate) associated: OnceLock<Vec<FaceIndex>>,
    pub(crate) decomposition: OnceLock<Vec<MonomialIdeal>>,
}

/// A monomial ideal `I ⊆ ℕA`, stored by its minimal generators in
/// lexicographic order. The empty generator set is the zero ideal.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    monoid: Arc<AffineMonoid>,
    gens: Vec<IntVector>,
    hash: Arc<str>,
    pub(crate) cache: IdealCache,
}

pub(crate) fn ideal_hash(monoid: &AffineMonoid, gens: &[IntVector]) -> Arc<str> {
    let cols: Vec<String> =
        gens.iter().map(|g| g.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
    Arc::from(format!("{}#{}", monoid.hash(), cols.join("|")))
}

impl MonomialIdeal {
    /// The ideal generated by the columns of `m`.
    pub fn new(monoid: Arc<AffineMonoid>, m: &IntMatrix) -> Result<Self> {
        if m.cols() > 0 && m.rows() != monoid.dim() {
            return Err(Error::dim(format!(
                "generators of length {} in a monoid of dimension {}",
                m.rows(),
                monoid.dim()
            )));
        }
        Self::from_generators(monoid, m.columns())
    }

    pub fn from_generators(monoid: Arc<AffineMonoid>, gens: impl IntoIterator<Item = IntVector>) -> Result<Self> {
        let gens: Vec<IntVector> = gens.into_iter().collect();
        for g in &gens {
            if !monoid.is_member(g)? {
                return Err(Error::domain(format!("{g} is not in the monoid")));
            }
            if g.is_zero() {
                return Err(Error::domain("the unit ideal is not supported"));
            }
        }
        Ok(Self::from_members(monoid, gens))
    }

    /// Builds from elements already known to lie in `ℕA ∖ {0}`.
    pub(crate) fn from_members(monoid: Arc<AffineMonoid>, gens: Vec<IntVector>) -> Self {
        let gens = minimalize(&monoid, gens);
        let hash = ideal_hash(&monoid, &gens);
        MonomialIdeal { monoid, gens, hash, cache: IdealCache::default() }
    }

    pub fn from_rows<R: AsRef<[i64]>>(monoid: Arc<AffineMonoid>, columns: &[R]) -> Result<Self> {
        Self::from_generators(monoid, columns.iter().map(|c| IntVector::from_i64s(c.as_ref())))
    }

    pub fn empty(monoid: Arc<AffineMonoid>) -> Self {
        Self::from_members(monoid, Vec::new())
    }

    /// `P_F`, generated by the columns of `A` off the face `F`.
    pub fn prime(monoid: Arc<AffineMonoid>, f: &FaceIndex) -> Result<Self> {
        if f.is_bottom() {
            return Err(Error::domain("the bottom face has no prime ideal"));
        }
        monoid.check_face(f)?;
        let gens = (0..monoid.ngens()).filter(|&j| !f.contains_column(j)).map(|j| monoid.generator(j)).collect();
        Ok(Self::from_members(monoid, gens))
    }

    pub fn monoid(&self) -> &Arc<AffineMonoid> {
        &self.monoid
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.gens
    }

    pub fn gens_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.monoid.dim(), &self.gens).expect("generators share a dimension")
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn hash(&self) -> &str {
        &self.hash
    }

    pub(crate) fn hash_arc(&self) -> &Arc<str> {
        &self.hash
    }

    fn same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.monoid.hash() != other.monoid.hash() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// A witness `(x, g)` with `g + A x = b`: the first generator `g` that
    /// works and the lexicographically least minimal `x`.
    pub fn contains(&self, b: &IntVector) -> Result<Option<(IntVector, IntVector)>> {
        self.monoid.check_vector(b)?;
        for g in &self.gens {
            let sols = min_nonneg_solutions(self.monoid.gens(), &(b - g))?;
            if let Some(x) = sols.first() {
                return Ok(Some((x.clone(), g.clone())));
            }
        }
        Ok(None)
    }

    pub fn is_member(&self, b: &IntVector) -> Result<bool> {
        self.monoid.check_vector(b)?;
        for g in &self.gens {
            if self.monoid.is_member(&(b - g))? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `b ∈ ℕA ∖ I`.
    pub fn is_std_monomial(&self, b: &IntVector) -> Result<bool> {
        Ok(self.monoid.is_member(b)? && !self.is_member(b)?)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let a = self.monoid.gens();
        let n = a.cols();
        let system = a.hstack(&a.negated())?;
        let mut out = Vec::new();
        for g in &self.gens {
            for h in &other.gens {
                for x in &min_projected_solutions(&system, &(h - g), n)? {
                    out.push(g + &a.mul_vec(x)?);
                }
            }
        }
        Ok(Self::from_members(self.monoid.clone(), out))
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        Ok(Self::from_members(self.monoid.clone(), self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let sums = self.gens.iter().flat_map(|g| other.gens.iter().map(move |h| g + h)).collect();
        Ok(Self::from_members(self.monoid.clone(), sums))
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Equal to `P_F` for some face `F`; the zero ideal is `P_top`.
    pub fn is_prime(&self) -> bool {
        self.monoid.lattice().proper_faces().any(|f| Self::prime(self.monoid.clone(), f).is_ok_and(|p| p == *self))
    }

    /// Intersection of `P_F` over the maximal faces of the standard cover.
    pub fn radical(&self) -> Result<MonomialIdeal> {
        if self.is_empty() {
            return Ok(self.clone());
        }
        let faces: Vec<FaceIndex> = self.standard_cover()?.faces().cloned().collect();
        let maximal = faces.iter().filter(|f| !faces.iter().any(|g| g != *f && f.is_subface_of(g)));
        let mut out: Option<MonomialIdeal> = None;
        for f in maximal {
            let p = Self::prime(self.monoid.clone(), f)?;
            out = Some(match out {
                None => p,
                Some(acc) => acc.intersect(&p)?,
            });
        }
        Ok(out.unwrap_or_else(|| Self::empty(self.monoid.clone())))
    }

    pub fn is_radical(&self) -> Result<bool> {
        Ok(self.radical()? == *self)
    }

    pub fn is_primary(&self) -> Result<bool> {
        if self.is_empty() {
            return Ok(true);
        }
        Ok(self.associated_faces()?.len() == 1)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        if self.is_empty() {
            return Ok(true);
        }
        Ok(self.irreducible_decomposition()?.len() == 1)
    }

    /// The standard cover, computed once with the default loop cap.
    pub fn standard_cover(&self) -> Result<&Cover> {
        self.standard_cover_with_cap(DEFAULT_LOOP_CAP)
    }

    pub fn standard_cover_with_cap(&self, loop_cap: usize) -> Result<&Cover> {
        if let Some(c) = self.cache.cover.get() {
            return Ok(c);
        }
        let cover = standard_cover(self, loop_cap)?;
        Ok(self.cache.cover.get_or_init(|| cover))
    }

    pub fn has_cached_cover(&self) -> bool {
        self.cache.cover.get().is_some()
    }

    pub fn has_cached_decomposition(&self) -> bool {
        self.cache.decomposition.get().is_some()
    }
}

/// Drops generators lying in the ideal generated by the others, then sorts.
fn minimalize(monoid: &AffineMonoid, mut gens: Vec<IntVector>) -> Vec<IntVector> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = (0..gens.len())
        .map(|i| {
            !(0..gens.len()).any(|j| j != i && monoid.is_member(&(&gens[i] - &gens[j])).expect("dimensions agree"))
        })
        .collect();
    gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect()
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.hash == other.hash
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "An empty ideal");
        }
        write!(f, "An ideal whose generating set is\n{}", self.gens_matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[i64]) -> IntVector {
        IntVector::from_i64s(e)
    }

    fn q() -> Arc<AffineMonoid> {
        Arc::new(AffineMonoid::from_rows(&[[1, 2], [0, 2]]).unwrap())
    }

    fn ideal(q: &Arc<AffineMonoid>, gens: &[[i64; 2]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(q.clone(), gens).unwrap()
    }

    #[test]
    fn construction() {
        let q = q();
        let i = MonomialIdeal::new(q.clone(), &IntMatrix::from_rows(&[[4, 6], [4, 6]])).unwrap();
        assert_eq!(i.generators(), &[v(&[4, 4])]);
        assert!(MonomialIdeal::new(q.clone(), &IntMatrix::zeros(2, 0)).unwrap().is_empty());
        let q2 = Arc::new(AffineMonoid::from_rows(&[[2, 0, 1], [0, 1, 1]]).unwrap());
        assert_eq!(MonomialIdeal::from_rows(q2, &[[0, 2]]).unwrap().generators(), &[v(&[0, 2])]);
        assert!(matches!(MonomialIdeal::from_rows(q.clone(), &[[1, 1]]), Err(Error::Domain(_))));
        assert!(matches!(MonomialIdeal::from_rows(q, &[[0, 0]]), Err(Error::Domain(_))));
    }

    #[test]
    fn membership() {
        let q = q();
        let i = ideal(&q, &[[4, 4]]);
        assert_eq!(i.contains(&v(&[5, 4])).unwrap(), Some((v(&[1, 0]), v(&[4, 4]))));
        assert_eq!(i.contains(&v(&[4, 4])).unwrap(), Some((v(&[0, 0]), v(&[4, 4]))));
        assert_eq!(i.contains(&v(&[3, 2])).unwrap(), None);
        assert!(i.is_std_monomial(&v(&[2, 2])).unwrap());
        assert!(!i.is_std_monomial(&v(&[4, 4])).unwrap());
        assert!(!i.is_std_monomial(&v(&[1, 1])).unwrap());
    }

    #[test]
    fn arithmetic() {
        let q = q();
        let i = ideal(&q, &[[4, 4]]);
        let j = ideal(&q, &[[5, 0]]);
        assert_eq!(i.intersect(&j).unwrap().generators(), &[v(&[9, 4])]);
        assert_eq!(i.intersect(&i).unwrap(), i);
        let e = MonomialIdeal::empty(q.clone());
        assert!(i.intersect(&e).unwrap().is_empty());
        assert_eq!(i.add(&j).unwrap().generators(), &[v(&[4, 4]), v(&[5, 0])]);
        assert_eq!(i.add(&e).unwrap(), i);
        assert_eq!(i.multiply(&j).unwrap().generators(), &[v(&[9, 4])]);
    }

    #[test]
    fn ambient_mismatch() {
        let i = ideal(&q(), &[[4, 4]]);
        let other = Arc::new(AffineMonoid::new(IntMatrix::identity(2)).unwrap());
        let j = MonomialIdeal::from_rows(other, &[[1, 1]]).unwrap();
        assert!(matches!(i.add(&j), Err(Error::AmbientMismatch)));
    }

    #[test]
    fn primes() {
        let q = q();
        assert_eq!(MonomialIdeal::prime(q.clone(), &FaceIndex::new([1])).unwrap().generators(), &[v(&[1, 0])]);
        assert!(MonomialIdeal::prime(q.clone(), &q.top_face()).unwrap().is_empty());
        assert_eq!(
            MonomialIdeal::prime(q.clone(), &FaceIndex::zero()).unwrap().generators(),
            &[v(&[1, 0]), v(&[2, 2])]
        );
        assert!(MonomialIdeal::prime(q.clone(), &FaceIndex::Bottom).is_err());
        for f in q.lattice().proper_faces() {
            assert!(MonomialIdeal::prime(q.clone(), f).unwrap().is_prime());
        }
    }

    #[test]
    fn radical_and_predicates() {
        let q = q();
        let i = ideal(&q, &[[4, 4]]);
        assert_eq!(i.radical().unwrap().generators(), &[v(&[2, 2])]);
        assert!(i.is_principal());
        assert!(!i.is_radical().unwrap());
        let r = i.radical().unwrap();
        assert_eq!(r.radical().unwrap(), r);
        let p = MonomialIdeal::prime(q.clone(), &FaceIndex::new([1])).unwrap();
        assert_eq!(p.radical().unwrap(), p);
        assert!(MonomialIdeal::empty(q).is_empty());
    }
}
