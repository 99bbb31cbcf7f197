//! Overlap classes, associated primes, multiplicities and the irredundant
//! irreducible decomposition, all read off the standard cover.
//!
//! For a class `C` over `F` let `D(C)` be the `≤_Q`-downset of the union of
//! its translated faces. `D(C)` is directed (translates in one class meet),
//! so its complement `W_C` is an irreducible ideal containing `I`, and
//! `std(I)` is the union of all `D(C)`. Hence `I` is the intersection of the
//! `W_C`, and keeping the classes whose downsets are maximal gives the
//! irredundant decomposition (monomial ideals form a distributive lattice).
//!
//! `D(C) ⊆ D(C')` holds iff every pair of `C` divides some pair of `C'`;
//! that preorder is the one used for maximality.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::IntVector;
use crate::monoid::AffineMonoid;
use crate::pairs::{pairs_meet, ProperPair};
use crate::polyhedral::FaceIndex;

/// A connected block of standard pairs over one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapClass {
    face: FaceIndex,
    bases: Vec<IntVector>,
    maximal: bool,
}

impl OverlapClass {
    pub(crate) fn from_parts(face: FaceIndex, mut bases: Vec<IntVector>, maximal: bool) -> Self {
        bases.sort();
        OverlapClass { face, bases, maximal }
    }

    pub fn face(&self) -> &FaceIndex {
        &self.face
    }

    /// Bases of the member pairs, sorted.
    pub fn bases(&self) -> &[IntVector] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    pub fn pairs(&self, ideal: &MonomialIdeal) -> Vec<ProperPair> {
        self.bases
            .iter()
            .map(|b| {
                ProperPair::from_parts(b.clone(), self.face.clone(), ideal.monoid().clone(), ideal.hash_arc().clone())
            })
            .collect()
    }
}

/// Whether some `b ∈ bs` has `a + c ∈ b + ℕG` for a `c ∈ ℕA`.
fn divides_some(monoid: &AffineMonoid, a: &IntVector, bs: &[IntVector], g: &FaceIndex) -> Result<bool> {
    for b in bs {
        if monoid.in_localization(&(b - a), g)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `D(c) ⊆ D(d)`.
fn class_below(monoid: &AffineMonoid, c: &OverlapClass, d: &OverlapClass) -> Result<bool> {
    if !c.face.is_subface_of(&d.face) {
        return Ok(false);
    }
    for a in &c.bases {
        if !divides_some(monoid, a, &d.bases, &d.face)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn compute_classes(ideal: &MonomialIdeal) -> Result<Vec<OverlapClass>> {
    let monoid = ideal.monoid();
    let cover = ideal.standard_cover()?;
    let mut classes = Vec::new();
    for face in cover.faces() {
        let bases: Vec<IntVector> = cover.bases(face).expect("listed face").iter().cloned().collect();
        // union-find over the overlap graph
        let mut parent: Vec<usize> = (0..bases.len()).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..bases.len() {
            for j in i + 1..bases.len() {
                let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                if ri != rj && pairs_meet(monoid, &bases[i], face, &bases[j], face)? {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<IntVector>> = BTreeMap::new();
        for (i, b) in bases.iter().enumerate() {
            let r = root(&mut parent, i);
            blocks.entry(r).or_default().push(b.clone());
        }
        classes.extend(blocks.into_values().map(|bs| OverlapClass::from_parts(face.clone(), bs, false)));
    }
    let below: Vec<Vec<bool>> = classes
        .iter()
        .map(|c| classes.iter().map(|d| class_below(monoid, c, d)).collect::<Result<Vec<bool>>>())
        .collect::<Result<_>>()?;
    let flags: Vec<bool> =
        (0..classes.len()).map(|i| !(0..classes.len()).any(|j| j != i && below[i][j] && !below[j][i])).collect();
    for (c, m) in classes.iter_mut().zip(flags) {
        c.maximal = m;
    }
    Ok(classes)
}

/// The irreducible ideal `W_C` whose standard monomials are `D(C)`.
fn component(ideal: &MonomialIdeal, class: &OverlapClass) -> Result<MonomialIdeal> {
    let monoid = ideal.monoid();
    let f = &class.face;
    let gens = monoid.gens();
    let n = monoid.ngens();
    let rows = monoid.supports(f)?.rows().to_vec();
    let columns = gens.columns();
    // phi_H(q) <= c_H + m_H bounds every minimal generator of W_C
    let caps: Vec<BigInt> = rows
        .iter()
        .map(|r| {
            let c = class.bases.iter().map(|a| r.dot(a)).max().expect("classes are nonempty");
            let m = columns.iter().map(|a| r.dot(a)).max().unwrap_or_default();
            c + m
        })
        .collect();
    let off_face: Vec<usize> = (0..n).filter(|&j| !f.contains_column(j)).collect();
    let in_downset = |q: &IntVector| -> Result<bool> {
        for a in &class.bases {
            if monoid.in_localization(&(a - q), f)? {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let within_caps = |q: &IntVector| rows.iter().zip(&caps).all(|(r, c)| &r.dot(q) <= c);

    // Sums of off-face columns in nondecreasing index order; a branch stops at
    // the first element outside the downset.
    let mut found: BTreeSet<IntVector> = BTreeSet::new();
    let mut seen: BTreeSet<IntVector> = BTreeSet::new();
    let mut stack: Vec<(IntVector, usize)> = vec![(IntVector::zeros(monoid.dim()), 0)];
    while let Some((q, start)) = stack.pop() {
        for (k, &j) in off_face.iter().enumerate().skip(start) {
            let next = &q + &columns[j];
            if !within_caps(&next) || !seen.insert(next.clone()) {
                continue;
            }
            if in_downset(&next)? {
                stack.push((next, k));
            } else {
                found.insert(next);
            }
        }
    }
    Ok(MonomialIdeal::from_members(monoid.clone(), found.into_iter().collect()))
}

impl MonomialIdeal {
    /// All overlap classes, grouped by face in graded order, each flagged
    /// with its maximality.
    pub fn overlap_classes(&self) -> Result<&[OverlapClass]> {
        if let Some(c) = self.cache.overlap.get() {
            return Ok(c);
        }
        let classes = if self.is_empty() { Vec::new() } else { compute_classes(self)? };
        Ok(self.cache.overlap.get_or_init(|| classes))
    }

    pub fn maximal_overlap_classes(&self) -> Result<Vec<&OverlapClass>> {
        Ok(self.overlap_classes()?.iter().filter(|c| c.maximal).collect())
    }

    /// Faces `F` whose prime `P_F` is associated to the ideal.
    pub fn associated_faces(&self) -> Result<&[FaceIndex]> {
        if let Some(a) = self.cache.associated.get() {
            return Ok(a);
        }
        let faces: BTreeSet<FaceIndex> = if self.is_empty() {
            // the zero ideal is P_top
            BTreeSet::from([self.monoid().top_face()])
        } else {
            self.maximal_overlap_classes()?.into_iter().map(|c| c.face.clone()).collect()
        };
        Ok(self.cache.associated.get_or_init(|| faces.into_iter().collect()))
    }

    pub fn associated_primes(&self) -> Result<BTreeMap<FaceIndex, MonomialIdeal>> {
        self.associated_faces()?
            .iter()
            .map(|f| Ok((f.clone(), MonomialIdeal::prime(self.monoid().clone(), f)?)))
            .collect()
    }

    /// The number of overlap classes over an associated face. For an
    /// embedded prime this is a class count, not a localized length.
    pub fn multiplicity(&self, f: &FaceIndex) -> Result<usize> {
        if !self.associated_faces()?.contains(f) {
            return Err(Error::domain(format!("{f} is not an associated face")));
        }
        if self.is_empty() {
            return Ok(1);
        }
        Ok(self.overlap_classes()?.iter().filter(|c| &c.face == f).count())
    }

    /// Multiplicity of an associated prime given as an ideal.
    pub fn multiplicity_of_prime(&self, prime: &MonomialIdeal) -> Result<usize> {
        let face = self
            .associated_faces()?
            .iter()
            .find(|f| MonomialIdeal::prime(self.monoid().clone(), f).is_ok_and(|p| p == *prime))
            .cloned()
            .ok_or_else(|| Error::domain("not an associated prime"))?;
        self.multiplicity(&face)
    }

    /// The irreducible component of a maximal overlap class.
    pub fn irreducible_component(&self, class: &OverlapClass) -> Result<MonomialIdeal> {
        let known = self.overlap_classes()?.iter().find(|c| c.face == class.face && c.bases == class.bases);
        match known {
            Some(c) if c.maximal => component(self, c),
            Some(_) => Err(Error::domain("the overlap class is not maximal")),
            None => Err(Error::domain("not an overlap class of this ideal")),
        }
    }

    /// The irredundant irreducible decomposition, one component per maximal
    /// overlap class (classes with equal downsets share a component).
    pub fn irreducible_decomposition(&self) -> Result<&[MonomialIdeal]> {
        if let Some(d) = self.cache.decomposition.get() {
            return Ok(d);
        }
        let comps = if self.is_empty() {
            vec![self.clone()]
        } else {
            let mut comps: Vec<MonomialIdeal> = Vec::new();
            for c in self.maximal_overlap_classes()? {
                let w = component(self, c)?;
                if !comps.contains(&w) {
                    comps.push(w);
                }
            }
            comps
        };
        Ok(self.cache.decomposition.get_or_init(|| comps))
    }
}
