use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::ideal::{ideal_hash, MonomialIdeal};
use crate::linalg::IntVector;
use crate::monoid::AffineMonoid;
use crate::pairs::ProperPair;
use crate::polyhedral::FaceIndex;

/// Pairs grouped by face. Buckets are never empty and bases inside a bucket
/// are sorted lexicographically, so two covers with the same pairs compare
/// and print identically.
#[derive(Clone, Debug)]
pub struct Cover {
    monoid: Arc<AffineMonoid>,
    anchor: Arc<str>,
    buckets: BTreeMap<FaceIndex, BTreeSet<IntVector>>,
}

impl Cover {
    /// An empty cover whose pairs are anchored to the zero ideal.
    pub fn new(monoid: Arc<AffineMonoid>) -> Self {
        let anchor = ideal_hash(&monoid, &[]);
        Cover { monoid, anchor, buckets: BTreeMap::new() }
    }

    pub fn for_ideal(ideal: &MonomialIdeal) -> Self {
        Cover { monoid: ideal.monoid().clone(), anchor: ideal.hash_arc().clone(), buckets: BTreeMap::new() }
    }

    pub fn monoid(&self) -> &Arc<AffineMonoid> {
        &self.monoid
    }

    /// Hash of the ideal the pairs are anchored to.
    pub fn anchor(&self) -> &str {
        &self.anchor
    }

    pub fn reanchored(mut self, ideal: &MonomialIdeal) -> Self {
        self.anchor = ideal.hash_arc().clone();
        self
    }

    pub fn insert(&mut self, base: IntVector, face: FaceIndex) {
        self.buckets.entry(face).or_default().insert(base);
    }

    pub fn insert_pair(&mut self, pair: &ProperPair) {
        self.insert(pair.base().clone(), pair.face().clone());
    }

    pub fn remove(&mut self, base: &IntVector, face: &FaceIndex) -> bool {
        let Some(bucket) = self.buckets.get_mut(face) else { return false };
        let removed = bucket.remove(base);
        if bucket.is_empty() {
            self.buckets.remove(face);
        }
        removed
    }

    pub fn extend(&mut self, other: &Cover) {
        for (b, f) in other.entries() {
            self.insert(b.clone(), f.clone());
        }
    }

    pub fn faces(&self) -> impl Iterator<Item = &FaceIndex> {
        self.buckets.keys()
    }

    pub fn bases(&self, face: &FaceIndex) -> Option<&BTreeSet<IntVector>> {
        self.buckets.get(face)
    }

    /// `(base, face)` entries, faces in graded order.
    pub fn entries(&self) -> impl Iterator<Item = (&IntVector, &FaceIndex)> {
        self.buckets.iter().flat_map(|(f, bs)| bs.iter().map(move |b| (b, f)))
    }

    pub fn pair(&self, base: &IntVector, face: &FaceIndex) -> ProperPair {
        ProperPair::from_parts(base.clone(), face.clone(), self.monoid.clone(), self.anchor.clone())
    }

    pub fn pairs(&self) -> Vec<ProperPair> {
        self.entries().map(|(b, f)| self.pair(b, f)).collect()
    }

    pub fn bucket(&self, face: &FaceIndex) -> Vec<ProperPair> {
        self.buckets.get(face).map(|bs| bs.iter().map(|b| self.pair(b, face)).collect()).unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.buckets.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    pub fn contains_pair(&self, base: &IntVector, face: &FaceIndex) -> bool {
        self.buckets.get(face).is_some_and(|bs| bs.contains(base))
    }

    /// Whether some pair's translated face contains `b`.
    pub fn covers_point(&self, b: &IntVector) -> Result<bool> {
        for (base, face) in self.entries() {
            if self.pair(base, face).contains_point(b)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl PartialEq for Cover {
    fn eq(&self, other: &Self) -> bool {
        self.monoid.hash() == other.monoid.hash() && self.buckets == other.buckets
    }
}

impl Eq for Cover {}

impl fmt::Display for Cover {
    /// Dictionary style: `{(0,): [pair, pair], (0, 1): [pair]}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .buckets
            .keys()
            .map(|face| {
                let pairs: Vec<String> = self.bucket(face).iter().map(ToString::to_string).collect();
                format!("{face}: [{}]", pairs.join(", "))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(",\n "))
    }
}
