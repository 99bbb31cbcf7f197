//! Removing mathematically equal duplicates from lists.

use std::collections::HashSet;

use crate::ideal::MonomialIdeal;
use crate::linalg::IntMatrix;
use crate::monoid::AffineMonoid;
use crate::pairs::ProperPair;

/// A string equal for two values iff they are mathematically the same.
pub trait CanonicalHash {
    fn canonical_hash(&self) -> String;
}

impl CanonicalHash for AffineMonoid {
    fn canonical_hash(&self) -> String {
        self.hash().to_string()
    }
}

impl CanonicalHash for MonomialIdeal {
    fn canonical_hash(&self) -> String {
        self.hash().to_string()
    }
}

impl CanonicalHash for ProperPair {
    fn canonical_hash(&self) -> String {
        format!("{}@{}@{}", self.base(), self.face(), self.ideal_hash())
    }
}

impl CanonicalHash for IntMatrix {
    fn canonical_hash(&self) -> String {
        let rows: Vec<String> = self.row_vectors().iter().map(ToString::to_string).collect();
        format!("{}x{}:{}", self.rows(), self.cols(), rows.join(";"))
    }
}

impl<T: CanonicalHash + ?Sized> CanonicalHash for std::sync::Arc<T> {
    fn canonical_hash(&self) -> String {
        (**self).canonical_hash()
    }
}

/// Keeps the first item of each equivalence class, in input order.
pub fn dedup<T: CanonicalHash + Clone>(items: &[T]) -> Vec<T> {
    let mut seen = HashSet::new();
    items.iter().filter(|x| seen.insert(x.canonical_hash())).cloned().collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    #[test]
    fn examples() {
        let q = Arc::new(AffineMonoid::from_rows(&[[1, 2], [0, 2]]).unwrap());
        let p = Arc::new(AffineMonoid::from_rows(&[[2, 1], [2, 0]]).unwrap());
        assert_eq!(dedup(&[q.clone(), p]).len(), 1);
        assert!(dedup::<IntMatrix>(&[]).is_empty());
        let i = MonomialIdeal::new(q.clone(), &IntMatrix::from_rows(&[[4, 6], [4, 6]])).unwrap();
        let j = MonomialIdeal::new(q, &IntMatrix::from_rows(&[[4], [4]])).unwrap();
        assert_eq!(dedup(&[i, j]).len(), 1);
        let m = IntMatrix::from_rows(&[[1, 2]]);
        assert_eq!(dedup(&[m.clone(), IntMatrix::from_rows(&[[1], [2]]), m]).len(), 2);
    }
}
