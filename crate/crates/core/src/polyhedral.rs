//! Rational cone geometry over a generating matrix: facet normals, the face
//! lattice (faces identified with the set of generator columns lying on them),
//! primitive integral support vectors, and pointedness.
//!
//! Facets are found by enumerating `rank - 1` linearly independent column
//! subsets and keeping the hyperplanes through them that support the cone.
//! Every computation is exact. When the cone is not full-dimensional the
//! normals are taken inside the linear span of the columns, and the
//! orthogonal complement of that span is reported as `±` equation rows
//! alongside the facet normals, so "`φ · q = 0` for all rows" remains the
//! test for lying on a face.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::diophantine::hilbert_kernel;
use crate::error::{Error, Result};
use crate::linalg::{null_space, rational_rank, IntMatrix, IntVector};

/// A face of `cone(A)`, stored as the strictly increasing list of column
/// positions of `A` lying on it. `Bottom` is the empty face of the lattice,
/// printed as `(-1,)`; `Face(vec![])` is the zero face of a pointed cone.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FaceIndex {
    Bottom,
    Face(Vec<usize>),
}

impl FaceIndex {
    pub fn new(columns: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = columns.into_iter().collect();
        FaceIndex::Face(set.into_iter().collect())
    }

    pub fn zero() -> Self {
        FaceIndex::Face(Vec::new())
    }

    /// Column positions on the face; empty for `Bottom`.
    pub fn columns(&self) -> &[usize] {
        match self {
            FaceIndex::Bottom => &[],
            FaceIndex::Face(c) => c,
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, FaceIndex::Bottom)
    }

    pub fn len(&self) -> usize {
        self.columns().len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns().is_empty()
    }

    /// Column-set containment `self ⊆ other`. `Bottom` is below everything.
    pub fn is_subface_of(&self, other: &FaceIndex) -> bool {
        match (self, other) {
            (FaceIndex::Bottom, _) => true,
            (_, FaceIndex::Bottom) => false,
            (FaceIndex::Face(a), FaceIndex::Face(b)) => a.iter().all(|c| b.binary_search(c).is_ok()),
        }
    }

    pub fn contains_column(&self, j: usize) -> bool {
        self.columns().binary_search(&j).is_ok()
    }

    pub fn intersection(&self, other: &FaceIndex) -> FaceIndex {
        match (self, other) {
            (FaceIndex::Face(a), FaceIndex::Face(b)) => {
                FaceIndex::Face(a.iter().copied().filter(|c| b.binary_search(c).is_ok()).collect())
            }
            _ => FaceIndex::Bottom,
        }
    }
}

impl Ord for FaceIndex {
    /// Graded order: `Bottom`, then by number of columns, then lexicographic.
    /// This is a linear extension of the face lattice.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FaceIndex::Bottom, FaceIndex::Bottom) => Ordering::Equal,
            (FaceIndex::Bottom, _) => Ordering::Less,
            (_, FaceIndex::Bottom) => Ordering::Greater,
            (FaceIndex::Face(a), FaceIndex::Face(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        }
    }
}

impl PartialOrd for FaceIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FaceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceIndex::Bottom => write!(f, "(-1,)"),
            FaceIndex::Face(c) if c.len() == 1 => write!(f, "({},)", c[0]),
            FaceIndex::Face(c) => {
                let parts: Vec<String> = c.iter().map(|j| j.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

impl FromStr for FaceIndex {
    type Err = Error;

    /// Accepts `()`, `(0,)`, `(0, 1)`, `(0,1)`, `0,1`, `(-1,)` and `-1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        if parts == ["-1"] {
            return Ok(FaceIndex::Bottom);
        }
        let cols = parts
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| Error::domain(format!("bad face index {s:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        Ok(FaceIndex::new(cols))
    }
}

/// Rows are primitive integral support vectors (plus `±` equation rows for
/// lower-dimensional cones), sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SupportMatrix {
    dim: usize,
    rows: Vec<IntVector>,
}

impl SupportMatrix {
    pub fn new(dim: usize, rows: impl IntoIterator<Item = IntVector>) -> Self {
        let set: BTreeSet<IntVector> = rows.into_iter().collect();
        SupportMatrix { dim, rows: set.into_iter().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_row_vectors(&self.rows, self.dim).expect("rows share the ambient dimension")
    }

    /// Evaluates every row on `q`.
    pub fn evaluate(&self, q: &IntVector) -> Vec<num_bigint::BigInt> {
        self.rows.iter().map(|r| r.dot(q)).collect()
    }
}

impl fmt::Display for SupportMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[]");
        }
        write!(f, "{}", self.to_matrix())
    }
}

/// All faces of a cone, ordered by [`FaceIndex`]'s graded order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FaceLattice {
    faces: BTreeSet<FaceIndex>,
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, f: &FaceIndex) -> bool {
        self.faces.contains(f)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FaceIndex> {
        self.faces.iter()
    }

    /// Faces other than `Bottom`.
    pub fn proper_faces(&self) -> impl Iterator<Item = &FaceIndex> {
        self.faces.iter().filter(|f| !f.is_bottom())
    }

    pub fn top(&self) -> &FaceIndex {
        self.faces.iter().next_back().expect("lattice always has a top")
    }

    /// Faces `G` with `f ⊆ G` (including `f`), excluding `Bottom`.
    pub fn faces_containing<'a>(&'a self, f: &'a FaceIndex) -> impl Iterator<Item = &'a FaceIndex> + 'a {
        self.proper_faces().filter(move |g| f.is_subface_of(g))
    }

    /// The smallest face whose column set contains `columns`.
    pub fn smallest_face_containing(&self, columns: &[usize]) -> &FaceIndex {
        let probe = FaceIndex::new(columns.iter().copied());
        self.proper_faces().find(|g| probe.is_subface_of(g)).expect("the top face contains every column")
    }

    pub fn to_vec(&self) -> Vec<FaceIndex> {
        self.faces.iter().cloned().collect()
    }
}

#[derive(Clone, Debug)]
struct Facet {
    normal: IntVector,
    zeros: FaceIndex,
}

/// Facets, equations and faces of `cone(A)`, computed once.
#[derive(Clone, Debug)]
pub struct Cone {
    dim: usize,
    facets: Vec<Facet>,
    equations: Vec<IntVector>,
    lattice: FaceLattice,
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, visit);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), &mut visit);
}

impl Cone {
    pub fn new(a: &IntMatrix) -> Cone {
        let d = a.rows();
        let columns = a.columns();
        let all = FaceIndex::new(0..a.cols());

        // Orthogonal complement of the column span; an empty matrix has no
        // facets and no equations.
        let equations = if a.cols() == 0 { Vec::new() } else { null_space(&a.transpose()) };
        let rank = rational_rank(a);

        let mut distinct: Vec<IntVector> = columns.iter().filter(|c| !c.is_zero()).cloned().collect();
        distinct.sort();
        distinct.dedup();

        let mut normals: BTreeSet<IntVector> = BTreeSet::new();
        if rank > 0 {
            combinations(distinct.len(), rank - 1, |subset| {
                let mut rows: Vec<IntVector> = subset.iter().map(|&i| distinct[i].clone()).collect();
                rows.extend(equations.iter().cloned());
                let sys = IntMatrix::from_row_vectors(&rows, d).expect("rows have length d");
                let ns =
                    if rows.is_empty() { (0..d).map(|i| IntVector::unit(d, i)).collect() } else { null_space(&sys) };
                if ns.len() != 1 {
                    return;
                }
                let phi = &ns[0];
                let values: Vec<_> = distinct.iter().map(|c| phi.dot(c)).collect();
                let pos = values.iter().any(|v| v.is_positive());
                let neg = values.iter().any(|v| v.is_negative());
                match (pos, neg) {
                    (true, false) => {
                        normals.insert(phi.primitive());
                    }
                    (false, true) => {
                        normals.insert((-phi).primitive());
                    }
                    _ => {}
                }
            });
        }

        let facets: Vec<Facet> = normals
            .into_iter()
            .map(|normal| {
                let zeros = FaceIndex::new((0..columns.len()).filter(|&j| normal.dot(&columns[j]).is_zero()));
                Facet { normal, zeros }
            })
            .collect();

        let mut faces: BTreeSet<FaceIndex> = BTreeSet::new();
        faces.insert(all);
        for facet in &facets {
            let cut: Vec<FaceIndex> = faces.iter().map(|f| f.intersection(&facet.zeros)).collect();
            faces.extend(cut);
        }
        faces.insert(FaceIndex::Bottom);

        Cone { dim: d, facets, equations, lattice: FaceLattice { faces } }
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    fn equation_rows(&self) -> impl Iterator<Item = IntVector> + '_ {
        self.equations.iter().flat_map(|e| [e.clone(), -e])
    }

    /// Facet normals plus equation rows.
    pub fn facet_normals(&self) -> SupportMatrix {
        SupportMatrix::new(self.dim, self.facets.iter().map(|f| f.normal.clone()).chain(self.equation_rows()))
    }

    /// Support vectors of the facets containing `f` (plus equation rows).
    pub fn supports(&self, f: &FaceIndex) -> Result<SupportMatrix> {
        if !self.lattice.contains(f) {
            return Err(Error::domain(format!("{f} is not a face")));
        }
        Ok(SupportMatrix::new(
            self.dim,
            self.facets
                .iter()
                .filter(|facet| f.is_subface_of(&facet.zeros))
                .map(|facet| facet.normal.clone())
                .chain(self.equation_rows()),
        ))
    }
}

/// One primitive inner normal per facet of `cone(A)`, lexicographically
/// sorted; lower-dimensional cones also get `±` rows spanning the orthogonal
/// complement of their span.
pub fn facet_normals(a: &IntMatrix) -> SupportMatrix {
    Cone::new(a).facet_normals()
}

pub fn face_lattice(a: &IntMatrix) -> FaceLattice {
    Cone::new(a).lattice
}

pub fn support_vectors_of_face(a: &IntMatrix, f: &FaceIndex) -> Result<SupportMatrix> {
    Cone::new(a).supports(f)
}

/// True iff `cone(A)` contains no line.
pub fn is_pointed(a: &IntMatrix) -> bool {
    let nonzero: Vec<usize> = (0..a.cols()).filter(|&j| !a.column(j).is_zero()).collect();
    hilbert_kernel(&a.select_columns(&nonzero)).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<IntVector> {
        v.iter().map(|r| IntVector::from_i64s(r)).collect()
    }

    fn face(c: &[usize]) -> FaceIndex {
        FaceIndex::new(c.iter().copied())
    }

    #[test]
    fn facet_normal_examples() {
        let a = IntMatrix::from_rows(&[[1, 2], [0, 2]]);
        assert_eq!(facet_normals(&a).rows(), rows(&[&[0, 1], &[1, -1]]).as_slice());
        assert_eq!(facet_normals(&IntMatrix::identity(2)).rows(), rows(&[&[0, 1], &[1, 0]]).as_slice());
        let b = IntMatrix::from_rows(&[[2, 0, 1], [0, 1, 1]]);
        assert_eq!(facet_normals(&b).rows(), rows(&[&[0, 1], &[1, 0]]).as_slice());
    }

    #[test]
    fn lattice_examples() {
        let a = IntMatrix::from_rows(&[[1, 2], [0, 2]]);
        let l = face_lattice(&a);
        assert_eq!(l.to_vec(), vec![FaceIndex::Bottom, face(&[]), face(&[0]), face(&[1]), face(&[0, 1])]);
        assert_eq!(face_lattice(&IntMatrix::identity(2)).len(), 5);
        let c = IntMatrix::from_rows(&[[0, 1, 1, 0], [0, 0, 1, 1], [1, 1, 1, 1]]);
        let l = face_lattice(&c);
        assert!(l.contains(&face(&[0, 3])));
        // square pyramid: apex, 4 rays, 4 facets, top, bottom
        assert_eq!(l.len(), 11);
    }

    #[test]
    fn supports_examples() {
        let a = IntMatrix::from_rows(&[[1, 2], [0, 2]]);
        assert_eq!(support_vectors_of_face(&a, &face(&[0])).unwrap().rows(), rows(&[&[0, 1]]).as_slice());
        assert_eq!(support_vectors_of_face(&a, &face(&[1])).unwrap().rows(), rows(&[&[1, -1]]).as_slice());
        assert!(support_vectors_of_face(&a, &face(&[0, 1])).unwrap().is_empty());
        assert_eq!(support_vectors_of_face(&a, &face(&[])).unwrap(), facet_normals(&a));
        assert!(matches!(support_vectors_of_face(&a, &face(&[5])), Err(Error::Domain(_))));
    }

    #[test]
    fn pointedness() {
        assert!(is_pointed(&IntMatrix::from_rows(&[[1, 2], [0, 2]])));
        assert!(!is_pointed(&IntMatrix::from_rows(&[[1, -1]])));
        assert!(is_pointed(&IntMatrix::identity(3)));
    }

    #[test]
    fn lower_dimensional_cone_gets_equations() {
        // ray spanned by (1, 1) in the plane
        let a = IntMatrix::from_rows(&[[1, 2], [1, 2]]);
        let n = facet_normals(&a);
        assert_eq!(n.rows(), rows(&[&[-1, 1], &[1, -1], &[1, 1]]).as_slice());
        let l = face_lattice(&a);
        assert_eq!(l.to_vec(), vec![FaceIndex::Bottom, face(&[]), face(&[0, 1])]);
    }

    #[test]
    fn face_index_text() {
        assert_eq!(FaceIndex::Bottom.to_string(), "(-1,)");
        assert_eq!(face(&[]).to_string(), "()");
        assert_eq!(face(&[0]).to_string(), "(0,)");
        assert_eq!(face(&[0, 3]).to_string(), "(0, 3)");
        for f in [FaceIndex::Bottom, face(&[]), face(&[2]), face(&[0, 1, 4])] {
            assert_eq!(f.to_string().parse::<FaceIndex>().unwrap(), f);
        }
        assert_eq!("0,1".parse::<FaceIndex>().unwrap(), face(&[0, 1]));
    }
}
