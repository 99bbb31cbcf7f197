//! Arbitrary precision integer vectors and matrices, plus the small amount of
//! rational linear algebra (rank, null space) the polyhedral code needs.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An integer vector. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative())
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &IntVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|e| e * k).collect())
    }

    /// gcd of the entries (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, e| g.gcd(e))
    }

    /// Divides out the content; the zero vector is returned unchanged.
    pub fn primitive(&self) -> IntVector {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntVector(self.0.iter().map(|e| e / &g).collect())
    }

    /// Concatenation `[self; other]`.
    pub fn concat(&self, other: &IntVector) -> IntVector {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        IntVector(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> IntVector {
        IntVector(self.0[range].to_vec())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|e| e.to_i64()).collect()
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(v: Vec<BigInt>) -> Self {
        IntVector(v)
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|e| -e).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A dense integer matrix stored row-major. `0 x c` and `r x 0` matrices are
/// legal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&e| BigInt::from(e)));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_row_vectors(rows: &[IntVector], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.dim() != cols {
                return Err(Error::dim(format!("row of length {} in a matrix with {cols} columns", r.dim())));
            }
            data.extend(r.iter().cloned());
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(rows: usize, columns: &[IntVector]) -> Result<Self> {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.dim() != rows {
                return Err(Error::dim(format!("column of length {} in a matrix with {rows} rows", c.dim())));
            }
            for i in 0..rows {
                m.data[i * m.cols + j] = c[i].clone();
            }
        }
        Ok(m)
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<IntVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let cols: Vec<IntVector> = idx.iter().map(|&j| self.column(j)).collect();
        IntMatrix::from_columns(self.rows, &cols).expect("columns have matching length")
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::dim(format!("cannot stack {} rows beside {} rows", self.rows, other.rows)));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        IntMatrix::from_columns(self.rows, &cols)
    }

    pub fn negated(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| -e).collect() }
    }

    pub fn mul_vec(&self, x: &IntVector) -> Result<IntVector> {
        if x.dim() != self.cols {
            return Err(Error::dim(format!("{}x{} matrix times vector of length {}", self.rows, self.cols, x.dim())));
        }
        Ok(IntVector((0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) * &x[j]).sum()).collect()))
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::dim(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                out.data[i * other.cols + j] = (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum();
            }
        }
        Ok(out)
    }

    fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| BigRational::from_integer(self.get(i, j).clone())).collect())
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    /// numpy-like layout, e.g. `[[1 2]\n [0 2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 {
            return write!(f, "[]");
        }
        let width = self.data.iter().map(|e| e.to_string().len()).max().unwrap_or(0);
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "\n ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self.get(i, j).to_string())?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
fn rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for e in m[r].iter_mut() {
            *e = &*e * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (e, p) in row.iter_mut().zip(&pivot_row) {
                    *e -= p * &factor;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over the rationals.
pub fn rational_rank(m: &IntMatrix) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut q = m.to_rational();
    rref(&mut q, m.cols).len()
}

/// A basis of the rational null space `{x : M x = 0}`, each vector scaled to a
/// primitive integer vector.
pub fn null_space(m: &IntMatrix) -> Vec<IntVector> {
    let n = m.cols;
    let mut q = m.to_rational();
    let pivots = rref(&mut q, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -q[row][f].clone();
            }
            let denom = v.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
            IntVector(v.iter().map(|e| (e * BigRational::from_integer(denom.clone())).to_integer()).collect())
                .primitive()
        })
        .collect()
}

/// Whether `y` lies in the integer lattice spanned by the columns of `m`.
///
/// Column-echelonizes `m` by unimodular column operations and reduces `y`
/// row by row.
pub fn integer_span_contains(m: &IntMatrix, y: &IntVector) -> bool {
    let mut cols = m.columns();
    let mut y = y.clone();
    let mut next = 0;
    for row in 0..y.dim() {
        while let Some(p) = (next..cols.len()).filter(|&k| !cols[k][row].is_zero()).min_by_key(|&k| cols[k][row].abs())
        {
            cols.swap(next, p);
            let mut done = true;
            for k in next + 1..cols.len() {
                if !cols[k][row].is_zero() {
                    let q = cols[k][row].div_floor(&cols[next][row]);
                    cols[k] = &cols[k] - &cols[next].scaled(&q);
                    done &= cols[k][row].is_zero();
                }
            }
            if done {
                break;
            }
        }
        let pivot = cols.get(next).map(|c| c[row].clone()).filter(|e| !e.is_zero());
        match pivot {
            Some(e) => {
                if !y[row].is_multiple_of(&e) {
                    return false;
                }
                y = &y - &cols[next].scaled(&(&y[row] / &e));
                next += 1;
            }
            None if !y[row].is_zero() => return false,
            None => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_span_examples() {
        let m = IntMatrix::from_rows(&[[1, 2], [0, 2]]);
        assert!(integer_span_contains(&m, &IntVector::from_i64s(&[3, 2])));
        assert!(!integer_span_contains(&m, &IntVector::from_i64s(&[1, 1])));
        let diag = IntMatrix::from_rows(&[[2], [2]]);
        assert!(integer_span_contains(&diag, &IntVector::from_i64s(&[-4, -4])));
        assert!(!integer_span_contains(&diag, &IntVector::from_i64s(&[1, 1])));
        assert!(!integer_span_contains(&diag, &IntVector::from_i64s(&[2, 0])));
        assert!(integer_span_contains(&IntMatrix::zeros(2, 0), &IntVector::zeros(2)));
        let m = IntMatrix::from_rows(&[[6, 10, 15]]);
        assert!(integer_span_contains(&m, &IntVector::from_i64s(&[1])));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rational_rank(&IntMatrix::from_rows(&[[1, 2], [0, 2]])), 2);
        assert_eq!(rational_rank(&IntMatrix::from_rows(&[[1, 1], [1, 1]])), 1);
        assert_eq!(rational_rank(&IntMatrix::zeros(0, 0)), 0);
        assert_eq!(rational_rank(&IntMatrix::zeros(3, 0)), 0);
    }

    #[test]
    fn null_space_is_primitive_and_annihilated() {
        let m = IntMatrix::from_rows(&[[2, 4, 6], [1, 2, 4]]);
        let ns = null_space(&m);
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).unwrap().is_zero());
        assert_eq!(ns[0].content(), BigInt::one());
    }

    #[test]
    fn matrix_shapes() {
        let m = IntMatrix::from_rows(&[[1, 2, 3]]);
        assert_eq!(m.transpose().rows(), 3);
        assert_eq!(m.select_columns(&[2, 0]).column(0), IntVector::from_i64s(&[3]));
        assert!(m.hstack(&IntMatrix::zeros(2, 1)).is_err());
        assert_eq!(format!("{}", IntMatrix::from_rows(&[[4, 6], [4, 6]])), "[[4 6]\n [4 6]]");
    }
}
