//! Componentwise-minimal nonnegative integer solutions of linear Diophantine
//! systems.
//!
//! Both solvers are Contejean–Devie walks over `N^c`: a node `x` with
//! residual `r = M x − b` is only extended along `e_j` when `r · M e_j < 0`,
//! and a node is dropped as soon as it dominates a found solution.
//! Kernels start from the unit vectors. Inhomogeneous systems start from `0`
//! and additionally drop nodes dominating an earlier node with the same
//! residual, which spares them the often huge Hilbert basis of the kernel.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, IntVector};

/// A finite antichain of nonnegative solutions, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SolutionSet {
    dim: usize,
    solutions: Vec<IntVector>,
}

impl SolutionSet {
    pub(crate) fn from_sorted(dim: usize, solutions: Vec<IntVector>) -> Self {
        SolutionSet { dim, solutions }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVector> {
        self.solutions.iter()
    }

    pub fn solutions(&self) -> &[IntVector] {
        &self.solutions
    }

    /// The lexicographically least solution.
    pub fn first(&self) -> Option<&IntVector> {
        self.solutions.first()
    }

    pub fn into_vec(self) -> Vec<IntVector> {
        self.solutions
    }
}

impl<'a> IntoIterator for &'a SolutionSet {
    type Item = &'a IntVector;
    type IntoIter = std::slice::Iter<'a, IntVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.solutions.iter()
    }
}

struct Node {
    x: Vec<u32>,
    /// `g[j] = (M x) · (M e_j)`, maintained incrementally through the Gram
    /// matrix so the residual itself never has to be formed.
    g: Vec<BigInt>,
}

impl Node {
    fn is_solution(&self) -> bool {
        // |M x|^2 = sum_j x_j g_j
        let norm: BigInt = self.x.iter().zip(&self.g).filter(|(x, _)| **x > 0).map(|(x, g)| g * *x).sum();
        norm.is_zero()
    }
}

struct Completion {
    /// Gram matrix of the columns.
    gram: Vec<Vec<BigInt>>,
}

impl Completion {
    fn new(m: &IntMatrix) -> Self {
        let columns = m.columns();
        let gram = columns.iter().map(|ci| columns.iter().map(|cj| ci.dot(cj)).collect()).collect();
        Completion { gram }
    }

    fn width(&self) -> usize {
        self.gram.len()
    }

    /// Runs the completion; returns the kernel basis as count vectors.
    fn run(&self) -> Vec<Vec<u32>> {
        let n = self.width();
        let mut basis: Vec<Vec<u32>> = Vec::new();
        let mut frontier: Vec<Node> = (0..n)
            .map(|j| {
                let mut x = vec![0u32; n];
                x[j] = 1;
                Node { x, g: self.gram[j].clone() }
            })
            .collect();

        while !frontier.is_empty() {
            let mut open = Vec::with_capacity(frontier.len());
            for node in frontier {
                if node.is_solution() {
                    basis.push(node.x);
                } else {
                    open.push(node);
                }
            }

            let mut seen: HashSet<Vec<u32>> = HashSet::new();
            let mut next = Vec::new();
            for node in &open {
                for j in 0..n {
                    if !node.g[j].is_negative() {
                        continue;
                    }
                    let mut y = node.x.clone();
                    y[j] += 1;
                    if basis.iter().any(|b| dominates(&y, b)) || seen.contains(&y) {
                        continue;
                    }
                    seen.insert(y.clone());
                    let g = node.g.iter().zip(&self.gram[j]).map(|(a, b)| a + b).collect();
                    next.push(Node { x: y, g });
                }
            }
            frontier = next;
        }
        basis
    }
}

fn dominates(y: &[u32], b: &[u32]) -> bool {
    y.iter().zip(b).all(|(a, b)| a >= b)
}

fn to_vector(x: &[u32]) -> IntVector {
    IntVector::new(x.iter().map(|&e| BigInt::from(e)).collect())
}

fn check_rhs(m: &IntMatrix, b: &IntVector) -> Result<()> {
    if b.dim() != m.rows() {
        return Err(Error::dim(format!("right-hand side of length {} for a system with {} rows", b.dim(), m.rows())));
    }
    Ok(())
}

/// Breadth-first search upward from `x = 0`, stepping along columns that
/// decrease `|M x − b|`. Only the head `x[..keep]` is tracked for minimality.
/// A node is dropped when its head dominates the head of a solution or of an
/// earlier node with the same residual: a continuation from the dominated
/// node would give a solution with a smaller or equal head. Dickson's lemma
/// bounds the search. With `keep = c` levels grow in `|x|`, so the solutions
/// found are exactly the minimal ones; otherwise callers minimalize.
fn inhomogeneous_search(m: &IntMatrix, b: &IntVector, keep: usize, first_only: bool) -> Vec<Vec<u32>> {
    let columns = m.columns();
    let c = columns.len();
    if b.is_zero() {
        return vec![vec![0; keep]];
    }
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut visited: HashMap<IntVector, Vec<Vec<u32>>> = HashMap::new();
    let mut frontier = vec![(vec![0u32; c], -b)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (x, r) in &frontier {
            for (j, col) in columns.iter().enumerate() {
                if !r.dot(col).is_negative() {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                let head = &y[..keep];
                if found.iter().any(|s| dominates(head, s)) {
                    continue;
                }
                let r2 = r + col;
                if r2.is_zero() {
                    found.push(head.to_vec());
                    if first_only {
                        return found;
                    }
                    continue;
                }
                let earlier = visited.entry(r2.clone()).or_default();
                if earlier.iter().any(|z| dominates(head, z)) {
                    continue;
                }
                earlier.push(head.to_vec());
                next.push((y, r2));
            }
        }
        frontier = next;
    }
    found
}

/// All componentwise-minimal `x ∈ N^c` with `M x = b`, lexicographically
/// sorted. Empty iff the system has no nonnegative solution.
pub fn min_nonneg_solutions(m: &IntMatrix, b: &IntVector) -> Result<SolutionSet> {
    check_rhs(m, b)?;
    let mut sols: Vec<IntVector> = inhomogeneous_search(m, b, m.cols(), false).iter().map(|x| to_vector(x)).collect();
    sols.sort();
    sols.dedup();
    Ok(SolutionSet::from_sorted(m.cols(), sols))
}

/// The componentwise-minimal heads `x[..keep]` of solutions `x ∈ N^c` of
/// `M x = b`, sorted. The remaining coordinates only witness solvability.
pub fn min_projected_solutions(m: &IntMatrix, b: &IntVector, keep: usize) -> Result<Vec<IntVector>> {
    check_rhs(m, b)?;
    if keep > m.cols() {
        return Err(Error::domain(format!("cannot keep {keep} of {} coordinates", m.cols())));
    }
    Ok(componentwise_minimal(inhomogeneous_search(m, b, keep, false).iter().map(|x| to_vector(x))))
}

/// Whether `M x = b` has a solution `x ∈ N^c`. Stops at the first one found.
pub fn has_nonneg_solution(m: &IntMatrix, b: &IntVector) -> Result<bool> {
    check_rhs(m, b)?;
    Ok(!inhomogeneous_search(m, b, 0, true).is_empty())
}

/// The Hilbert basis of `{x ∈ N^c : M x = 0}` (its minimal nonzero elements).
pub fn hilbert_kernel(m: &IntMatrix) -> SolutionSet {
    let completion = Completion::new(m);
    let mut sols: Vec<IntVector> = completion.run().iter().map(|x| to_vector(x)).collect();
    sols.sort();
    SolutionSet::from_sorted(m.cols(), sols)
}

/// Keeps the componentwise-minimal elements of `items` (deduplicated, sorted).
pub fn componentwise_minimal(items: impl IntoIterator<Item = IntVector>) -> Vec<IntVector> {
    let mut items: Vec<IntVector> = items.into_iter().collect();
    items.sort();
    items.dedup();
    let keep: Vec<bool> = items
        .iter()
        .enumerate()
        .map(|(i, a)| !items.iter().enumerate().any(|(j, b)| i != j && b.le_componentwise(a)))
        .collect();
    items.into_iter().zip(keep).filter_map(|(v, k)| k.then_some(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn v(e: &[i64]) -> IntVector {
        IntVector::from_i64s(e)
    }

    #[test]
    fn inhomogeneous_examples() {
        let a = m(&[&[1, 2], &[0, 2]]);
        assert_eq!(min_nonneg_solutions(&a, &v(&[3, 2])).unwrap().solutions(), &[v(&[1, 1])]);
        assert_eq!(min_nonneg_solutions(&a, &v(&[0, 0])).unwrap().solutions(), &[v(&[0, 0])]);
        assert!(min_nonneg_solutions(&a, &v(&[1, 1])).unwrap().is_empty());
        assert!(!has_nonneg_solution(&a, &v(&[1, 1])).unwrap());
        assert!(has_nonneg_solution(&a, &v(&[3, 2])).unwrap());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(hilbert_kernel(&m(&[&[1, -1]])).solutions(), &[v(&[1, 1])]);
        assert_eq!(hilbert_kernel(&m(&[&[2, -3]])).solutions(), &[v(&[3, 2])]);
        assert!(hilbert_kernel(&m(&[&[1, 2], &[0, 2]])).is_empty());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = m(&[&[1, 2], &[0, 2]]);
        assert!(matches!(min_nonneg_solutions(&a, &v(&[1])), Err(Error::Dimension(_))));
    }

    #[test]
    fn empty_systems() {
        let none = IntMatrix::zeros(2, 0);
        assert_eq!(min_nonneg_solutions(&none, &v(&[0, 0])).unwrap().len(), 1);
        assert!(min_nonneg_solutions(&none, &v(&[1, 0])).unwrap().is_empty());
        let no_rows = IntMatrix::zeros(0, 2);
        assert_eq!(min_nonneg_solutions(&no_rows, &v(&[])).unwrap().solutions(), &[v(&[0, 0])]);
        assert!(hilbert_kernel(&no_rows).len() == 2);
    }

    #[test]
    fn several_minimal_solutions() {
        // x + y = 2 has no redundancy: (0,2), (1,1), (2,0) are all minimal
        let a = m(&[&[1, 1]]);
        let s = min_nonneg_solutions(&a, &v(&[2])).unwrap();
        assert_eq!(s.solutions(), &[v(&[0, 2]), v(&[1, 1]), v(&[2, 0])]);
        // x - y = 1: only (1, 0); (2, 1) = (1, 0) + (1, 1)
        let a = m(&[&[1, -1]]);
        assert_eq!(min_nonneg_solutions(&a, &v(&[1])).unwrap().solutions(), &[v(&[1, 0])]);
    }

    #[test]
    fn minimal_filter() {
        let out = componentwise_minimal(vec![v(&[1, 2]), v(&[1, 1]), v(&[0, 3]), v(&[1, 1])]);
        assert_eq!(out, vec![v(&[0, 3]), v(&[1, 1])]);
    }
}
