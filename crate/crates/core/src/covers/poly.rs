//! Standard pairs of monomial ideals in a polynomial ring `k[x_0..x_{m-1}]`,
//! i.e. over the free monoid `ℕ^m`.

use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg::IntVector;

/// A monomial ideal of `ℕ^m` given by exponent vectors; the generator list
/// is kept componentwise minimal and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMonomialIdeal {
    nvars: usize,
    gens: Vec<Vec<u64>>,
}

/// `(x^u, V)`: the monomials `u + ℕ^V`, with `u` zero on `V`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolyStdPair {
    pub vars: Vec<usize>,
    pub base: IntVector,
}

fn le(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl PolyMonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = IntVector>) -> Result<Self> {
        let mut raw = Vec::new();
        for g in gens {
            if g.dim() != nvars {
                return Err(Error::dim(format!("exponent vector {g} in {nvars} variables")));
            }
            let e = g
                .iter()
                .map(|x| x.to_u64())
                .collect::<Option<Vec<u64>>>()
                .ok_or_else(|| Error::domain(format!("{g} is not an exponent vector")))?;
            raw.push(e);
        }
        raw.sort();
        raw.dedup();
        let gens = raw.iter().filter(|g| !raw.iter().any(|h| h != *g && le(h, g))).cloned().collect();
        Ok(PolyMonomialIdeal { nvars, gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> Vec<IntVector> {
        self.gens.iter().map(|g| IntVector::from_i64s(&g.iter().map(|&e| e as i64).collect::<Vec<_>>())).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, u: &[u64]) -> bool {
        self.gens.iter().any(|g| le(g, u))
    }

    /// `u + ℕ^V` misses the ideal: no generator is below `u` off `V`.
    fn is_proper(&self, u: &[u64], vars: u64) -> bool {
        !self.gens.iter().any(|g| (0..self.nvars).all(|j| vars & (1 << j) != 0 || g[j] <= u[j]))
    }
}

/// All standard pairs (maximal proper pairs) of `J`, sorted by variable set
/// and then base.
///
/// A pair `(u, V)` is maximal iff for each `i ∉ V` zeroing `u_i` and adding
/// `i` to `V` breaks properness. Bases satisfy `u_i < D_i` off `V`, where
/// `D_i` is the largest exponent of `x_i` among the generators.
pub fn poly_standard_pairs(j: &PolyMonomialIdeal) -> Result<Vec<PolyStdPair>> {
    let m = j.nvars;
    if m >= 64 {
        return Err(Error::Unsupported(format!("{m} variables")));
    }
    if j.gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Err(Error::domain("the unit ideal has no standard pairs"));
    }
    let bound: Vec<u64> = (0..m).map(|i| j.gens.iter().map(|g| g[i]).max().unwrap_or(0)).collect();
    let mut out = Vec::new();
    for vars in 0u64..(1u64 << m) {
        let inside = |i: usize| vars & (1 << i) != 0;
        if (0..m).any(|i| !inside(i) && bound[i] == 0) {
            continue;
        }
        if j.gens.iter().any(|g| (0..m).all(|i| inside(i) || g[i] == 0)) {
            continue;
        }
        let free: Vec<usize> = (0..m).filter(|&i| !inside(i)).collect();
        let mut u = vec![0u64; m];
        loop {
            if j.is_proper(&u, vars) {
                let maximal = free.iter().all(|&i| {
                    let mut w = u.clone();
                    w[i] = 0;
                    !j.is_proper(&w, vars | (1 << i))
                });
                if maximal {
                    out.push(PolyStdPair {
                        vars: (0..m).filter(|&i| inside(i)).collect(),
                        base: IntVector::from_i64s(&u.iter().map(|&e| e as i64).collect::<Vec<_>>()),
                    });
                }
            }
            // odometer over u_i in [0, bound_i) for free i
            let mut k = 0;
            while k < free.len() {
                let i = free[k];
                u[i] += 1;
                if u[i] < bound[i] {
                    break;
                }
                u[i] = 0;
                k += 1;
            }
            if k == free.len() {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

impl fmt::Display for PolyStdPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.vars.iter().map(|v| format!("x{v}")).collect();
        write!(f, "({}, {{{}}})", self.base, vars.join(", "))
    }
}
