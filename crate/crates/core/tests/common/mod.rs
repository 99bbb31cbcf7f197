//! Brute-force oracles. Nothing here calls the solver: membership questions
//! are answered by enumerating bounded-degree points of the monoid.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::Rng;
use stdpairs::covers::Cover;
use stdpairs::ideal::MonomialIdeal;
use stdpairs::linalg::{IntMatrix, IntVector};
use stdpairs::monoid::AffineMonoid;

pub type Point = Vec<i64>;

pub fn v(e: &[i64]) -> IntVector {
    IntVector::from_i64s(e)
}

pub fn to_point(x: &IntVector) -> Point {
    x.to_i64s().expect("small entries")
}

/// Componentwise-minimal nonnegative solutions of `m x = b` with every entry
/// at most `bound`.
pub fn brute_min_solutions(m: &[Vec<i64>], b: &[i64], n: usize, bound: i64) -> Vec<Point> {
    let mut sols = Vec::new();
    let mut x = vec![0i64; n];
    loop {
        if m.iter().zip(b).all(|(row, bi)| row.iter().zip(&x).map(|(a, xi)| a * xi).sum::<i64>() == *bi) {
            sols.push(x.clone());
        }
        let mut i = 0;
        while i < n && x[i] == bound {
            x[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }
    let le = |a: &Point, c: &Point| a.iter().zip(c).all(|(p, q)| p <= q);
    let mut out: Vec<Point> = sols.iter().filter(|s| !sols.iter().any(|t| t != *s && le(t, s))).cloned().collect();
    out.sort();
    out
}

/// A positive grading of the columns, found by search.
pub fn grading(cols: &[Point]) -> Option<Point> {
    let d = cols.first()?.len();
    let mut h = vec![-3i64; d];
    loop {
        if cols.iter().all(|c| dot(&h, c) > 0) {
            return Some(h);
        }
        let mut i = 0;
        while i < d && h[i] == 3 {
            h[i] = -3;
            i += 1;
        }
        if i == d {
            return None;
        }
        h[i] += 1;
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// All points of `ℕ cols` of degree at most `max_deg` under the grading `h`.
pub fn semigroup_points(cols: &[Point], d: usize, h: &[i64], max_deg: i64) -> HashSet<Point> {
    let mut seen: HashSet<Point> = HashSet::from([vec![0; d]]);
    let mut frontier = vec![vec![0; d]];
    while let Some(p) = frontier.pop() {
        for c in cols {
            let q = add(&p, c);
            if dot(h, &q) <= max_deg && seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen
}

/// A monoid with its columns, a grading and the degree-bounded points.
pub struct Oracle {
    pub monoid: Arc<AffineMonoid>,
    pub cols: Vec<Point>,
    pub h: Point,
    pub max_deg: i64,
    pub points: HashSet<Point>,
}

impl Oracle {
    pub fn new(monoid: Arc<AffineMonoid>, max_deg: i64) -> Self {
        let cols: Vec<Point> = monoid.gens().columns().iter().map(to_point).collect();
        let h = grading(&cols).expect("pointed monoids have a grading");
        let points = semigroup_points(&cols, monoid.dim(), &h, max_deg);
        Oracle { monoid, cols, h, max_deg, points }
    }

    pub fn deg(&self, p: &[i64]) -> i64 {
        dot(&self.h, p)
    }

    /// `{A x : x ∈ [0, k]^n}`.
    pub fn box_points(&self, k: i64) -> Vec<Point> {
        let n = self.cols.len();
        let d = self.monoid.dim();
        let mut out = HashSet::new();
        let mut x = vec![0i64; n];
        loop {
            let mut p = vec![0; d];
            for (xi, c) in x.iter().zip(&self.cols) {
                for (pj, cj) in p.iter_mut().zip(c) {
                    *pj += xi * cj;
                }
            }
            out.insert(p);
            let mut i = 0;
            while i < n && x[i] == k {
                x[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            x[i] += 1;
        }
        let mut v: Vec<Point> = out.into_iter().collect();
        v.sort();
        v
    }

    /// Whether `p` is in `ℕA`; valid for `deg p ≤ max_deg`.
    pub fn in_monoid(&self, p: &[i64]) -> bool {
        assert!(self.deg(p) <= self.max_deg, "degree bound exceeded");
        self.points.contains(p)
    }

    /// Whether `p ∈ gens + ℕA`; valid for `deg p ≤ max_deg`.
    pub fn in_ideal(&self, gens: &[Point], p: &[i64]) -> bool {
        gens.iter().any(|g| {
            let q = sub(p, g);
            self.deg(&q) >= 0 && self.in_monoid(&q)
        })
    }

    /// Whether `p ∈ a + ℕF`, with `F` given by its columns.
    pub fn in_translate(&self, a: &[i64], face_cols: &[usize], p: &[i64]) -> bool {
        let q = sub(p, a);
        if self.deg(&q) < 0 {
            return false;
        }
        let cols: Vec<Point> = face_cols.iter().map(|&j| self.cols[j].clone()).collect();
        let mut seen: HashSet<Point> = HashSet::from([q.clone()]);
        let mut stack = vec![q];
        while let Some(r) = stack.pop() {
            if r.iter().all(|&x| x == 0) {
                return true;
            }
            for c in &cols {
                let s = sub(&r, c);
                if self.deg(&s) >= 0 && seen.insert(s.clone()) {
                    stack.push(s);
                }
            }
        }
        false
    }

    pub fn covered(&self, cover: &Cover, p: &[i64]) -> bool {
        cover.entries().any(|(a, f)| self.in_translate(&to_point(a), f.columns(), p))
    }
}

pub fn ideal_points(ideal: &MonomialIdeal) -> Vec<Point> {
    ideal.generators().iter().map(to_point).collect()
}

/// A random pointed monoid with `d ≤ 3` rows and `n ≤ 4` columns, or `None`
/// when the draw is not pointed.
pub fn random_monoid(rng: &mut StdRng) -> Option<Arc<AffineMonoid>> {
    let d = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=4);
    let cols: Vec<Point> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-1..=3)).collect()).collect();
    if cols.iter().any(|c| c.iter().all(|&x| x == 0)) || grading(&cols).is_none() {
        return None;
    }
    let rows: Vec<Point> = (0..d).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    Some(Arc::new(AffineMonoid::from_rows(&rows).expect("graded columns are pointed")))
}

/// A random ideal with at most three generators `A x`, `x ∈ [0, 3]^n ∖ 0`.
pub fn random_ideal(rng: &mut StdRng, monoid: &Arc<AffineMonoid>) -> MonomialIdeal {
    let n = monoid.ngens();
    let k = rng.gen_range(1..=3);
    let gens: Vec<IntVector> = (0..k)
        .map(|_| loop {
            let x: Point = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            if x.iter().any(|&e| e != 0) {
                break monoid.gens().mul_vec(&v(&x)).expect("shape");
            }
        })
        .collect();
    MonomialIdeal::from_generators(monoid.clone(), gens).expect("nonzero members")
}

pub fn matrix_rows(m: &IntMatrix) -> Vec<Point> {
    m.row_vectors().iter().map(to_point).collect()
}
