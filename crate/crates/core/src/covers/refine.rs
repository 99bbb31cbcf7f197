//! Turning an arbitrary cover of `std(I)` into the standard cover.

use std::collections::HashMap;
use std::sync::Arc;

use crate::covers::difference::{difference_pairs, principal_cover};
use crate::covers::Cover;
use crate::diophantine::min_nonneg_solutions;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::IntVector;
use crate::monoid::AffineMonoid;
use crate::pairs::{is_proper, pair_within};
use crate::polyhedral::FaceIndex;

pub const DEFAULT_LOOP_CAP: usize = 1000;

/// The `≤_Q`-minimal elements of `{q ∈ ℕA : q − a ∈ span F}`, sorted.
///
/// The slice is cut out by the support rows `S` of `F`: `S q = S a`.
pub fn minimal_holes(a: &IntVector, f: &FaceIndex, monoid: &AffineMonoid) -> Result<Vec<IntVector>> {
    monoid.check_vector(a)?;
    if f.is_empty() {
        return Ok(if monoid.is_member(a)? { vec![a.clone()] } else { Vec::new() });
    }
    let s = monoid.supports(f)?.to_matrix();
    let gens = monoid.gens();
    let sa = s.mul(gens)?;
    let sols = min_nonneg_solutions(&sa, &s.mul_vec(a)?)?;
    let mut qs = sols.iter().map(|x| gens.mul_vec(x)).collect::<Result<Vec<_>>>()?;
    qs.sort();
    qs.dedup();
    let keep: Vec<bool> = (0..qs.len())
        .map(|i| !(0..qs.len()).any(|j| j != i && monoid.is_member(&(&qs[i] - &qs[j])).expect("dimensions agree")))
        .collect();
    Ok(qs.into_iter().zip(keep).filter_map(|(q, k)| k.then_some(q)).collect())
}

/// Memo of hole sets and properness verdicts, valid for one ideal.
#[derive(Default)]
struct Memo {
    holes: HashMap<(IntVector, FaceIndex), Vec<IntVector>>,
    proper: HashMap<(IntVector, FaceIndex), bool>,
}

impl Memo {
    fn holes(&mut self, a: &IntVector, f: &FaceIndex, monoid: &AffineMonoid) -> Result<&[IntVector]> {
        let key = (a.clone(), f.clone());
        if !self.holes.contains_key(&key) {
            let hs = minimal_holes(a, f, monoid)?;
            self.holes.insert(key.clone(), hs);
        }
        Ok(&self.holes[&key])
    }

    fn is_proper(&mut self, b: &IntVector, g: &FaceIndex, ideal: &MonomialIdeal) -> Result<bool> {
        let key = (b.clone(), g.clone());
        if let Some(&p) = self.proper.get(&key) {
            return Ok(p);
        }
        let p = is_proper(b, g, ideal)?;
        self.proper.insert(key, p);
        Ok(p)
    }
}

fn czero_memo(c0: &Cover, ideal: &MonomialIdeal, memo: &mut Memo) -> Result<Cover> {
    let monoid = ideal.monoid();
    let mut out = Cover::for_ideal(ideal);
    for (a, f) in c0.entries() {
        for b in memo.holes(a, f, monoid)? {
            out.insert(b.clone(), f.clone());
        }
    }
    Ok(out)
}

/// Properness only fails upward: once `(b, G)` is improper so is every
/// `(b, G′)` with `G′ ⊇ G`, so those faces are skipped.
fn ctwo_memo(c1: &Cover, ideal: &MonomialIdeal, memo: &mut Memo) -> Result<Cover> {
    let monoid = ideal.monoid();
    let mut out = Cover::for_ideal(ideal);
    for (b, f) in c1.entries() {
        let mut improper: Vec<&FaceIndex> = Vec::new();
        for g in monoid.lattice().faces_containing(f) {
            if improper.iter().any(|h| h.is_subface_of(g)) {
                continue;
            }
            if memo.is_proper(b, g, ideal)? {
                out.insert(b.clone(), g.clone());
            } else {
                improper.push(g);
            }
        }
    }
    Ok(out)
}

/// Replaces each `(a, F)` by the pairs `(b, F)` over the minimal holes `b`
/// of its slice. Output pairs need not be proper.
pub fn czero_to_cone(c0: &Cover, ideal: &MonomialIdeal) -> Result<Cover> {
    czero_memo(c0, ideal, &mut Memo::default())
}

/// Keeps every proper `(b, G)` with `G ⊇ F` for `(b, F)` in the input.
pub fn cone_to_ctwo(c1: &Cover, ideal: &MonomialIdeal) -> Result<Cover> {
    ctwo_memo(c1, ideal, &mut Memo::default())
}

/// Drops every pair whose translated face lies inside another pair's.
fn prune_contained(cover: &Cover) -> Result<Cover> {
    let monoid = cover.monoid();
    let entries: Vec<(IntVector, FaceIndex)> = cover.entries().map(|(b, f)| (b.clone(), f.clone())).collect();
    let mut out = cover.clone();
    for (i, (a, f)) in entries.iter().enumerate() {
        for (j, (b, g)) in entries.iter().enumerate() {
            // distinct pairs over the zero face are disjoint points
            if i == j || g.is_empty() || !f.is_subface_of(g) {
                continue;
            }
            if pair_within(monoid, a, f, b, g)? {
                out.remove(a, f);
                break;
            }
        }
    }
    Ok(out)
}

/// Iterates `cone_to_ctwo ∘ czero_to_cone` from a cover of `std(I)` until it
/// stabilizes, then removes non-maximal pairs.
pub fn cover_to_standard(c: &Cover, ideal: &MonomialIdeal, loop_cap: usize) -> Result<Cover> {
    let mut current = c.clone().reanchored(ideal);
    let mut memo = Memo::default();
    for round in 0..loop_cap {
        let next = ctwo_memo(&czero_memo(&current, ideal, &mut memo)?, ideal, &mut memo)?;
        log::debug!("refinement round {round}: {} pairs", next.len());
        if next == current {
            return prune_contained(&next);
        }
        current = next;
    }
    Err(Error::LoopCap(loop_cap))
}

fn plural(k: usize) -> &'static str {
    if k == 1 {
        "generator"
    } else {
        "generators"
    }
}

/// The standard cover of a nonzero ideal, adding one generator at a time.
pub(crate) fn standard_cover(ideal: &MonomialIdeal, loop_cap: usize) -> Result<Cover> {
    if ideal.is_empty() {
        return Err(Error::domain("the zero ideal has no standard cover"));
    }
    let monoid: &Arc<AffineMonoid> = ideal.monoid();
    let gens = ideal.generators();
    let k = gens.len();
    let top = monoid.top_face();
    let first = MonomialIdeal::from_members(monoid.clone(), vec![gens[0].clone()]);
    let mut cover = principal_cover(&first)?;
    log::info!("Cover for 1 generator was calculated. {} generators are left.", k - 1);
    for i in 1..k {
        let partial = MonomialIdeal::from_members(monoid.clone(), gens[..=i].to_vec());
        let mut next = Cover::for_ideal(&partial);
        for (b, f) in cover.entries() {
            for (base, face) in difference_pairs(monoid, b, f, &gens[i], &top)? {
                next.insert(base, face);
            }
        }
        log::debug!("difference with generator {}: {} pairs", i + 1, next.len());
        cover = cover_to_standard(&next, &partial, loop_cap)?;
        log::info!("Cover for {} {} was calculated. {} generators are left.", i + 1, plural(i + 1), k - i - 1);
    }
    Ok(cover.reanchored(ideal))
}
