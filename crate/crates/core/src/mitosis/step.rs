//! The mitosis operations `M_i` on faces of a [`BlockCone`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mitosis::cone::{BlockCone, ConeFace, Coord};
use crate::polyhedron::{face_from_active_set, FacetSet};

/// How `J_i(Γ)` treats the smallest index `s`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum JRule {
    /// `s ∈ J_i(Γ)` unless a facet of type `H(i,s;·,·)` is among the chosen
    /// facets; every `j > s` is tested the same way.
    #[default]
    Uniform,
    /// `s ∈ J_i(Γ)` unconditionally.
    Literal,
}

/// `H_+(i,j)`: the facet of type `H(i,j;·,·)`, with ties broken by comparing
/// `x^p_q` on the face.
fn lower_facet(cone: &BlockCone, face: &ConeFace, c: Coord) -> Result<Option<usize>> {
    let candidates: Vec<usize> = (0..cone.num_facets()).filter(|&k| cone.facets()[k].lower == c).collect();
    match candidates.len() {
        0 => return Ok(None),
        1 => return Ok(Some(candidates[0])),
        _ => {}
    }
    let h = face_from_active_set(cone.polytope(), face.saturated())?;
    let gens = cone.polytope().generators()?;
    let rays: Vec<&Vec<crate::Q>> = h.ray_indices().iter().map(|&r| &gens.rays[r]).collect();
    // a ≼ b when x^{a.upper} ≤ x^{b.upper} on every ray of the face.
    let below = |a: usize, b: usize| {
        let (pa, pb) = (cone.facets()[a].upper, cone.facets()[b].upper);
        rays.iter().all(|r| cone.value(r, pa) <= cone.value(r, pb))
    };
    let mut best = candidates[0];
    for &k in &candidates[1..] {
        match (below(best, k), below(k, best)) {
            (true, true) => {
                if cone.facets()[k].tag() < cone.facets()[best].tag() {
                    best = k;
                }
            }
            (true, false) => {}
            (false, true) => best = k,
            (false, false) => {
                return Err(Error::AmbiguousTieBreak(format!(
                    "{} and {} are incomparable on {}",
                    cone.facets()[best],
                    cone.facets()[k],
                    cone.describe(face.set())
                )))
            }
        }
    }
    Ok(Some(best))
}

/// One application of `M_i`.
pub fn mitosis_step(cone: &BlockCone, face: &ConeFace, i: usize) -> Result<Vec<ConeFace>> {
    mitosis_step_with(cone, face, i, JRule::default())
}

pub fn mitosis_step_with(cone: &BlockCone, face: &ConeFace, i: usize, rule: JRule) -> Result<Vec<ConeFace>> {
    if i == 0 || i > cone.num_blocks() {
        return Err(Error::InvalidBlock(i));
    }
    let set = face.set();
    let di = cone.blocks()[i - 1];
    let upper_in_set = |j: usize| set.iter().find(|&k| cone.facets()[k].upper == (i, j));
    if upper_in_set(di).is_none() {
        return Ok(Vec::new());
    }
    let mut s = di;
    while s > 1 && upper_in_set(s - 1).is_some() {
        s -= 1;
    }
    let plus: BTreeMap<usize, usize> = (s..=di).map(|j| (j, upper_in_set(j).unwrap())).collect();
    let mut minus: BTreeMap<usize, Option<usize>> = BTreeMap::new();
    for j in s..=di {
        if j > s || rule == JRule::Uniform {
            minus.insert(j, lower_facet(cone, face, (i, j))?);
        }
    }
    let in_j = |j: usize| match minus.get(&j) {
        None => true,
        Some(None) => true,
        Some(Some(k)) => !set.contains(*k),
    };
    let js: Vec<usize> = (s..=di).filter(|&j| in_j(j)).collect();
    let mut out = Vec::with_capacity(js.len());
    for &j in &js {
        let mut next: FacetSet = set.without(plus[&j]);
        for &k in js.iter().filter(|&&k| k > j) {
            let lower = minus
                .get(&k)
                .copied()
                .flatten()
                .ok_or_else(|| Error::InvalidCone(format!("no facet of type H({i},{k};.,.) to replace H^+({i},{k})")))?;
            next = next.without(plus[&k]).with(lower);
        }
        let child = cone.face(next)?;
        if child.dim() != face.dim() + 1 {
            return Err(Error::InvalidCone(format!(
                "offspring {} has dimension {} instead of {}",
                cone.describe(next),
                child.dim(),
                face.dim() + 1
            )));
        }
        out.push(child);
    }
    Ok(out)
}

/// `M_{o_1} ⋯ M_{o_k}(start)`: the rightmost operation is applied first.
pub fn mitosis_apply(cone: &BlockCone, start: &ConeFace, ops: &[usize]) -> Result<Vec<ConeFace>> {
    mitosis_apply_with(cone, start, ops, JRule::default())
}

pub fn mitosis_apply_with(cone: &BlockCone, start: &ConeFace, ops: &[usize], rule: JRule) -> Result<Vec<ConeFace>> {
    let mut current = vec![start.clone()];
    for &i in ops.iter().rev() {
        let mut next: BTreeMap<FacetSet, ConeFace> = BTreeMap::new();
        for f in &current {
            for child in mitosis_step_with(cone, f, i, rule)? {
                next.entry(child.saturated()).or_insert(child);
            }
        }
        current = next.into_values().collect();
    }
    current.sort();
    Ok(current)
}
