//! Structure constants from transverse intersections of Schubert faces.
//!
//! Faces of `𝔖_w` have dimension `ℓ(w)`, so `[X_u]·[X_v]` is carried by faces
//! of dimension `ℓ(u) + ℓ(v) - d` and the identity class is `[X_{w_0}]`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::PolytopeFamily;
use crate::linalg::{rank, solve_any, transpose};
use crate::poly::{monomials_of_degree, Poly};
use crate::polyhedron::{face_from_active_set, intersect_faces, FacetSet};
use crate::scalar::serde_q;
use crate::schubert::faces::schubert_face_set;
use crate::schubert::volpoly::{batch_face_polynomials, weight_grid};
use crate::weyl::{word_string, WeylElement};
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coefficient(#[serde(with = "serde_q")] pub Q);

#[derive(Clone, Debug, Serialize)]
pub struct StructureConstants {
    pub u: String,
    pub v: String,
    /// Dimension of the faces carrying the product.
    pub dim: Option<usize>,
    /// Nonzero coefficients keyed by reduced word.
    pub terms: BTreeMap<String, Coefficient>,
    /// Facet sets of the intersection faces, as polytope facet indices.
    pub intersection_faces: Vec<Vec<usize>>,
}

/// Intersection faces of `𝔖_u` and `𝔖_v` at a probe weight, failing on any
/// pair that is not transverse.
fn intersections(family: &PolytopeFamily, fu: &[FacetSet], fv: &[FacetSet]) -> Result<Vec<FacetSet>> {
    let n = family.roots()?.ambient_dim();
    let probe = &weight_grid(n, 2)[1];
    let spec = family.specialize(probe)?;
    let p = &spec.polytope;
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for (a, &f) in fu.iter().enumerate() {
        let hf = face_from_active_set(p, f)?;
        for (b, &g) in fv.iter().enumerate() {
            let hg = face_from_active_set(p, g)?;
            match intersect_faces(&hf, &hg) {
                (None, _) => {}
                (Some(h), true) => out.push(h.active()),
                (Some(_), false) => bad.push((a, b)),
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::TransversalityFailure(bad));
    }
    Ok(out)
}

pub fn structure_constants(family: &PolytopeFamily, u: &WeylElement, v: &WeylElement) -> Result<StructureConstants> {
    let rs = family.roots()?;
    let d = rs.longest().length();
    let mut result = StructureConstants {
        u: word_string(&rs.reduced_word(u)),
        v: word_string(&rs.reduced_word(v)),
        dim: None,
        terms: BTreeMap::new(),
        intersection_faces: Vec::new(),
    };
    let Some(k) = (u.length() + v.length()).checked_sub(d) else {
        return Ok(result);
    };
    result.dim = Some(k);
    let fu = schubert_face_set(family, u)?.facet_sets();
    let fv = schubert_face_set(family, v)?.facet_sets();
    let inter = intersections(family, &fu, &fv)?;
    result.intersection_faces = inter.iter().map(|s| s.to_vec()).collect();

    let basis: Vec<WeylElement> = rs.weyl_elements().into_iter().nth(k).unwrap_or_default();
    let basis_faces: Vec<Vec<FacetSet>> = basis
        .iter()
        .map(|t| Ok(schubert_face_set(family, t)?.facet_sets()))
        .collect::<Result<_>>()?;
    let mut requests: Vec<(FacetSet, u32)> = inter.iter().map(|&s| (s, k as u32)).collect();
    for fs in &basis_faces {
        requests.extend(fs.iter().map(|&s| (s, k as u32)));
    }
    requests.sort();
    requests.dedup();
    let batch = batch_face_polynomials(family, &requests, &[])?;
    let poly_of = |s: FacetSet| batch.polynomials[requests.binary_search(&(s, k as u32)).expect("requested")].clone();
    let n = rs.ambient_dim();
    let total = |sets: &[FacetSet]| sets.iter().fold(Poly::zero(n), |a, &s| &a + &poly_of(s));

    let target = total(&inter);
    let monos = monomials_of_degree(n, k as u32);
    let columns: Vec<Vec<Q>> = basis_faces.iter().map(|fs| total(fs).coefficients_on(&monos)).collect();
    if rank(&columns) < columns.len() {
        return Err(Error::DependentBasis);
    }
    let a = transpose(&columns);
    let rhs = target.coefficients_on(&monos);
    let coeffs = solve_any(&a, &rhs)
        .ok_or_else(|| Error::InvalidStructureConstant("product outside the span of Schubert classes".into()))?;
    for (t, c) in basis.iter().zip(coeffs) {
        if c.is_negative() || !c.denom().is_one() {
            return Err(Error::InvalidStructureConstant(format!(
                "{} for {}",
                crate::scalar::fmt_rational(&c),
                word_string(&rs.reduced_word(t))
            )));
        }
        if !c.is_zero() {
            result.terms.insert(word_string(&rs.reduced_word(t)), Coefficient(c));
        }
    }
    Ok(result)
}
