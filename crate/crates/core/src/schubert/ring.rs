//! Polytope ring ranks and facet derivative operators.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{FamilyKind, PolytopeFamily};
use crate::linalg::EchelonBasis;
use crate::poly::{interpolate_homogeneous, monomials_of_degree, Poly};
use crate::polyhedron::{FacetSet, VolumeCalculator};
use crate::scalar::q;
use crate::schubert::volpoly::{select_samples, volume_polynomial, with_pool};
use crate::Q;

/// Ranks of the graded pieces of `Sym / Ann(vol)`: dimension of the span of
/// all `k`-th order partial derivatives of `vol`, for `k = 0..=deg`.
pub fn ranks_of(vol: &Poly) -> Vec<usize> {
    let n = vol.nvars();
    let d = vol.degree().unwrap_or(0);
    let mut ranks = Vec::with_capacity(d as usize + 1);
    let mut level = vec![vol.clone()];
    for k in 0..=d {
        let monos = monomials_of_degree(n, d - k);
        let mut ech = EchelonBasis::new(monos.len());
        let mut basis = Vec::new();
        for p in level {
            if ech.insert(&p.coefficients_on(&monos)) {
                basis.push(p);
            }
        }
        ranks.push(ech.rank());
        level = basis.iter().flat_map(|p| (0..n).map(move |i| p.derivative(i))).collect();
    }
    ranks
}

/// Offsets of the unit trapezoid, used as the base point for its offset family.
pub const TRAPEZOID_BASE: [i64; 4] = [0, 1, 1, 0];

/// The volume polynomial a ring is read from: in `λ` for weight families, in
/// the facet offsets for the trapezoid.
pub fn family_volume_polynomial(family: &PolytopeFamily) -> Result<Poly> {
    match family.kind() {
        FamilyKind::Trapezoid => offset_volume_polynomial(family, &TRAPEZOID_BASE),
        _ => volume_polynomial(family, None),
    }
}

pub fn graded_ring_ranks(family: &PolytopeFamily) -> Result<Vec<usize>> {
    Ok(ranks_of(&family_volume_polynomial(family)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct RingRanks {
    pub family: String,
    pub ranks: Vec<usize>,
    pub total: usize,
    pub palindromic: bool,
}

pub fn ring_ranks_report(family: &PolytopeFamily) -> Result<RingRanks> {
    let ranks = graded_ring_ranks(family)?;
    let mut rev = ranks.clone();
    rev.reverse();
    Ok(RingRanks {
        family: family.kind().to_string(),
        total: ranks.iter().sum(),
        palindromic: rev == ranks,
        ranks,
    })
}

/// Vertex–facet incidences at the given offsets.
fn incidences(family: &PolytopeFamily, params: &[Q]) -> Result<Vec<FacetSet>> {
    let spec = family.specialize_params(params)?;
    let g = spec.polytope.generators()?;
    let mut inc = g.point_incidence.clone();
    inc.sort();
    Ok(inc)
}

/// `NotSimple` unless every vertex at `params` lies on exactly `dim` facets.
pub fn check_simple(family: &PolytopeFamily, params: &[Q]) -> Result<()> {
    for s in incidences(family, params)? {
        if s.len() != family.dim() {
            return Err(Error::NotSimple(format!("a vertex lies on facets {:?}", s.to_vec())));
        }
    }
    Ok(())
}

/// Volume as a polynomial in the facet offsets, for a simple family whose
/// parameters are exactly those offsets. Samples stay near multiples of
/// `base` and keep its combinatorial type.
pub fn offset_volume_polynomial(family: &PolytopeFamily, base: &[i64]) -> Result<Poly> {
    let basef: Vec<Q> = base.iter().map(|&x| q(x)).collect();
    check_simple(family, &basef)?;
    let target = incidences(family, &basef)?;
    let n = family.nparams();
    let d = family.dim() as u32;
    let mut candidates = Vec::new();
    for t in 3..=6i64 {
        let mut deltas: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..n {
            deltas = deltas
                .into_iter()
                .flat_map(|v| {
                    (-1..=1).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        for del in deltas {
            let h: Vec<i64> = base.iter().zip(&del).map(|(b, e)| t * b + e).collect();
            let hq: Vec<Q> = h.iter().map(|&x| q(x)).collect();
            if incidences(family, &hq).is_ok_and(|inc| inc == target) {
                candidates.push(h);
            }
        }
    }
    let points = select_samples(n, d, &candidates)
        .ok_or_else(|| Error::InterpolationRankDeficient(format!("{} analogous samples", candidates.len())))?;
    let samples: Vec<(Vec<Q>, Q)> = with_pool(|| {
        use rayon::prelude::*;
        points
            .par_iter()
            .map(|h| {
                let hq: Vec<Q> = h.iter().map(|&x| q(x)).collect();
                let spec = family.specialize_params(&hq)?;
                let v = VolumeCalculator::new(&spec.polytope, family.lattice())?.volume(FacetSet::EMPTY)?;
                Ok((hq, v))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    interpolate_homogeneous(n, d, &samples)
}

/// The operator `∂_Γ` for facet `Γ`: differentiation in its offset.
pub fn facet_derivative(family: &PolytopeFamily, facet: usize) -> Result<Poly> {
    if facet >= family.nparams() || facet >= family.num_facets() {
        return Err(Error::InvalidFacetIndex(facet));
    }
    Ok(Poly::var(family.nparams(), facet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_family;
    use crate::scalar::qf;

    #[test]
    fn trapezoid_relations() {
        let f = build_family(FamilyKind::Trapezoid).unwrap();
        let vol = offset_volume_polynomial(&f, &[0, 1, 1, 0]).unwrap();
        let h: Vec<Poly> = (0..4).map(|i| Poly::var(4, i)).collect();
        let expect = (&(&h[0] + &h[2]) * &(&(&(&h[1].scale(&q(2)) + &h[3].scale(&q(2))) - &h[0]) + &h[2])).scale(&qf(1, 2));
        assert_eq!(vol, expect);
        let d: Vec<Poly> = (0..4).map(|i| facet_derivative(&f, i).unwrap()).collect();
        let e2 = &d[0] * &(&d[2] - &d[1]);
        assert_eq!(vol.apply_operator(&e2), Poly::constant(4, q(-1)));
        assert_eq!(vol.apply_operator(&d[1]), vol.apply_operator(&d[3]));
        assert!(vol.apply_operator(&Poly::zero(4)).is_zero());
    }

    #[test]
    fn small_ranks() {
        let f = build_family(FamilyKind::GzA(3)).unwrap();
        assert_eq!(graded_ring_ranks(&f).unwrap(), vec![1, 2, 2, 1]);
        let f = build_family(FamilyKind::Sgz(2)).unwrap();
        assert_eq!(graded_ring_ranks(&f).unwrap(), vec![1, 2, 2, 2, 1]);
        let f = build_family(FamilyKind::Trapezoid).unwrap();
        assert_eq!(graded_ring_ranks(&f).unwrap(), vec![1, 2, 1]);
    }
}
