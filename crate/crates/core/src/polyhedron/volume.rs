//! Lattice-normalized volumes of faces.
//!
//! All work happens in lattice coordinates, where the lattice is `Z^d`. The
//! volume of a `k`-face is measured in its affine span with the induced
//! lattice `Z^d ∩ span` scaled to covolume one. Two independent routes are
//! provided:
//!
//! * [`VolumeCalculator::volume`] sums `dist(p, G) · vol(G) / k` over the
//!   facets `G` of the face not containing a fixed vertex `p`, where `dist`
//!   is the lattice distance (values of the primitive integral functional).
//! * [`VolumeCalculator::volume_by_triangulation`] builds a pulling
//!   triangulation and adds up simplex determinants.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::integer::{primitive, saturated_basis};
use crate::linalg::{determinant, dot, inverse, mat_vec, nullspace, rank, EchelonBasis};
use crate::polyhedron::face::FaceHandle;
use crate::polyhedron::facet_set::FacetSet;
use crate::polyhedron::hpolytope::HPolytope;
use crate::polyhedron::lattice::AffineLattice;
use crate::scalar::RationalField;

type Q = BigRational;

/// Affine coordinates on a face in which the induced lattice is `Z^k`.
struct FaceFrame {
    apex: Vec<Q>,
    rows: Vec<usize>,
    inv: Vec<Vec<Q>>,
}

impl FaceFrame {
    fn coords(&self, x: &[Q]) -> Vec<Q> {
        let diff: Vec<Q> = self.rows.iter().map(|&r| &x[r] - &self.apex[r]).collect();
        mat_vec(&self.inv, &diff)
    }
}

/// Caches face data of one polytope in one lattice.
pub struct VolumeCalculator {
    d: usize,
    points: Vec<Vec<Q>>,
    incidence: Vec<FacetSet>,
    normals: Vec<Vec<Q>>,
    rank_cache: RefCell<HashMap<FacetSet, usize>>,
    volume_cache: RefCell<HashMap<FacetSet, Q>>,
    triangulation_cache: RefCell<HashMap<FacetSet, Rc<Vec<Vec<usize>>>>>,
}

impl VolumeCalculator {
    pub fn new<F: RationalField>(p: &HPolytope<F>, lattice: &AffineLattice<F>) -> Result<Self> {
        if lattice.dim() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                got: lattice.dim(),
            });
        }
        let g = p.generators()?;
        if !g.rays.is_empty() {
            return Err(Error::UnboundedPolytope);
        }
        let standard = lattice.is_standard();
        let points = g
            .points
            .iter()
            .map(|x| {
                let y = if standard { x.clone() } else { lattice.coordinates(x) };
                y.iter().map(RationalField::to_big).collect()
            })
            .collect();
        let normals = p
            .facets()
            .iter()
            .map(|f| f.normal.iter().map(RationalField::to_big).collect())
            .collect();
        Ok(Self {
            d: p.dim(),
            points,
            incidence: g.point_incidence.clone(),
            normals,
            rank_cache: RefCell::default(),
            volume_cache: RefCell::default(),
            triangulation_cache: RefCell::default(),
        })
    }

    fn rank_of(&self, set: FacetSet) -> usize {
        if let Some(&r) = self.rank_cache.borrow().get(&set) {
            return r;
        }
        let rows: Vec<Vec<Q>> = set.iter().map(|i| self.normals[i].clone()).collect();
        let r = rank(&rows);
        self.rank_cache.borrow_mut().insert(set, r);
        r
    }

    fn vertices_of(&self, active: FacetSet) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&v| active.is_subset(self.incidence[v]))
            .collect()
    }

    fn saturate(&self, vertices: &[usize]) -> FacetSet {
        vertices
            .iter()
            .map(|&v| self.incidence[v])
            .fold(FacetSet::full(self.normals.len()), FacetSet::intersection)
    }

    /// Saturated set, vertex list and dimension of the face cut out by `active`.
    fn face(&self, active: FacetSet) -> Result<(FacetSet, Vec<usize>, usize)> {
        let vertices = self.vertices_of(active);
        if vertices.is_empty() {
            return Err(Error::EmptyFace);
        }
        let sat = self.saturate(&vertices);
        let dim = self.d - self.rank_of(sat);
        Ok((sat, vertices, dim))
    }

    /// Saturated sets of the facets of a `k`-face, in increasing order.
    fn facets_of(&self, sat: FacetSet, k: usize) -> Vec<FacetSet> {
        let mut out = Vec::new();
        for i in 0..self.normals.len() {
            if sat.contains(i) {
                continue;
            }
            let verts = self.vertices_of(sat.with(i));
            if verts.is_empty() {
                continue;
            }
            let s = self.saturate(&verts);
            if self.d - self.rank_of(s) + 1 == k && !out.contains(&s) {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    fn frame(&self, vertices: &[usize], k: usize) -> Result<FaceFrame> {
        let apex = self.points[vertices[0]].clone();
        let diffs: Vec<Vec<Q>> = vertices[1..]
            .iter()
            .map(|&v| self.points[v].iter().zip(&apex).map(|(a, b)| a - b).collect())
            .collect();
        let basis = saturated_basis(&diffs, self.d);
        if basis.len() != k {
            return Err(Error::LatticeMismatch(format!(
                "expected a rank-{k} induced lattice, found rank {}",
                basis.len()
            )));
        }
        // Choose k coordinates on which the basis is invertible.
        let mut picker = EchelonBasis::new(k);
        let mut rows = Vec::new();
        for r in 0..self.d {
            let row: Vec<Q> = basis.iter().map(|b| Q::from_integer(b[r].clone())).collect();
            if picker.insert(&row) {
                rows.push(r);
            }
            if picker.is_full() {
                break;
            }
        }
        let square: Vec<Vec<Q>> = rows
            .iter()
            .map(|&r| basis.iter().map(|b| Q::from_integer(b[r].clone())).collect())
            .collect();
        let inv = inverse(&square).ok_or_else(|| Error::LatticeMismatch("degenerate frame".into()))?;
        Ok(FaceFrame { apex, rows, inv })
    }

    /// Lattice-normalized volume of the face cut out by `active`.
    pub fn volume(&self, active: FacetSet) -> Result<Q> {
        let (sat, vertices, dim) = self.face(active)?;
        self.volume_rec(sat, &vertices, dim)
    }

    fn volume_rec(&self, sat: FacetSet, vertices: &[usize], k: usize) -> Result<Q> {
        if k == 0 {
            return Ok(Q::one());
        }
        if let Some(v) = self.volume_cache.borrow().get(&sat) {
            return Ok(v.clone());
        }
        let frame = self.frame(vertices, k)?;
        let apex = vertices[0];
        let mut total = Q::zero();
        for g in self.facets_of(sat, k) {
            let gverts = self.vertices_of(g);
            if gverts.contains(&apex) {
                continue;
            }
            let tg: Vec<Vec<Q>> = gverts.iter().map(|&v| frame.coords(&self.points[v])).collect();
            let dirs: Vec<Vec<Q>> = tg[1..]
                .iter()
                .map(|t| t.iter().zip(&tg[0]).map(|(a, b)| a - b).collect())
                .collect();
            let normal = nullspace(&dirs, k);
            if normal.len() != 1 {
                return Err(Error::LatticeMismatch("facet is not a hyperplane section".into()));
            }
            let u: Vec<Q> = primitive(&normal[0]).into_iter().map(Q::from_integer).collect();
            let dist = dot(&u, &tg[0]).abs();
            total += dist * self.volume_rec(g, &gverts, k - 1)?;
        }
        let v = total / Q::from_integer(BigInt::from(k));
        self.volume_cache.borrow_mut().insert(sat, v.clone());
        Ok(v)
    }

    fn triangulate(&self, sat: FacetSet, vertices: &[usize], k: usize) -> Rc<Vec<Vec<usize>>> {
        if k == 0 {
            return Rc::new(vec![vec![vertices[0]]]);
        }
        if let Some(t) = self.triangulation_cache.borrow().get(&sat) {
            return t.clone();
        }
        let apex = vertices[0];
        let mut simplices = Vec::new();
        for g in self.facets_of(sat, k) {
            let gverts = self.vertices_of(g);
            if gverts.contains(&apex) {
                continue;
            }
            for s in self.triangulate(g, &gverts, k - 1).iter() {
                let mut simplex = Vec::with_capacity(k + 1);
                simplex.push(apex);
                simplex.extend_from_slice(s);
                simplices.push(simplex);
            }
        }
        let t = Rc::new(simplices);
        self.triangulation_cache.borrow_mut().insert(sat, t.clone());
        t
    }

    /// Pulling triangulation of the face: simplices as lists of vertex indices.
    pub fn triangulation(&self, active: FacetSet) -> Result<Vec<Vec<usize>>> {
        let (sat, vertices, dim) = self.face(active)?;
        Ok(self.triangulate(sat, &vertices, dim).as_ref().clone())
    }

    /// Same quantity as [`Self::volume`], computed from a triangulation.
    pub fn volume_by_triangulation(&self, active: FacetSet) -> Result<Q> {
        let (sat, vertices, k) = self.face(active)?;
        if k == 0 {
            return Ok(Q::one());
        }
        let frame = self.frame(&vertices, k)?;
        let mut total = Q::zero();
        for s in self.triangulate(sat, &vertices, k).iter() {
            let m: Vec<Vec<Q>> = s[1..].iter().map(|&v| frame.coords(&self.points[v])).collect();
            // apex has coordinates zero in the frame of the top face only when
            // it is the frame origin; subtract explicitly to stay general.
            let a = frame.coords(&self.points[s[0]]);
            let m: Vec<Vec<Q>> = m
                .into_iter()
                .map(|row| row.iter().zip(&a).map(|(x, y)| x - y).collect())
                .collect();
            total += determinant(&m).abs();
        }
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        Ok(total / Q::from_integer(fact))
    }

    pub fn face_dim(&self, active: FacetSet) -> Result<usize> {
        Ok(self.face(active)?.2)
    }
}

/// Volume of `face` normalized so that the lattice induced on its span has covolume one.
///
/// Zero-dimensional faces have volume one.
pub fn lattice_volume<F: RationalField>(face: &FaceHandle<'_, F>, lattice: &AffineLattice<F>) -> Result<Q> {
    VolumeCalculator::new(face.polytope(), lattice)?.volume(face.active())
}

pub fn lattice_volume_by_triangulation<F: RationalField>(
    face: &FaceHandle<'_, F>,
    lattice: &AffineLattice<F>,
) -> Result<Q> {
    VolumeCalculator::new(face.polytope(), lattice)?.volume_by_triangulation(face.active())
}

/// Whether `v` is strictly positive; small helper for callers checking volumes.
pub fn is_positive(v: &Q) -> bool {
    v.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::face::{face_from_active_set, whole};
    use crate::polyhedron::hpolytope::Facet;
    use crate::scalar::{q, qf};

    fn simplex(d: usize, scale: i64) -> HPolytope<Q> {
        let mut facets = Vec::new();
        for i in 0..d {
            let mut n = vec![q(0); d];
            n[i] = q(-1);
            facets.push(Facet::new(n, q(0)));
        }
        facets.push(Facet::new(vec![q(1); d], q(scale)));
        HPolytope::new(d, facets).unwrap()
    }

    #[test]
    fn standard_simplex_volumes() {
        let s = simplex(3, 2);
        let l = AffineLattice::standard(3);
        let calc = VolumeCalculator::new(&s, &l).unwrap();
        assert_eq!(calc.volume(FacetSet::EMPTY).unwrap(), qf(8, 6));
        assert_eq!(calc.volume_by_triangulation(FacetSet::EMPTY).unwrap(), qf(8, 6));
        // The slanted facet x+y+z=2 is a lattice triangle of normalized area 2^2/2.
        assert_eq!(calc.volume(FacetSet::single(3)).unwrap(), q(2));
        // Its edge from (2,0,0) to (0,2,0) has lattice length 2.
        assert_eq!(calc.volume(FacetSet::from_indices([2, 3]).unwrap()).unwrap(), q(2));
        assert_eq!(calc.volume(FacetSet::from_indices([0, 1, 2]).unwrap()).unwrap(), q(1));
    }

    #[test]
    fn refined_lattice_scales_volume() {
        let s = simplex(2, 1);
        let half: AffineLattice<Q> =
            AffineLattice::new(vec![vec![qf(1, 2), q(0)], vec![q(0), q(1)]]).unwrap();
        let f = whole(&s).unwrap();
        assert_eq!(lattice_volume(&f, &AffineLattice::standard(2)).unwrap(), qf(1, 2));
        assert_eq!(lattice_volume(&f, &half).unwrap(), q(1));
        assert_eq!(lattice_volume_by_triangulation(&f, &half).unwrap(), q(1));
    }

    #[test]
    fn vertex_has_unit_volume() {
        let s = simplex(2, 5);
        let v = face_from_active_set(&s, FacetSet::from_indices([0, 1]).unwrap()).unwrap();
        assert_eq!(lattice_volume(&v, &AffineLattice::standard(2)).unwrap(), q(1));
    }
}
