use crate::error::{Error, Result};
use crate::polyhedron::facet_set::FacetSet;
use crate::polyhedron::hpolytope::HPolytope;
use crate::scalar::Field;

/// A nonempty face of an [`HPolytope`], identified by its saturated active set.
#[derive(Clone, Debug)]
pub struct FaceHandle<'p, F> {
    polytope: &'p HPolytope<F>,
    active: FacetSet,
    vertices: Vec<usize>,
    rays: Vec<usize>,
    dim: usize,
}

impl<F: Field> PartialEq for FaceHandle<'_, F> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.polytope, other.polytope) && self.active == other.active
    }
}

impl<'p, F: Field> FaceHandle<'p, F> {
    pub fn polytope(&self) -> &'p HPolytope<F> {
        self.polytope
    }

    /// All facets holding with equality on the face.
    pub fn active(&self) -> FacetSet {
        self.active
    }

    /// Indices into the polytope's vertex list.
    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertices
    }

    /// Indices into the polytope's ray list; empty for bounded polytopes.
    pub fn ray_indices(&self) -> &[usize] {
        &self.rays
    }

    pub fn vertices(&self) -> Vec<Vec<F>> {
        let g = self.polytope.generators().expect("face of a polytope with generators");
        self.vertices.iter().map(|&v| g.points[v].clone()).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.polytope.dim() - self.dim
    }

    pub fn is_whole(&self) -> bool {
        self.dim == self.polytope.affine_dim().unwrap_or(self.polytope.dim())
            && self.vertices.len() == self.polytope.generators().map_or(0, |g| g.points.len())
    }
}

/// The face cut out by equality on every facet of `active`.
pub fn face_from_active_set<F: Field>(p: &HPolytope<F>, active: FacetSet) -> Result<FaceHandle<'_, F>> {
    if let Some(i) = active.max_index() {
        if i >= p.num_facets() {
            return Err(Error::InvalidFacetIndex(i));
        }
    }
    let g = p.generators()?;
    let vertices: Vec<usize> = (0..g.points.len())
        .filter(|&v| active.is_subset(g.point_incidence[v]))
        .collect();
    if vertices.is_empty() {
        return Err(Error::EmptyFace);
    }
    let rays: Vec<usize> = (0..g.rays.len())
        .filter(|&r| active.is_subset(g.ray_incidence[r]))
        .collect();
    let saturated = vertices
        .iter()
        .map(|&v| g.point_incidence[v])
        .chain(rays.iter().map(|&r| g.ray_incidence[r]))
        .fold(FacetSet::full(p.num_facets()), FacetSet::intersection);
    let dim = p.dim() - p.rank_of(saturated);
    Ok(FaceHandle {
        polytope: p,
        active: saturated,
        vertices,
        rays,
        dim,
    })
}

/// The whole polytope as a face.
pub fn whole<F: Field>(p: &HPolytope<F>) -> Result<FaceHandle<'_, F>> {
    face_from_active_set(p, FacetSet::EMPTY)
}

/// Intersection of two faces of the same polytope and whether it is transverse.
///
/// Transverse means nonempty with `codim(f ∩ g) = codim(f) + codim(g)`.
pub fn intersect_faces<'p, F: Field>(
    f: &FaceHandle<'p, F>,
    g: &FaceHandle<'p, F>,
) -> (Option<FaceHandle<'p, F>>, bool) {
    assert!(std::ptr::eq(f.polytope, g.polytope), "faces of different polytopes");
    match face_from_active_set(f.polytope, f.active.union(g.active)) {
        Ok(h) => {
            let transverse = h.codim() == f.codim() + g.codim();
            (Some(h), transverse)
        }
        Err(_) => (None, false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::hpolytope::Facet;
    use crate::scalar::q;
    use num_rational::BigRational;

    fn square() -> HPolytope<BigRational> {
        // x <= 1, -x <= 0, y <= 1, -y <= 0
        HPolytope::new(
            2,
            vec![
                Facet::new(vec![q(1), q(0)], q(1)),
                Facet::new(vec![q(-1), q(0)], q(0)),
                Facet::new(vec![q(0), q(1)], q(1)),
                Facet::new(vec![q(0), q(-1)], q(0)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn edge_and_vertex_faces() {
        let sq = square();
        let edge = face_from_active_set(&sq, FacetSet::single(0)).unwrap();
        assert_eq!(edge.dim(), 1);
        assert_eq!(edge.vertices().len(), 2);
        let corner = face_from_active_set(&sq, FacetSet::from_indices([0, 2]).unwrap()).unwrap();
        assert_eq!(corner.dim(), 0);
        assert_eq!(corner.vertices(), vec![vec![q(1), q(1)]]);
        assert!(whole(&sq).unwrap().is_whole());
    }

    #[test]
    fn opposite_edges_do_not_meet() {
        let sq = square();
        assert_eq!(
            face_from_active_set(&sq, FacetSet::from_indices([0, 1]).unwrap()).unwrap_err(),
            Error::EmptyFace
        );
        assert_eq!(
            face_from_active_set(&sq, FacetSet::single(9)).unwrap_err(),
            Error::InvalidFacetIndex(9)
        );
    }

    #[test]
    fn intersections() {
        let sq = square();
        let all = whole(&sq).unwrap();
        let (h, t) = intersect_faces(&all, &all);
        assert_eq!(h.unwrap().dim(), 2);
        assert!(t);
        let right = face_from_active_set(&sq, FacetSet::single(0)).unwrap();
        let top = face_from_active_set(&sq, FacetSet::single(2)).unwrap();
        let (h, t) = intersect_faces(&right, &top);
        assert_eq!(h.unwrap().dim(), 0);
        assert!(t);
        let left = face_from_active_set(&sq, FacetSet::single(1)).unwrap();
        let (h, t) = intersect_faces(&right, &left);
        assert!(h.is_none());
        assert!(!t);
    }
}
