use std::cmp::Ordering;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{dot, rank};
use crate::polyhedron::dd::double_description;
use crate::polyhedron::facet_set::{FacetSet, MAX_FACETS};
use crate::scalar::Field;

/// The inequality `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet<F> {
    pub normal: Vec<F>,
    pub offset: F,
}

impl<F: Field> Facet<F> {
    pub fn new(normal: Vec<F>, offset: F) -> Self {
        Self { normal, offset }
    }

    pub fn slack(&self, x: &[F]) -> F {
        self.offset.clone() - dot(&self.normal, x)
    }
}

/// Vertices and extreme rays of an H-polytope together with their facet incidences.
#[derive(Clone, Debug)]
pub struct Generators<F> {
    pub points: Vec<Vec<F>>,
    pub point_incidence: Vec<FacetSet>,
    pub rays: Vec<Vec<F>>,
    pub ray_incidence: Vec<FacetSet>,
}

/// A rational polyhedron `{x : A x <= b}`.
///
/// Bounded unless built with [`HPolytope::cone`], in which case every offset
/// is zero and recession directions are allowed.
#[derive(Clone, Debug)]
pub struct HPolytope<F> {
    dim: usize,
    facets: Vec<Facet<F>>,
    cone: bool,
    generators: OnceLock<Result<Generators<F>>>,
}

fn lex_cmp<F: PartialOrd>(a: &[F], b: &[F]) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

impl<F: Field> HPolytope<F> {
    pub fn new(dim: usize, facets: Vec<Facet<F>>) -> Result<Self> {
        if facets.len() > MAX_FACETS {
            return Err(Error::TooManyFacets(facets.len()));
        }
        if let Some(f) = facets.iter().find(|f| f.normal.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: f.normal.len(),
            });
        }
        Ok(Self {
            dim,
            facets,
            cone: false,
            generators: OnceLock::new(),
        })
    }

    /// The polyhedral cone `{x : normal · x <= 0}`.
    pub fn cone(dim: usize, normals: Vec<Vec<F>>) -> Result<Self> {
        let facets = normals.into_iter().map(|n| Facet::new(n, F::zero())).collect();
        let mut p = Self::new(dim, facets)?;
        p.cone = true;
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet<F>] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_cone(&self) -> bool {
        self.cone
    }

    pub fn contains(&self, x: &[F]) -> bool {
        self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    /// Facets holding with equality at `x`.
    pub fn tight_at(&self, x: &[F]) -> FacetSet {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.slack(x).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn rank_of(&self, set: FacetSet) -> usize {
        let rows: Vec<Vec<F>> = set.iter().map(|i| self.facets[i].normal.clone()).collect();
        rank(&rows)
    }

    /// Vertices and rays, computed once and cached.
    pub fn generators(&self) -> Result<&Generators<F>> {
        self.generators
            .get_or_init(|| self.compute_generators())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_generators(&self) -> Result<Generators<F>> {
        let d = self.dim;
        // Homogenize: (x, t) with a·x - b·t <= 0 and -t <= 0.
        let mut constraints: Vec<Vec<F>> = self
            .facets
            .iter()
            .map(|f| {
                let mut row = f.normal.clone();
                row.push(-f.offset.clone());
                row
            })
            .collect();
        let mut t_row = vec![F::zero(); d + 1];
        t_row[d] = -F::one();
        constraints.push(t_row);
        let cone = double_description(&constraints, d + 1);

        let mut points = Vec::new();
        let mut rays = Vec::new();
        for r in &cone.rays {
            let t = r.coords[d].clone();
            if t.is_positive() {
                points.push(r.coords[..d].iter().map(|x| x.clone() / t.clone()).collect::<Vec<F>>());
            } else {
                rays.push(r.coords[..d].to_vec());
            }
        }
        if points.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if !cone.lineality.is_empty() {
            return Err(Error::UnboundedPolytope);
        }
        if !rays.is_empty() && !self.cone {
            return Err(Error::UnboundedPolytope);
        }
        points.sort_by(|a, b| lex_cmp(a, b));
        points.dedup();
        rays.sort_by(|a, b| lex_cmp(a, b));
        let point_incidence = points.iter().map(|p| self.tight_at(p)).collect();
        let ray_incidence = rays
            .iter()
            .map(|r| {
                self.facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| dot(&f.normal, r).is_zero())
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok(Generators {
            points,
            point_incidence,
            rays,
            ray_incidence,
        })
    }

    /// Every vertex exactly once, in lexicographic order.
    pub fn enumerate_vertices(&self) -> Result<Vec<Vec<F>>> {
        let g = self.generators()?;
        if !g.rays.is_empty() {
            return Err(Error::UnboundedPolytope);
        }
        Ok(g.points.clone())
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> Result<usize> {
        let g = self.generators()?;
        let all = g.point_incidence.iter().fold(FacetSet::full(self.facets.len()), |a, &b| {
            a.intersection(b)
        });
        let all = g.ray_incidence.iter().fold(all, |a, &b| a.intersection(b));
        Ok(self.dim - self.rank_of(all))
    }

    pub fn is_full_dimensional(&self) -> Result<bool> {
        Ok(self.affine_dim()? == self.dim)
    }

    /// True when every inequality defines a distinct facet.
    pub fn is_irredundant(&self) -> Result<bool> {
        let g = self.generators()?;
        let full_dim = self.affine_dim()?;
        let mut seen = Vec::new();
        for i in 0..self.facets.len() {
            let on: Vec<usize> = (0..g.points.len())
                .filter(|&v| g.point_incidence[v].contains(i))
                .collect();
            let on_rays: Vec<usize> = (0..g.rays.len())
                .filter(|&r| g.ray_incidence[r].contains(i))
                .collect();
            if on.is_empty() {
                return Ok(false);
            }
            let sat = on
                .iter()
                .map(|&v| g.point_incidence[v])
                .chain(on_rays.iter().map(|&r| g.ray_incidence[r]))
                .fold(FacetSet::full(self.facets.len()), FacetSet::intersection);
            if self.dim - self.rank_of(sat) + 1 != full_dim || seen.contains(&(on.clone(), on_rays.clone())) {
                return Ok(false);
            }
            seen.push((on, on_rays));
        }
        Ok(true)
    }

    /// The polytope `k·P`.
    pub fn dilate(&self, k: &F) -> Self {
        let facets = self
            .facets
            .iter()
            .map(|f| Facet::new(f.normal.clone(), f.offset.clone() * k.clone()))
            .collect();
        Self {
            dim: self.dim,
            facets,
            cone: self.cone,
            generators: OnceLock::new(),
        }
    }

    /// Image under `x -> M^{-1} x`, given `basis = M` as column vectors.
    ///
    /// Used to move into lattice coordinates: `a·x <= b` becomes `(a M)·y <= b`.
    pub fn pull_back(&self, basis: &[Vec<F>]) -> Self {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let normal = basis.iter().map(|col| dot(&f.normal, col)).collect();
                Facet::new(normal, f.offset.clone())
            })
            .collect();
        Self {
            dim: self.dim,
            facets,
            cone: self.cone,
            generators: OnceLock::new(),
        }
    }
}

/// Vertex enumeration by brute force over all `d`-subsets of facets.
///
/// Exponential in the number of facets; kept as an independent oracle for
/// the double description code.
pub fn brute_force_vertices<F: Field>(p: &HPolytope<F>) -> Vec<Vec<F>> {
    let d = p.dim();
    let m = p.num_facets();
    let mut out: Vec<Vec<F>> = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    if d > m {
        return out;
    }
    loop {
        let a: Vec<Vec<F>> = idx.iter().map(|&i| p.facets()[i].normal.clone()).collect();
        let b: Vec<F> = idx.iter().map(|&i| p.facets()[i].offset.clone()).collect();
        if let Some(x) = crate::linalg::solve(&a, &b) {
            if p.contains(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
        // next combination
        let mut k = d;
        loop {
            if k == 0 {
                out.sort_by(|a, b| lex_cmp(a, b));
                return out;
            }
            k -= 1;
            if idx[k] < m - d + k {
                idx[k] += 1;
                for j in k + 1..d {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use num_rational::BigRational;

    pub(crate) fn boxed(lo: &[i64], hi: &[i64]) -> HPolytope<BigRational> {
        let d = lo.len();
        let mut facets = Vec::new();
        for i in 0..d {
            let mut n = vec![q(0); d];
            n[i] = q(1);
            facets.push(Facet::new(n.clone(), q(hi[i])));
            n[i] = q(-1);
            facets.push(Facet::new(n, q(-lo[i])));
        }
        HPolytope::new(d, facets).unwrap()
    }

    fn pts(v: &[&[i64]]) -> Vec<Vec<BigRational>> {
        v.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn unit_square_vertices() {
        let sq = boxed(&[0, 0], &[1, 1]);
        assert_eq!(
            sq.enumerate_vertices().unwrap(),
            pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]])
        );
        assert!(sq.is_irredundant().unwrap());
    }

    #[test]
    fn trapezoid_vertices() {
        // x >= 0, y - x <= 1, x <= 1, y >= 0
        let t = HPolytope::new(
            2,
            vec![
                Facet::new(vec![q(-1), q(0)], q(0)),
                Facet::new(vec![q(-1), q(1)], q(1)),
                Facet::new(vec![q(1), q(0)], q(1)),
                Facet::new(vec![q(0), q(-1)], q(0)),
            ],
        )
        .unwrap();
        assert_eq!(
            t.enumerate_vertices().unwrap(),
            pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 2]])
        );
    }

    #[test]
    fn unbounded_and_empty_are_reported() {
        let half = HPolytope::new(1, vec![Facet::new(vec![q(1)], q(0))]).unwrap();
        assert_eq!(half.enumerate_vertices(), Err(Error::UnboundedPolytope));
        let empty = HPolytope::new(
            1,
            vec![Facet::new(vec![q(1)], q(0)), Facet::new(vec![q(-1)], q(-1))],
        )
        .unwrap();
        assert_eq!(empty.enumerate_vertices(), Err(Error::EmptyPolytope));
        let strip = HPolytope::new(
            2,
            vec![Facet::new(vec![q(1), q(0)], q(1)), Facet::new(vec![q(-1), q(0)], q(0))],
        )
        .unwrap();
        assert_eq!(strip.enumerate_vertices(), Err(Error::UnboundedPolytope));
    }

    #[test]
    fn redundant_inequality_is_detected() {
        let mut facets = boxed(&[0, 0], &[1, 1]).facets().to_vec();
        facets.push(Facet::new(vec![q(1), q(1)], q(5)));
        let p = HPolytope::new(2, facets).unwrap();
        assert!(!p.is_irredundant().unwrap());
    }

    #[test]
    fn cone_generators() {
        let c = HPolytope::cone(2, vec![vec![q(-1), q(0)], vec![q(1), q(-1)]]).unwrap();
        let g = c.generators().unwrap();
        assert_eq!(g.points, pts(&[&[0, 0]]));
        assert_eq!(g.rays.len(), 2);
        assert_eq!(c.enumerate_vertices(), Err(Error::UnboundedPolytope));
    }

    #[test]
    fn brute_force_agrees_on_cube() {
        let c = boxed(&[0, -1, 2], &[3, 1, 5]);
        assert_eq!(brute_force_vertices(&c), c.enumerate_vertices().unwrap());
    }
}
