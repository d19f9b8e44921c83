use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyhedron::{face_from_active_set, FacetSet, HPolytope};
use crate::scalar::fmt_rational;
use crate::Q;

/// Position `(block, index)` of a coordinate `x^i_j`, both 1-based.
pub type Coord = (usize, usize);

/// A tagged facet: `x^{lower} ≤ a·x^{upper}`, or `0 ≤ x^{upper}` when
/// `lower` is `(0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConeFacet {
    pub lower: Coord,
    pub upper: Coord,
    pub coeff: Q,
}

impl ConeFacet {
    /// `H(0,0;i,j)`.
    pub fn zero(i: usize, j: usize) -> Self {
        Self {
            lower: (0, 0),
            upper: (i, j),
            coeff: Q::one(),
        }
    }

    /// `H(i,j;i',j')` with coefficient `a`.
    pub fn pair(lower: Coord, upper: Coord, a: Q) -> Self {
        Self {
            lower,
            upper,
            coeff: a,
        }
    }

    pub fn is_zero_type(&self) -> bool {
        self.lower == (0, 0)
    }

    /// Ordering key `(i, j, i', j')` used for deterministic tie-breaking.
    pub fn tag(&self) -> (usize, usize, usize, usize) {
        (self.lower.0, self.lower.1, self.upper.0, self.upper.1)
    }
}

impl fmt::Display for ConeFacet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k, l) = self.tag();
        write!(f, "H({i},{j};{k},{l})")?;
        if !self.is_zero_type() && !self.coeff.is_one() {
            write!(f, "[a={}]", fmt_rational(&self.coeff))?;
        }
        Ok(())
    }
}

impl Serialize for ConeFacet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A polyhedral cone in `R^{d_1} ⊕ ⋯ ⊕ R^{d_r}` cut out by tagged facets.
#[derive(Clone, Debug)]
pub struct BlockCone {
    blocks: Vec<usize>,
    starts: Vec<usize>,
    facets: Vec<ConeFacet>,
    polytope: HPolytope<Q>,
}

impl BlockCone {
    pub fn new(blocks: Vec<usize>, facets: Vec<ConeFacet>) -> Result<Self> {
        let mut starts = Vec::with_capacity(blocks.len());
        let mut acc = 0;
        for &b in &blocks {
            starts.push(acc);
            acc += b;
        }
        let d = acc;
        let in_range = |(i, j): Coord| i >= 1 && i <= blocks.len() && j >= 1 && j <= blocks[i - 1];
        let mut normals = Vec::with_capacity(facets.len());
        for f in &facets {
            if !in_range(f.upper) || (!f.is_zero_type() && !in_range(f.lower)) {
                return Err(Error::InvalidCone(format!("{f} refers to a missing coordinate")));
            }
            if !f.is_zero_type() && (f.lower.0 == f.upper.0 || !f.coeff.is_positive()) {
                return Err(Error::InvalidCone(format!("{f} is not of an allowed shape")));
            }
            let mut n = vec![Q::zero(); d];
            let u = starts[f.upper.0 - 1] + f.upper.1 - 1;
            if f.is_zero_type() {
                n[u] = -Q::one();
            } else {
                n[starts[f.lower.0 - 1] + f.lower.1 - 1] = Q::one();
                n[u] = -f.coeff.clone();
            }
            normals.push(n);
        }
        let polytope = HPolytope::cone(d, normals)?;
        let cone = Self {
            blocks,
            starts,
            facets,
            polytope,
        };
        let bad = cone.ray_condition_violations();
        if !bad.is_empty() {
            return Err(Error::InvalidCone(format!("rays parallel to coordinate axes {bad:?}")));
        }
        Ok(cone)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn facets(&self) -> &[ConeFacet] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Flat index of `x^i_j`.
    pub fn coord(&self, (i, j): Coord) -> usize {
        self.starts[i - 1] + j - 1
    }

    pub fn polytope(&self) -> &HPolytope<Q> {
        &self.polytope
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets.len() == self.dim()
    }

    /// Coordinates `x^i_j` with `j ≠ 1` whose axis (either direction) lies in the cone.
    pub fn ray_condition_violations(&self) -> Vec<Coord> {
        let mut out = Vec::new();
        for (b, &size) in self.blocks.iter().enumerate() {
            for j in 2..=size {
                let k = self.coord((b + 1, j));
                for sign in [Q::one(), -Q::one()] {
                    let inside = self.polytope.facets().iter().all(|f| !(&f.normal[k] * &sign).is_positive());
                    if inside {
                        out.push((b + 1, j));
                        break;
                    }
                }
            }
        }
        out
    }

    /// Value of `x^p_q` on a point, with `x^0_0 = 0`.
    pub fn value(&self, x: &[Q], c: Coord) -> Q {
        if c == (0, 0) {
            Q::zero()
        } else {
            x[self.coord(c)].clone()
        }
    }

    /// Validated face for a chosen facet subset.
    pub fn face(&self, set: FacetSet) -> Result<ConeFace> {
        if let Some(i) = set.max_index() {
            if i >= self.facets.len() {
                return Err(Error::InvalidFacetIndex(i));
            }
        }
        let h = face_from_active_set(&self.polytope, set)?;
        if h.codim() != set.len() {
            return Err(Error::NonMinimalFaceSet(format!(
                "{} facets cut out a face of codimension {}",
                set.len(),
                h.codim()
            )));
        }
        let mut uppers: Vec<Coord> = set.iter().map(|k| self.facets[k].upper).collect();
        uppers.sort();
        if uppers.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NonMinimalFaceSet(format!(
                "two facets of type H(.,.;i,j) for the same (i,j) in {}",
                self.describe(set)
            )));
        }
        Ok(ConeFace {
            set,
            saturated: h.active(),
            dim: h.dim(),
        })
    }

    pub fn whole(&self) -> ConeFace {
        self.face(FacetSet::EMPTY).expect("the empty set cuts out the cone")
    }

    /// Every facet subset of size `codim` cutting out the face with the given saturated set.
    pub fn minimal_subsets(&self, saturated: FacetSet) -> Result<Vec<FacetSet>> {
        let h = face_from_active_set(&self.polytope, saturated)?;
        let target = h.active();
        let items = target.to_vec();
        let k = h.codim();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(k);
        fn go(
            cone: &BlockCone,
            items: &[usize],
            k: usize,
            start: usize,
            pick: &mut Vec<usize>,
            target: FacetSet,
            out: &mut Vec<FacetSet>,
        ) {
            if pick.len() == k {
                let s = FacetSet::from_indices(pick.iter().copied()).expect("small index set");
                if cone.face(s).is_ok_and(|f| f.saturated == target) {
                    out.push(s);
                }
                return;
            }
            for p in start..items.len() {
                pick.push(items[p]);
                go(cone, items, k, p + 1, pick, target, out);
                pick.pop();
            }
        }
        go(self, &items, k, 0, &mut pick, target, &mut out);
        Ok(out)
    }

    /// The apex with every minimal choice of facets.
    pub fn apex_faces(&self) -> Result<Vec<ConeFace>> {
        self.minimal_subsets(FacetSet::full(self.facets.len()))?
            .into_iter()
            .map(|s| self.face(s))
            .collect()
    }

    /// The apex of a simplicial cone.
    pub fn apex(&self) -> Result<ConeFace> {
        self.face(FacetSet::full(self.facets.len()))
    }

    pub fn describe(&self, set: FacetSet) -> String {
        let parts: Vec<String> = set.iter().map(|k| self.facets[k].to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Index of the facet with the given tag.
    pub fn find(&self, lower: Coord, upper: Coord) -> Option<usize> {
        self.facets.iter().position(|f| f.lower == lower && f.upper == upper)
    }
}

/// A face of a [`BlockCone`] together with the chosen minimal facet subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConeFace {
    set: FacetSet,
    saturated: FacetSet,
    dim: usize,
}

impl ConeFace {
    pub fn set(&self) -> FacetSet {
        self.set
    }

    pub fn saturated(&self) -> FacetSet {
        self.saturated
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.set.len()
    }
}

impl PartialOrd for ConeFace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ConeFace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.saturated, self.set).cmp(&(other.saturated, other.set))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    fn ddo_c2() -> BlockCone {
        BlockCone::new(
            vec![2, 2],
            vec![
                ConeFacet::zero(1, 1),
                ConeFacet::zero(2, 2),
                ConeFacet::pair((2, 2), (1, 2), qf(1, 2)),
                ConeFacet::pair((1, 2), (2, 1), q(2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn ddo_cone_faces() {
        let c = ddo_c2();
        assert!(c.is_simplicial());
        assert_eq!(c.apex().unwrap().dim(), 0);
        assert_eq!(c.whole().dim(), 4);
        assert_eq!(c.facets()[2].to_string(), "H(2,2;1,2)[a=1/2]");
        let f = c.face(FacetSet::from_indices([0, 3]).unwrap()).unwrap();
        assert_eq!(f.dim(), 2);
    }

    #[test]
    fn shape_and_ray_checks() {
        let bad = BlockCone::new(vec![2], vec![ConeFacet::pair((1, 1), (1, 2), q(1))]);
        assert!(matches!(bad, Err(Error::InvalidCone(_))));
        // x^1_2 is unconstrained: its axis lies in the cone.
        let free = BlockCone::new(vec![2], vec![ConeFacet::zero(1, 1)]);
        assert!(matches!(free, Err(Error::InvalidCone(_))));
    }

    #[test]
    fn duplicate_upper_tags_are_rejected() {
        // 0 ≤ x^1_1 and x^2_1 ≤ x^1_1 both have type H(.,.;1,1).
        let c = BlockCone::new(
            vec![1, 1],
            vec![ConeFacet::zero(1, 1), ConeFacet::pair((2, 1), (1, 1), q(1))],
        )
        .unwrap();
        assert!(matches!(c.apex(), Err(Error::NonMinimalFaceSet(_))));
    }
}
