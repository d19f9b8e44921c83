use crate::error::{Error, Result};
use crate::linalg::{determinant, inverse, mat_vec, transpose};
use crate::scalar::{Field, RationalField};

/// A full-rank lattice in `R^d` given by a rational basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineLattice<F> {
    /// Basis vectors, one per entry.
    basis: Vec<Vec<F>>,
    /// Rows map a point to its coordinates in the basis.
    to_coords: Vec<Vec<F>>,
}

impl<F: RationalField> AffineLattice<F> {
    pub fn new(basis: Vec<Vec<F>>) -> Result<Self> {
        let d = basis.len();
        if let Some(v) = basis.iter().find(|v| v.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
        let columns = transpose(&basis);
        let to_coords = inverse(&columns).ok_or(Error::SingularLattice)?;
        Ok(Self { basis, to_coords })
    }

    pub fn standard(d: usize) -> Self {
        let basis = (0..d)
            .map(|i| (0..d).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        Self::new(basis).expect("identity is nonsingular")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::standard(self.dim())
    }

    /// Coordinates of `x` with respect to the basis.
    pub fn coordinates(&self, x: &[F]) -> Vec<F> {
        mat_vec(&self.to_coords, x)
    }

    pub fn contains(&self, x: &[F]) -> bool {
        self.coordinates(x).iter().all(RationalField::is_integral)
    }

    /// Volume of a fundamental domain with respect to the standard volume form.
    pub fn covolume(&self) -> F {
        determinant(&self.basis).abs()
    }

    /// `covol(self) / covol(other)`, which is the index `[other : self]` when `self ⊂ other`.
    pub fn index_over(&self, other: &Self) -> F {
        self.covolume() / other.covolume()
    }

    /// Basis vectors as the columns of a matrix, in the layout
    /// [`crate::polyhedron::HPolytope::pull_back`] expects.
    pub fn columns(&self) -> Vec<Vec<F>> {
        self.basis.clone()
    }
}

impl<F: Field> AffineLattice<F> {
    pub fn basis_vector(&self, i: usize) -> &[F] {
        &self.basis[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};
    use num_rational::BigRational;

    #[test]
    fn half_integer_lattice() {
        // Z^2 plus (1/2, 1/2).
        let l: AffineLattice<BigRational> =
            AffineLattice::new(vec![vec![q(1), q(0)], vec![qf(1, 2), qf(1, 2)]]).unwrap();
        assert!(l.contains(&[qf(1, 2), qf(1, 2)]));
        assert!(l.contains(&[q(3), q(-2)]));
        assert!(!l.contains(&[qf(1, 2), q(0)]));
        assert_eq!(l.covolume(), qf(1, 2));
        assert_eq!(AffineLattice::standard(2).index_over(&l), q(2));
    }

    #[test]
    fn singular_basis_is_rejected() {
        let r = AffineLattice::<BigRational>::new(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(r.unwrap_err(), Error::SingularLattice);
    }
}
