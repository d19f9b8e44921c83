use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest number of inequalities a polytope may carry.
pub const MAX_FACETS: usize = 63;

/// A set of facet indices, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetSet(pub(crate) u64);

impl FacetSet {
    pub const EMPTY: FacetSet = FacetSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Result<Self> {
        let mut s = FacetSet::EMPTY;
        for i in it {
            if i >= MAX_FACETS {
                return Err(Error::InvalidFacetIndex(i));
            }
            s.0 |= 1 << i;
        }
        Ok(s)
    }

    /// All indices below `n`.
    pub fn full(n: usize) -> Self {
        if n == 0 {
            FacetSet(0)
        } else {
            FacetSet(u64::MAX >> (64 - n))
        }
    }

    pub fn single(i: usize) -> Self {
        FacetSet(1 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(self, i: usize) -> Self {
        FacetSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        FacetSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        FacetSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        FacetSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for FacetSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = FacetSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Serialize for FacetSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FacetSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        FacetSet::from_indices(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = FacetSet::from_indices([0, 3, 5]).unwrap();
        let b = FacetSet::from_indices([3, 4]).unwrap();
        assert_eq!(a.union(b).to_vec(), vec![0, 3, 4, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![3]);
        assert!(FacetSet::single(3).is_subset(a));
        assert_eq!(a.len(), 3);
        assert_eq!(a.max_index(), Some(5));
        assert_eq!(FacetSet::full(4).to_vec(), vec![0, 1, 2, 3]);
        assert!(FacetSet::from_indices([70]).is_err());
    }
}
