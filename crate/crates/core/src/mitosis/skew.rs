//! Skew pipe dreams: `+` marks in the cells `(r, c)` with `n - c < r < n + c`
//! of a `(2n-1) × n` table.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::PolytopeFamily;
use crate::mitosis::cone::{BlockCone, ConeFace};
use crate::mitosis::pipe_dream::Cell;
use crate::polyhedron::{face_from_active_set, FaceHandle, FacetSet};
use crate::{Polytope, Q};

pub fn is_skew_cell(n: usize, (r, c): Cell) -> bool {
    c >= 1 && c <= n && r + c > n && r < n + c
}

/// Every allowed cell, row by row.
pub fn skew_cells(n: usize) -> Vec<Cell> {
    (1..2 * n)
        .flat_map(|r| (1..=n).map(move |c| (r, c)))
        .filter(|&x| is_skew_cell(n, x))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewPipeDream {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl SkewPipeDream {
    pub fn new<I: IntoIterator<Item = Cell>>(n: usize, cells: I) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if let Some(&(row, col)) = cells.iter().find(|&&x| !is_skew_cell(n, x)) {
            return Err(Error::InvalidCell { row, col });
        }
        Ok(Self { n, cells })
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            cells: skew_cells(n).into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for r in 1..2 * self.n {
            for c in 1..=self.n {
                s.push(if !is_skew_cell(self.n, (r, c)) {
                    ' '
                } else if self.cells.contains(&(r, c)) {
                    '+'
                } else {
                    '.'
                });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for SkewPipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A bijection between the facets of a cone and the skew cells.
#[derive(Clone, Debug)]
pub struct SkewCodec {
    n: usize,
    cells: Vec<Cell>,
}

impl SkewCodec {
    pub fn new(n: usize, cone: &BlockCone, cells: Vec<Cell>) -> Result<Self> {
        if cells.len() != cone.num_facets() || cells.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: cone.num_facets(),
                got: cells.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for &(row, col) in &cells {
            if !is_skew_cell(n, (row, col)) || !seen.insert((row, col)) {
                return Err(Error::InvalidCell { row, col });
            }
        }
        Ok(Self { n, cells })
    }

    /// The codec carried by a family.
    pub fn for_family(family: &PolytopeFamily) -> Result<Self> {
        let vc = family.vertex_cone()?;
        let cells = vc.skew_cells.clone().ok_or(Error::NoConeStructure)?;
        let n = (cells.len() as f64).sqrt().round() as usize;
        Self::new(n, &vc.cone, cells)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cell_of(&self, facet: usize) -> Cell {
        self.cells[facet]
    }

    pub fn encode(&self, face: &ConeFace) -> SkewPipeDream {
        SkewPipeDream {
            n: self.n,
            cells: face.set().iter().map(|k| self.cells[k]).collect(),
        }
    }

    pub fn decode(&self, cone: &BlockCone, d: &SkewPipeDream) -> Result<ConeFace> {
        let mut set = FacetSet::EMPTY;
        for &(row, col) in d.cells() {
            let k = self
                .cells
                .iter()
                .position(|&x| x == (row, col))
                .ok_or(Error::InvalidCell { row, col })?;
            set.insert(k);
        }
        cone.face(set)
    }
}

/// The SGZ facets named by the cells of `d`.
pub fn sgz_facets_of(family: &PolytopeFamily, d: &SkewPipeDream) -> Result<FacetSet> {
    let mut set = FacetSet::EMPTY;
    for &(row, col) in d.cells() {
        let k = family
            .sgz_facet_of_cell((row, col))
            .ok_or(Error::InvalidCell { row, col })?;
        set.insert(k);
    }
    Ok(set)
}

/// The face of a specialized SGZ polytope cut out by the facets named by `d`.
pub fn sgz_face_of<'p>(family: &PolytopeFamily, polytope: &'p Polytope, d: &SkewPipeDream) -> Result<FaceHandle<'p, Q>> {
    face_from_active_set(polytope, sgz_facets_of(family, d)?)
}
