//! Pipe dreams for the type A vertex cone and Knutson–Miller mitosis.
//!
//! A face of the cone is drawn in an `n × n` table with `+` in cell
//! `(i, i+j)` when the face lies on the facet of type `H(·,·;i,j)`. The
//! Knutson–Miller rule is stated for tables reflected in a vertical line, so
//! [`km_mitosis`] converts, operates, and converts back.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mitosis::cone::{BlockCone, ConeFace};
use crate::polyhedron::FacetSet;

pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PipeDream {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl PipeDream {
    pub fn new<I: IntoIterator<Item = Cell>>(n: usize, cells: I) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if let Some(&(row, col)) = cells.iter().find(|&&(r, c)| !(1 <= r && r < c && c <= n)) {
            return Err(Error::InvalidCell { row, col });
        }
        Ok(Self { n, cells })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            cells: BTreeSet::new(),
        }
    }

    /// Every cell above the diagonal.
    pub fn full(n: usize) -> Self {
        Self {
            n,
            cells: (1..=n).flat_map(|r| (r + 1..=n).map(move |c| (r, c))).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Encode a face of the type A vertex cone.
    pub fn from_face(cone: &BlockCone, face: &ConeFace) -> Result<Self> {
        let n = check_staircase(cone)?;
        let cells = face.saturated().iter().map(|k| {
            let (i, j) = cone.facets()[k].upper;
            (i, i + j)
        });
        Self::new(n, cells)
    }

    /// Decode into a face of the type A vertex cone.
    pub fn to_face(&self, cone: &BlockCone) -> Result<ConeFace> {
        let n = check_staircase(cone)?;
        if n != self.n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.n,
            });
        }
        let mut set = FacetSet::EMPTY;
        for &(r, c) in &self.cells {
            let k = (0..cone.num_facets())
                .find(|&k| cone.facets()[k].upper == (r, c - r))
                .ok_or(Error::InvalidCell { row: r, col: c })?;
            set.insert(k);
        }
        cone.face(set)
    }

    /// Render as `+`/`.` rows; cells on or below the diagonal are blank.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for r in 1..=self.n {
            for c in 1..=self.n {
                s.push(if c <= r {
                    ' '
                } else if self.contains((r, c)) {
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

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `n` for a cone with blocks `(n-1, n-2, …, 1)`.
fn check_staircase(cone: &BlockCone) -> Result<usize> {
    let r = cone.num_blocks();
    let n = r + 1;
    let ok = cone.blocks().iter().enumerate().all(|(k, &b)| b == n - 1 - k)
        && cone.facets().len() == n * (n - 1) / 2;
    if ok {
        Ok(n)
    } else {
        Err(Error::InvalidCone("not a type A vertex cone".into()))
    }
}

/// Knutson–Miller `mitosis_i` on the reflected table.
///
/// In reflected coordinates a `+` sits in box `(r, n+1-c)`. Let `start` be
/// the first empty column of row `i`; `J` collects the columns `p < start`
/// whose box in row `i+1` is empty. Offspring `P_p` deletes `(i, p)` and
/// moves every `(i, p')` with `p' ∈ J`, `p' < p` down one row.
pub fn km_mitosis(d: &PipeDream, i: usize) -> Vec<PipeDream> {
    let n = d.n;
    let reflect = |(r, c): Cell| (r, n + 1 - c);
    let boxes: BTreeSet<Cell> = d.cells.iter().map(|&x| reflect(x)).collect();
    let mut start = 1;
    while boxes.contains(&(i, start)) {
        start += 1;
    }
    let js: Vec<usize> = (1..start).filter(|&p| !boxes.contains(&(i + 1, p))).collect();
    let mut out = Vec::new();
    for &p in &js {
        let mut b = boxes.clone();
        b.remove(&(i, p));
        for &q in js.iter().filter(|&&q| q < p) {
            b.remove(&(i, q));
            b.insert((i + 1, q));
        }
        out.push(PipeDream {
            n,
            cells: b.into_iter().map(reflect).collect(),
        });
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(cells: &[Cell]) -> PipeDream {
        PipeDream::new(3, cells.iter().copied()).unwrap()
    }

    #[test]
    fn displayed_chains_by_km_rule() {
        let top = PipeDream::full(3);
        assert_eq!(km_mitosis(&top, 1), vec![pd(&[(1, 3), (2, 3)])]);
        assert_eq!(km_mitosis(&pd(&[(1, 3), (2, 3)]), 2), vec![pd(&[(1, 3)])]);
        assert_eq!(km_mitosis(&pd(&[(1, 3)]), 1), vec![pd(&[])]);
        assert_eq!(km_mitosis(&top, 2), vec![pd(&[(1, 2), (1, 3)])]);
        let mut two = km_mitosis(&pd(&[(1, 2), (1, 3)]), 1);
        two.sort();
        assert_eq!(two, vec![pd(&[(1, 2)]), pd(&[(2, 3)])]);
    }

    #[test]
    fn invalid_cells() {
        assert_eq!(PipeDream::new(3, [(2, 2)]).unwrap_err(), Error::InvalidCell { row: 2, col: 2 });
        assert_eq!(PipeDream::new(3, [(1, 4)]).unwrap_err(), Error::InvalidCell { row: 1, col: 4 });
    }

    #[test]
    fn render() {
        assert_eq!(pd(&[(1, 3)]).render(), " .+\n  .\n   \n");
        assert_eq!(pd(&[(1, 3), (2, 3)]).to_string(), "{(1,3),(2,3)}");
    }
}
