//! Builders for the linear polytope families: type A Gelfand–Zetlin, the
//! symplectic and odd orthogonal GZ patterns, the DDO polytopes of ranks 2
//! and 3, the symplectic string cone, and a toric trapezoid.
//!
//! Coordinate orders:
//! * `GzA(n)`: `z^1_1 … z^1_{n-1}; z^2_1 …; …; z^{n-1}_1`.
//! * `Sgz(n)`, `Ogz(n)`: `x^1_1 … x^1_n; y^1_1 … y^1_{n-1}; x^2_1 …; …; x^n_1`.
//! * DDO and string cone: block-major `x^1_1 … x^1_{d_1}; x^2_1 …`.
//!
//! Every facet is listed as `normal · x ≤ offset(λ)` with the offset linear
//! in the family parameters.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{dot, mat_vec, solve};
use crate::mitosis::cone::{BlockCone, ConeFacet, Coord};
use crate::mitosis::pipe_dream::Cell;
use crate::polyhedron::{AffineLattice, Facet, HPolytope};
use crate::scalar::{q, qf};
use crate::weyl::{Labeling, RootKind, RootSystem};
use crate::{Lattice, Polytope, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    GzA(usize),
    Sgz(usize),
    Ogz(usize),
    DdoC2,
    DdoC3,
    StringC(usize),
    /// The trapezoid with vertices `(0,0), (1,0), (0,1), (1,2)` with its four
    /// facet offsets as parameters.
    Trapezoid,
}

impl FamilyKind {
    /// Parse a command line family name.
    pub fn parse(name: &str, n: Option<usize>) -> Result<Self> {
        let need = |n: Option<usize>| match n {
            Some(n) if n >= 2 => Ok(n),
            Some(n) => Err(Error::UnsupportedKind(format!("{name} needs n >= 2, got {n}"))),
            None => Err(Error::UnsupportedKind(format!("{name} needs --n"))),
        };
        Ok(match name {
            "gz-a" => Self::GzA(need(n)?),
            "sgz" => Self::Sgz(need(n)?),
            "ogz" => Self::Ogz(need(n)?),
            "string-c" => Self::StringC(need(n)?),
            "ddo-c2" => Self::DdoC2,
            "ddo-c3" => Self::DdoC3,
            "trapezoid" => Self::Trapezoid,
            other => return Err(Error::UnsupportedKind(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::GzA(_) => "gz-a",
            Self::Sgz(_) => "sgz",
            Self::Ogz(_) => "ogz",
            Self::DdoC2 => "ddo-c2",
            Self::DdoC3 => "ddo-c3",
            Self::StringC(_) => "string-c",
            Self::Trapezoid => "trapezoid",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GzA(n) | Self::Sgz(n) | Self::Ogz(n) | Self::StringC(n) => write!(f, "{}({n})", self.name()),
            _ => write!(f, "{}", self.name()),
        }
    }
}

/// The vertex cone of a family and how its facets sit in the polytope.
#[derive(Clone, Debug)]
pub struct VertexCone {
    pub cone: BlockCone,
    /// Polytope facet index for every cone facet.
    pub facet_map: Vec<usize>,
    /// Skew pipe dream cell for every cone facet, where one is defined.
    pub skew_cells: Option<Vec<Cell>>,
}

/// Order in which a reduced word is turned into mitosis operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OpOrder {
    /// As each family's statement is written.
    Verbatim,
    /// The opposite order of the word letters.
    Swapped,
}

/// Which block the letter `s_j` acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexMap {
    /// The index shift in each family's statement (`n-j`, `j`, or `n+1-j`).
    Statement,
    /// `s_j` acts on block `j`.
    Identity,
}

/// How a reduced word becomes a product of mitosis operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Convention {
    pub order: OpOrder,
    pub index: IndexMap,
}

impl Convention {
    pub const STATEMENT: Self = Self {
        order: OpOrder::Verbatim,
        index: IndexMap::Statement,
    };

    pub fn all() -> [Self; 4] {
        [
            Self::STATEMENT,
            Self {
                order: OpOrder::Swapped,
                index: IndexMap::Statement,
            },
            Self {
                order: OpOrder::Verbatim,
                index: IndexMap::Identity,
            },
            Self {
                order: OpOrder::Swapped,
                index: IndexMap::Identity,
            },
        ]
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.order {
            OpOrder::Verbatim => "verbatim-order",
            OpOrder::Swapped => "swapped-order",
        };
        let i = match self.index {
            IndexMap::Statement => "statement-index",
            IndexMap::Identity => "identity-index",
        };
        write!(f, "{o}/{i}")
    }
}

#[derive(Clone, Debug)]
pub struct PolytopeFamily {
    kind: FamilyKind,
    dim: usize,
    nparams: usize,
    coords: Vec<String>,
    normals: Vec<Vec<Q>>,
    /// Offset of each facet as a linear form in the parameters.
    offsets: Vec<Vec<Q>>,
    lattice: Lattice,
    /// `dim × nparams` matrix sending parameters to the distinguished vertex.
    vertex: Vec<Vec<Q>>,
    cone: Option<VertexCone>,
    roots: Option<RootSystem>,
    /// `ε`-weight as a linear image of the parameters.
    weight_map: Vec<Vec<Q>>,
    pattern: Vec<usize>,
    is_cone: bool,
    /// SGZ facets through the distinguished vertex, by skew pipe dream cell.
    sgz_cells: BTreeMap<Cell, usize>,
}

/// A specialized member of a family.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub polytope: Polytope,
    pub vertex: Vec<Q>,
    /// Set when the polytope is not full-dimensional.
    pub degenerate: bool,
}

/// A linear form in the coordinates and parameters.
#[derive(Clone, Default)]
struct Lin {
    x: Vec<(usize, Q)>,
    p: Vec<(usize, Q)>,
}

impl Lin {
    fn zero() -> Self {
        Self::default()
    }
    fn x(i: usize) -> Self {
        Self::xs(i, q(1))
    }
    fn xs(i: usize, c: Q) -> Self {
        Self {
            x: vec![(i, c)],
            p: vec![],
        }
    }
    fn p(i: usize) -> Self {
        Self {
            x: vec![],
            p: vec![(i, q(1))],
        }
    }
    fn plus(mut self, o: Lin) -> Self {
        self.x.extend(o.x);
        self.p.extend(o.p);
        self
    }
    fn minus(self, o: Lin) -> Self {
        let neg = |v: Vec<(usize, Q)>| v.into_iter().map(|(i, c)| (i, -c)).collect::<Vec<_>>();
        self.plus(Lin {
            x: neg(o.x),
            p: neg(o.p),
        })
    }
}

struct Builder {
    dim: usize,
    nparams: usize,
    normals: Vec<Vec<Q>>,
    offsets: Vec<Vec<Q>>,
}

impl Builder {
    fn new(dim: usize, nparams: usize) -> Self {
        Self {
            dim,
            nparams,
            normals: vec![],
            offsets: vec![],
        }
    }

    /// Record `lhs ≤ rhs` and return its facet index.
    fn le(&mut self, lhs: Lin, rhs: Lin) -> usize {
        let diff = lhs.minus(rhs);
        let mut n = vec![Q::zero(); self.dim];
        for (i, c) in diff.x {
            n[i] += c;
        }
        let mut o = vec![Q::zero(); self.nparams];
        for (i, c) in diff.p {
            o[i] -= c;
        }
        self.normals.push(n);
        self.offsets.push(o);
        self.normals.len() - 1
    }
}

fn identity(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect()
}

/// Polytope facet matching each cone facet: same direction, zero offset.
fn match_facets(cone: &BlockCone, normals: &[Vec<Q>], offsets: &[Vec<Q>]) -> Result<Vec<usize>> {
    cone.polytope()
        .facets()
        .iter()
        .map(|cf| {
            (0..normals.len())
                .find(|&k| {
                    offsets[k].iter().all(Zero::is_zero) && {
                        let a = dot(&normals[k], &normals[k]);
                        let b = dot(&cf.normal, &cf.normal);
                        let ab = dot(&normals[k], &cf.normal);
                        ab.is_positive() && &ab * &ab == a * b
                    }
                })
                .ok_or_else(|| Error::InvalidCone("cone facet without a polytope facet".into()))
        })
        .collect()
}

/// `(1; 2,1; 3,2,1; …; n-1,…,1)`.
pub fn staircase_word(n: usize) -> Vec<usize> {
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

/// `(n, …, 2, 1, 2, …, n)(n-1, …, 1, …, n-1) ⋯ (2,1,2)(1)`.
pub fn string_word(n: usize) -> Vec<usize> {
    (1..=n)
        .rev()
        .flat_map(|k| (1..=k).rev().chain(2..=k))
        .collect()
}

fn gz_a(n: usize) -> Result<PolytopeFamily> {
    let rows: Vec<usize> = (1..n).map(|i| n - i).collect();
    let d: usize = rows.iter().sum();
    let idx = |i: usize, j: usize| rows[..i - 1].iter().sum::<usize>() + j - 1;
    // z^0_j is the parameter λ_j
    let above = |i: usize, j: usize| if i == 1 { Lin::p(j - 1) } else { Lin::x(idx(i - 1, j)) };
    let mut b = Builder::new(d, n);
    let mut coords = Vec::new();
    let mut lower = BTreeMap::new();
    for i in 1..n {
        for j in 1..=n - i {
            coords.push(format!("z^{i}_{j}"));
            b.le(Lin::x(idx(i, j)), above(i, j));
            lower.insert((i, j), b.le(above(i, j + 1), Lin::x(idx(i, j))));
        }
    }
    let mut vertex = vec![vec![q(0); n]; d];
    for i in 1..n {
        for j in 1..=n - i {
            vertex[idx(i, j)][i + j - 1] = q(1);
        }
    }
    let facets: Vec<ConeFacet> = (1..n)
        .flat_map(|i| (1..=n - i).map(move |j| (i, j)))
        .map(|(i, j)| {
            if i == 1 {
                ConeFacet::zero(1, j)
            } else {
                ConeFacet::pair((i - 1, j + 1), (i, j), q(1))
            }
        })
        .collect();
    let facet_map = (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).map(|c| lower[&c]).collect();
    let cone = BlockCone::new(rows, facets)?;
    Ok(PolytopeFamily {
        kind: FamilyKind::GzA(n),
        dim: d,
        nparams: n,
        coords,
        normals: b.normals,
        offsets: b.offsets,
        lattice: AffineLattice::standard(d),
        vertex,
        cone: Some(VertexCone {
            cone,
            facet_map,
            skew_cells: None,
        }),
        roots: Some(RootSystem::build(RootKind::A, n, Labeling::Reversed)?),
        weight_map: identity(n),
        pattern: staircase_word(n),
        is_cone: false,
        sgz_cells: BTreeMap::new(),
    })
}

/// Rows of the symplectic pattern: `(is_y, k, len)`.
fn gz_c_rows(n: usize) -> Vec<(bool, usize, usize)> {
    let mut rows = Vec::new();
    for k in 1..=n {
        rows.push((false, k, n - k + 1));
        if k < n {
            rows.push((true, k, n - k));
        }
    }
    rows
}

fn gz_c(n: usize, odd: bool) -> Result<PolytopeFamily> {
    let rows = gz_c_rows(n);
    let d = n * n;
    let mut start = BTreeMap::new();
    let mut acc = 0;
    for &(is_y, k, len) in &rows {
        start.insert((is_y, k), acc);
        acc += len;
    }
    let xi = |k: usize, j: usize| start[&(false, k)] + j - 1;
    let yi = |k: usize, j: usize| start[&(true, k)] + j - 1;
    // y^0_j = λ_j, with λ_{n+1} = 0 and y^k_{n-k+1} = 0
    let y_or_zero = |k: usize, j: usize| {
        if k == 0 {
            if j <= n {
                Lin::p(j - 1)
            } else {
                Lin::zero()
            }
        } else if j <= n - k {
            Lin::x(yi(k, j))
        } else {
            Lin::zero()
        }
    };
    let mut b = Builder::new(d, n);
    let mut coords = vec![String::new(); d];
    let mut sgz_cells = BTreeMap::new();
    for &(is_y, k, len) in &rows {
        for j in 1..=len {
            if is_y {
                coords[yi(k, j)] = format!("y^{k}_{j}");
                b.le(Lin::x(yi(k, j)), Lin::x(xi(k, j)));
                let f = b.le(Lin::x(xi(k, j + 1)), Lin::x(yi(k, j)));
                sgz_cells.insert((2 * n - k - j + 1, n - k + 1), f);
            } else {
                coords[xi(k, j)] = format!("x^{k}_{j}");
                let f = b.le(Lin::x(xi(k, j)), y_or_zero(k - 1, j));
                sgz_cells.insert((k + j - 1, n - k + 1), f);
                b.le(y_or_zero(k - 1, j + 1), Lin::x(xi(k, j)));
            }
        }
    }
    let mut vertex = vec![vec![q(0); n]; d];
    for &(is_y, k, len) in &rows {
        for j in 1..=len {
            if is_y {
                vertex[yi(k, j)][k + j - 1] = q(1);
            } else {
                vertex[xi(k, j)][k + j - 2] = q(1);
            }
        }
    }
    let lattice = if odd {
        let mut basis = identity(d);
        for k in 1..=n {
            let i = xi(k, n - k + 1);
            basis[i][i] = qf(1, 2);
        }
        AffineLattice::new(basis)?
    } else {
        AffineLattice::standard(d)
    };
    let roots = if odd {
        RootSystem::b(n, Labeling::Reversed)?
    } else {
        RootSystem::c(n, Labeling::Reversed)?
    };
    Ok(PolytopeFamily {
        kind: if odd { FamilyKind::Ogz(n) } else { FamilyKind::Sgz(n) },
        dim: d,
        nparams: n,
        coords,
        normals: b.normals,
        offsets: b.offsets,
        lattice,
        vertex,
        cone: None,
        roots: Some(roots),
        weight_map: identity(n),
        pattern: string_word(n),
        is_cone: false,
        sgz_cells,
    })
}

fn block_index(blocks: &[usize], (i, j): Coord) -> usize {
    blocks[..i - 1].iter().sum::<usize>() + j - 1
}

fn block_names(blocks: &[usize]) -> Vec<String> {
    blocks
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| (1..=s).map(move |j| format!("x^{}_{j}", i + 1)))
        .collect()
}

fn ddo_c2() -> Result<PolytopeFamily> {
    let blocks = vec![2, 2];
    let x = |i, j| Lin::x(block_index(&blocks, (i, j)));
    let xs = |i, j, c: Q| Lin::xs(block_index(&blocks, (i, j)), c);
    let mut b = Builder::new(4, 2);
    b.le(Lin::zero(), x(1, 1));
    b.le(x(1, 1), Lin::p(0));
    b.le(x(2, 1), x(1, 1).plus(Lin::p(1)));
    b.le(x(1, 2), xs(2, 1, q(2)));
    b.le(x(1, 2), x(2, 1).plus(Lin::p(1)));
    b.le(Lin::zero(), x(2, 2));
    b.le(x(2, 2), Lin::p(1));
    b.le(x(2, 2), xs(1, 2, qf(1, 2)));
    let cone = BlockCone::new(
        blocks.clone(),
        vec![
            ConeFacet::zero(1, 1),
            ConeFacet::zero(2, 2),
            ConeFacet::pair((2, 2), (1, 2), qf(1, 2)),
            ConeFacet::pair((1, 2), (2, 1), q(2)),
        ],
    )?;
    let facet_map = match_facets(&cone, &b.normals, &b.offsets)?;
    let skew_cells = vec![(2, 1), (1, 2), (2, 2), (3, 2)];
    Ok(PolytopeFamily {
        kind: FamilyKind::DdoC2,
        dim: 4,
        nparams: 2,
        coords: block_names(&blocks),
        normals: b.normals,
        offsets: b.offsets,
        lattice: AffineLattice::standard(4),
        vertex: vec![vec![q(0); 2]; 4],
        cone: Some(VertexCone {
            cone,
            facet_map,
            skew_cells: Some(skew_cells),
        }),
        roots: Some(RootSystem::c(2, Labeling::Standard)?),
        weight_map: ddo_c2_weight_map(),
        pattern: vec![1, 2, 1, 2],
        is_cone: false,
        sgz_cells: BTreeMap::new(),
    })
}

/// The DDO parameters are coordinates in the fundamental weights
/// `ω_1 = ε_1`, `ω_2 = ε_1 + ε_2`.
fn ddo_c2_weight_map() -> Vec<Vec<Q>> {
    vec![vec![q(1), q(1)], vec![q(0), q(1)]]
}

fn ddo_c3() -> Result<PolytopeFamily> {
    let blocks = vec![3, 3, 3];
    let x = |i, j| Lin::x(block_index(&blocks, (i, j)));
    let xs = |i, j, c: Q| Lin::xs(block_index(&blocks, (i, j)), c);
    let l = Lin::p;
    let mut b = Builder::new(9, 3);
    b.le(Lin::zero(), x(1, 1));
    b.le(x(1, 1), l(0));
    b.le(x(2, 1), l(1).plus(x(1, 1)));
    b.le(x(3, 1), l(2).plus(x(2, 1)));
    b.le(Lin::zero(), x(1, 2));
    b.le(x(1, 2), x(2, 1));
    b.le(x(1, 2), l(1));
    b.le(x(2, 2), l(2).plus(x(1, 2)).plus(x(3, 1)));
    b.le(x(2, 2), xs(3, 1, q(2)));
    b.le(x(3, 2), x(1, 2).plus(l(2)));
    b.le(x(3, 2), xs(2, 2, qf(1, 2)));
    b.le(x(1, 3), x(2, 2));
    b.le(x(1, 3), x(3, 1).plus(l(2)));
    b.le(x(1, 3), l(2).plus(x(2, 2)).minus(x(3, 2)));
    b.le(x(2, 3), x(1, 3));
    b.le(x(2, 3), x(3, 2).plus(l(2)));
    b.le(x(2, 3), xs(3, 2, q(2)));
    b.le(Lin::zero(), x(3, 3));
    b.le(x(3, 3), xs(2, 3, qf(1, 2)));
    b.le(x(3, 3), l(2));
    let half = qf(1, 2);
    let cone = BlockCone::new(
        blocks.clone(),
        vec![
            ConeFacet::zero(1, 1),
            ConeFacet::zero(1, 2),
            ConeFacet::pair((1, 2), (2, 1), q(1)),
            ConeFacet::zero(3, 3),
            ConeFacet::pair((3, 3), (2, 3), half.clone()),
            ConeFacet::pair((2, 3), (1, 3), q(1)),
            ConeFacet::pair((1, 3), (2, 2), q(1)),
            ConeFacet::pair((2, 2), (3, 1), q(2)),
            ConeFacet::pair((2, 3), (3, 2), q(2)),
            ConeFacet::pair((3, 2), (2, 2), half),
        ],
    )?;
    let facet_map = match_facets(&cone, &b.normals, &b.offsets)?;
    Ok(PolytopeFamily {
        kind: FamilyKind::DdoC3,
        dim: 9,
        nparams: 3,
        coords: block_names(&blocks),
        normals: b.normals,
        offsets: b.offsets,
        lattice: AffineLattice::standard(9),
        vertex: vec![vec![q(0); 3]; 9],
        cone: Some(VertexCone {
            cone,
            facet_map,
            skew_cells: None,
        }),
        roots: Some(RootSystem::c(3, Labeling::Standard)?),
        weight_map: identity(3),
        pattern: [3, 2, 1].repeat(3),
        is_cone: false,
        sgz_cells: BTreeMap::new(),
    })
}

/// The symplectic string cone with its skew pipe dream cells.
pub fn string_cone(n: usize) -> Result<(BlockCone, Vec<Cell>)> {
    let blocks: Vec<usize> = (1..=n).map(|j| if j == 1 { n } else { 2 * (n - j + 1) }).collect();
    let mut facets = Vec::new();
    let mut cells = Vec::new();
    for i in 1..=n {
        // 0 ≤ x^i_2 ≤ x^{i-1}_4 ≤ … ≤ x^1_i ≤ … ≤ x^{i-1}_3 ≤ x^i_1
        let mut chain: Vec<Coord> = (0..i.saturating_sub(1)).map(|m| (i - m, 2 * m + 2)).collect();
        chain.push((1, i));
        chain.extend((0..i.saturating_sub(1)).rev().map(|m| (i - m, 2 * m + 1)));
        facets.push(ConeFacet::zero(chain[0].0, chain[0].1));
        for w in chain.windows(2) {
            facets.push(ConeFacet::pair(w[0], w[1], q(1)));
        }
        for t in 0..chain.len() {
            cells.push((n - i + 1 + t, i));
        }
    }
    Ok((BlockCone::new(blocks, facets)?, cells))
}

fn string_c(n: usize) -> Result<PolytopeFamily> {
    let (cone, cells) = string_cone(n)?;
    let d = cone.dim();
    let normals: Vec<Vec<Q>> = cone.polytope().facets().iter().map(|f| f.normal.clone()).collect();
    let offsets = vec![vec![q(0); n]; normals.len()];
    let facet_map = (0..normals.len()).collect();
    Ok(PolytopeFamily {
        kind: FamilyKind::StringC(n),
        dim: d,
        nparams: n,
        coords: block_names(cone.blocks()),
        normals,
        offsets,
        lattice: AffineLattice::standard(d),
        vertex: vec![vec![q(0); n]; d],
        cone: Some(VertexCone {
            cone,
            facet_map,
            skew_cells: Some(cells),
        }),
        roots: Some(RootSystem::c(n, Labeling::Reversed)?),
        weight_map: identity(n),
        pattern: string_word(n),
        is_cone: true,
        sgz_cells: BTreeMap::new(),
    })
}

fn trapezoid() -> PolytopeFamily {
    let mut b = Builder::new(2, 4);
    let (x, y) = (|| Lin::x(0), || Lin::x(1));
    b.le(Lin::zero().minus(x()), Lin::p(0));
    b.le(y().minus(x()), Lin::p(1));
    b.le(x(), Lin::p(2));
    b.le(Lin::zero().minus(y()), Lin::p(3));
    PolytopeFamily {
        kind: FamilyKind::Trapezoid,
        dim: 2,
        nparams: 4,
        coords: vec!["x".into(), "y".into()],
        normals: b.normals,
        offsets: b.offsets,
        lattice: AffineLattice::standard(2),
        vertex: vec![vec![q(-1), q(0), q(0), q(0)], vec![q(0), q(0), q(0), q(-1)]],
        cone: None,
        roots: None,
        weight_map: vec![],
        pattern: vec![],
        is_cone: false,
        sgz_cells: BTreeMap::new(),
    }
}

pub fn build_family(kind: FamilyKind) -> Result<PolytopeFamily> {
    match kind {
        FamilyKind::GzA(n) if n >= 2 => gz_a(n),
        FamilyKind::Sgz(n) if n >= 2 => gz_c(n, false),
        FamilyKind::Ogz(n) if n >= 2 => gz_c(n, true),
        FamilyKind::StringC(n) if n >= 2 => string_c(n),
        FamilyKind::DdoC2 => ddo_c2(),
        FamilyKind::DdoC3 => ddo_c3(),
        FamilyKind::Trapezoid => Ok(trapezoid()),
        other => Err(Error::UnsupportedKind(other.to_string())),
    }
}

impl PolytopeFamily {
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn coordinate_names(&self) -> &[String] {
        &self.coords
    }

    pub fn num_facets(&self) -> usize {
        self.normals.len()
    }

    pub fn normals(&self) -> &[Vec<Q>] {
        &self.normals
    }

    pub fn offset_forms(&self) -> &[Vec<Q>] {
        &self.offsets
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn roots(&self) -> Result<&RootSystem> {
        self.roots
            .as_ref()
            .ok_or_else(|| Error::UnsupportedKind(format!("{} has no Weyl group", self.kind)))
    }

    pub fn pattern(&self) -> &[usize] {
        &self.pattern
    }

    pub fn is_cone(&self) -> bool {
        self.is_cone
    }

    pub fn vertex_cone(&self) -> Result<&VertexCone> {
        self.cone.as_ref().ok_or(Error::NoConeStructure)
    }

    /// SGZ facet through the distinguished vertex named by a skew pipe dream cell.
    pub fn sgz_facet_of_cell(&self, cell: Cell) -> Option<usize> {
        self.sgz_cells.get(&cell).copied()
    }

    /// Family parameters for the `ε`-weight `λ`.
    pub fn params_from_weight(&self, lambda: &[Q]) -> Result<Vec<Q>> {
        if self.weight_map.is_empty() {
            if lambda.len() != self.nparams {
                return Err(Error::DimensionMismatch {
                    expected: self.nparams,
                    got: lambda.len(),
                });
            }
            return Ok(lambda.to_vec());
        }
        if lambda.len() != self.weight_map.len() {
            return Err(Error::DimensionMismatch {
                expected: self.weight_map.len(),
                got: lambda.len(),
            });
        }
        solve(&self.weight_map, lambda).ok_or(Error::DimensionMismatch {
            expected: self.nparams,
            got: lambda.len(),
        })
    }

    /// The `ε`-weight for the given parameters.
    pub fn weight_from_params(&self, params: &[Q]) -> Vec<Q> {
        if self.weight_map.is_empty() {
            params.to_vec()
        } else {
            mat_vec(&self.weight_map, params)
        }
    }

    /// Offsets at the given parameters.
    pub fn offsets_at(&self, params: &[Q]) -> Vec<Q> {
        self.offsets.iter().map(|o| dot(o, params)).collect()
    }

    /// The member for the given parameters.
    pub fn specialize_params(&self, params: &[Q]) -> Result<Specialization> {
        if params.len() != self.nparams {
            return Err(Error::DimensionMismatch {
                expected: self.nparams,
                got: params.len(),
            });
        }
        let polytope = if self.is_cone {
            HPolytope::cone(self.dim, self.normals.clone())?
        } else {
            let facets = self
                .normals
                .iter()
                .zip(self.offsets_at(params))
                .map(|(n, o)| Facet::new(n.clone(), o))
                .collect();
            HPolytope::new(self.dim, facets)?
        };
        let vertex = mat_vec(&self.vertex, params);
        if !polytope.contains(&vertex) {
            return Err(Error::EmptyFace);
        }
        let degenerate = !self.is_cone && !polytope.is_full_dimensional()?;
        Ok(Specialization {
            polytope,
            vertex,
            degenerate,
        })
    }

    /// The member for an integral `ε`-weight, after a dominance check.
    pub fn specialize(&self, lambda: &[i64]) -> Result<Specialization> {
        if let Some(rs) = &self.roots {
            rs.check_dominant(lambda)?;
        }
        let lam: Vec<Q> = lambda.iter().map(|&x| q(x)).collect();
        self.specialize_params(&self.params_from_weight(&lam)?)
    }

    /// Mitosis operations for a reduced word, leftmost operation first.
    ///
    /// GZ_A uses `M_{n-j_1} ⋯ M_{n-j_ℓ}`, DDO_C2 uses `M_{j_1} ⋯ M_{j_ℓ}`,
    /// and the symplectic families use `M_{n+1-j_ℓ} ⋯ M_{n+1-j_1}`.
    pub fn mitosis_ops(&self, word: &[usize], conv: Convention) -> Result<Vec<usize>> {
        let (map, reversed): (Box<dyn Fn(usize) -> usize>, bool) = match self.kind {
            FamilyKind::GzA(n) => (Box::new(move |j| n - j), false),
            FamilyKind::DdoC2 => (Box::new(|j| j), false),
            FamilyKind::Sgz(n) | FamilyKind::Ogz(n) | FamilyKind::StringC(n) => (Box::new(move |j| n + 1 - j), true),
            other => return Err(Error::UnsupportedKind(format!("no mitosis statement for {other}"))),
        };
        let mut ops: Vec<usize> = match conv.index {
            IndexMap::Statement => word.iter().map(|&j| map(j)).collect(),
            IndexMap::Identity => word.to_vec(),
        };
        if reversed != (conv.order == OpOrder::Swapped) {
            ops.reverse();
        }
        Ok(ops)
    }

    /// JSON description including cone facet tags.
    pub fn to_json(&self) -> serde_json::Value {
        use crate::scalar::fmt_rational;
        let fmtv = |v: &[Q]| v.iter().map(fmt_rational).collect::<Vec<_>>();
        let facets: Vec<_> = self
            .normals
            .iter()
            .zip(&self.offsets)
            .map(|(n, o)| serde_json::json!({"normal": fmtv(n), "offset": fmtv(o)}))
            .collect();
        let cone = self.cone.as_ref().map(|vc| {
            serde_json::json!({
                "blocks": vc.cone.blocks(),
                "facets": vc.cone.facets().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "polytope_facets": vc.facet_map,
            })
        });
        serde_json::json!({
            "family": self.kind.to_string(),
            "dim": self.dim,
            "params": self.nparams,
            "coordinates": self.coords,
            "facets": facets,
            "lattice": self.lattice.basis().iter().map(|v| fmtv(v)).collect::<Vec<_>>(),
            "vertex": self.vertex.iter().map(|v| fmtv(v)).collect::<Vec<_>>(),
            "cone": cone,
        })
    }
}

/// Whether every parameter direction is integral on the lattice side; used
/// to sanity check that a specialization is a lattice polytope.
pub fn is_lattice_polytope(p: &Polytope, lattice: &Lattice) -> Result<bool> {
    Ok(p.enumerate_vertices()?.iter().all(|v| lattice.contains(v)))
}

#[allow(dead_code)]
fn unit_q() -> Q {
    Q::one()
}
