//! Volume polynomials of faces that are stable as `λ` varies, by exact
//! interpolation over strictly dominant integral weights.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::PolytopeFamily;
use crate::linalg::EchelonBasis;
use crate::poly::{interpolate_homogeneous, monomials_of_degree, Poly};
use crate::polyhedron::{face_from_active_set, FacetSet, VolumeCalculator};
use crate::scalar::q;
use crate::Q;

/// Number of extra samples kept out of the rank selection and used only as checks.
pub const HELD_OUT: usize = 3;

/// Environment variable capping the worker threads used for grid evaluations.
pub const THREADS_VAR: &str = "MITOSIS_KIT_THREADS";

/// Run `f` on a pool sized by `MITOSIS_KIT_THREADS`, or rayon's default.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_VAR).ok().and_then(|s| s.parse::<usize>().ok());
    match threads {
        Some(t) if t > 0 => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

/// Weights `λ_n = g_n`, `λ_i = λ_{i+1} + g_i` for gap vectors `g ∈ {1..max_gap}^n`,
/// ordered by total gap and then lexicographically.
pub fn weight_grid(n: usize, max_gap: i64) -> Vec<Vec<i64>> {
    let mut gaps: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        gaps = gaps
            .into_iter()
            .flat_map(|g| {
                (1..=max_gap).map(move |x| {
                    let mut h = g.clone();
                    h.push(x);
                    h
                })
            })
            .collect();
    }
    gaps.sort_by_key(|g| (g.iter().sum::<i64>(), g.clone()));
    gaps.into_iter()
        .map(|g| {
            let mut lam = vec![0; n];
            let mut acc = 0;
            for i in (0..n).rev() {
                acc += g[i];
                lam[i] = acc;
            }
            lam
        })
        .collect()
}

/// A sample set that determines every homogeneous degree-`d` polynomial in
/// `n` variables, followed by `HELD_OUT` further points. `None` when the
/// candidates do not suffice.
pub fn select_samples(n: usize, d: u32, candidates: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let basis = monomials_of_degree(n, d);
    let mut ech = EchelonBasis::new(basis.len());
    let mut chosen = Vec::new();
    let mut rest = Vec::new();
    for c in candidates {
        if ech.is_full() {
            if rest.len() == HELD_OUT {
                break;
            }
            rest.push(c.clone());
            continue;
        }
        let row: Vec<Q> = basis
            .iter()
            .map(|e| e.iter().zip(c).map(|(&k, &x)| q(x).pow(k as i32)).product())
            .collect();
        if ech.insert(&row) {
            chosen.push(c.clone());
        } else if rest.len() < HELD_OUT {
            rest.push(c.clone());
        }
    }
    (ech.is_full() && rest.len() == HELD_OUT).then(|| {
        chosen.extend(rest);
        chosen
    })
}

/// Lattice volumes of the faces cut out by each facet set, at weight `λ`.
pub fn face_volumes(family: &PolytopeFamily, lambda: &[i64], faces: &[FacetSet]) -> Result<Vec<Q>> {
    let spec = family.specialize(lambda)?;
    let calc = VolumeCalculator::new(&spec.polytope, family.lattice())?;
    faces.iter().map(|&f| calc.volume(f)).collect()
}

/// Dimension of a face at weight `λ`.
pub fn face_dim(family: &PolytopeFamily, lambda: &[i64], face: FacetSet) -> Result<usize> {
    let spec = family.specialize(lambda)?;
    Ok(face_from_active_set(&spec.polytope, face)?.dim())
}

/// Sample points that determine degree-`d` polynomials, with held-out checks.
pub fn interpolation_points(n: usize, d: u32) -> Result<Vec<Vec<i64>>> {
    let first = d as i64 + 2;
    (first..=first + 4)
        .find_map(|g| select_samples(n, d, &weight_grid(n, g)))
        .ok_or_else(|| {
            Error::InterpolationRankDeficient(format!("degree {d} in {n} variables with gaps up to {}", first + 4))
        })
}

/// Volume polynomials for many faces at once, plus their volumes at `extra`
/// weights. Each weight is specialized once.
pub struct FaceBatch {
    pub polynomials: Vec<Poly>,
    /// `extra_values[p][k]` is the volume of face `k` at `extra[p]`.
    pub extra_values: Vec<Vec<Q>>,
}

pub fn batch_face_polynomials(
    family: &PolytopeFamily,
    requests: &[(FacetSet, u32)],
    extra: &[Vec<i64>],
) -> Result<FaceBatch> {
    let n = family.roots()?.ambient_dim();
    let mut by_degree: BTreeMap<u32, Vec<Vec<i64>>> = BTreeMap::new();
    for &(_, d) in requests {
        if let std::collections::btree_map::Entry::Vacant(e) = by_degree.entry(d) {
            e.insert(interpolation_points(n, d)?);
        }
    }
    // every point with the facet sets needed there
    let mut needs: BTreeMap<Vec<i64>, BTreeSet<FacetSet>> = BTreeMap::new();
    for &(f, d) in requests {
        for p in &by_degree[&d] {
            needs.entry(p.clone()).or_default().insert(f);
        }
        for p in extra {
            needs.entry(p.clone()).or_default().insert(f);
        }
    }
    let jobs: Vec<(Vec<i64>, Vec<FacetSet>)> = needs.into_iter().map(|(p, s)| (p, s.into_iter().collect())).collect();
    let values: Vec<HashMap<FacetSet, Q>> = with_pool(|| {
        jobs.par_iter()
            .map(|(lam, faces)| Ok(faces.iter().copied().zip(face_volumes(family, lam, faces)?).collect()))
            .collect::<Result<Vec<_>>>()
    })?;
    let table: HashMap<&Vec<i64>, &HashMap<FacetSet, Q>> = jobs.iter().map(|(p, _)| p).zip(&values).collect();
    let polynomials = requests
        .iter()
        .map(|&(f, d)| {
            let pts: Vec<(Vec<Q>, Q)> = by_degree[&d]
                .iter()
                .map(|p| (p.iter().map(|&x| q(x)).collect(), table[p][&f].clone()))
                .collect();
            interpolate_homogeneous(n, d, &pts)
        })
        .collect::<Result<Vec<_>>>()?;
    let extra_values = extra
        .iter()
        .map(|p| requests.iter().map(|(f, _)| table[p][f].clone()).collect())
        .collect();
    Ok(FaceBatch {
        polynomials,
        extra_values,
    })
}

/// Volume polynomials in the `ε`-coordinates of `λ` for faces of common dimension `d`.
pub fn face_volume_polynomials(family: &PolytopeFamily, faces: &[FacetSet], d: u32) -> Result<Vec<Poly>> {
    let requests: Vec<(FacetSet, u32)> = faces.iter().map(|&f| (f, d)).collect();
    Ok(batch_face_polynomials(family, &requests, &[])?.polynomials)
}

/// Volume polynomial of the whole polytope, or of the face cut out by `selector`.
pub fn volume_polynomial(family: &PolytopeFamily, selector: Option<FacetSet>) -> Result<Poly> {
    let face = selector.unwrap_or(FacetSet::EMPTY);
    let n = family.roots()?.ambient_dim();
    let probe = &weight_grid(n, 1)[0];
    let d = face_dim(family, probe, face)? as u32;
    Ok(face_volume_polynomials(family, &[face], d)?.remove(0))
}
