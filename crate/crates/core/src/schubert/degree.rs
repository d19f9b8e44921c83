//! `ℓ!·Σ vol(faces)` against the Chevalley oracle.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{Convention, PolytopeFamily};
use crate::mitosis::Cell;
use crate::poly::Poly;
use crate::polyhedron::FacetSet;
use crate::scalar::{q, serde_q};
use crate::schubert::faces::{schubert_face_set_with, SchubertFaces};
use crate::schubert::volpoly::{batch_face_polynomials, weight_grid};
use crate::weyl::{weight, word_string, WeylElement};
use crate::Q;

#[derive(Clone, Debug, Serialize)]
pub struct DegreeSample {
    pub lambda: Vec<i64>,
    #[serde(with = "serde_q")]
    pub polytope: Q,
    #[serde(with = "serde_q")]
    pub oracle: Q,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub family: String,
    pub element: String,
    pub length: usize,
    #[serde(flatten)]
    pub faces: SchubertFaces,
    pub samples: Vec<DegreeSample>,
    /// `ℓ!` times the summed face volume polynomials.
    pub volume_polynomial: Poly,
    pub oracle_polynomial: Poly,
    pub polynomial_match: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// `count` strictly dominant weights with gaps in `1..=3`, spread over the grid.
pub fn default_grid(family: &PolytopeFamily, count: usize) -> Result<Vec<Vec<i64>>> {
    let n = family.roots()?.ambient_dim();
    let g = weight_grid(n, 3);
    let step = (g.len() / count.max(1)).max(1);
    Ok(g.into_iter().step_by(step).take(count).collect())
}

pub fn factorial(n: usize) -> Q {
    (1..=n as i64).map(q).fold(Q::one(), |a, b| a * b)
}

fn sum(polys: &[Poly], n: usize) -> Poly {
    polys.iter().fold(Poly::zero(n), |a, b| &a + b)
}

pub fn degree_check(family: &PolytopeFamily, w: &WeylElement, grid: &[Vec<i64>]) -> Result<DegreeReport> {
    degree_check_with(family, w, Convention::STATEMENT, grid)
}

pub fn degree_check_with(
    family: &PolytopeFamily,
    w: &WeylElement,
    conv: Convention,
    grid: &[Vec<i64>],
) -> Result<DegreeReport> {
    let rs = family.roots()?;
    for lam in grid {
        rs.check_dominant(lam)?;
    }
    let faces = schubert_face_set_with(family, w, conv, None)?;
    let l = w.length();
    let requests: Vec<(FacetSet, u32)> = faces.facet_sets().into_iter().map(|f| (f, l as u32)).collect();
    let batch = batch_face_polynomials(family, &requests, grid)?;
    let fact = factorial(l);
    let samples = grid
        .iter()
        .zip(&batch.extra_values)
        .map(|(lam, vols)| {
            let polytope = vols.iter().fold(Q::zero(), |a, b| a + b) * &fact;
            let oracle = rs.chevalley_degree(w, &weight(lam));
            DegreeSample {
                lambda: lam.clone(),
                matches: polytope == oracle,
                polytope,
                oracle,
            }
        })
        .collect::<Vec<_>>();
    let volume_polynomial = sum(&batch.polynomials, rs.ambient_dim()).scale(&fact);
    let oracle_polynomial = rs.chevalley_polynomial(w);
    let polynomial_match = volume_polynomial == oracle_polynomial;
    let matches = polynomial_match && samples.iter().all(|s| s.matches);
    Ok(DegreeReport {
        family: family.kind().to_string(),
        element: word_string(&rs.reduced_word(w)),
        length: l,
        faces,
        samples,
        volume_polynomial,
        oracle_polynomial,
        polynomial_match,
        matches,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRecord {
    pub element: String,
    pub length: usize,
    pub word: Vec<usize>,
    pub ops: Vec<usize>,
    pub faces: Vec<Vec<Cell>>,
    pub volume_polynomial: Poly,
    pub oracle_polynomial: Poly,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConventionReport {
    pub convention: Convention,
    pub label: String,
    pub matched: usize,
    pub mismatched: usize,
    /// Elements without a reduced word inside the pattern.
    pub skipped: Vec<String>,
    pub all_match: bool,
    pub records: Vec<ConjectureRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub family: String,
    pub conventions: Vec<ConventionReport>,
}

/// Degree identity for every Weyl group element under each convention,
/// compared as interpolated polynomials.
pub fn conjecture_report(family: &PolytopeFamily, conventions: &[Convention]) -> Result<ConjectureReport> {
    let rs = family.roots()?;
    let elements: Vec<WeylElement> = rs.weyl_elements().into_iter().flatten().collect();
    let mut plans = Vec::new();
    let mut requests: BTreeMap<(FacetSet, u32), usize> = BTreeMap::new();
    for &conv in conventions {
        let mut per = Vec::new();
        for w in &elements {
            match schubert_face_set_with(family, w, conv, None) {
                Ok(f) => {
                    for s in f.facet_sets() {
                        let k = requests.len();
                        requests.entry((s, w.length() as u32)).or_insert(k);
                    }
                    per.push((w, Some(f)));
                }
                Err(Error::NoAdmissibleWord) => per.push((w, None)),
                Err(e) => return Err(e),
            }
        }
        plans.push((conv, per));
    }
    let mut order: Vec<((FacetSet, u32), usize)> = requests.into_iter().collect();
    order.sort_by_key(|&(_, k)| k);
    let reqs: Vec<(FacetSet, u32)> = order.iter().map(|&(r, _)| r).collect();
    let batch = batch_face_polynomials(family, &reqs, &[])?;
    let lookup: BTreeMap<(FacetSet, u32), &Poly> = reqs.iter().copied().zip(&batch.polynomials).collect();
    let n = rs.ambient_dim();
    let mut conventions_out = Vec::new();
    for (conv, per) in plans {
        let mut records = Vec::new();
        let mut skipped = Vec::new();
        for (w, faces) in per {
            let name = word_string(&rs.reduced_word(w));
            let Some(f) = faces else {
                skipped.push(name);
                continue;
            };
            let l = w.length();
            let polys: Vec<Poly> = f
                .facet_sets()
                .into_iter()
                .map(|s| lookup[&(s, l as u32)].clone())
                .collect();
            let volume_polynomial = sum(&polys, n).scale(&factorial(l));
            let oracle_polynomial = rs.chevalley_polynomial(w);
            records.push(ConjectureRecord {
                element: name,
                length: l,
                matches: volume_polynomial == oracle_polynomial,
                word: f.word.clone(),
                ops: f.ops.clone(),
                faces: f.faces.iter().map(|r| r.cells.clone()).collect(),
                volume_polynomial,
                oracle_polynomial,
            });
        }
        let matched = records.iter().filter(|r| r.matches).count();
        conventions_out.push(ConventionReport {
            convention: conv,
            label: conv.to_string(),
            matched,
            mismatched: records.len() - matched,
            all_match: matched == records.len() && skipped.is_empty(),
            skipped,
            records,
        });
    }
    Ok(ConjectureReport {
        family: family.kind().to_string(),
        conventions: conventions_out,
    })
}
