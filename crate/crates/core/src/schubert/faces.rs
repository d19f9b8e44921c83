//! Faces realizing Schubert classes, produced by mitosis from the
//! distinguished vertex.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{string_cone, FamilyKind, Convention, PolytopeFamily};
use crate::mitosis::{mitosis_apply, BlockCone, Cell, ConeFace, PipeDream};
use crate::polyhedron::FacetSet;
use crate::weyl::WeylElement;

/// One face of a Schubert face sum, with coefficient one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FaceRecord {
    /// Pipe dream or skew pipe dream cells.
    pub cells: Vec<Cell>,
    /// Polytope facets cutting out the face.
    #[serde(skip)]
    pub facets: FacetSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchubertFaces {
    pub word: Vec<usize>,
    pub alternatives: Vec<Vec<usize>>,
    pub ops: Vec<usize>,
    pub convention: Convention,
    pub faces: Vec<FaceRecord>,
}

impl SchubertFaces {
    pub fn facet_sets(&self) -> Vec<FacetSet> {
        self.faces.iter().map(|f| f.facets).collect()
    }
}

type Encoder = Box<dyn Fn(&BlockCone, &ConeFace) -> Result<FaceRecord>>;

/// The cone mitosis runs on and the translation of its faces.
struct MitosisSetting {
    cone: BlockCone,
    encode: Encoder,
}

fn setting(family: &PolytopeFamily) -> Result<MitosisSetting> {
    match family.kind() {
        FamilyKind::GzA(_) => {
            let vc = family.vertex_cone()?;
            let map = vc.facet_map.clone();
            Ok(MitosisSetting {
                cone: vc.cone.clone(),
                encode: Box::new(move |cone, face| {
                    let pd = PipeDream::from_face(cone, face)?;
                    Ok(FaceRecord {
                        facets: FacetSet::from_indices(face.set().iter().map(|k| map[k]))?,
                        cells: pd.cells().iter().copied().collect(),
                    })
                }),
            })
        }
        FamilyKind::DdoC2 | FamilyKind::StringC(_) => {
            let vc = family.vertex_cone()?;
            let map = vc.facet_map.clone();
            let cells = vc.skew_cells.clone().ok_or(Error::NoConeStructure)?;
            Ok(MitosisSetting {
                cone: vc.cone.clone(),
                encode: Box::new(move |_, face| {
                    let mut c: Vec<Cell> = face.set().iter().map(|k| cells[k]).collect();
                    c.sort();
                    Ok(FaceRecord {
                        facets: FacetSet::from_indices(face.set().iter().map(|k| map[k]))?,
                        cells: c,
                    })
                }),
            })
        }
        FamilyKind::Sgz(n) | FamilyKind::Ogz(n) => {
            let (cone, cells) = string_cone(n)?;
            let map: Vec<usize> = cells
                .iter()
                .map(|&c| {
                    family
                        .sgz_facet_of_cell(c)
                        .ok_or(Error::InvalidCell { row: c.0, col: c.1 })
                })
                .collect::<Result<_>>()?;
            Ok(MitosisSetting {
                cone,
                encode: Box::new(move |_, face| {
                    let mut c: Vec<Cell> = face.set().iter().map(|k| cells[k]).collect();
                    c.sort();
                    Ok(FaceRecord {
                        facets: FacetSet::from_indices(face.set().iter().map(|k| map[k]))?,
                        cells: c,
                    })
                }),
            })
        }
        other => Err(Error::UnsupportedKind(format!("no Schubert faces for {other}"))),
    }
}

/// `M_{o_1} ⋯ M_{o_k}` applied to the apex of the family's mitosis cone.
pub fn mitosis_faces(family: &PolytopeFamily, ops: &[usize]) -> Result<Vec<FaceRecord>> {
    let st = setting(family)?;
    let apex = st.cone.apex()?;
    let mut faces = mitosis_apply(&st.cone, &apex, ops)?
        .iter()
        .map(|f| (st.encode)(&st.cone, f))
        .collect::<Result<Vec<_>>>()?;
    faces.sort();
    Ok(faces)
}

/// `𝔖_w` with the statement's operation order.
pub fn schubert_face_set(family: &PolytopeFamily, w: &WeylElement) -> Result<SchubertFaces> {
    schubert_face_set_with(family, w, Convention::STATEMENT, None)
}

/// `𝔖_w` with a chosen order and, optionally, a chosen reduced subword of the pattern.
pub fn schubert_face_set_with(
    family: &PolytopeFamily,
    w: &WeylElement,
    conv: Convention,
    word: Option<&[usize]>,
) -> Result<SchubertFaces> {
    let rs = family.roots()?;
    let alternatives = rs.reduced_subwords(w, family.pattern())?;
    let word = match word {
        Some(word) if alternatives.iter().any(|a| a == word) => word.to_vec(),
        Some(_) => return Err(Error::NoAdmissibleWord),
        None => alternatives.first().cloned().ok_or(Error::NoAdmissibleWord)?,
    };
    let ops = family.mitosis_ops(&word, conv)?;
    let faces = mitosis_faces(family, &ops)?;
    Ok(SchubertFaces {
        word,
        alternatives,
        ops,
        convention: conv,
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilyKind};

    #[test]
    fn two_step_products() {
        let f = build_family(FamilyKind::GzA(3)).unwrap();
        let rs = f.roots().unwrap();
        let s12 = schubert_face_set(&f, &rs.from_word(&[1, 2]).unwrap()).unwrap();
        assert_eq!(s12.faces.len(), 1);
        assert_eq!(s12.faces[0].cells, vec![(1, 3)]);
        let s21 = schubert_face_set(&f, &rs.from_word(&[2, 1]).unwrap()).unwrap();
        assert_eq!(s21.faces.len(), 2);
        let e = schubert_face_set(&f, &rs.identity()).unwrap();
        assert_eq!(e.faces.len(), 1);
        assert_eq!(e.faces[0].cells.len(), 3);
    }
}
