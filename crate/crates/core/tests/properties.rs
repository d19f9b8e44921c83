use mitosis_kit::families::{build_family, FamilyKind};
use mitosis_kit::mitosis::PipeDream;
use mitosis_kit::poly::{interpolate_homogeneous, monomials_of_degree, Poly};
use mitosis_kit::polyhedron::{brute_force_vertices, Facet, FacetSet, HPolytope, VolumeCalculator};
use mitosis_kit::scalar::{fmt_rational, parse_rational, q, qf};
use mitosis_kit::weyl::{Labeling, RootSystem};
use mitosis_kit::{Lattice, Polytope, Q};
use proptest::prelude::*;

/// The cube `[-2, 2]^3` cut by extra inequalities that keep the origin inside.
fn cut_cube(cuts: &[(i64, i64, i64, i64)]) -> Polytope {
    let mut facets = Vec::new();
    for i in 0..3 {
        for s in [1, -1] {
            let mut n = vec![q(0); 3];
            n[i] = q(s);
            facets.push(Facet::new(n, q(2)));
        }
    }
    for &(a, b, c, h) in cuts {
        if (a, b, c) != (0, 0, 0) {
            facets.push(Facet::new(vec![q(a), q(b), q(c)], q(h)));
        }
    }
    HPolytope::new(3, facets).unwrap()
}

fn cut() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (-2i64..=2, -2i64..=2, -2i64..=2, 1i64..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_description_matches_brute_force(cuts in prop::collection::vec(cut(), 0..4)) {
        let p = cut_cube(&cuts);
        let mut dd = p.enumerate_vertices().unwrap();
        let mut bf = brute_force_vertices(&p);
        dd.sort_by(|a, b| a.partial_cmp(b).unwrap());
        bf.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert_eq!(dd, bf);
    }

    #[test]
    fn volume_routes_agree(cuts in prop::collection::vec(cut(), 0..3)) {
        let p = cut_cube(&cuts);
        let calc = VolumeCalculator::new(&p, &Lattice::standard(3)).unwrap();
        let whole = calc.volume(FacetSet::EMPTY).unwrap();
        prop_assert_eq!(&whole, &calc.volume_by_triangulation(FacetSet::EMPTY).unwrap());
        prop_assert!(whole > q(0) && whole <= q(64));
        for k in 0..p.num_facets() {
            let f = FacetSet::from_indices([k]).unwrap();
            if calc.face_dim(f).is_ok() {
                prop_assert_eq!(calc.volume(f).unwrap(), calc.volume_by_triangulation(f).unwrap());
            }
        }
    }

    #[test]
    fn reduced_words_rebuild_elements(word in prop::collection::vec(1usize..=3, 0..10)) {
        for rs in [RootSystem::a(3).unwrap(), RootSystem::c(3, Labeling::Standard).unwrap(), RootSystem::b(3, Labeling::Reversed).unwrap()] {
            let j = |x: usize| 1 + (x - 1) % rs.rank();
            let word: Vec<usize> = word.iter().map(|&x| j(x)).collect();
            let w = rs.from_word(&word).unwrap();
            let r = rs.reduced_word(&w);
            prop_assert!(r.len() <= word.len());
            prop_assert_eq!(r.len() % 2, word.len() % 2);
            prop_assert_eq!(r.len(), w.length());
            prop_assert_eq!(rs.from_word(&r).unwrap(), w.clone());
            let winv = rs.inverse(&w);
            prop_assert_eq!(rs.multiply(&w, &winv), rs.identity());
        }
    }

    #[test]
    fn interpolation_recovers_random_forms(coeffs in prop::collection::vec(-5i64..=5, 10)) {
        let monos = monomials_of_degree(3, 2);
        prop_assert_eq!(monos.len(), 6);
        let p = Poly::from_terms(3, monos.iter().cloned().zip(coeffs.iter().map(|&c| q(c))));
        let pts: Vec<Vec<Q>> = (1..=12i64).map(|t| vec![q(t), q(t * t % 7 + 1), q(3 * t % 5 + 2)]).collect();
        let samples: Vec<(Vec<Q>, Q)> = pts.iter().map(|x| (x.clone(), p.eval(x))).collect();
        prop_assert_eq!(interpolate_homogeneous(3, 2, &samples).unwrap(), p);
    }

    #[test]
    fn rationals_roundtrip(n in -1000i64..1000, d in 1i64..1000) {
        let x = qf(n, d);
        prop_assert_eq!(parse_rational(&fmt_rational(&x)), Some(x));
    }

    #[test]
    fn pipe_dreams_roundtrip(bits in 0u64..64) {
        let f = build_family(FamilyKind::GzA(4)).unwrap();
        let cone = &f.vertex_cone().unwrap().cone;
        let face = cone.face(FacetSet::from_indices((0..6).filter(|k| bits >> k & 1 == 1)).unwrap()).unwrap();
        let d = PipeDream::from_face(cone, &face).unwrap();
        prop_assert_eq!(d.cells().len(), face.codim());
        prop_assert_eq!(d.to_face(cone).unwrap().saturated(), face.saturated());
    }
}
