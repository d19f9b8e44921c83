//! Acceptance gate: one PASS/FAIL line per criterion. Runs without the test
//! harness so the lines always reach standard output.

use std::time::{Duration, Instant};

use mitosis_kit::families::{build_family, Convention, FamilyKind, PolytopeFamily};
use mitosis_kit::mitosis::{mitosis_apply, mitosis_step, km_mitosis, PipeDream, SkewCodec, SkewPipeDream};
use mitosis_kit::poly::Poly;
use mitosis_kit::polyhedron::FacetSet;
use mitosis_kit::scalar::{q, qf};
use mitosis_kit::schubert::ring::{ranks_of, TRAPEZOID_BASE};
use mitosis_kit::schubert::{
    conjecture_report, default_grid, degree_check, facet_derivative, factorial, graded_ring_ranks,
    offset_volume_polynomial, structure_constants, volume_polynomial,
};
use mitosis_kit::Error;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fam(kind: FamilyKind) -> Result<PolytopeFamily, String> {
    build_family(kind).map_err(|e| e.to_string())
}

fn err(e: Error) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn vars(n: usize) -> Vec<Poly> {
    (0..n).map(|i| Poly::var(n, i)).collect()
}

fn sgz2_formula() -> Poly {
    let l = vars(2);
    (&(&(&l[0] * &l[1]) * &(&l[0] - &l[1])) * &(&l[0] + &l[1])).scale(&qf(1, 6))
}

fn c1_sgz_volume() -> Check {
    let t = Instant::now();
    let p = volume_polynomial(&fam(FamilyKind::Sgz(2))?, None).map_err(err)?;
    let el = t.elapsed();
    ensure(p == sgz2_formula(), format!("got {p}"))?;
    ensure(el < Duration::from_secs(5), format!("took {el:?}"))?;
    Ok(format!("vol = {p} in {el:?}"))
}

fn c2_longest_degree() -> Check {
    let t = Instant::now();
    let kinds = [FamilyKind::GzA(3), FamilyKind::GzA(4), FamilyKind::Sgz(2), FamilyKind::Sgz(3), FamilyKind::DdoC2];
    for k in kinds {
        let f = fam(k)?;
        let rs = f.roots().map_err(err)?;
        let lhs = volume_polynomial(&f, None).map_err(err)?.scale(&factorial(f.dim()));
        ensure(lhs == rs.chevalley_polynomial(&rs.longest()), format!("{k}: d!·vol differs from the oracle"))?;
    }
    let el = t.elapsed();
    ensure(el < Duration::from_secs(120), format!("took {el:?}"))?;
    Ok(format!("5 families in {el:?}"))
}

fn all_match(f: &PolytopeFamily, require_admissible: bool) -> Result<(usize, usize), String> {
    let rs = f.roots().map_err(err)?;
    let grid = default_grid(f, 5).map_err(err)?;
    ensure(grid.len() == 5, "grid size")?;
    let (mut checked, mut skipped) = (0, 0);
    for w in rs.weyl_elements().into_iter().flatten() {
        match degree_check(f, &w, &grid) {
            Ok(r) => {
                ensure(r.matches, format!("{}: w={} mismatched", f.kind(), r.element))?;
                checked += 1;
            }
            Err(Error::NoAdmissibleWord) if !require_admissible => skipped += 1,
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok((checked, skipped))
}

fn c3_kogan() -> Check {
    let (a, _) = all_match(&fam(FamilyKind::GzA(3))?, true)?;
    let (b, s) = all_match(&fam(FamilyKind::GzA(4))?, false)?;
    ensure(a == 6, "S_3 incomplete")?;
    Ok(format!("S_3: {a}/6, S_4: {b} admissible matched, {s} without staircase subword"))
}

fn c4_ddo() -> Check {
    let (a, _) = all_match(&fam(FamilyKind::DdoC2)?, true)?;
    ensure(a == 8, format!("{a}/8"))?;
    Ok("8/8 elements of D_4".into())
}

fn c5_conjecture() -> Check {
    let conv = Convention::all()[2];
    let r2 = conjecture_report(&fam(FamilyKind::Sgz(2))?, &[conv]).map_err(err)?;
    let c = &r2.conventions[0];
    ensure(c.matched == 8 && c.all_match, format!("n=2 {}: {}/8", c.label, c.matched))?;
    let r3 = conjecture_report(&fam(FamilyKind::Sgz(3))?, &Convention::all()).map_err(err)?;
    ensure(r3.conventions.iter().all(|c| c.records.len() + c.skipped.len() == 48), "n=3 report incomplete")?;
    let summary: Vec<String> = r3.conventions.iter().map(|c| format!("{} {}/48", c.label, c.matched)).collect();
    Ok(format!("n=2 8/8 under {}; n=3: {}", c.label, summary.join(", ")))
}

fn c6_product() -> Check {
    let f = fam(FamilyKind::GzA(3))?;
    let rs = f.roots().map_err(err)?;
    let u = rs.from_word(&[1, 2]).map_err(err)?;
    let v = rs.from_word(&[2, 1]).map_err(err)?;
    let sc = structure_constants(&f, &u, &v).map_err(err)?;
    let got: Vec<(String, String)> = sc.terms.iter().map(|(k, c)| (k.clone(), c.0.to_string())).collect();
    ensure(got == [("1".into(), "1".into()), ("2".into(), "1".into())], format!("{got:?}"))?;
    ensure(!sc.intersection_faces.is_empty(), "no intersections recorded")?;
    Ok(format!("s_1 + s_2 from {} transverse intersections", sc.intersection_faces.len()))
}

fn c7_lattice() -> Check {
    let o = volume_polynomial(&fam(FamilyKind::Ogz(2))?, None).map_err(err)?;
    let s = volume_polynomial(&fam(FamilyKind::Sgz(2))?, None).map_err(err)?;
    ensure(o == s.scale(&q(4)), format!("{o} vs 4·({s})"))?;
    Ok("vol OGZ(2) = 4 vol SGZ(2)".into())
}

/// Coefficients of `∏_{k=1}^{n} (1 + t + ⋯ + t^{k-1})`, the inversion count distribution.
fn mahonian(n: usize) -> Vec<usize> {
    let mut c = vec![1usize];
    for k in 1..=n {
        let mut next = vec![0; c.len() + k - 1];
        for (i, &x) in c.iter().enumerate() {
            for j in 0..k {
                next[i + j] += x;
            }
        }
        c = next;
    }
    c
}

fn c8_ranks() -> Check {
    let cases = [
        (FamilyKind::GzA(3), mahonian(3), 6),
        (FamilyKind::GzA(4), mahonian(4), 24),
        (FamilyKind::Sgz(2), vec![1, 2, 2, 2, 1], 8),
    ];
    let mut out = Vec::new();
    for (k, expect, order) in cases {
        let r = graded_ring_ranks(&fam(k)?).map_err(err)?;
        let mut rev = r.clone();
        rev.reverse();
        ensure(r == expect, format!("{k}: {r:?}"))?;
        ensure(rev == r && r.iter().sum::<usize>() == order, format!("{k}: not palindromic of total {order}"))?;
        out.push(format!("{k} {r:?}"));
    }
    Ok(out.join(", "))
}

fn c9_trapezoid() -> Check {
    let f = fam(FamilyKind::Trapezoid)?;
    let vol = offset_volume_polynomial(&f, &TRAPEZOID_BASE).map_err(err)?;
    let d: Vec<Poly> = (0..4).map(|i| facet_derivative(&f, i)).collect::<Result<_, _>>().map_err(err)?;
    let sq = vol.apply_operator(&(&d[0] * &d[0]));
    let via = vol.apply_operator(&(&d[0] * &(&d[2] - &d[1])));
    ensure(sq == Poly::constant(4, q(-1)), format!("∂1² vol = {sq}"))?;
    ensure(via == sq, "∂1(∂3 - ∂2) vol differs")?;
    ensure(vol.apply_operator(&d[1]) == vol.apply_operator(&d[3]), "∂2 vol ≠ ∂4 vol")?;
    ensure(ranks_of(&vol) == [1, 2, 1], "ring ranks")?;
    Ok(format!("vol = {vol}, ∂1² vol = -1, ∂2 vol = ∂4 vol"))
}

fn c10_mitosis() -> Check {
    let a = fam(FamilyKind::GzA(3))?;
    let cone = &a.vertex_cone().map_err(err)?.cone;
    let apex = cone.apex().map_err(err)?;
    let pd = |cells: &[(usize, usize)]| PipeDream::new(3, cells.iter().copied()).unwrap();
    let chain_a = |ops: &[usize]| -> Result<Vec<PipeDream>, String> {
        let mut v: Vec<PipeDream> = mitosis_apply(cone, &apex, ops)
            .map_err(err)?
            .iter()
            .map(|g| PipeDream::from_face(cone, g).unwrap())
            .collect();
        v.sort();
        Ok(v)
    };
    let fixtures_a: Vec<(&[usize], Vec<PipeDream>)> = vec![
        (&[1], vec![pd(&[(1, 3), (2, 3)])]),
        (&[2, 1], vec![pd(&[(1, 3)])]),
        (&[1, 2, 1], vec![PipeDream::empty(3)]),
        (&[2], vec![pd(&[(1, 2), (1, 3)])]),
        (&[1, 2], vec![pd(&[(1, 2)]), pd(&[(2, 3)])]),
        (&[2, 1, 2], vec![PipeDream::empty(3)]),
    ];
    for (ops, expect) in &fixtures_a {
        ensure(&chain_a(ops)? == expect, format!("type A ops {ops:?}"))?;
    }
    let c = fam(FamilyKind::DdoC2)?;
    let ccone = &c.vertex_cone().map_err(err)?.cone;
    let capex = ccone.apex().map_err(err)?;
    let codec = SkewCodec::for_family(&c).map_err(err)?;
    let sk = |cells: &[(usize, usize)]| SkewPipeDream::new(2, cells.iter().copied()).unwrap();
    let chain_c = |ops: &[usize]| -> Result<Vec<SkewPipeDream>, String> {
        let mut v: Vec<SkewPipeDream> = mitosis_apply(ccone, &capex, ops).map_err(err)?.iter().map(|g| codec.encode(g)).collect();
        v.sort();
        Ok(v)
    };
    let sorted = |mut v: Vec<SkewPipeDream>| {
        v.sort();
        v
    };
    let fixtures_c: Vec<(&[usize], Vec<SkewPipeDream>)> = vec![
        (&[1], vec![sk(&[(1, 2), (2, 2), (3, 2)])]),
        (&[2, 1], vec![sk(&[(1, 2), (2, 2)])]),
        (&[1, 2, 1], vec![sk(&[(1, 2)])]),
        (&[2, 1, 2, 1], vec![sk(&[])]),
        (&[2], vec![sk(&[(2, 1), (1, 2), (2, 2)])]),
        (&[1, 2], sorted(vec![sk(&[(1, 2), (3, 2)]), sk(&[(2, 1), (1, 2)])])),
        (&[2, 1, 2], sorted(vec![sk(&[(2, 2)]), sk(&[(3, 2)]), sk(&[(2, 1)])])),
        (&[1, 2, 1, 2], vec![sk(&[])]),
    ];
    for (ops, expect) in &fixtures_c {
        ensure(&chain_c(ops)? == expect, format!("DDO ops {ops:?}"))?;
    }
    let mut compared = 0;
    for n in 2..=4 {
        let f = fam(FamilyKind::GzA(n))?;
        let cone = &f.vertex_cone().map_err(err)?.cone;
        let m = cone.num_facets();
        for bits in 0u64..(1 << m) {
            let face = cone
                .face(FacetSet::from_indices((0..m).filter(|k| bits >> k & 1 == 1)).map_err(err)?)
                .map_err(err)?;
            let d = PipeDream::from_face(cone, &face).map_err(err)?;
            for i in 1..n {
                let mut generic: Vec<PipeDream> = mitosis_step(cone, &face, i)
                    .map_err(err)?
                    .iter()
                    .map(|g| PipeDream::from_face(cone, g).unwrap())
                    .collect();
                generic.sort();
                ensure(generic == km_mitosis(&d, i), format!("n={n} face {d} M_{i}"))?;
                compared += 1;
            }
        }
    }
    Ok(format!(
        "{} chain steps reproduced; generic = Knutson-Miller on {compared} (face, i) pairs",
        fixtures_a.len() + fixtures_c.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("SGZ(2) volume formula", c1_sgz_volume),
        ("d!·vol = deg X_{w0} for five families", c2_longest_degree),
        ("Kogan face degrees on S_3 and S_4", c3_kogan),
        ("DDO_C2 degrees on D_4", c4_ddo),
        ("symplectic conjecture, n=2 and n=3 report", c5_conjecture),
        ("structure constant of s_1s_2 and s_2s_1", c6_product),
        ("OGZ lattice rescaling", c7_lattice),
        ("polytope ring ranks", c8_ranks),
        ("trapezoid facet operators", c9_trapezoid),
        ("mitosis fixtures and KM equivalence", c10_mitosis),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{:.1?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{:.1?}]", i + 1, t.elapsed());
            }
        }
    }
    println!("acceptance: {}/10 passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
