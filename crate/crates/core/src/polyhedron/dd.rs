//! Double description method for cones `{y : g·y <= 0 for all rows g}`.
//!
//! Constraints are added one at a time. A lineality basis is kept until a
//! constraint cuts it; after that extreme rays are combined pairwise along
//! combinatorially adjacent pairs. Zero sets are bit masks over the
//! constraint indices processed so far.

use crate::linalg::dot;
use crate::scalar::Field;

#[derive(Clone, Debug)]
pub(crate) struct Ray<F> {
    pub coords: Vec<F>,
    pub zero_set: u128,
}

#[derive(Clone, Debug)]
pub(crate) struct ConeGenerators<F> {
    pub rays: Vec<Ray<F>>,
    pub lineality: Vec<Vec<F>>,
}

fn normalize<F: Field>(v: &mut [F]) {
    if let Some(p) = v.iter().find(|x| !x.is_zero()).cloned() {
        let s = p.abs();
        for x in v.iter_mut() {
            *x = x.clone() / s.clone();
        }
    }
}

fn axpy<F: Field>(a: F, x: &[F], b: F, y: &[F]) -> Vec<F> {
    x.iter()
        .zip(y)
        .map(|(xi, yi)| a.clone() * xi.clone() + b.clone() * yi.clone())
        .collect()
}

pub(crate) fn double_description<F: Field>(constraints: &[Vec<F>], dim: usize) -> ConeGenerators<F> {
    assert!(constraints.len() <= 128, "too many constraints for zero-set masks");
    let mut lineality: Vec<Vec<F>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect();
    let mut rays: Vec<Ray<F>> = Vec::new();
    let mut processed: u128 = 0;

    for (c, g) in constraints.iter().enumerate() {
        let bit = 1u128 << c;
        if let Some(pos) = lineality.iter().position(|l| !dot(g, l).is_zero()) {
            let mut l0 = lineality.remove(pos);
            let mut gl0 = dot(g, &l0);
            if gl0.is_positive() {
                l0.iter_mut().for_each(|x| *x = -x.clone());
                gl0 = -gl0;
            }
            for l in lineality.iter_mut() {
                let gl = dot(g, l);
                if !gl.is_zero() {
                    *l = axpy(F::one(), l, -(gl / gl0.clone()), &l0);
                }
            }
            for r in rays.iter_mut() {
                let gr = dot(g, &r.coords);
                if !gr.is_zero() {
                    r.coords = axpy(F::one(), &r.coords, -(gr / gl0.clone()), &l0);
                    normalize(&mut r.coords);
                }
                r.zero_set |= bit;
            }
            normalize(&mut l0);
            rays.push(Ray {
                coords: l0,
                zero_set: processed,
            });
            processed |= bit;
            continue;
        }

        let values: Vec<F> = rays.iter().map(|r| dot(g, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut next: Vec<Ray<F>> = Vec::with_capacity(rays.len());
        for (i, r) in rays.iter().enumerate() {
            if values[i].is_zero() {
                next.push(Ray {
                    coords: r.coords.clone(),
                    zero_set: r.zero_set | bit,
                });
            } else if values[i].is_negative() {
                next.push(r.clone());
            }
        }
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zero_set & rays[n].zero_set;
                let adjacent = rays.iter().enumerate().all(|(k, r)| {
                    k == p || k == n || r.zero_set & common != common
                });
                if !adjacent {
                    continue;
                }
                let mut coords = axpy(
                    values[p].clone(),
                    &rays[n].coords,
                    -values[n].clone(),
                    &rays[p].coords,
                );
                normalize(&mut coords);
                next.push(Ray {
                    coords,
                    zero_set: common | bit,
                });
            }
        }
        rays = next;
        processed |= bit;
    }

    ConeGenerators { rays, lineality }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use num_rational::BigRational;

    fn rows(r: &[&[i64]]) -> Vec<Vec<BigRational>> {
        r.iter().map(|x| x.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn positive_quadrant() {
        let g = double_description(&rows(&[&[-1, 0], &[0, -1]]), 2);
        assert!(g.lineality.is_empty());
        let mut rays: Vec<_> = g.rays.iter().map(|r| r.coords.clone()).collect();
        rays.sort();
        assert_eq!(rays, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn half_plane_keeps_a_line() {
        let g = double_description(&rows(&[&[0, -1]]), 2);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays.len(), 1);
    }

    #[test]
    fn square_pyramid_cone() {
        // Cone over the square [-1,1]^2 at height 1: four extreme rays.
        let g = double_description(
            &rows(&[&[1, 0, -1], &[-1, 0, -1], &[0, 1, -1], &[0, -1, -1]]),
            3,
        );
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays.len(), 4);
    }
}
