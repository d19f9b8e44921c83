//! Integer lattice helpers: kernels over Z and saturated sublattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::nullspace;

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Basis of `{c in Z^n : a * c = 0}` by unimodular column reduction.
///
/// Each row is cleared to the right of its pivot with extended-gcd column
/// operations, which are mirrored on an identity matrix; the columns past
/// the last pivot then span the integer kernel.
pub fn integer_kernel(a: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut p = 0;
    for r in 0..a.len() {
        if p == n {
            break;
        }
        for j in p + 1..n {
            if a[r][j].is_zero() {
                continue;
            }
            let ap = a[r][p].clone();
            let aj = a[r][j].clone();
            let e = ap.extended_gcd(&aj);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let cp = aj.clone() / &g;
            let cj = ap.clone() / &g;
            // new_p = x*col_p + y*col_j ; new_j = cp*col_p - cj*col_j
            let combine = |m: &mut Vec<Vec<BigInt>>| {
                for row in m.iter_mut() {
                    let vp = row[p].clone();
                    let vj = row[j].clone();
                    row[p] = &x * &vp + &y * &vj;
                    row[j] = &cp * &vp - &cj * &vj;
                }
            };
            combine(&mut a);
            combine(&mut u);
        }
        if !a[r][p].is_zero() {
            p += 1;
        }
    }
    (p..n).map(|c| u.iter().map(|row| row[c].clone()).collect()).collect()
}

/// Integer basis of `Z^d ∩ span(spanning)`.
pub fn saturated_basis(spanning: &[Vec<BigRational>], d: usize) -> Vec<Vec<BigInt>> {
    let complement: Vec<Vec<BigInt>> = nullspace(spanning, d)
        .iter()
        .map(|v| primitive(v))
        .collect();
    let mut basis = integer_kernel(&complement, d);
    // Normalize signs so that the first nonzero entry is positive.
    for v in basis.iter_mut() {
        if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    basis
}
