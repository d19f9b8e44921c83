//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Pow, Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank, solve_any};
use crate::scalar::fmt_rational;
use crate::Q;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(nvars, [(e, Q::one())])
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Monomial, c: Q) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, v)| (e.clone(), v * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, Q::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * Pow::pow(xi, k))
            })
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
                let mut f = e.clone();
                f[i] -= 1;
                (f, c * Q::from_integer(e[i].into()))
            }),
        )
    }

    /// Directional derivative `Σ v_i ∂_i`.
    pub fn directional(&self, v: &[Q]) -> Self {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Self::zero(self.nvars), |acc, (i, c)| &acc + &self.derivative(i).scale(c))
    }

    /// Apply the constant coefficient operator given by `op`, reading `x_i` as `∂_i`.
    pub fn apply_operator(&self, op: &Poly) -> Self {
        assert_eq!(op.nvars, self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &op.terms {
            let mut d = self.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    d = d.derivative(i);
                }
            }
            out = &out + &d.scale(c);
        }
        out
    }

    /// Coefficients on `basis`, in order.
    pub fn coefficients_on(&self, basis: &[Monomial]) -> Vec<Q> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    /// Map each variable to a polynomial in possibly different variables.
    pub fn substitute(&self, images: &[Poly]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let m = images.first().map_or(0, |p| p.nvars);
        let mut out = Self::zero(m);
        for (e, c) in &self.terms {
            let mut t = Self::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &images[i].pow(k);
                }
            }
            out = &out + &t;
        }
        out
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in lexicographic order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            go(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

fn monomial_value(e: &[u32], x: &[Q]) -> Q {
    e.iter().zip(x).fold(Q::one(), |acc, (&k, xi)| acc * Pow::pow(xi, k))
}

/// The homogeneous degree-`d` polynomial through all `samples`.
///
/// Fails when the samples do not determine every coefficient, or when the
/// unique fit misses some sample.
pub fn interpolate_homogeneous(n: usize, d: u32, samples: &[(Vec<Q>, Q)]) -> Result<Poly> {
    let basis = monomials_of_degree(n, d);
    let rows: Vec<Vec<Q>> = samples.iter().map(|(x, _)| basis.iter().map(|e| monomial_value(e, x)).collect()).collect();
    let r = rank(&rows);
    if r < basis.len() {
        return Err(Error::InterpolationRankDeficient(format!(
            "{} samples span {r} of {} monomials",
            samples.len(),
            basis.len()
        )));
    }
    let rhs: Vec<Q> = samples.iter().map(|(_, v)| v.clone()).collect();
    let c = solve_any(&rows, &rhs).ok_or_else(|| Error::InterpolationMismatch(Vec::new()))?;
    let p = Poly::from_terms(n, basis.into_iter().zip(c));
    for (x, v) in samples {
        if p.eval(x) != *v {
            return Err(Error::InterpolationMismatch(
                x.iter().map(|t| t.to_integer().try_into().unwrap_or(i64::MAX)).collect(),
            ));
        }
    }
    Ok(p)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars);
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars);
        let mut p = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}

impl fmt::Display for Poly {
    /// Variables print as `l1, l2, ...`; terms in decreasing lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("l{}", i + 1) } else { format!("l{}^{k}", i + 1) })
                .collect();
            let coeff = if a.is_integer() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    /// A map from exponent strings such as `"3,1"` to `"p/q"` coefficients.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            let key: Vec<String> = e.iter().map(u32::to_string).collect();
            m.serialize_entry(&key.join(","), &fmt_rational(c))?;
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    fn l(i: usize) -> Poly {
        Poly::var(2, i)
    }

    fn sgz_volume() -> Poly {
        // (1/6) l1 l2 (l1 - l2)(l1 + l2)
        let p = &(&l(0) * &l(1)) * &(&(&l(0) - &l(1)) * &(&l(0) + &l(1)));
        p.scale(&qf(1, 6))
    }

    #[test]
    fn arithmetic_and_display() {
        let p = sgz_volume();
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.to_string(), "1/6*l1^3*l2 - 1/6*l1*l2^3");
        assert_eq!(p.eval(&[q(2), q(1)]), q(1));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivatives() {
        let p = sgz_volume();
        assert_eq!(p.derivative(0).to_string(), "1/2*l1^2*l2 - 1/6*l2^3");
        let op = &Poly::var(2, 0) * &Poly::var(2, 1);
        assert_eq!(p.apply_operator(&op), p.derivative(0).derivative(1));
        assert_eq!(p.directional(&[q(1), q(0)]), p.derivative(0));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(2, 4).len(), 5);
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_of_degree(3, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = sgz_volume();
        let samples: Vec<_> = (1..=4)
            .flat_map(|a| (1..=3).map(move |b| vec![q(a + b), q(b)]))
            .map(|x| {
                let v = p.eval(&x);
                (x, v)
            })
            .collect();
        assert_eq!(interpolate_homogeneous(2, 4, &samples).unwrap(), p);
        assert!(matches!(
            interpolate_homogeneous(2, 4, &samples[..2]),
            Err(Error::InterpolationRankDeficient(_))
        ));
    }

    #[test]
    fn json_form() {
        let v = serde_json::to_value(sgz_volume()).unwrap();
        assert_eq!(v["3,1"], "1/6");
        assert_eq!(v["1,3"], "-1/6");
    }
}
