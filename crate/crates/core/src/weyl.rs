//! Root systems of types A, B, C and their Weyl groups as signed permutations.
//!
//! Everything lives in the `ε`-basis of `R^n`. A word `(j_1, …, j_ℓ)` in the
//! simple reflections names the product `s_{j_1} ⋯ s_{j_ℓ}`, stored as the
//! linear map `s_{j_1} ∘ ⋯ ∘ s_{j_ℓ}`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::poly::Poly;
use crate::scalar::q;
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootKind {
    A,
    B,
    C,
}

/// How user-facing indices `1..=rank` map onto the simple roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Labeling {
    /// `s_i` is the `i`-th simple root in the usual order; in types B and C
    /// the special root is `s_n`.
    Standard,
    /// `s_i` is the usual `s_{n+1-i}`, so `s_1` is the special root.
    Reversed,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootKind,
    /// Ambient dimension of the `ε`-basis.
    n: usize,
    labeling: Labeling,
    simple: Vec<Vec<Q>>,
    simple_coroots: Vec<Vec<Q>>,
    positive: Vec<Vec<Q>>,
    positive_coroots: Vec<Vec<Q>>,
}

fn unit(n: usize, i: usize, c: i64) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = q(c);
    v
}

fn pair(n: usize, i: usize, a: i64, j: usize, b: i64) -> Vec<Q> {
    let mut v = unit(n, i, a);
    v[j] = q(b);
    v
}

fn coroot(beta: &[Q]) -> Vec<Q> {
    let norm = dot(beta, beta);
    beta.iter().map(|x| x * q(2) / &norm).collect()
}

impl RootSystem {
    /// `A_{n-1}`, acting on `R^n`.
    pub fn a(n: usize) -> Result<Self> {
        Self::build(RootKind::A, n, Labeling::Standard)
    }

    pub fn b(n: usize, labeling: Labeling) -> Result<Self> {
        Self::build(RootKind::B, n, labeling)
    }

    pub fn c(n: usize, labeling: Labeling) -> Result<Self> {
        Self::build(RootKind::C, n, labeling)
    }

    pub fn build(kind: RootKind, n: usize, labeling: Labeling) -> Result<Self> {
        let rank = if kind == RootKind::A { n.saturating_sub(1) } else { n };
        if rank == 0 {
            return Err(Error::UnsupportedKind(format!("{kind:?} of rank 0")));
        }
        if rank > 4 {
            return Err(Error::RankTooLarge(rank));
        }
        let mut simple: Vec<Vec<Q>> = (0..n - 1).map(|i| pair(n, i, 1, i + 1, -1)).collect();
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(pair(n, i, 1, j, -1));
                if kind != RootKind::A {
                    positive.push(pair(n, i, 1, j, 1));
                }
            }
        }
        match kind {
            RootKind::A => {}
            RootKind::B => {
                simple.push(unit(n, n - 1, 1));
                positive.extend((0..n).map(|i| unit(n, i, 1)));
            }
            RootKind::C => {
                simple.push(unit(n, n - 1, 2));
                positive.extend((0..n).map(|i| unit(n, i, 2)));
            }
        }
        positive.sort_by(|a, b| b.cmp(a));
        Ok(Self {
            kind,
            n,
            labeling,
            simple_coroots: simple.iter().map(|a| coroot(a)).collect(),
            positive_coroots: positive.iter().map(|a| coroot(a)).collect(),
            simple,
            positive,
        })
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    /// Index into the simple roots for the user-facing label `j`.
    fn simple_index(&self, j: usize) -> Result<usize> {
        let r = self.rank();
        if j == 0 || j > r {
            return Err(Error::InvalidReflection(j));
        }
        Ok(match self.labeling {
            Labeling::Standard => j - 1,
            Labeling::Reversed => r - j,
        })
    }

    fn label_of(&self, k: usize) -> usize {
        match self.labeling {
            Labeling::Standard => k + 1,
            Labeling::Reversed => self.rank() - k,
        }
    }

    /// Simple root for label `j`.
    pub fn simple_root(&self, j: usize) -> Result<&[Q]> {
        Ok(&self.simple[self.simple_index(j)?])
    }

    pub fn simple_coroot(&self, j: usize) -> Result<&[Q]> {
        Ok(&self.simple_coroots[self.simple_index(j)?])
    }

    pub fn positive_roots(&self) -> &[Vec<Q>] {
        &self.positive
    }

    /// `⟨α_i, α_j^∨⟩` in label order.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        (1..=r)
            .map(|i| {
                (1..=r)
                    .map(|j| {
                        let v = dot(self.simple_root(i).unwrap(), self.simple_coroot(j).unwrap());
                        i64::try_from(v.to_integer()).expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            images: (1..=self.n as i32).collect(),
            length: 0,
        }
    }

    fn reflection_images(&self, beta: &[Q]) -> Vec<i32> {
        let cv = coroot(beta);
        (0..self.n)
            .map(|k| {
                let e = unit(self.n, k, 1);
                let c = dot(&e, &cv);
                let img: Vec<Q> = e.iter().zip(beta).map(|(x, b)| x - &c * b).collect();
                let m = img.iter().position(|x| !x.is_zero()).expect("image of a basis vector");
                let idx = m as i32 + 1;
                if img[m].is_positive() {
                    idx
                } else {
                    -idx
                }
            })
            .collect()
    }

    fn element(&self, images: Vec<i32>) -> WeylElement {
        let mut w = WeylElement { images, length: 0 };
        w.length = self.length_of(&w);
        w
    }

    fn length_of(&self, w: &WeylElement) -> usize {
        self.positive
            .iter()
            .filter(|b| {
                let img = w.apply(b);
                img.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative())
            })
            .count()
    }

    /// Reflection in the root `beta`.
    pub fn reflection(&self, beta: &[Q]) -> WeylElement {
        self.element(self.reflection_images(beta))
    }

    /// Simple reflection `s_j` in user labels.
    pub fn simple_reflection(&self, j: usize) -> Result<WeylElement> {
        let k = self.simple_index(j)?;
        Ok(self.element(self.reflection_images(&self.simple[k])))
    }

    /// The element `s_{j_1} ⋯ s_{j_ℓ}`.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut images = self.identity().images;
        for &j in word {
            let s = self.simple_reflection(j)?;
            images = compose(&images, &s.images);
        }
        Ok(self.element(images))
    }

    /// `u v` as group elements.
    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        self.element(compose(&u.images, &v.images))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut inv = vec![0; self.n];
        for (i, &x) in w.images.iter().enumerate() {
            let s = x.signum();
            inv[(x.unsigned_abs() - 1) as usize] = s * (i as i32 + 1);
        }
        self.element(inv)
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length);
        let mut cur = w.clone();
        while cur.length > 0 {
            let (j, next) = (1..=self.rank())
                .find_map(|j| {
                    let s = self.simple_reflection(j).unwrap();
                    let next = self.multiply(&s, &cur);
                    (next.length < cur.length).then_some((j, next))
                })
                .expect("a nonidentity element has a left descent");
            word.push(j);
            cur = next;
        }
        word
    }

    /// The longest element.
    pub fn longest(&self) -> WeylElement {
        let images = match self.kind {
            RootKind::A => (1..=self.n as i32).rev().collect(),
            _ => (1..=self.n as i32).map(|i| -i).collect(),
        };
        self.element(images)
    }

    /// All elements grouped by length, each group sorted by reduced word.
    pub fn weyl_elements(&self) -> Vec<Vec<WeylElement>> {
        let id = self.identity();
        let mut seen = BTreeSet::from([id.images.clone()]);
        let mut queue = VecDeque::from([id]);
        let mut all = Vec::new();
        let gens: Vec<WeylElement> = (1..=self.rank()).map(|j| self.simple_reflection(j).unwrap()).collect();
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let x = self.multiply(&w, s);
                if seen.insert(x.images.clone()) {
                    queue.push_back(x);
                }
            }
            all.push(w);
        }
        let top = all.iter().map(|w| w.length).max().unwrap_or(0);
        let mut groups: Vec<Vec<WeylElement>> = vec![Vec::new(); top + 1];
        for w in all {
            groups[w.length].push(w);
        }
        for g in &mut groups {
            g.sort_by_cached_key(|w| self.reduced_word(w));
        }
        groups
    }

    /// Elements covered by `w` in Bruhat order together with `β^∨`, where the
    /// cover is the map `w ∘ s_β`.
    fn lower_covers(&self, w: &WeylElement) -> Vec<(WeylElement, &[Q])> {
        self.positive
            .iter()
            .zip(&self.positive_coroots)
            .filter_map(|(b, cv)| {
                let x = self.multiply(w, &self.reflection(b));
                (x.length + 1 == w.length).then_some((x, cv.as_slice()))
            })
            .collect()
    }

    /// Checks `λ` against the dominance conditions of the type.
    pub fn check_dominant(&self, lambda: &[i64]) -> Result<()> {
        if lambda.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: lambda.len(),
            });
        }
        let decreasing = lambda.windows(2).all(|p| p[0] >= p[1]);
        let nonneg = self.kind == RootKind::A || lambda.last().is_some_and(|&x| x >= 0);
        if decreasing && nonneg {
            Ok(())
        } else {
            Err(Error::NotDominant(lambda.to_vec()))
        }
    }

    /// `deg_λ(X_w)` by the Chevalley recursion
    /// `deg(X_w) = Σ ⟨λ, β^∨⟩ deg(X_{w s_β})` over lower covers.
    pub fn chevalley_degree(&self, w: &WeylElement, lambda: &[Q]) -> Q {
        let mut memo = HashMap::new();
        self.chevalley_rec(w, lambda, &mut memo)
    }

    fn chevalley_rec(&self, w: &WeylElement, lambda: &[Q], memo: &mut HashMap<Vec<i32>, Q>) -> Q {
        if w.length == 0 {
            return Q::one();
        }
        if let Some(v) = memo.get(&w.images) {
            return v.clone();
        }
        let mut total = Q::zero();
        for (x, cv) in self.lower_covers(w) {
            let c = dot(lambda, cv);
            if !c.is_zero() {
                total += c * self.chevalley_rec(&x, lambda, memo);
            }
        }
        memo.insert(w.images.clone(), total.clone());
        total
    }

    /// The same recursion carried out symbolically in `λ_1, …, λ_n`.
    pub fn chevalley_polynomial(&self, w: &WeylElement) -> Poly {
        let mut memo = HashMap::new();
        self.chevalley_poly_rec(w, &mut memo)
    }

    fn chevalley_poly_rec(&self, w: &WeylElement, memo: &mut HashMap<Vec<i32>, Poly>) -> Poly {
        if w.length == 0 {
            return Poly::constant(self.n, Q::one());
        }
        if let Some(p) = memo.get(&w.images) {
            return p.clone();
        }
        let mut total = Poly::zero(self.n);
        for (x, cv) in self.lower_covers(w) {
            let term = &Poly::linear(cv) * &self.chevalley_poly_rec(&x, memo);
            total = &total + &term;
        }
        memo.insert(w.images.clone(), total.clone());
        total
    }

    /// Reduced words of `w` occurring as (scattered) subwords of `pattern`,
    /// deduplicated and sorted lexicographically.
    pub fn reduced_subwords(&self, w: &WeylElement, pattern: &[usize]) -> Result<Vec<Vec<usize>>> {
        for &j in pattern {
            self.simple_index(j)?;
        }
        let l = w.length;
        let mut out = BTreeSet::new();
        let mut chosen = Vec::with_capacity(l);
        self.subwords_rec(w, pattern, 0, &mut chosen, &mut out);
        Ok(out.into_iter().collect())
    }

    fn subwords_rec(
        &self,
        w: &WeylElement,
        pattern: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if chosen.len() == w.length {
            if self.from_word(chosen).is_ok_and(|x| x == *w) {
                out.insert(chosen.clone());
            }
            return;
        }
        let need = w.length - chosen.len();
        for p in start..pattern.len() {
            if pattern.len() - p < need {
                break;
            }
            chosen.push(pattern[p]);
            // prune words that already fail to be reduced
            if self.from_word(chosen).is_ok_and(|x| x.length == chosen.len()) {
                self.subwords_rec(w, pattern, p + 1, chosen, out);
            }
            chosen.pop();
        }
    }

    pub fn label_for_simple_index(&self, k: usize) -> usize {
        self.label_of(k)
    }
}

/// `(a ∘ b)` for signed permutations given by images of `1..=n`.
fn compose(a: &[i32], b: &[i32]) -> Vec<i32> {
    b.iter()
        .map(|&x| {
            let y = a[(x.unsigned_abs() - 1) as usize];
            if x < 0 {
                -y
            } else {
                y
            }
        })
        .collect()
}

/// A Weyl group element as the signed permutation `ε_i ↦ ±ε_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    images: Vec<i32>,
    length: usize,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length
    }

    /// Signed images of `ε_1, …, ε_n`, 1-based.
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); x.len()];
        for (i, &t) in self.images.iter().enumerate() {
            let j = (t.unsigned_abs() - 1) as usize;
            out[j] = if t < 0 { -x[i].clone() } else { x[i].clone() };
        }
        out
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(i32::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A Weyl element together with its root system, serialized as a reduced word.
pub struct Word<'a>(pub &'a RootSystem, pub &'a WeylElement);

impl Serialize for Word<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.reduced_word(self.1).serialize(s)
    }
}

/// Format a word as `1,2,1`; the empty word prints as `e`.
pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

/// `λ` as rationals.
pub fn weight(lambda: &[i64]) -> Vec<Q> {
    lambda.iter().map(|&x| q(x)).collect()
}

/// Whether every coordinate pairing with a simple coroot is positive.
pub fn is_strictly_dominant(rs: &RootSystem, lambda: &[Q]) -> bool {
    (1..=rs.rank()).all(|j| dot(lambda, rs.simple_coroot(j).unwrap()).is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(rs: &RootSystem) -> Vec<usize> {
        rs.weyl_elements().iter().map(Vec::len).collect()
    }

    #[test]
    fn group_sizes() {
        assert_eq!(sizes(&RootSystem::a(3).unwrap()), vec![1, 2, 2, 1]);
        assert_eq!(sizes(&RootSystem::c(2, Labeling::Standard).unwrap()), vec![1, 2, 2, 2, 1]);
        assert_eq!(sizes(&RootSystem::a(4).unwrap()), vec![1, 3, 5, 6, 5, 3, 1]);
        assert_eq!(sizes(&RootSystem::b(3, Labeling::Standard).unwrap()).iter().sum::<usize>(), 48);
        assert_eq!(RootSystem::a(6).unwrap_err(), Error::RankTooLarge(5));
    }

    #[test]
    fn cartan_matrices() {
        let c2 = RootSystem::c(2, Labeling::Standard).unwrap();
        assert_eq!(c2.cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
        let c2r = RootSystem::c(2, Labeling::Reversed).unwrap();
        assert_eq!(c2r.cartan_matrix(), vec![vec![2, -2], vec![-1, 2]]);
        let b3 = RootSystem::b(3, Labeling::Standard).unwrap();
        assert_eq!(b3.cartan_matrix(), vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
        let a3 = RootSystem::a(4).unwrap();
        assert_eq!(a3.cartan_matrix()[1], vec![-1, 2, -1]);
    }

    #[test]
    fn words_and_lengths() {
        let a = RootSystem::a(3).unwrap();
        let w = a.from_word(&[1, 2, 1]).unwrap();
        assert_eq!(w, a.longest());
        assert_eq!(a.from_word(&[2, 1, 2]).unwrap(), w);
        assert_eq!(a.reduced_word(&w), vec![1, 2, 1]);
        assert_eq!(a.from_word(&[1, 1]).unwrap(), a.identity());
        let s12 = a.from_word(&[1, 2]).unwrap();
        assert_eq!(a.reduced_word(&s12), vec![1, 2]);
        assert_eq!(a.inverse(&s12), a.from_word(&[2, 1]).unwrap());
        let c = RootSystem::c(2, Labeling::Standard).unwrap();
        assert_eq!(c.longest().length(), 4);
        assert_eq!(c.from_word(&[1, 2, 1, 2]).unwrap(), c.longest());
    }

    #[test]
    fn chevalley_degrees() {
        let a = RootSystem::a(3).unwrap();
        assert_eq!(a.chevalley_degree(&a.identity(), &weight(&[5, 1, 0])), q(1));
        assert_eq!(a.chevalley_degree(&a.longest(), &weight(&[3, 0, -3])), q(162));
        let c = RootSystem::c(2, Labeling::Standard).unwrap();
        assert_eq!(c.chevalley_degree(&c.longest(), &weight(&[2, 1])), q(24));
        let b = RootSystem::b(2, Labeling::Standard).unwrap();
        assert_eq!(b.chevalley_degree(&b.longest(), &weight(&[2, 1])), q(96));
    }

    #[test]
    fn kogan_face_degree_in_type_a() {
        // The face x^1_2 = 0 has area ((l1-l3)^2 - (l2-l3)^2)/2. Labels are
        // reversed as for the GZ polytope.
        let a = RootSystem::build(RootKind::A, 3, Labeling::Reversed).unwrap();
        let w = a.from_word(&[1, 2]).unwrap();
        for l in [[3, 1, 0], [7, 2, -4]] {
            let (l1, l2, l3): (i64, i64, i64) = (l[0], l[1], l[2]);
            let expect = (l1 - l3).pow(2) - (l2 - l3).pow(2);
            assert_eq!(a.chevalley_degree(&w, &weight(&l)), q(expect));
        }
    }

    #[test]
    fn symbolic_matches_numeric() {
        let c = RootSystem::c(3, Labeling::Reversed).unwrap();
        for group in c.weyl_elements() {
            for w in group.iter().take(2) {
                let p = c.chevalley_polynomial(w);
                assert!(p.is_homogeneous());
                let lam = weight(&[5, 3, 2]);
                assert_eq!(p.eval(&lam), c.chevalley_degree(w, &lam));
            }
        }
    }

    #[test]
    fn subwords() {
        let a = RootSystem::a(3).unwrap();
        assert_eq!(a.reduced_subwords(&a.identity(), &[1, 2, 1]).unwrap(), vec![Vec::<usize>::new()]);
        let w = a.from_word(&[1, 2]).unwrap();
        assert_eq!(a.reduced_subwords(&w, &[1, 2, 1]).unwrap(), vec![vec![1, 2]]);
        let c = RootSystem::c(2, Labeling::Standard).unwrap();
        assert_eq!(c.reduced_subwords(&c.longest(), &[1, 2, 1, 2]).unwrap(), vec![vec![1, 2, 1, 2]]);
        let s2 = a.from_word(&[2]).unwrap();
        assert!(a.reduced_subwords(&s2, &[1]).unwrap().is_empty());
    }

    #[test]
    fn dominance() {
        let c = RootSystem::c(2, Labeling::Standard).unwrap();
        assert!(c.check_dominant(&[2, 1]).is_ok());
        assert_eq!(c.check_dominant(&[2, -1]), Err(Error::NotDominant(vec![2, -1])));
        let a = RootSystem::a(3).unwrap();
        assert!(a.check_dominant(&[3, 0, -3]).is_ok());
        assert!(is_strictly_dominant(&a, &weight(&[3, 0, -3])));
        assert!(!is_strictly_dominant(&a, &weight(&[1, 1, 0])));
    }
}
