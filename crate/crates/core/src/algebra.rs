//! Sparse exact elements of the group algebra `Q[S_n]`.

use std::collections::hash_map::Entry;
use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parallel::{map_reduce, Execution};
use crate::perm::Permutation;
use crate::rational::Rational;

pub type TermMap = FxHashMap<Permutation, Rational>;

/// Above this many term pairs a parallel multiplication splits the work.
const PARALLEL_PAIR_THRESHOLD: usize = 1 << 16;

/// A finite linear combination of permutations of a fixed degree. No stored
/// coefficient is ever zero.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    degree: usize,
    terms: TermMap,
}

fn accumulate(map: &mut TermMap, key: Permutation, c: Rational) {
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            let v = e.get_mut();
            *v += &c;
            if v.is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
    }
}

impl AlgebraElement {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement { degree, terms: TermMap::default() }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_perm(Permutation::identity(degree))
    }

    pub fn from_perm(p: Permutation) -> Self {
        Self::from_term(p, Rational::one())
    }

    pub fn from_term(p: Permutation, c: Rational) -> Self {
        let mut e = Self::zero(p.degree());
        accumulate(&mut e.terms, p, c);
        e
    }

    pub fn scalar(degree: usize, c: Rational) -> Self {
        Self::from_term(Permutation::identity(degree), c)
    }

    /// Sums the given terms; duplicates are merged and zeros dropped.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut e = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: p.degree() });
            }
            accumulate(&mut e.terms, p, c);
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    /// Terms in lexicographic order of the one-line word.
    pub fn sorted_terms(&self) -> Vec<(Permutation, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(p, c)| (p.clone(), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    /// `a*f + b*g`.
    pub fn linear(a: &Rational, f: &Self, b: &Rational, g: &Self) -> Result<Self> {
        f.check_degree(g)?;
        let mut out = Self::zero(f.degree);
        if !a.is_zero() {
            for (p, c) in &f.terms {
                accumulate(&mut out.terms, p.clone(), a * c);
            }
        }
        if !b.is_zero() {
            for (p, c) in &g.terms {
                accumulate(&mut out.terms, p.clone(), b * c);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(&Rational::from(-1), other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.add_scaled(&Rational::one(), other)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) -> Result<()> {
        self.check_degree(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (p, v) in &other.terms {
            accumulate(&mut self.terms, p.clone(), c * v);
        }
        Ok(())
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.degree() });
        }
        accumulate(&mut self.terms, p, c);
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), c * v)).collect(),
        }
    }

    /// Convolution product, parallel when the `parallel` feature is enabled
    /// and the operands are large.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, Execution::Parallel)
    }

    pub fn mul_with(&self, other: &Self, exec: Execution) -> Result<Self> {
        self.check_degree(other)?;
        if other.len() == 1 {
            let (p, c) = other.terms.iter().next().unwrap();
            return Ok(self.mul_perm_right(p).scale(c));
        }
        if self.len() == 1 {
            let (p, c) = self.terms.iter().next().unwrap();
            return Ok(other.mul_perm_left(p).scale(c));
        }
        if exec == Execution::Parallel
            && Execution::parallel_available()
            && self.len() * other.len() >= PARALLEL_PAIR_THRESHOLD
        {
            Ok(self.mul_parallel(other))
        } else {
            Ok(self.mul_sequential(other))
        }
    }

    /// The plain double loop over term pairs.
    pub fn mul_sequential(&self, other: &Self) -> Self {
        let mut out = TermMap::default();
        out.reserve(self.len().max(other.len()));
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                accumulate(&mut out, p.compose_unchecked(q), a * b);
            }
        }
        AlgebraElement { degree: self.degree, terms: out }
    }

    /// Splits the left operand into chunks, multiplies each chunk into its own
    /// map, and merges the partial maps.
    pub fn mul_parallel(&self, other: &Self) -> Self {
        let left: Vec<(&Permutation, &Rational)> = self.terms.iter().collect();
        let chunk = (left.len() / 64).max(1);
        let chunks: Vec<&[(&Permutation, &Rational)]> = left.chunks(chunk).collect();
        let terms = map_reduce(
            Execution::Parallel,
            &chunks,
            TermMap::default(),
            |part| {
                let mut out = TermMap::default();
                for (p, a) in part.iter() {
                    for (q, b) in &other.terms {
                        accumulate(&mut out, p.compose_unchecked(q), *a * b);
                    }
                }
                out
            },
            |mut x, y| {
                if x.len() < y.len() {
                    return merge_maps(y, x);
                }
                for (p, c) in y {
                    accumulate(&mut x, p, c);
                }
                x
            },
        );
        AlgebraElement { degree: self.degree, terms }
    }

    /// `self * p`; re-indexes keys without coefficient arithmetic.
    pub fn mul_perm_right(&self, p: &Permutation) -> Self {
        debug_assert_eq!(p.degree(), self.degree);
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(q, c)| (q.compose_unchecked(p), c.clone())).collect(),
        }
    }

    /// `p * self`.
    pub fn mul_perm_left(&self, p: &Permutation) -> Self {
        debug_assert_eq!(p.degree(), self.degree);
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(q, c)| (p.compose_unchecked(q), c.clone())).collect(),
        }
    }

    /// `d * self * d^-1`.
    pub fn conjugate(&self, d: &Permutation) -> Result<Self> {
        if d.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: d.degree(), right: self.degree });
        }
        let di = d.inverse();
        Ok(AlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(q, c)| (d.compose_unchecked(&q.compose_unchecked(&di)), c.clone()))
                .collect(),
        })
    }

    /// Bilinear extension of the graded product of permutations.
    pub fn star(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                accumulate(&mut out.terms, p.star(q), a * b);
            }
        }
        out
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a, I>(degree: usize, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a AlgebraElement>,
    {
        let mut acc = Self::identity(degree);
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.degree);
        for _ in 0..k {
            acc = acc.mul(self).expect("same degree");
        }
        acc
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }

    /// The sum of all permutations of `set`, fixing everything else.
    pub fn symmetrize_set(set: &[usize], n: usize) -> Result<Self> {
        Self::signed_group_sum(set, n, false)
    }

    /// The signed sum of all permutations of `set`.
    pub fn antisymmetrize_set(set: &[usize], n: usize) -> Result<Self> {
        Self::signed_group_sum(set, n, true)
    }

    fn signed_group_sum(set: &[usize], n: usize, signed: bool) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &x in set {
            if x == 0 || x > n {
                return Err(Error::EntryOutOfRange { entry: x, bound: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedEntry { entry: x });
            }
        }
        let mut out = Self::zero(n);
        let base = Permutation::identity(n);
        for sub in Permutation::all(set.len()) {
            let mut w = base.word().to_vec();
            for (i, &x) in set.iter().enumerate() {
                w[x - 1] = set[sub.apply(i + 1) - 1] as u16;
            }
            let c = if signed { Rational::from(sub.sign()) } else { Rational::one() };
            out.terms.insert(Permutation::from_word_unchecked(w.into_iter().collect()), c);
        }
        Ok(out)
    }
}

fn merge_maps(mut x: TermMap, y: TermMap) -> TermMap {
    for (p, c) in y {
        accumulate(&mut x, p, c);
    }
    x
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.sorted_terms().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{}", p.to_cycle_string())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    perm: Permutation,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            degree: self.degree,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(perm, c)| TermJson { perm, coeff: c.to_fraction_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ElementJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: Rational = t.coeff.parse().map_err(D::Error::custom)?;
            terms.push((t.perm, c));
        }
        AlgebraElement::from_terms(raw.degree, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn t(n: usize, a: usize, b: usize) -> Permutation {
        Permutation::transposition(n, a, b).unwrap()
    }

    #[test]
    fn linear_examples() {
        let f = AlgebraElement::from_terms(3, [(t(3, 1, 2), q(2, 3)), (Permutation::identity(3), q(1, 1))]).unwrap();
        let z = AlgebraElement::linear(&q(1, 1), &f, &q(-1, 1), &f).unwrap();
        assert!(z.is_zero());
        let id = AlgebraElement::identity(2);
        let s = AlgebraElement::linear(&q(2, 1), &id, &q(3, 1), &id).unwrap();
        assert_eq!(s, AlgebraElement::scalar(2, q(5, 1)));
        let a = AlgebraElement::scalar(2, q(1, 2));
        let b = AlgebraElement::from_term(t(2, 1, 2), q(1, 3));
        let s = AlgebraElement::linear(&q(1, 1), &a, &q(1, 1), &b).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(&Permutation::identity(2)), q(1, 2));
        assert_eq!(s.coeff(&t(2, 1, 2)), q(1, 3));
        assert!(AlgebraElement::linear(&q(1, 1), &a, &q(1, 1), &AlgebraElement::identity(3)).is_err());
    }

    #[test]
    fn multiply_by_identity_and_degree_check() {
        let f = AlgebraElement::symmetrize_set(&[1, 3], 3).unwrap();
        assert_eq!(f.mul(&AlgebraElement::identity(3)).unwrap(), f);
        assert!(f.mul(&AlgebraElement::identity(2)).is_err());
    }

    #[test]
    fn group_sums() {
        assert_eq!(AlgebraElement::symmetrize_set(&[], 3).unwrap(), AlgebraElement::identity(3));
        assert_eq!(AlgebraElement::symmetrize_set(&[2], 3).unwrap(), AlgebraElement::identity(3));
        let a = AlgebraElement::symmetrize_set(&[1, 2], 2).unwrap();
        assert_eq!(a.coeff(&t(2, 1, 2)), q(1, 1));
        assert_eq!(a.len(), 2);
        let b = AlgebraElement::antisymmetrize_set(&[1, 2], 2).unwrap();
        assert_eq!(b.coeff(&t(2, 1, 2)), q(-1, 1));
        assert_eq!(AlgebraElement::antisymmetrize_set(&[1], 3).unwrap(), AlgebraElement::identity(3));
        let a3 = AlgebraElement::symmetrize_set(&[1, 2, 3], 4).unwrap();
        assert_eq!(a3.len(), 6);
        assert!(a3.support().all(|p| p.apply(4) == 4));
        assert!(AlgebraElement::symmetrize_set(&[1, 5], 4).is_err());
        assert!(AlgebraElement::symmetrize_set(&[1, 1], 4).is_err());
    }

    #[test]
    fn quasi_idempotent_group_sums() {
        let a = AlgebraElement::symmetrize_set(&[1, 2, 4], 4).unwrap();
        assert_eq!(a.mul(&a).unwrap(), a.scale(&q(6, 1)));
        let b = AlgebraElement::antisymmetrize_set(&[2, 3, 4], 4).unwrap();
        assert_eq!(b.mul(&b).unwrap(), b.scale(&q(6, 1)));
        // |{1,2,4} ∩ {2,3,4}| = 2
        assert!(b.mul(&a).unwrap().is_zero());
        assert!(a.mul(&b).unwrap().is_zero());
    }

    #[test]
    fn conjugation_moves_the_set() {
        let d: Permutation = "(1 4 2)".parse::<Permutation>().unwrap().pad_to(4).unwrap();
        let a = AlgebraElement::symmetrize_set(&[1, 3], 4).unwrap();
        let moved = AlgebraElement::symmetrize_set(&[d.apply(1), d.apply(3)], 4).unwrap();
        assert_eq!(a.conjugate(&d).unwrap(), moved);
        assert_eq!(a.conjugate(&Permutation::identity(4)).unwrap(), a);
    }

    #[test]
    fn sequential_and_parallel_products_agree() {
        let a = AlgebraElement::symmetrize_set(&[1, 2, 3, 4, 5], 6).unwrap();
        let b = AlgebraElement::antisymmetrize_set(&[2, 4, 6], 6).unwrap().add(&a).unwrap();
        assert_eq!(a.mul_sequential(&b), a.mul_parallel(&b));
    }

    #[test]
    fn json_layout() {
        let e = AlgebraElement::from_terms(2, [(t(2, 1, 2), q(-1, 3)), (Permutation::identity(2), q(2, 1))]).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"degree":2,"terms":[{"perm":[1,2],"coeff":"2/1"},{"perm":[2,1],"coeff":"-1/3"}]}"#);
        let back: AlgebraElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
