//! The partial symmetrization `S^(d)` of the generic tensor algebra,
//! Young^d_n tabloids and their membership certificates.
//!
//! A monomial `z_{A_1}⋯z_{A_n}` over `[nd]` is stored by its set partition:
//! blocks are sorted internally and ordered by their least element.

use std::collections::hash_map::Entry;
use std::collections::{btree_map, BTreeMap};
use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Serialize, Serializer};

use crate::algebra::AlgebraElement;
use crate::certificate::membership_certificate;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::symmetrizer::FactoredSymmetrizer;
use crate::tableau::YoungTableau;
use crate::tensor::{Filling, TensorElement};

/// A basis monomial of `S^(d)`: `labels[e-1]` is the block holding `e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMonomial {
    d: usize,
    labels: Vec<u16>,
}

impl SymMonomial {
    /// Renumbers blocks by first appearance.
    fn normalize(d: usize, raw: &[u16]) -> Self {
        let mut map = vec![u16::MAX; raw.len() / d.max(1) + 1];
        let mut next = 0u16;
        let labels = raw
            .iter()
            .map(|&b| {
                let slot = &mut map[b as usize];
                if *slot == u16::MAX {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect();
        SymMonomial { d, labels }
    }

    /// From explicit blocks partitioning `[nd]` into sets of size `d`.
    pub fn from_blocks(d: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let size = blocks.len() * d;
        let mut raw = vec![u16::MAX; size];
        for (i, b) in blocks.iter().enumerate() {
            if b.len() != d {
                return Err(Error::Precondition(format!("block {b:?} does not have {d} elements")));
            }
            for &e in b {
                if e == 0 || e > size {
                    return Err(Error::EntryOutOfRange { entry: e, bound: size });
                }
                if raw[e - 1] != u16::MAX {
                    return Err(Error::RepeatedEntry { entry: e });
                }
                raw[e - 1] = i as u16;
            }
        }
        Ok(Self::normalize(d, &raw))
    }

    /// `z_{{1..d}}·z_{{d+1..2d}}⋯` with `n` blocks.
    pub fn identity(n: usize, d: usize) -> Self {
        SymMonomial { d, labels: (0..n * d).map(|e| (e / d) as u16).collect() }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of blocks.
    pub fn degree(&self) -> usize {
        self.labels.len() / self.d
    }

    /// Number of underlying letters, `nd`.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.degree()];
        for (e, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(e + 1);
        }
        out
    }

    /// `σ·z_{A̲} = z_{σ(A̲)}`.
    pub fn act(&self, sigma: &Permutation) -> SymMonomial {
        let mut raw = vec![0u16; self.labels.len()];
        for (e, &b) in self.labels.iter().enumerate() {
            raw[sigma.apply(e + 1) - 1] = b;
        }
        Self::normalize(self.d, &raw)
    }

    /// Product of monomials; the letters of `other` are shifted past ours.
    pub fn concat(&self, other: &SymMonomial) -> SymMonomial {
        let shift = self.degree() as u16;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|&b| b + shift));
        SymMonomial { d: self.d, labels }
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.labels.is_empty() {
            return write!(f, "1");
        }
        for b in self.blocks() {
            let s: Vec<String> = b.iter().map(|e| e.to_string()).collect();
            write!(f, "{{{}}}", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{self}")
    }
}

impl Serialize for SymMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An element of the degree-`n` piece of `S^(d)`, realized on `[nd]`.
#[derive(Clone)]
pub struct SymElement {
    d: usize,
    size: usize,
    terms: FxHashMap<SymMonomial, Rational>,
}

impl SymElement {
    pub fn zero(d: usize, size: usize) -> Self {
        SymElement { d, size, terms: FxHashMap::default() }
    }

    pub fn from_monomial(m: SymMonomial) -> Self {
        let mut x = Self::zero(m.d, m.size());
        x.terms.insert(m, Rational::one());
        x
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.size
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

    pub fn coeff(&self, m: &SymMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn sorted_terms(&self) -> Vec<(SymMonomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn add_term(&mut self, m: SymMonomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &SymElement) -> Result<()> {
        if other.size != self.size {
            return Err(Error::DegreeMismatch { left: self.size, right: other.size });
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), &(c * v));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> SymElement {
        let mut out = Self::zero(self.d, self.size);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(c * v));
        }
        out
    }

    pub fn act_perm(&self, sigma: &Permutation) -> SymElement {
        let mut out = Self::zero(self.d, self.size);
        for (m, v) in &self.terms {
            out.add_term(m.act(sigma), v);
        }
        out
    }

    /// `x·self` for `x ∈ Q[S_{nd}]`.
    pub fn act(&self, x: &AlgebraElement) -> Result<SymElement> {
        if x.degree() != self.size {
            return Err(Error::DegreeMismatch { left: x.degree(), right: self.size });
        }
        let mut out = Self::zero(self.d, self.size);
        for (p, c) in x.terms() {
            for (m, v) in &self.terms {
                out.add_term(m.act(p), &(c * v));
            }
        }
        Ok(out)
    }

    /// The product in `S^(d)`.
    pub fn concat(&self, other: &SymElement) -> SymElement {
        let mut out = Self::zero(self.d, self.size + other.size);
        for (m, v) in &self.terms {
            for (w, c) in &other.terms {
                out.add_term(m.concat(w), &(v * c));
            }
        }
        out
    }
}

impl PartialEq for SymElement {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.size == other.size && self.terms == other.terms
    }
}

impl Eq for SymElement {}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.sorted_terms().iter().map(|(m, c)| format!("{c}*z{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct SymTermJson {
    monomial: SymMonomial,
    coeff: Rational,
}

#[derive(Serialize)]
struct SymElementJson {
    d: usize,
    size: usize,
    terms: Vec<SymTermJson>,
}

impl Serialize for SymElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymElementJson {
            d: self.d,
            size: self.size,
            terms: self.sorted_terms().into_iter().map(|(monomial, coeff)| SymTermJson { monomial, coeff }).collect(),
        }
        .serialize(s)
    }
}

/// `π(z_α)`: block `i` is `α({d(i−1)+1, …, di})`.
pub fn project_monomial(alpha: &Permutation, d: usize) -> Result<SymMonomial> {
    let n = alpha.degree();
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotDivisible { degree: n, d });
    }
    let mut raw = vec![0u16; n];
    for j in 1..=n {
        raw[alpha.apply(j) - 1] = ((j - 1) / d) as u16;
    }
    Ok(SymMonomial::normalize(d, &raw))
}

/// The symmetrization map `π`, extended linearly.
pub fn project_sym(x: &TensorElement, d: usize) -> Result<SymElement> {
    let n = x.degree();
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotDivisible { degree: n, d });
    }
    let mut out = SymElement::zero(d, n);
    for (p, c) in x.value().terms() {
        out.add_term(project_monomial(p, d)?, c);
    }
    Ok(out)
}

/// `c_λ(T_can)·z_{T_can∘F⁻¹}` in `S^(d)`, for a filling in which every
/// label of `[n]` occurs `d` times.
pub fn realize_dn_tabloid(f: &Filling, d: usize) -> Result<SymElement> {
    f.check_fibers(d)?;
    let size = f.size();
    let t = YoungTableau::canonical(f.shape());
    let mut raw = vec![0u16; size];
    for (i, row) in f.rows().iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            raw[t.entry(i + 1, j + 1).unwrap() - 1] = (e - 1) as u16;
        }
    }
    let mut x = SymElement::from_monomial(SymMonomial::normalize(d, &raw));
    let fs = FactoredSymmetrizer::new(&t, size)?;
    for (sign, taus) in fs.left_c_steps() {
        let s = Rational::from(sign);
        let mut next = x.clone();
        for tau in taus {
            next.add_scaled(&s, &x.act_perm(tau))?;
        }
        x = next;
    }
    Ok(x)
}

/// A Young^d_n tabloid together with its realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DnTabloid {
    pub filling: Filling,
    pub d: usize,
    pub realization: SymElement,
}

impl DnTabloid {
    pub fn new(filling: Filling, d: usize) -> Result<Self> {
        let realization = realize_dn_tabloid(&filling, d)?;
        Ok(DnTabloid { filling, d, realization })
    }
}

/// The lift sending the `j`-th occurrence of `i` (reading order) to
/// `d(i−1)+j`.
pub fn lift(f: &Filling, d: usize) -> Result<Filling> {
    let n = f.check_fibers(d)?;
    let mut seen = vec![0usize; n + 1];
    let rows = f
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&i| {
                    seen[i] += 1;
                    d * (i - 1) + seen[i]
                })
                .collect()
        })
        .collect();
    Filling::new(rows)
}

/// All fillings of `shape` using each label of `[|shape|/d]` exactly `d`
/// times, in lexicographic order of the reading word.
pub fn dn_fillings(shape: &Partition, d: usize) -> Result<Vec<Filling>> {
    let size = shape.size();
    if d == 0 || !size.is_multiple_of(d) {
        return Err(Error::NotDivisible { degree: size, d });
    }
    let mut word: Vec<usize> = (0..size).map(|e| e / d + 1).collect();
    let mut out = Vec::new();
    loop {
        let mut it = word.iter().copied();
        out.push(Filling::new(shape.parts().iter().map(|&p| it.by_ref().take(p).collect()).collect())?);
        if !next_permutation(&mut word) {
            return Ok(out);
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("a larger element exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// One term `left·([generator]·z_right)` in `S^(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DnSummand {
    pub left: AlgebraElement,
    pub generator: Filling,
    pub right: SymMonomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DnCertificate {
    pub target: Filling,
    pub d: usize,
    pub k: usize,
    pub scale: Rational,
    pub summands: Vec<DnSummand>,
}

impl DnCertificate {
    /// Checks `α·[F] = Σ left·([G₀]·z_right)` in `S^(d)`.
    pub fn verify(&self) -> Result<bool> {
        let lhs = realize_dn_tabloid(&self.target, self.d)?.scale(&self.scale);
        let mut rhs = SymElement::zero(self.d, self.target.size());
        for s in &self.summands {
            let g = realize_dn_tabloid(&s.generator, self.d)?;
            let prod = g.concat(&SymElement::from_monomial(s.right.clone()));
            rhs.add_scaled(&Rational::one(), &prod.act(&s.left)?)?;
        }
        Ok(lhs == rhs)
    }

    pub fn generators(&self) -> Vec<&Filling> {
        let mut g: Vec<&Filling> = self.summands.iter().map(|s| &s.generator).collect();
        g.sort();
        g.dedup();
        g
    }
}

/// Lifts `F` to a plain filling, builds its certificate with cutoff `kd`
/// and pushes every piece through `π`.
pub fn dn_membership_certificate(f: &Filling, d: usize, k: usize) -> Result<DnCertificate> {
    let n = f.check_fibers(d)?;
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("cutoff {k} outside 1..={n}")));
    }
    f.split_shape(k)?;
    let cert = membership_certificate(&lift(f, d)?, k * d)?;
    let mut merged: BTreeMap<(Filling, SymMonomial), AlgebraElement> = BTreeMap::new();
    for s in cert.summands {
        let generator = s.generator.relabel(|j| (j - 1) / d + 1)?;
        let right = project_monomial(&s.right, d)?;
        match merged.entry((generator, right)) {
            btree_map::Entry::Occupied(mut e) => e.get_mut().add_assign(&s.left)?,
            btree_map::Entry::Vacant(e) => {
                e.insert(s.left);
            }
        }
    }
    Ok(DnCertificate {
        target: f.clone(),
        d,
        k,
        scale: cert.scale,
        summands: merged
            .into_iter()
            .filter(|(_, left)| !left.is_zero())
            .map(|((generator, right), left)| DnSummand { left, generator, right })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::realize_tabloid;

    fn f(s: &str) -> Filling {
        s.parse().unwrap()
    }

    #[test]
    fn projection_of_identity() {
        let m = project_monomial(&Permutation::identity(6), 3).unwrap();
        assert_eq!(m.to_string(), "{1,2,3}{4,5,6}");
        assert_eq!(m, SymMonomial::identity(2, 3));
        assert!(matches!(project_monomial(&Permutation::identity(5), 3), Err(Error::NotDivisible { .. })));
        let swapped = Permutation::parse_one_line("[4,5,6,1,2,3]").unwrap();
        assert_eq!(project_monomial(&swapped, 3).unwrap(), m);
    }

    #[test]
    fn repeated_column_entry_vanishes() {
        let x = realize_dn_tabloid(&f("1,2,3,1,3,3/2,4,4/1,2/4"), 3).unwrap();
        assert!(x.is_zero());
        let y = realize_dn_tabloid(&f("1,3,4,1,4,4/3,2,2/1,3/2"), 3).unwrap();
        assert!(y.is_zero());
    }

    #[test]
    fn relabeling_does_not_change_the_tabloid() {
        let a = realize_dn_tabloid(&f("1,1/2,2"), 2).unwrap();
        let b = realize_dn_tabloid(&f("2,2/1,1"), 2).unwrap();
        assert!(!a.is_zero());
        assert_eq!(a, b);
    }

    #[test]
    fn d_one_is_the_projected_tabloid() {
        for s in ["1,2/3", "2,1/3", "1,2,3", "3/1/2"] {
            let x = realize_dn_tabloid(&f(s), 1).unwrap();
            let y = project_sym(&realize_tabloid(&f(s)).unwrap(), 1).unwrap();
            assert_eq!(x, y, "{s}");
        }
    }

    #[test]
    fn triangles() {
        // A reflection of the triangle flips one edge column, so [Q] = −[Q].
        assert!(realize_dn_tabloid(&f("1,1,2/2,3,3"), 2).unwrap().is_zero());
        assert!(realize_dn_tabloid(&f("1,1,2,1,2,3/2,3,3"), 3).unwrap().is_zero());
        // (3,1) does not occur in Sym^2(Sym^2).
        assert!(realize_dn_tabloid(&f("1,1,2/2"), 2).unwrap().is_zero());
        // A triangle with a doubled edge survives.
        // (5,4) does not occur in Sym^3(Sym^3) either.
        assert!(realize_dn_tabloid(&f("1,1,1,2,3/2,2,3,3"), 3).unwrap().is_zero());
        // A path with a doubled edge in shape (6,3) survives.
        assert!(!realize_dn_tabloid(&f("1,1,2,1,3,3/2,2,3"), 3).unwrap().is_zero());
    }

    #[test]
    fn agrees_with_projected_lift() {
        for (s, d) in [("1,1/2,2", 2), ("1,2/1,2", 2), ("1,1,2/2", 2), ("1,2,2/1", 2), ("1,1,2/2,3,3", 2), ("1,2,3/1,2,3", 2), ("1,1,2,2/3,3", 2), ("1,2,3/1/2/3", 2), ("1,1,2,1,3,3/2,2,3", 3)] {
            let x = realize_dn_tabloid(&f(s), d).unwrap();
            let y = project_sym(&realize_tabloid(&lift(&f(s), d).unwrap()).unwrap(), d).unwrap();
            assert_eq!(x, y, "{s}");
        }
    }

    #[test]
    fn fiber_errors() {
        assert!(matches!(realize_dn_tabloid(&f("1,1,1/2"), 2), Err(Error::FiberSize { entry: 1, found: 3, expected: 2 })));
        assert!(matches!(realize_dn_tabloid(&f("1,1,2"), 2), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn small_dn_certificate() {
        let c = dn_membership_certificate(&f("1,1/2,2"), 2, 1).unwrap();
        assert!(c.verify().unwrap());
        let c = dn_membership_certificate(&f("1,2/1,2"), 2, 2).unwrap();
        assert_eq!(c.summands.len(), 1);
        assert!(c.verify().unwrap());
    }

    #[test]
    fn counting_fillings() {
        assert_eq!(dn_fillings(&"2,2".parse().unwrap(), 2).unwrap().len(), 6);
        assert_eq!(dn_fillings(&"3,3".parse().unwrap(), 2).unwrap().len(), 90);
    }
}
