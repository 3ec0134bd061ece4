//! The generic tensor algebra at the canonical realization `A = [n]`, Young
//! tabloids and the straightening algorithm.
//!
//! A basis monomial `z_α` of degree `n` is the permutation `α` of `[n]`;
//! the left `S_n`-action is composition, and concatenation of monomials is
//! [`Permutation::star`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::symmetrizer::young_symmetrizer_cached;
use crate::tableau::{parse_rows, YoungTableau};

/// An element of the degree-`n` piece of the generic tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorElement {
    value: AlgebraElement,
}

impl TensorElement {
    pub fn new(value: AlgebraElement) -> Self {
        TensorElement { value }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(AlgebraElement::zero(degree))
    }

    /// The degree-0 unit.
    pub fn unit() -> Self {
        Self::new(AlgebraElement::identity(0))
    }

    /// The basis monomial `z_α`.
    pub fn monomial(alpha: Permutation) -> Self {
        Self::new(AlgebraElement::from_perm(alpha))
    }

    pub fn degree(&self) -> usize {
        self.value.degree()
    }

    pub fn value(&self) -> &AlgebraElement {
        &self.value
    }

    pub fn into_value(self) -> AlgebraElement {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Concatenation product, extended bilinearly.
    pub fn concat_mul(&self, other: &TensorElement) -> TensorElement {
        Self::new(self.value.star(&other.value))
    }

    /// `x·self` for `x` in the group algebra of the same degree.
    pub fn act_left(&self, x: &AlgebraElement) -> Result<TensorElement> {
        Ok(Self::new(x.mul(&self.value)?))
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        Self::new(self.value.scale(c))
    }
}

/// A filling of a Young diagram by positive integers, repeats allowed.
///
/// Plain tabloids use bijective fillings by `1..=n`; the partially
/// symmetric setting uses fillings where each label occurs `d` times.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Filling {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Filling { shape, rows })
    }

    pub fn from_tableau(t: &YoungTableau) -> Self {
        Filling { shape: t.shape().clone(), rows: t.rows().to_vec() }
    }

    /// Fills `shape` column by column from `cols`.
    pub fn from_columns(shape: &Partition, cols: &[Vec<usize>]) -> Result<Self> {
        if cols.len() != shape.width() || cols.iter().enumerate().any(|(j, c)| c.len() != shape.col_len(j + 1)) {
            return Err(Error::InvalidTableau(format!("columns do not fit shape {shape}")));
        }
        let rows = (1..=shape.len())
            .map(|i| (0..shape.row_len(i)).map(|j| cols[j][i - 1]).collect())
            .collect();
        Self::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at the 1-based cell `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        (1..=self.shape.col_len(j)).map(|i| self.rows[i - 1][j - 1]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (1..=self.shape.width()).map(|j| self.column(j)).collect()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Whether the entries are exactly `1..=n`, each once.
    pub fn is_bijective(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &e in self.rows.iter().flatten() {
            if e > n || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        true
    }

    pub fn to_tableau(&self) -> Result<YoungTableau> {
        YoungTableau::new(self.rows.clone())
    }

    /// Checks that every label of `[m]` occurs exactly `d` times, where
    /// `m = |λ|/d`, and returns `m`.
    pub fn check_fibers(&self, d: usize) -> Result<usize> {
        if d == 0 || !self.size().is_multiple_of(d) {
            return Err(Error::NotDivisible { degree: self.size(), d });
        }
        let m = self.size() / d;
        let mut count = vec![0usize; m + 1];
        for &e in self.rows.iter().flatten() {
            if e > m {
                return Err(Error::EntryOutOfRange { entry: e, bound: m });
            }
            count[e] += 1;
        }
        match (1..=m).find(|&i| count[i] != d) {
            Some(i) => Err(Error::FiberSize { entry: i, found: count[i], expected: d }),
            None => Ok(m),
        }
    }

    /// The partition `μ` with `F⁻¹([k]) = D_μ`; errors with the first cell
    /// (in reading order) that breaks the condition.
    pub fn split_shape(&self, k: usize) -> Result<Partition> {
        let mut parts = Vec::new();
        let mut cap = usize::MAX;
        for row in &self.rows {
            let prefix = row.iter().take_while(|&&e| e <= k).count().min(cap);
            cap = prefix;
            if prefix > 0 {
                parts.push(prefix);
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            let len = parts.get(i).copied().unwrap_or(0);
            if let Some(j) = row.iter().skip(len).position(|&e| e <= k) {
                return Err(Error::SplitCondition { k, row: i + 1, col: len + j + 1, entry: row[len + j] });
            }
        }
        Partition::new(parts)
    }

    pub fn splits_at(&self, k: usize) -> bool {
        self.split_shape(k).is_ok()
    }

    /// Restriction to the cells of `μ ⊆ λ`.
    pub fn restrict(&self, mu: &Partition) -> Result<Filling> {
        if !self.shape.contains(mu) {
            return Err(Error::InvalidPartition(format!("{mu} does not fit in {}", self.shape)));
        }
        Self::new(self.rows.iter().zip(mu.parts()).map(|(r, &m)| r[..m].to_vec()).collect())
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Filling> {
        Self::new(self.rows.iter().map(|r| r.iter().map(|&e| f(e)).collect()).collect())
    }

    /// `σ∘F`.
    pub fn act(&self, sigma: &Permutation) -> Result<Filling> {
        if self.max_entry() > sigma.degree() {
            return Err(Error::EntryOutOfRange { entry: self.max_entry(), bound: sigma.degree() });
        }
        self.relabel(|e| sigma.apply(e))
    }

    /// Sum of the column indices of the cells holding entries `≤ k`.
    pub fn potential(&self, k: usize) -> usize {
        self.rows.iter().flat_map(|r| r.iter().enumerate()).filter(|(_, &e)| e <= k).map(|(j, _)| j + 1).sum()
    }

    /// Each column sorted ascending, with the sign of the sorting
    /// permutation; the sign is 0 when some column repeats an entry.
    pub fn column_sorted(&self) -> (i32, Filling) {
        let mut sign = 1;
        let cols: Vec<Vec<usize>> = self
            .columns()
            .into_iter()
            .map(|mut c| {
                sign *= sort_sign(&mut c);
                c
            })
            .collect();
        (sign, Self::from_columns(&self.shape, &cols).expect("same shape"))
    }

    /// [`Filling::column_sorted`], followed by sorting runs of equal-height
    /// columns, which leaves the tabloid unchanged.
    pub fn canonical(&self) -> (i32, Filling) {
        let (sign, sorted) = self.column_sorted();
        let mut cols = sorted.columns();
        let mut start = 0;
        while start < cols.len() {
            let h = cols[start].len();
            let end = start + cols[start..].iter().take_while(|c| c.len() == h).count();
            cols[start..end].sort();
            start = end;
        }
        (sign, Self::from_columns(&self.shape, &cols).expect("same shape"))
    }
}

/// Sorts `v` ascending and returns the sign of the sort, or 0 on a repeat.
fn sort_sign(v: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Filling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_rows(s)?)
    }
}

impl Serialize for Filling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `t_F = c_λ(T_can)·z_{T_can∘F⁻¹}`.
pub fn realize_tabloid(f: &Filling) -> Result<TensorElement> {
    if !f.is_bijective() {
        return Err(Error::InvalidTableau(format!("{f} is not a bijection onto 1..={}", f.size())));
    }
    let n = f.size();
    let t = YoungTableau::canonical(f.shape());
    let pi = f.to_tableau()?.transport_to(&t)?;
    let c = young_symmetrizer_cached(&t, n)?;
    Ok(TensorElement::new(c.c.mul_perm_right(&pi)))
}

/// A Young tabloid together with its realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tabloid {
    pub filling: Filling,
    pub realization: TensorElement,
}

impl Tabloid {
    pub fn new(filling: Filling) -> Result<Self> {
        let realization = realize_tabloid(&filling)?;
        Ok(Tabloid { filling, realization })
    }
}

/// `Σ_{σ∈S_{X∪Y}} sgn(σ)·t_{σ∘F}`, evaluated by enumerating `S_{X∪Y}`.
pub fn shuffle_sum(f: &Filling, xs: &[usize], ys: &[usize]) -> Result<TensorElement> {
    let n = f.size();
    let mut set: Vec<usize> = xs.iter().chain(ys).copied().collect();
    set.sort_unstable();
    set.dedup();
    let mut total = AlgebraElement::zero(n);
    for sigma in Permutation::all(set.len()) {
        let mut w: Vec<usize> = (1..=n).collect();
        for (i, &x) in set.iter().enumerate() {
            w[x - 1] = set[sigma.apply(i + 1) - 1];
        }
        let s = Permutation::from_word(w)?;
        let t = realize_tabloid(&f.act(&s)?)?;
        total.add_scaled(&Rational::from(sigma.sign()), t.value())?;
    }
    Ok(TensorElement::new(total))
}

/// All `j`-element subsets of `v`, each in the order of `v`.
pub(crate) fn subsets(v: &[usize], j: usize) -> Vec<Vec<usize>> {
    if j == 0 {
        return vec![Vec::new()];
    }
    if v.len() < j {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> =
        subsets(&v[1..], j - 1).into_iter().map(|mut s| {
            s.insert(0, v[0]);
            s
        }).collect();
    out.extend(subsets(&v[1..], j));
    out
}

/// Leftmost `i` with `|C_i ∩ [k]| < |C_{i+1} ∩ [k]|` (1-based).
fn leftmost_violation(cols: &[Vec<usize>], k: usize) -> Option<usize> {
    let counts: Vec<usize> = cols.iter().map(|c| c.iter().filter(|&&e| e <= k).count()).collect();
    counts.windows(2).position(|w| w[0] < w[1]).map(|i| i + 1)
}

/// Rewrites `[G]` as a combination of tabloids `[H]` with `H⁻¹([k])` a
/// Young diagram, moving entries of `[k]` only to the left.
///
/// Columns are sorted (so `[k]`-entries come first), and at the leftmost
/// column pair `i, i+1` with fewer `[k]`-entries on the left, the shuffling
/// relation for `X = C_i∖[k]`, `Y = C_{i+1}∩[k]` is expanded over the
/// exchange coset representatives, giving
/// `[G] = Σ_{j≥1} (−1)^{j+1} Σ_{|X'|=|Y'|=j} [ρ_{X',Y'}∘G]`.
pub fn straighten(g: &Filling, k: usize) -> Result<Vec<(Rational, Filling)>> {
    if !g.is_bijective() {
        return Err(Error::InvalidTableau(format!("{g} is not a bijection onto 1..={}", g.size())));
    }
    let mut pending: BTreeMap<(usize, Filling), Rational> = BTreeMap::new();
    let mut done: BTreeMap<Filling, Rational> = BTreeMap::new();
    let push = |pending: &mut BTreeMap<(usize, Filling), Rational>, c: Rational, f: &Filling| {
        let (sign, sorted) = f.column_sorted();
        let key = (sorted.potential(k), sorted);
        let slot = pending.entry(key).or_insert_with(Rational::zero);
        *slot += &(c * Rational::from(sign));
    };
    push(&mut pending, Rational::one(), g);
    while let Some(((_, f), c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let cols = f.columns();
        let Some(i) = leftmost_violation(&cols, k) else {
            *done.entry(f).or_insert_with(Rational::zero) += &c;
            continue;
        };
        let xs: Vec<usize> = cols[i - 1].iter().copied().filter(|&e| e > k).collect();
        let ys: Vec<usize> = cols[i].iter().copied().filter(|&e| e <= k).collect();
        for j in 1..=xs.len().min(ys.len()) {
            let coeff = if j % 2 == 1 { c.clone() } else { -c.clone() };
            for xp in subsets(&xs, j) {
                for yp in subsets(&ys, j) {
                    let swapped = f.relabel(|e| {
                        if let Some(t) = xp.iter().position(|&x| x == e) {
                            yp[t]
                        } else if let Some(t) = yp.iter().position(|&y| y == e) {
                            xp[t]
                        } else {
                            e
                        }
                    })?;
                    push(&mut pending, coeff.clone(), &swapped);
                }
            }
        }
    }
    Ok(done.into_iter().filter(|(_, c)| !c.is_zero()).map(|(f, c)| (c, f)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Filling {
        s.parse().unwrap()
    }

    #[test]
    fn small_realizations() {
        let one = realize_tabloid(&f("1")).unwrap();
        assert_eq!(one.value(), &AlgebraElement::identity(1));
        let col = realize_tabloid(&f("1/2")).unwrap();
        let tau = Permutation::transposition(2, 1, 2).unwrap();
        let expect = AlgebraElement::from_terms(2, [(Permutation::identity(2), Rational::one()), (tau, -Rational::one())])
            .unwrap();
        assert_eq!(col.value(), &expect);
        assert!(realize_tabloid(&f("1,1")).is_err());
    }

    #[test]
    fn concat_unit_and_degrees() {
        let x = realize_tabloid(&f("1,3/2")).unwrap();
        assert_eq!(x.concat_mul(&TensorElement::unit()), x);
        let z2 = TensorElement::monomial(Permutation::identity(2));
        let z1 = TensorElement::monomial(Permutation::identity(1));
        assert_eq!(z2.concat_mul(&z1), TensorElement::monomial(Permutation::identity(3)));
    }

    #[test]
    fn split_shapes() {
        let x = f("1,2,3,6/4,5/7");
        assert_eq!(x.split_shape(5).unwrap(), "3,2".parse().unwrap());
        assert_eq!(x.split_shape(7).unwrap(), "4,2,1".parse().unwrap());
        assert_eq!(x.split_shape(6).unwrap(), "4,2".parse().unwrap());
        assert!(matches!(
            f("1,4,2/3").split_shape(2),
            Err(Error::SplitCondition { k: 2, row: 1, col: 3, entry: 2 })
        ));
        assert!(matches!(f("1,3/4,2").split_shape(2), Err(Error::SplitCondition { row: 2, col: 2, entry: 2, .. })));
    }

    #[test]
    fn canonical_forms() {
        let (s, c) = f("3,1/2,4").column_sorted();
        assert_eq!((s, c.to_string().as_str()), (-1, "2,1/3,4"));
        let (s, c) = f("3,1/2,4").canonical();
        assert_eq!((s, c.to_string().as_str()), (-1, "1,2/4,3"));
        assert_eq!(f("1,2/1").column_sorted().0, 0);
    }

    #[test]
    fn straighten_single_sign_move() {
        // 1 at (1,1), 2 at (2,2), 3 at (1,2), 4 at (2,1)
        let g = f("1,3/4,2");
        let out = straighten(&g, 2).unwrap();
        assert_eq!(out, vec![(-Rational::one(), f("1,2/4,3"))]);
        let split = f("1,2/3,4");
        assert_eq!(straighten(&split, 2).unwrap(), vec![(Rational::one(), split)]);
    }

    #[test]
    fn straighten_reconstructs() {
        for g in ["3,1/2", "2,3,1/4", "4,1/2,3", "3,4,1/2,5", "4,2/5,1/3", "5,3,1/2,4"] {
            let g = f(g);
            for k in 1..=g.size() {
                let out = straighten(&g, k).unwrap();
                let mut sum = AlgebraElement::zero(g.size());
                for (c, h) in &out {
                    assert!(h.splits_at(k), "{h} at {k}");
                    sum.add_scaled(c, realize_tabloid(h).unwrap().value()).unwrap();
                }
                assert_eq!(&sum, realize_tabloid(&g).unwrap().value(), "{g} at {k}");
            }
        }
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(&[1, 2, 3], 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(&[1], 2), Vec::<Vec<usize>>::new());
    }
}
