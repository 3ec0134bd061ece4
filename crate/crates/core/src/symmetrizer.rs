//! Young symmetrizers and products `c_λ(T)·c_μ(S)`.
//!
//! All elements live in `Q[S_n]` where `n` is an ambient degree at least as
//! large as every entry involved. The public entry points take `n = |T|`
//! and require `T` to be filled with `1..=n`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::tableau::{BlockDecomposition, YoungTableau};

/// `a_λ(T)`, `b_λ(T)` and `c_λ(T) = a_λ(T)·b_λ(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizerTriple {
    pub a_part: AlgebraElement,
    pub b_part: AlgebraElement,
    pub c: AlgebraElement,
}

/// Builds the three elements by enumerating the row and column groups.
pub fn young_symmetrizer_in(t: &YoungTableau, n: usize) -> Result<SymmetrizerTriple> {
    let mut a_part = AlgebraElement::identity(n);
    for row in t.rows() {
        a_part = a_part.mul(&AlgebraElement::symmetrize_set(row, n)?)?;
    }
    let mut b_part = AlgebraElement::identity(n);
    for col in t.columns() {
        b_part = b_part.mul(&AlgebraElement::antisymmetrize_set(&col, n)?)?;
    }
    let c = a_part.mul(&b_part)?;
    Ok(SymmetrizerTriple { a_part, b_part, c })
}

pub fn young_symmetrizer(t: &YoungTableau) -> Result<SymmetrizerTriple> {
    young_symmetrizer_in(t, standard_degree(t)?)
}

type Cache = Mutex<HashMap<(YoungTableau, usize), Arc<SymmetrizerTriple>>>;

/// Memoized [`young_symmetrizer_in`].
pub fn young_symmetrizer_cached(t: &YoungTableau, n: usize) -> Result<Arc<SymmetrizerTriple>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (t.clone(), n);
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let v = Arc::new(young_symmetrizer_in(t, n)?);
    cache.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn standard_degree(t: &YoungTableau) -> Result<usize> {
    if !t.has_standard_entries() {
        return Err(Error::InvalidTableau(format!("{t} is not filled with 1..={}", t.size())));
    }
    Ok(t.size())
}

/// `1 + sign·Σ τ` for a list of transpositions `τ`.
#[derive(Clone, Debug)]
struct Factor {
    sign: i64,
    transpositions: Vec<Permutation>,
}

impl Factor {
    fn apply_right(&self, x: &AlgebraElement) -> AlgebraElement {
        let s = Rational::from(self.sign);
        let mut out = x.clone();
        for t in &self.transpositions {
            out.add_scaled(&s, &x.mul_perm_right(t)).expect("same degree");
        }
        out
    }

    fn apply_left(&self, x: &AlgebraElement) -> AlgebraElement {
        let s = Rational::from(self.sign);
        let mut out = x.clone();
        for t in &self.transpositions {
            out.add_scaled(&s, &x.mul_perm_left(t)).expect("same degree");
        }
        out
    }
}

/// `a(X)` (or `b(X)`) as the ordered product `∏_{k≥2} (1 ± Σ_{i<k} (x_k, x_i))`.
fn set_factors(set: &[usize], n: usize, sign: i64) -> Vec<Factor> {
    (1..set.len())
        .map(|k| Factor {
            sign,
            transpositions: set[..k]
                .iter()
                .map(|&y| Permutation::transposition(n, set[k], y).expect("valid entries"))
                .collect(),
        })
        .collect()
}

/// A Young symmetrizer kept as a product of sparse factors, for cheap
/// multiplication against other elements.
#[derive(Clone, Debug)]
pub struct FactoredSymmetrizer {
    degree: usize,
    a_factors: Vec<Factor>,
    b_factors: Vec<Factor>,
}

impl FactoredSymmetrizer {
    pub fn new(t: &YoungTableau, n: usize) -> Result<Self> {
        if t.max_entry() > n {
            return Err(Error::EntryOutOfRange { entry: t.max_entry(), bound: n });
        }
        let a_factors = t.rows().iter().flat_map(|r| set_factors(r, n, 1)).collect();
        let b_factors = t.columns().iter().flat_map(|c| set_factors(c, n, -1)).collect();
        Ok(FactoredSymmetrizer { degree: n, a_factors, b_factors })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: x.degree() });
        }
        Ok(())
    }

    /// `x·a_λ(T)`.
    pub fn right_a(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        Ok(self.a_factors.iter().fold(x.clone(), |acc, f| f.apply_right(&acc)))
    }

    /// `x·b_λ(T)`.
    pub fn right_b(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        Ok(self.b_factors.iter().fold(x.clone(), |acc, f| f.apply_right(&acc)))
    }

    /// `a_λ(T)·x`.
    pub fn left_a(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        Ok(self.a_factors.iter().rev().fold(x.clone(), |acc, f| f.apply_left(&acc)))
    }

    /// `b_λ(T)·x`.
    pub fn left_b(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        Ok(self.b_factors.iter().rev().fold(x.clone(), |acc, f| f.apply_left(&acc)))
    }

    /// `x·c_λ(T)`.
    pub fn right_c(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.right_b(&self.right_a(x)?)
    }

    /// `c_λ(T)·x`.
    pub fn left_c(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.left_a(&self.left_b(x)?)
    }

    /// Factors of `c_λ(T)` in the order they act on the left: applying
    /// `x ↦ x + sign·Σ τ·x` for each step in turn computes `c_λ(T)·x` in
    /// any left `S_n`-module.
    pub fn left_c_steps(&self) -> Vec<(i64, &[Permutation])> {
        self.b_factors
            .iter()
            .rev()
            .chain(self.a_factors.iter().rev())
            .map(|f| (f.sign, f.transpositions.as_slice()))
            .collect()
    }

    pub fn a_part(&self) -> AlgebraElement {
        self.left_a(&AlgebraElement::identity(self.degree)).unwrap()
    }

    pub fn c(&self) -> AlgebraElement {
        self.left_c(&AlgebraElement::identity(self.degree)).unwrap()
    }
}

/// `Σ_{b∈B} (a,b)` in `Q[S_n]`.
pub fn transposition_sum(a: usize, set: &[usize], n: usize) -> Result<AlgebraElement> {
    if set.contains(&a) {
        return Err(Error::Precondition(format!("{a} belongs to the summation set")));
    }
    AlgebraElement::from_terms(
        n,
        set.iter()
            .map(|&b| Permutation::transposition(n, a, b).map(|t| (t, Rational::one())))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// How an [`ExpansionMultiplier`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// `T = S`: the scalar `α_λ`.
    Idempotent,
    /// One cell apart: the product of block factors.
    ClosedForm,
    /// Composed along a chain of corner removals.
    Recursive,
}

/// An element `E` with `c_λ(T)·c_μ(S) = c_λ(T)·E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMultiplier {
    pub element: AlgebraElement,
    pub source: Source,
    /// `α_μ` for the subshape.
    pub alpha_mu: u128,
}

/// Outcome of the structural checks on a multiplier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierChecks {
    pub identity_coefficient: bool,
    pub support_in_l_set: bool,
    pub sign_pattern: bool,
}

impl MultiplierChecks {
    pub fn all(&self) -> bool {
        self.identity_coefficient && self.support_in_l_set && self.sign_pattern
    }
}

impl ExpansionMultiplier {
    pub fn identity_coefficient(&self) -> Rational {
        self.element.coeff(&Permutation::identity(self.element.degree()))
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.element.is_integral()
    }

    /// Identity coefficient `α_μ`, support inside `L(T;S)`, and
    /// coefficient signs following permutation parity.
    pub fn check(&self, t: &YoungTableau, s: &YoungTableau) -> Result<MultiplierChecks> {
        let identity_coefficient = self.identity_coefficient() == Rational::from_u128(self.alpha_mu);
        let mut support_in_l_set = true;
        let mut sign_pattern = true;
        for (p, c) in self.element.terms() {
            support_in_l_set &= t.in_l_set(p, s)?;
            sign_pattern &= c.signum() * p.sign() >= 0;
        }
        Ok(MultiplierChecks { identity_coefficient, support_in_l_set, sign_pattern })
    }
}

/// The cell of `t` outside `s` when the shapes differ by exactly one corner.
fn single_corner(t: &YoungTableau, s: &YoungTableau) -> Result<(usize, usize)> {
    if !s.is_subtableau_of(t) {
        return Err(Error::NotSubtableau(format!("{s} is not a restriction of {t}")));
    }
    if t.size() != s.size() + 1 {
        return Err(Error::NotSingleCorner);
    }
    t.rightmost_corner_outside(s)
}

/// The closed form `α_μ·∏_i (1 − x̃_i/r̃_i)` for a one-cell difference,
/// with the entry `a` at `(u, v)`, blocks of `S` right of column `v`, and
/// `x̃_i = Σ_{b∈B̃_i} (a,b)`.
pub fn closed_form_multiplier(t: &YoungTableau, s: &YoungTableau) -> Result<ExpansionMultiplier> {
    closed_form_multiplier_in(t, s, standard_degree(t)?)
}

pub fn closed_form_multiplier_in(t: &YoungTableau, s: &YoungTableau, n: usize) -> Result<ExpansionMultiplier> {
    let (u, v) = single_corner(t, s)?;
    let a = t.entry(u, v).expect("corner cell");
    // A cell added at the end of the first row leaves nothing to its right.
    let blocks = BlockDecomposition::from_column(s, v.min(s.shape().width()))?;
    let alpha_mu = s.shape().hook_alpha();
    let mut e = AlgebraElement::scalar(n, Rational::from_u128(alpha_mu));
    for (block, r) in blocks.blocks.iter().zip(blocks.hook_numbers(u)) {
        let x = transposition_sum(a, &block.entries, n)?;
        let factor = AlgebraElement::linear(
            &Rational::one(),
            &AlgebraElement::identity(n),
            &-Rational::new(1, r as i64)?,
            &x,
        )?;
        e = e.mul(&factor)?;
    }
    Ok(ExpansionMultiplier { element: e, source: Source::ClosedForm, alpha_mu })
}

/// A multiplier `E` for any subtableau `S ⊆ T`: the scalar `α_λ` when
/// `S = T`, the closed form for one cell, and otherwise
/// `(1/α_δ)·E_{T,U}·E_{U,S}` where `U` drops the rightmost corner of `T`
/// outside `S`.
pub fn expand_product(t: &YoungTableau, s: &YoungTableau) -> Result<ExpansionMultiplier> {
    expand_product_in(t, s, standard_degree(t)?)
}

pub fn expand_product_in(t: &YoungTableau, s: &YoungTableau, n: usize) -> Result<ExpansionMultiplier> {
    if !s.is_subtableau_of(t) {
        return Err(Error::NotSubtableau(format!("{s} is not a restriction of {t}")));
    }
    let alpha_mu = s.shape().hook_alpha();
    match t.size() - s.size() {
        0 => Ok(ExpansionMultiplier {
            element: AlgebraElement::scalar(n, Rational::from_u128(alpha_mu)),
            source: Source::Idempotent,
            alpha_mu,
        }),
        1 => closed_form_multiplier_in(t, s, n),
        _ => {
            let (u, v) = t.rightmost_corner_outside(s)?;
            let (ut, _) = t.remove_corner(u, v)?;
            let e_tu = closed_form_multiplier_in(t, &ut, n)?;
            let e_us = expand_product_in(&ut, s, n)?;
            let inv = Rational::from_u128(ut.shape().hook_alpha()).recip().expect("nonzero");
            Ok(ExpansionMultiplier {
                element: e_tu.element.mul(&e_us.element)?.scale(&inv),
                source: Source::Recursive,
                alpha_mu,
            })
        }
    }
}

/// Result of comparing `c_λ(T)·c_μ(S)` with `c_λ(T)·E` by direct
/// multiplication.
#[derive(Clone, Debug)]
pub struct ProductCheck {
    pub product: AlgebraElement,
    pub via_multiplier: AlgebraElement,
}

impl ProductCheck {
    pub fn agrees(&self) -> bool {
        self.product == self.via_multiplier
    }
}

/// Brute-force oracle: builds both symmetrizers by group enumeration and
/// multiplies term by term.
pub fn brute_force_check(t: &YoungTableau, s: &YoungTableau, e: &AlgebraElement) -> Result<ProductCheck> {
    let n = e.degree();
    let ct = young_symmetrizer_cached(t, n)?;
    let cs = young_symmetrizer_cached(s, n)?;
    Ok(ProductCheck { product: ct.c.mul(&cs.c)?, via_multiplier: ct.c.mul(e)? })
}

/// `c_λ(T)·(1 − Σ_{x∈C_j(T)} (a,x))`, which vanishes whenever
/// `i ≠ j`, `λ'_i ≤ λ'_j` and `a ∈ C_i(T)`.
pub fn garnir_zero(t: &YoungTableau, i: usize, j: usize, a: usize) -> Result<AlgebraElement> {
    let n = standard_degree(t)?;
    let shape = t.shape();
    let width = shape.width();
    if i == j || i == 0 || j == 0 || i > width || j > width {
        return Err(Error::Precondition(format!("columns {i}, {j} are not two distinct columns")));
    }
    if shape.col_len(i) > shape.col_len(j) {
        return Err(Error::Precondition(format!("column {i} is taller than column {j}")));
    }
    if t.column_of(a) != Some(i) {
        return Err(Error::Precondition(format!("{a} is not in column {i}")));
    }
    let c = &young_symmetrizer_cached(t, n)?.c;
    let z = transposition_sum(a, &t.column(j), n)?;
    c.sub(&c.mul(&z)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> YoungTableau {
        s.parse().unwrap()
    }

    fn cyc(c: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(c, Some(n)).unwrap()
    }

    #[test]
    fn small_symmetrizers() {
        let col = young_symmetrizer(&t("1/2")).unwrap();
        let expect = AlgebraElement::from_terms(
            2,
            [(Permutation::identity(2), Rational::one()), (cyc("(1 2)", 2), Rational::from(-1))],
        )
        .unwrap();
        assert_eq!(col.c, expect);
        assert_eq!(col.c.mul(&col.c).unwrap(), col.c.scale(&Rational::from(2)));

        let y = young_symmetrizer(&t("1,2/3")).unwrap();
        assert_eq!(y.a_part.len(), 2);
        assert_eq!(y.b_part.len(), 2);
        assert_eq!(y.c.mul(&y.c).unwrap(), y.c.scale(&Rational::from(3)));
    }

    #[test]
    fn factored_matches_enumeration() {
        for s in ["1,2,3/4,5", "3,1,4/5/2", "1/2/3", "1,2,3,4"] {
            let x = t(s);
            let n = x.size();
            let f = FactoredSymmetrizer::new(&x, n).unwrap();
            let full = young_symmetrizer(&x).unwrap();
            assert_eq!(f.c(), full.c, "{s}");
            assert_eq!(f.a_part(), full.a_part);
            let probe = AlgebraElement::from_terms(
                n,
                Permutation::all(n).take(7).enumerate().map(|(i, p)| (p, Rational::from(i as i64 - 3))),
            )
            .unwrap();
            assert_eq!(f.right_c(&probe).unwrap(), probe.mul(&full.c).unwrap());
            assert_eq!(f.left_c(&probe).unwrap(), full.c.mul(&probe).unwrap());
        }
    }

    #[test]
    fn four_column_example_block_sums() {
        let x = t("1,2,3,4/5,6,7/8/9");
        let n = 9;
        let sum = |a: usize, bs: &[usize]| transposition_sum(a, bs, n).unwrap();
        assert!(sum(9, &[]).is_zero());
        assert!(transposition_sum(9, &[9], n).is_err());

        let (s9, _) = x.remove_corner(4, 1).unwrap();
        let e = closed_form_multiplier(&x, &s9).unwrap();
        let alpha = Rational::from_u128(s9.shape().hook_alpha());
        let one = AlgebraElement::identity(n);
        let f1 = one.sub(&sum(9, &[2, 3, 6, 7]).scale(&Rational::new(1, 4).unwrap())).unwrap();
        let f2 = one.sub(&sum(9, &[4]).scale(&Rational::new(1, 6).unwrap())).unwrap();
        assert_eq!(e.element, f1.mul(&f2).unwrap().scale(&alpha));

        let (s7, _) = x.remove_corner(2, 3).unwrap();
        let e = closed_form_multiplier(&x, &s7).unwrap();
        let alpha = Rational::from_u128(s7.shape().hook_alpha());
        let f1 = one.sub(&sum(7, &[4]).scale(&Rational::new(1, 2).unwrap())).unwrap();
        assert_eq!(e.element, f1.scale(&alpha));

        let (s4, _) = x.remove_corner(1, 4).unwrap();
        let e = closed_form_multiplier(&x, &s4).unwrap();
        assert_eq!(e.element, AlgebraElement::scalar(n, Rational::from_u128(s4.shape().hook_alpha())));
    }

    #[test]
    fn closed_form_single_column_case() {
        let x = t("1,3/2");
        let s = t("1/2");
        let e = closed_form_multiplier(&x, &s).unwrap();
        assert_eq!(e.element, AlgebraElement::scalar(3, Rational::from(2)));
        assert!(brute_force_check(&x, &s, &e.element).unwrap().agrees());
        assert!(closed_form_multiplier(&x, &t("1")).is_err());
    }

    #[test]
    fn recursive_two_by_two() {
        let x = t("1,2/3,4");
        let s = t("1,2");
        let e = expand_product(&x, &s).unwrap();
        assert_eq!(e.source, Source::Recursive);
        let chk = brute_force_check(&x, &s, &e.element).unwrap();
        assert!(chk.agrees());
        assert!(!chk.product.is_zero());
        assert!(e.check(&x, &s).unwrap().all());
        assert_eq!(expand_product(&x, &x).unwrap().element, AlgebraElement::scalar(4, Rational::from(12)));
    }

    #[test]
    fn single_cell_subtableau() {
        let x = t("1,2/3");
        let s = t("1");
        let e = expand_product(&x, &s).unwrap();
        assert!(e.identity_coefficient().is_one());
        let c = young_symmetrizer(&x).unwrap().c;
        let diff = e.element.sub(&AlgebraElement::identity(3)).unwrap();
        assert!(c.mul(&diff).unwrap().is_zero());
    }

    #[test]
    fn garnir_small_shapes() {
        assert!(garnir_zero(&t("1,2"), 2, 1, 2).unwrap().is_zero());
        assert!(garnir_zero(&t("1,2/3"), 2, 1, 2).unwrap().is_zero());
        assert!(garnir_zero(&t("1,2/3,4"), 2, 1, 2).unwrap().is_zero());
        assert!(garnir_zero(&t("1,2/3,4"), 2, 1, 4).unwrap().is_zero());
        assert!(garnir_zero(&t("1/2"), 1, 1, 1).is_err());
        assert!(garnir_zero(&t("1,2/3"), 1, 2, 1).is_err());
    }
}
