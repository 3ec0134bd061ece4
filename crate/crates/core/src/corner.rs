//! Identities behind the one-cell product formula, checked exactly.
//!
//! Throughout, `T` is obtained from `S` by adding the entry `a` at `(u, v)`,
//! `z_j = Σ_{b∈C_j(S)} (a,b)`, the blocks `B_i` are those of `S` with its
//! first `v-1` columns removed, `x_i = Σ_{b∈B_i} (a,b)` and
//! `X = Σ_{j≥v} z_j`.

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::symmetrizer::{transposition_sum, FactoredSymmetrizer};
use crate::tableau::{BlockDecomposition, YoungTableau};

fn q(v: i64) -> Rational {
    Rational::from(v)
}

/// `e + c·1`.
fn shift(e: &AlgebraElement, c: i64) -> AlgebraElement {
    let mut out = e.clone();
    out.add_term(Permutation::identity(e.degree()), q(c)).expect("same degree");
    out
}

fn mul(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    a.mul(b).expect("same degree")
}

fn sub(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    a.sub(b).expect("same degree")
}

/// `∏ (y − r)` over the given roots, left to right.
fn poly_with_roots(y: &AlgebraElement, roots: &[i64]) -> AlgebraElement {
    roots
        .iter()
        .fold(AlgebraElement::identity(y.degree()), |acc, &r| mul(&acc, &shift(y, -r)))
}

/// `1 − y/r`.
fn one_minus_over(y: &AlgebraElement, r: i64) -> AlgebraElement {
    let n = y.degree();
    AlgebraElement::linear(&Rational::one(), &AlgebraElement::identity(n), &-Rational::new(1, r).unwrap(), y)
        .expect("same degree")
}

/// Everything derived from a one-cell configuration `(T, S)`.
pub struct Configuration {
    pub t: YoungTableau,
    pub s: YoungTableau,
    pub n: usize,
    pub a: usize,
    pub u: usize,
    pub v: usize,
    /// `z_1, ..., z_{μ_1}`.
    pub z: Vec<AlgebraElement>,
    /// Column heights `μ'_j` for `j = 1..=μ_1`.
    pub col_heights: Vec<usize>,
    pub l: Vec<i64>,
    pub h: Vec<i64>,
    pub r: Vec<i64>,
    pub x: Vec<AlgebraElement>,
    /// `h_1 = μ'_v`.
    pub h1: i64,
    pub big_x: AlgebraElement,
    pub alpha_mu: Rational,
    /// Blocks right of column `v` and their hook numbers.
    pub x_tilde: Vec<AlgebraElement>,
    pub r_tilde: Vec<i64>,
    pub cs: FactoredSymmetrizer,
    pub ct: FactoredSymmetrizer,
    /// `a_λ(T)·c_μ(S)`.
    pub at_cs: AlgebraElement,
}

impl Configuration {
    pub fn new(t: &YoungTableau, s: &YoungTableau) -> Result<Self> {
        if !t.has_standard_entries() {
            return Err(Error::InvalidTableau(format!("{t} is not filled with 1..={}", t.size())));
        }
        if !s.is_subtableau_of(t) || t.size() != s.size() + 1 {
            return Err(Error::NotSingleCorner);
        }
        let n = t.size();
        let (u, v) = t.rightmost_corner_outside(s)?;
        let a = t.entry(u, v).expect("corner");
        let width = s.shape().width();
        let z = (1..=width)
            .map(|j| transposition_sum(a, &s.column(j), n))
            .collect::<Result<Vec<_>>>()?;
        let col_heights = (1..=width).map(|j| s.shape().col_len(j)).collect();
        let blocks = BlockDecomposition::from_column(s, v - 1)?;
        let h1 = (u - 1) as i64;
        let l: Vec<i64> = blocks.lengths().iter().map(|&x| x as i64).collect();
        let h: Vec<i64> = blocks.heights().iter().map(|&x| x as i64).collect();
        let mut acc = 0;
        let r = l
            .iter()
            .zip(&h)
            .map(|(li, hi)| {
                acc += li;
                acc + h1 - hi
            })
            .collect();
        let x = blocks
            .blocks
            .iter()
            .map(|b| transposition_sum(a, &b.entries, n))
            .collect::<Result<Vec<_>>>()?;
        let mut big_x = AlgebraElement::zero(n);
        for zj in z.iter().skip(v - 1) {
            big_x.add_assign(zj)?;
        }
        let tilde = BlockDecomposition::from_column(s, v.min(width))?;
        let x_tilde = tilde
            .blocks
            .iter()
            .map(|b| transposition_sum(a, &b.entries, n))
            .collect::<Result<Vec<_>>>()?;
        let r_tilde = tilde.hook_numbers(u).iter().map(|&x| x as i64).collect();
        let cs = FactoredSymmetrizer::new(s, n)?;
        let ct = FactoredSymmetrizer::new(t, n)?;
        let at_cs = ct.left_a(&cs.c())?;
        Ok(Configuration {
            t: t.clone(),
            s: s.clone(),
            n,
            a,
            u,
            v,
            z,
            col_heights,
            l,
            h,
            r,
            x,
            h1,
            big_x,
            alpha_mu: Rational::from_u128(s.shape().hook_alpha()),
            x_tilde,
            r_tilde,
            cs,
            ct,
            at_cs,
        })
    }

    pub fn m(&self) -> usize {
        self.x.len()
    }

    fn one(&self) -> AlgebraElement {
        AlgebraElement::identity(self.n)
    }

    fn z_v(&self) -> AlgebraElement {
        self.z.get(self.v - 1).cloned().unwrap_or_else(|| AlgebraElement::zero(self.n))
    }

    /// `c_μ(S)·e`.
    pub fn cs_left(&self, e: &AlgebraElement) -> AlgebraElement {
        self.cs.left_c(e).expect("degree")
    }

    /// `c_μ(S)·e·c_μ(S)`.
    pub fn cs_sandwich(&self, e: &AlgebraElement) -> AlgebraElement {
        self.cs.right_c(&self.cs.left_c(e).expect("degree")).expect("degree")
    }

    /// `a_λ(T)·c_μ(S)·e`.
    pub fn at_cs_left(&self, e: &AlgebraElement) -> AlgebraElement {
        mul(&self.at_cs, e)
    }

    /// `∏_{i=1}^{m} (1 − x_i/r_i)`.
    pub fn block_product(&self) -> AlgebraElement {
        self.x.iter().zip(&self.r).fold(self.one(), |acc, (x, &r)| mul(&acc, &one_minus_over(x, r)))
    }

    /// `∏_i (1 − x̃_i/r̃_i)`.
    pub fn tilde_product(&self) -> AlgebraElement {
        self.x_tilde
            .iter()
            .zip(&self.r_tilde)
            .fold(self.one(), |acc, (x, &r)| mul(&acc, &one_minus_over(x, r)))
    }

    /// `1 − x_1/r_1`, or `1` when there are no blocks.
    pub fn first_factor(&self) -> AlgebraElement {
        match self.x.first() {
            Some(x1) => one_minus_over(x1, self.r[0]),
            None => self.one(),
        }
    }

    /// `X_t = x_1 + ... + x_t`.
    pub fn partial_sum(&self, t: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for x in &self.x[..t] {
            out.add_assign(x).unwrap();
        }
        out
    }

    /// `s_i^t` for `i = 1..=t`.
    pub fn s_values(&self, t: usize) -> Vec<i64> {
        let prefix = |i: usize| self.l[..i].iter().sum::<i64>();
        (1..=t).map(|i| if i < t { prefix(i) - self.h[i] } else { prefix(t) }).collect()
    }

    /// `P_t = ∏_{i≤t} (x_i − r_i)`.
    pub fn p_poly(&self, t: usize) -> AlgebraElement {
        (0..t).fold(self.one(), |acc, i| mul(&acc, &shift(&self.x[i], -self.r[i])))
    }

    /// `Q_t = ∏_{i≤t} (X_t − s_i^t)`.
    pub fn q_poly(&self, t: usize) -> AlgebraElement {
        poly_with_roots(&self.partial_sum(t), &self.s_values(t))
    }
}

/// Decides `f ≡ g`, i.e. `a_λ(T)·c_μ(S)·X^i·(f − g) = 0` for all `i ≥ 0`.
///
/// The Krylov vectors `w_i = a_λ(T)·c_μ(S)·X^i` are generated until a new
/// one lies in the span of the previous ones; from then on every later
/// vector does too, so annihilation by `w_0..w_d` is equivalent.
pub struct CongruenceContext {
    pub vectors: Vec<AlgebraElement>,
}

impl CongruenceContext {
    pub fn new(cfg: &Configuration) -> Self {
        let mut basis = Echelon::default();
        let mut vectors = Vec::new();
        let mut w = cfg.at_cs.clone();
        while basis.insert(&w) {
            vectors.push(w.clone());
            w = mul(&w, &cfg.big_x);
        }
        CongruenceContext { vectors }
    }

    /// Number of independent Krylov vectors.
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// The first nonzero `w_i·(f − g)`, if any.
    pub fn residual(&self, f: &AlgebraElement, g: &AlgebraElement) -> Option<AlgebraElement> {
        let d = sub(f, g);
        if d.is_zero() {
            return None;
        }
        self.vectors.iter().map(|w| mul(w, &d)).find(|r| !r.is_zero())
    }

    pub fn congruent(&self, f: &AlgebraElement, g: &AlgebraElement) -> bool {
        self.residual(f, g).is_none()
    }
}

/// `f ≡ g` for the configuration `(T, S)`.
pub fn congruent(f: &AlgebraElement, g: &AlgebraElement, t: &YoungTableau, s: &YoungTableau) -> Result<bool> {
    let cfg = Configuration::new(t, s)?;
    Ok(CongruenceContext::new(&cfg).congruent(f, g))
}

/// Reduced row echelon form over sparse rational vectors indexed by
/// permutations.
#[derive(Default)]
struct Echelon {
    rows: Vec<(Permutation, AlgebraElement)>,
}

impl Echelon {
    /// Adds `v` if it is independent of the rows; reports whether it was.
    fn insert(&mut self, v: &AlgebraElement) -> bool {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            let c = v.coeff(p);
            if !c.is_zero() {
                v.add_scaled(&-c, row).unwrap();
            }
        }
        let Some(pivot) = v.support().min().cloned() else {
            return false;
        };
        let v = v.scale(&v.coeff(&pivot).recip().unwrap());
        for (_, row) in &mut self.rows {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                row.add_scaled(&-c, &v).unwrap();
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// One identity family checked on one configuration.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub shape: String,
    pub subshape: String,
    /// Number of instances checked.
    pub instances: usize,
    pub pass: bool,
    /// The first nonzero difference found, on failure.
    pub residual: Option<AlgebraElement>,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        format!(
            "{} {} {} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.shape,
            self.subshape
        )
    }
}

struct Recorder<'a> {
    cfg: &'a Configuration,
    out: Vec<CheckOutcome>,
}

impl Recorder<'_> {
    fn begin(&mut self, id: &'static str) {
        self.out.push(CheckOutcome {
            id,
            shape: self.cfg.t.shape().to_string(),
            subshape: self.cfg.s.shape().to_string(),
            instances: 0,
            pass: true,
            residual: None,
        });
    }

    fn record(&mut self, residual: Option<AlgebraElement>) {
        let cur = self.out.last_mut().expect("begin first");
        cur.instances += 1;
        if let Some(r) = residual {
            if cur.pass {
                cur.pass = false;
                cur.residual = Some(r);
            }
        }
    }

    fn eq(&mut self, lhs: &AlgebraElement, rhs: &AlgebraElement) {
        let d = sub(lhs, rhs);
        self.record(if d.is_zero() { None } else { Some(d) });
    }

    fn zero(&mut self, e: &AlgebraElement) {
        self.record(if e.is_zero() { None } else { Some(e.clone()) });
    }

    fn flag(&mut self, ok: bool) {
        let n = self.cfg.n;
        self.record(if ok { None } else { Some(AlgebraElement::identity(n)) });
    }
}

/// Enumerates strictly increasing index tuples of length at least 2.
fn increasing_tuples(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << len) {
        if mask.count_ones() >= 2 {
            out.push((0..len).filter(|i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// All choices of one entry per listed column.
fn entry_choices(cols: &[Vec<usize>]) -> Vec<Vec<usize>> {
    cols.iter().fold(vec![Vec::new()], |acc, col| {
        acc.iter()
            .flat_map(|prefix| {
                col.iter().map(move |&e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect()
    })
}

/// Permutations of `{1..n}` fixing every element of `fixed`.
fn permutations_fixing(n: usize, fixed: &[usize]) -> Vec<Permutation> {
    let free: Vec<usize> = (1..=n).filter(|e| !fixed.contains(e)).collect();
    Permutation::all(free.len())
        .map(|p| {
            let mut w: Vec<usize> = (1..=n).collect();
            for (i, &e) in free.iter().enumerate() {
                w[e - 1] = free[p.apply(i + 1) - 1];
            }
            Permutation::from_word(w).unwrap()
        })
        .collect()
}

/// Runs every identity family on the configuration `(T, S)`.
pub fn verify_corner_identities(t: &YoungTableau, s: &YoungTableau) -> Result<Vec<CheckOutcome>> {
    let cfg = Configuration::new(t, s)?;
    let cong = CongruenceContext::new(&cfg);
    let mut rec = Recorder { cfg: &cfg, out: Vec::new() };
    let n = cfg.n;
    let one = cfg.one();
    let m = cfg.m();
    let alpha = &cfg.alpha_mu;
    let mu_fact = Rational::from_u128(s.shape().factorial_product());
    let a_t = cfg.ct.a_part();
    let cs = cfg.cs.c();
    let zv = cfg.z_v();
    let one_minus_zv = sub(&one, &zv);

    rec.begin("row-symmetrizer-absorbs");
    rec.eq(&mul(&a_t, &cfg.cs.a_part()), &a_t.scale(&mu_fact));

    rec.begin("column-antisymmetrizer-extends");
    let b_t = cfg.ct.left_b(&one)?;
    rec.eq(&b_t, &cfg.cs.left_b(&one_minus_zv)?);

    rec.begin("symmetrizer-factorization");
    rec.eq(&cfg.ct.c().scale(&mu_fact), &mul(&cfg.at_cs, &one_minus_zv));

    rec.begin("block-product-shift");
    rec.eq(
        &cfg.cs_left(&mul(&one_minus_zv, &cfg.tilde_product())),
        &cfg.cs_left(&cfg.block_product()),
    );

    rec.begin("first-block-sandwich");
    rec.eq(&cfg.cs_sandwich(&one_minus_zv), &cfg.cs_sandwich(&cfg.first_factor()));

    rec.begin("first-block-product");
    rec.eq(
        &cfg.at_cs_left(&cfg.cs.right_c(&cfg.first_factor())?),
        &cfg.at_cs_left(&cfg.block_product()).scale(alpha),
    );

    rec.begin("one-cell-product");
    rec.eq(
        &cfg.at_cs_left(&cfg.cs.right_c(&one_minus_zv)?),
        &cfg.at_cs_left(&mul(&one_minus_zv, &cfg.tilde_product())).scale(alpha),
    );

    rec.begin("column-sum-products");
    for (i, zi) in cfg.z.iter().enumerate() {
        let hi = cfg.col_heights[i] as i64;
        rec.eq(&cfg.cs_left(&mul(zi, zi)), &cfg.cs_left(&shift(&zi.scale(&q(-(hi - 1))), hi)));
        for (j, zj) in cfg.z.iter().enumerate() {
            if i != j && cfg.col_heights[i] <= cfg.col_heights[j] {
                rec.eq(&cfg.cs_left(&mul(zi, zj)), &cfg.cs_left(zi));
            }
        }
    }

    rec.begin("block-sum-products");
    for i in 0..m {
        let xi = &cfg.x[i];
        let (li, hi) = (cfg.l[i], cfg.h[i]);
        rec.eq(&cfg.cs_left(&mul(xi, xi)), &cfg.cs_left(&shift(&xi.scale(&q(li - hi)), li * hi)));
        for j in 0..i {
            rec.eq(&cfg.cs_left(&mul(xi, &cfg.x[j])), &cfg.cs_left(&xi.scale(&q(cfg.l[j]))));
        }
    }

    rec.begin("cycle-sandwich");
    let cols = s.columns();
    for idx in increasing_tuples(cols.len()) {
        let chosen: Vec<Vec<usize>> = idx.iter().map(|&j| cols[j].clone()).collect();
        for bs in entry_choices(&chosen) {
            let sigma = AlgebraElement::from_perm(Permutation::cycle(n, cfg.a, &bs)?);
            let lhs = cfg.cs_sandwich(&sigma);
            let same_row = s.position(bs[0]).unwrap().0 == s.position(bs[1]).unwrap().0;
            if same_row {
                let tau = AlgebraElement::from_perm(Permutation::cycle(n, cfg.a, &bs[1..])?);
                rec.eq(&lhs, &cfg.cs_sandwich(&tau));
            } else {
                rec.zero(&lhs);
            }
        }
    }

    rec.begin("block-product-sandwich");
    rec.eq(&cfg.cs_sandwich(&cfg.first_factor()), &cfg.cs_sandwich(&cfg.block_product()));

    rec.begin("left-column-annihilation");
    let left_entries: Vec<usize> = (1..cfg.v).flat_map(|j| s.column(j)).collect();
    let sigmas = permutations_fixing(n, &left_entries);
    for j in 1..cfg.v {
        let one_minus_zj = sub(&one, &cfg.z[j - 1]);
        for sigma in &sigmas {
            rec.zero(&mul(&cfg.at_cs.mul_perm_right(sigma), &one_minus_zj));
        }
    }

    rec.begin("total-column-sum-commutes");
    let mut big_z = AlgebraElement::zero(n);
    for zj in &cfg.z {
        big_z.add_assign(zj)?;
    }
    for sigma in permutations_fixing(n, &[cfg.a]) {
        rec.eq(&big_z.mul_perm_left(&sigma), &big_z.mul_perm_right(&sigma));
    }
    rec.eq(&mul(&cs, &big_z), &mul(&big_z, &cs));

    rec.begin("right-sum-to-total-sum");
    let z_shift = shift(&big_z, 1 - cfg.v as i64);
    let mut x_pow = one.clone();
    for _ in 1..=4 {
        let lhs = cfg.at_cs_left(&mul(&x_pow, &cfg.big_x));
        rec.eq(&lhs, &cfg.at_cs_left(&mul(&x_pow, &z_shift)));
        x_pow = mul(&x_pow, &cfg.big_x);
    }

    rec.begin("power-sandwich");
    let mut x_pow = one.clone();
    for _ in 0..=4 {
        let lhs = cfg.at_cs_left(&x_pow).scale(alpha);
        let rhs = cfg.cs.right_c(&cfg.at_cs_left(&x_pow))?;
        rec.eq(&lhs, &rhs);
        x_pow = mul(&x_pow, &cfg.big_x);
    }

    let p: Vec<AlgebraElement> = (0..=m).map(|t| cfg.p_poly(t)).collect();
    let qp: Vec<AlgebraElement> = (0..=m).map(|t| cfg.q_poly(t)).collect();

    rec.begin("block-annihilates-P");
    for pt in &p[1..] {
        for xj in &cfg.x[1..] {
            rec.zero(&cfg.cs_left(&mul(xj, pt)));
        }
        rec.zero(&cfg.cs_left(&mul(&shift(&cfg.x[0], cfg.h1), pt)));
    }

    rec.begin("block-evaluates-partial-sum");
    for t in 1..=m {
        let xt = cfg.partial_sum(t);
        let stt = cfg.s_values(t)[t - 1];
        for j in t..m {
            let mut pow = one.clone();
            for e in 0..=3u32 {
                let lhs = cfg.cs_left(&mul(&cfg.x[j], &pow));
                rec.eq(&lhs, &cfg.cs_left(&cfg.x[j]).scale(&q(stt.pow(e))));
                pow = mul(&pow, &xt);
            }
        }
    }

    rec.begin("block-annihilates-Q");
    for (t, qt) in qp.iter().enumerate().skip(1) {
        for xj in &cfg.x[t..] {
            rec.zero(&cfg.cs_left(&mul(xj, qt)));
        }
    }

    rec.begin("block-congruence");
    for i in 0..m {
        let xi = &cfg.x[i];
        let (li, hi) = (cfg.l[i], cfg.h[i]);
        rec.record(cong.residual(&mul(xi, xi), &shift(&xi.scale(&q(li - hi)), li * hi)));
        for j in 0..i {
            rec.record(cong.residual(&mul(xi, &cfg.x[j]), &xi.scale(&q(cfg.l[j]))));
        }
    }

    rec.begin("partial-sum-congruence");
    for t in 1..=m {
        let xt = cfg.partial_sum(t);
        let stt = cfg.s_values(t)[t - 1];
        let tail = shift(&xt, -stt);
        let (mut pt, mut px) = (one.clone(), one.clone());
        for _ in 0..=3 {
            rec.record(cong.residual(&mul(&pt, &tail), &mul(&px, &tail)));
            pt = mul(&pt, &xt);
            px = mul(&px, &cfg.big_x);
        }
    }

    rec.begin("first-P-Q");
    if m >= 1 {
        let base = shift(&cfg.x[0], -cfg.l[0]);
        rec.eq(&p[1], &base);
        rec.eq(&qp[1], &base);
    }

    rec.begin("P-congruent-Q");
    for t in 1..=m {
        rec.record(cong.residual(&p[t], &qp[t]));
    }

    rec.begin("P-annihilated");
    let zero = AlgebraElement::zero(n);
    for (t, pt) in p.iter().enumerate().skip(1) {
        let xt_h = shift(&cfg.partial_sum(t), cfg.h1);
        rec.record(cong.residual(&mul(pt, &xt_h), &zero));
        rec.record(cong.residual(&mul(&xt_h, pt), &zero));
    }

    rec.begin("P-equals-Q-after-row-symmetrizer");
    rec.eq(&cfg.at_cs_left(&p[m]), &cfg.at_cs_left(&qp[m]));

    rec.begin("P-sandwich");
    rec.eq(&cfg.at_cs_left(&cfg.cs.right_c(&p[m])?), &cfg.at_cs_left(&p[m]).scale(alpha));

    rec.begin("congruence-stabilizes");
    let next = mul(cong.vectors.last().unwrap_or(&cfg.at_cs), &cfg.big_x);
    let mut e = Echelon::default();
    for w in &cong.vectors {
        e.insert(w);
    }
    rec.flag(!cong.vectors.is_empty() && !e.insert(&next));

    Ok(rec.out)
}

/// Every configuration with `|T| = n`: canonical `T` of each shape and
/// each removable corner.
pub fn configurations(n: usize) -> Vec<(YoungTableau, YoungTableau)> {
    crate::partition::Partition::all(n)
        .flat_map(|lam| {
            let t = YoungTableau::canonical(&lam);
            lam.corners()
                .into_iter()
                .map(move |(i, j)| (t.clone(), t.remove_corner(i, j).unwrap().0))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> YoungTableau {
        s.parse().unwrap()
    }

    fn all_pass(tt: &str, ss: &str) {
        let out = verify_corner_identities(&t(tt), &t(ss)).unwrap();
        for o in &out {
            assert!(o.pass, "{} residual {:?}", o.line(), o.residual);
        }
    }

    #[test]
    fn smallest_configurations() {
        all_pass("1/2", "1");
        all_pass("1,2/3", "1,2");
        all_pass("1,2/3", "1/3");
        all_pass("1,2,3/4,5", "1,2,3/4");
    }

    #[test]
    fn s_values_and_hooks() {
        let x = t("1,2,3,4/5,6,7/8/9");
        let cfg = Configuration::new(&x, &x.remove_corner(4, 1).unwrap().0).unwrap();
        assert_eq!(cfg.l, vec![1, 2, 1]);
        assert_eq!(cfg.h, vec![3, 2, 1]);
        assert_eq!(cfg.r, vec![1, 4, 6]);
        assert_eq!(cfg.s_values(3), vec![1 - 2, 3 - 1, 4]);
        assert_eq!(cfg.r_tilde, vec![4, 6]);
    }

    #[test]
    fn congruence_is_reflexive_and_right_compatible() {
        let x = t("1,2,3/4,5");
        let s = t("1,2/4,5");
        let cfg = Configuration::new(&x, &s).unwrap();
        let cong = CongruenceContext::new(&cfg);
        assert!(cong.dimension() >= 1);
        let f = cfg.p_poly(cfg.m());
        let g = cfg.q_poly(cfg.m());
        assert!(cong.congruent(&f, &f));
        assert!(cong.congruent(&f, &g));
        let h = AlgebraElement::from_perm(Permutation::parse_cycles("(1 3 5)", Some(5)).unwrap());
        assert!(cong.congruent(&mul(&f, &h), &mul(&g, &h)));
        assert!(cong.congruent(&mul(&cfg.big_x, &f), &mul(&cfg.big_x, &g)));
        assert!(!cong.congruent(&f, &AlgebraElement::zero(5)) || cfg.at_cs_left(&f).is_zero());
    }
}
