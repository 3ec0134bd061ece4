//! Ideal-membership certificates for Young tabloids.
//!
//! For a filling `F` with `F⁻¹([k]) = D_μ` a [`Certificate`] records
//! `α_μ·[F] = Σ left·([G₀] ⋆ z_right)` where every generator `G₀` has
//! entries `[k]` and dominates `F₀ = F|_{D_μ}`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::symmetrizer::{expand_product, young_symmetrizer_cached, ExpansionMultiplier};
use crate::tableau::YoungTableau;
use crate::tensor::{realize_tabloid, straighten, Filling, TensorElement};

/// One term `left·([generator] ⋆ z_right)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub left: AlgebraElement,
    pub generator: Filling,
    pub right: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub target: Filling,
    pub k: usize,
    pub scale: Rational,
    pub summands: Vec<Summand>,
}

type Terms = BTreeMap<(Filling, Permutation), AlgebraElement>;

struct Builder {
    k: usize,
    memo: HashMap<Filling, (Rational, Terms)>,
    multipliers: HashMap<(Partition, Partition), ExpansionMultiplier>,
}

impl Builder {
    fn multiplier(&mut self, lambda: &Partition, mu: &Partition) -> Result<&ExpansionMultiplier> {
        let key = (lambda.clone(), mu.clone());
        if !self.multipliers.contains_key(&key) {
            let t = YoungTableau::canonical(lambda);
            let e = expand_product(&t, &t.restrict(mu)?)?;
            self.multipliers.insert(key.clone(), e);
        }
        Ok(&self.multipliers[&key])
    }

    /// `(α_μ, terms)` with `α_μ·[f] = Σ terms`.
    fn build(&mut self, f: &Filling) -> Result<(Rational, Terms)> {
        if let Some(hit) = self.memo.get(f) {
            return Ok(hit.clone());
        }
        let k = self.k;
        let lambda = f.shape().clone();
        let n = lambda.size();
        let mu = f.split_shape(k)?;
        let alpha = Rational::from_u128(mu.hook_alpha());
        let t = YoungTableau::canonical(&lambda);
        let mut terms = Terms::new();
        let f0 = f.restrict(&mu)?;
        if k == n {
            terms.insert((f0, Permutation::identity(0)), AlgebraElement::scalar(n, alpha.clone()));
            self.memo.insert(f.clone(), (alpha.clone(), terms.clone()));
            return Ok((alpha, terms));
        }

        // φ(T₀^can(c)) = T(c) on D_μ and φ(k+j) = T(F⁻¹(k+j)).
        let t_mu = YoungTableau::canonical(&mu);
        let t_word = t.reading_word();
        let f_word = f.reading_word();
        let mut phi = vec![0usize; n];
        for (i, j) in mu.cells() {
            phi[t_mu.entry(i, j).unwrap() - 1] = t.entry(i, j).unwrap();
        }
        for (cell, &e) in f_word.iter().enumerate() {
            if e > k {
                phi[e - 1] = t_word[cell];
            }
        }
        let phi = Permutation::from_word(phi)?;
        let c = young_symmetrizer_cached(&t, n)?;
        terms.insert((f0, Permutation::identity(n - k)), c.c.mul_perm_right(&phi));

        let e = self.multiplier(&lambda, &mu)?.element.clone();
        let straightened = reduce(f, k, &e)?;
        for (h, coeff) in straightened {
            if coeff.is_zero() {
                continue;
            }
            let (alpha_h, sub) = self.build(&h)?;
            let scale = &coeff / &alpha_h;
            for (key, left) in sub {
                let slot = terms.entry(key).or_insert_with(|| AlgebraElement::zero(n));
                slot.add_scaled(&scale, &left)?;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        self.memo.insert(f.clone(), (alpha.clone(), terms.clone()));
        Ok((alpha, terms))
    }
}

/// `−Σ_{σ≠1} m_σ·[G_σ]` straightened, with `G_σ = F∘T⁻¹∘σ⁻¹∘T`.
fn reduce(f: &Filling, k: usize, e: &AlgebraElement) -> Result<BTreeMap<Filling, Rational>> {
    let lambda = f.shape();
    let n = lambda.size();
    let f_word = f.reading_word();
    let mut straightened: BTreeMap<Filling, Rational> = BTreeMap::new();
    for (sigma, m) in e.sorted_terms() {
        if sigma.is_identity() {
            continue;
        }
        // Reading word of G_σ at canonical index b is F(σ⁻¹(b)).
        let inv = sigma.inverse();
        let word: Vec<usize> = (1..=n).map(|b| f_word[inv.apply(b) - 1]).collect();
        let g = Filling::new(rows_from_word(lambda, &word))?;
        for (ch, h) in straighten(&g, k)? {
            *straightened.entry(h).or_insert_with(Rational::zero) -= &(&m * &ch);
        }
    }
    straightened.retain(|_, c| !c.is_zero());
    Ok(straightened)
}

/// The tabloids `[H]` with `α_μ·[F] ≡ Σ coeff·[H]` modulo the ideal of
/// `[F₀]`; each `H` splits at `k` and its `[k]`-part dominates `F₀`.
pub fn reduction_terms(f: &Filling, k: usize) -> Result<Vec<(Rational, Filling)>> {
    let mu = f.split_shape(k)?;
    let t = YoungTableau::canonical(f.shape());
    let e = expand_product(&t, &t.restrict(&mu)?)?;
    Ok(reduce(f, k, &e.element)?.into_iter().map(|(h, c)| (c, h)).collect())
}

fn rows_from_word(shape: &Partition, word: &[usize]) -> Vec<Vec<usize>> {
    let mut it = word.iter().copied();
    shape.parts().iter().map(|&p| it.by_ref().take(p).collect()).collect()
}

/// Builds a certificate for `α_μ·[F]` following the constructive proof:
/// expand `c_λ(T)·c_μ(T₀)`, peel off the identity term, straighten the
/// remaining tabloids and recurse on each of them.
pub fn membership_certificate(f: &Filling, k: usize) -> Result<Certificate> {
    if !f.is_bijective() {
        return Err(Error::InvalidTableau(format!("{f} is not a bijection onto 1..={}", f.size())));
    }
    if k == 0 || k > f.size() {
        return Err(Error::Precondition(format!("cutoff {k} outside 1..={}", f.size())));
    }
    let mut b = Builder { k, memo: HashMap::new(), multipliers: HashMap::new() };
    let (scale, terms) = b.build(f)?;
    Ok(Certificate {
        target: f.clone(),
        k,
        scale,
        summands: terms.into_iter().map(|((generator, right), left)| Summand { left, generator, right }).collect(),
    })
}

/// `x` together with summands claimed to add up to it.
#[derive(Clone, Debug)]
pub struct Expression {
    pub value: TensorElement,
    pub summands: Vec<Summand>,
}

impl Expression {
    /// `Σ left·([generator] ⋆ z_right)`, realizing every generator afresh.
    pub fn evaluate(&self) -> Result<TensorElement> {
        let mut total = AlgebraElement::zero(self.value.degree());
        for s in &self.summands {
            let g = realize_tabloid(&s.generator)?;
            let rhs = g.concat_mul(&TensorElement::monomial(s.right.clone()));
            total.add_assign(&s.left.mul(rhs.value())?)?;
        }
        Ok(TensorElement::new(total))
    }

    pub fn verify(&self) -> Result<bool> {
        Ok(self.evaluate()? == self.value)
    }

    /// The expression for `(h·x) ⋆ z_w`: lefts become `(h·left) ⋆ 1` and
    /// rights become `right ⋆ w`, so the summand form is preserved.
    pub fn act(&self, h: &AlgebraElement, w: &Permutation) -> Result<Expression> {
        let m = w.degree();
        let unit = AlgebraElement::identity(m);
        let value = TensorElement::new(h.mul(self.value.value())?.star(&AlgebraElement::from_perm(w.clone())));
        let summands = self
            .summands
            .iter()
            .map(|s| {
                Ok(Summand {
                    left: h.mul(&s.left)?.star(&unit),
                    generator: s.generator.clone(),
                    right: s.right.star(w),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Expression { value, summands })
    }
}

/// A term `left·(c_δ(generator) ⋆ z_right)` of the group-algebra form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominanceTerm {
    pub left: AlgebraElement,
    pub generator: YoungTableau,
    pub right: Permutation,
}

impl Certificate {
    pub fn expression(&self) -> Result<Expression> {
        Ok(Expression {
            value: realize_tabloid(&self.target)?.scale(&self.scale),
            summands: self.summands.clone(),
        })
    }

    /// Checks `α·[F] = Σ left·([G₀] ⋆ z_right)` by direct expansion.
    pub fn verify(&self) -> Result<bool> {
        self.expression()?.verify()
    }

    pub fn generators(&self) -> Vec<&Filling> {
        let mut g: Vec<&Filling> = self.summands.iter().map(|s| &s.generator).collect();
        g.dedup();
        g
    }

    /// Whether every generator dominates `F₀`.
    pub fn generators_dominate(&self) -> Result<bool> {
        let mu = self.target.split_shape(self.k)?;
        let f0 = self.target.restrict(&mu)?.to_tableau()?;
        for g in self.generators() {
            if !g.to_tableau()?.dominates(&f0)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The same identity read in the group algebra:
    /// `α·c_λ(F) = Σ left'·(c_δ(G₀) ⋆ right)` with
    /// `left' = π⁻¹·left·(π_G ⋆ 1)`, `π = T_can∘F⁻¹`, `π_G = T_can∘G₀⁻¹`.
    pub fn dominance_view(&self) -> Result<Vec<DominanceTerm>> {
        let f = self.target.to_tableau()?;
        let pi_inv = f.transport_to(&YoungTableau::canonical(f.shape()))?.inverse();
        self.summands
            .iter()
            .map(|s| {
                let g = s.generator.to_tableau()?;
                let pi_g = g.transport_to(&YoungTableau::canonical(g.shape()))?;
                let shift = pi_g.star(&Permutation::identity(s.right.degree()));
                Ok(DominanceTerm {
                    left: s.left.mul_perm_left(&pi_inv).mul_perm_right(&shift),
                    generator: g,
                    right: s.right.clone(),
                })
            })
            .collect()
    }

    /// Verifies the group-algebra form with symmetrizers built by group
    /// enumeration.
    pub fn verify_dominance(&self) -> Result<bool> {
        let f = self.target.to_tableau()?;
        let n = f.size();
        let lhs = young_symmetrizer_cached(&f, n)?.c.scale(&self.scale);
        let mut rhs = AlgebraElement::zero(n);
        for term in self.dominance_view()? {
            let cg = young_symmetrizer_cached(&term.generator, term.generator.size())?;
            rhs.add_assign(&term.left.mul(&cg.c.star(&AlgebraElement::from_perm(term.right.clone())))?)?;
        }
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Filling {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_when_k_is_n() {
        let c = membership_certificate(&f("1,3/2"), 3).unwrap();
        assert_eq!(c.scale, Rational::from(3));
        assert_eq!(c.summands.len(), 1);
        assert_eq!(c.summands[0].left, AlgebraElement::scalar(3, Rational::from(3)));
        assert!(c.verify().unwrap());
    }

    #[test]
    fn two_one_over_two() {
        let c = membership_certificate(&f("1,2/3"), 2).unwrap();
        assert_eq!(c.scale, Rational::from(2));
        assert!(c.verify().unwrap());
        assert!(c.verify_dominance().unwrap());
    }

    #[test]
    fn small_cases_verify() {
        for (s, k) in [("1,2/3", 1), ("1,3/2", 2), ("1,2/3,4", 2), ("1,2,4/3", 3), ("1,3/2/4", 2), ("1,2,5/3,4", 3)] {
            let c = membership_certificate(&f(s), k).unwrap();
            assert!(c.verify().unwrap(), "{s} at {k}");
            assert!(c.verify_dominance().unwrap(), "{s} at {k}");
            assert!(c.generators_dominate().unwrap(), "{s} at {k}");
        }
        assert!(matches!(membership_certificate(&f("2,1/3"), 1), Err(Error::SplitCondition { .. })));
    }

    #[test]
    fn closure_under_both_actions() {
        let c = membership_certificate(&f("1,2/3,4"), 2).unwrap();
        let h = AlgebraElement::from_terms(
            4,
            [
                (Permutation::parse_cycles("(1 3)", Some(4)).unwrap(), Rational::from(2)),
                (Permutation::parse_cycles("(2 4 3)", Some(4)).unwrap(), Rational::new(-1, 3).unwrap()),
            ],
        )
        .unwrap();
        let w = Permutation::parse_one_line("[2,1]").unwrap();
        let moved = c.expression().unwrap().act(&h, &w).unwrap();
        assert!(moved.verify().unwrap());
    }
}
