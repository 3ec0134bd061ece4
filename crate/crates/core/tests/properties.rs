use proptest::prelude::*;

use ysym::certificate::membership_certificate;
use ysym::symmetric::{project_monomial, realize_dn_tabloid};
use ysym::symmetrizer::young_symmetrizer;
use ysym::tensor::{realize_tabloid, straighten, Filling};
use ysym::{AlgebraElement, Partition, Permutation, Rational, YoungTableau};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|w| Permutation::from_word(w).unwrap())
}

fn perm_upto(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(perm)
}

fn element(n: usize) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((perm(n), -4i64..=4), 0..6).prop_map(move |terms| {
        AlgebraElement::from_terms(n, terms.into_iter().map(|(p, c)| (p, Rational::from(c)))).unwrap()
    })
}

fn shape(n: usize) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = Partition::all(n).collect();
    prop::sample::select(all)
}

/// A random standard filling of a random shape of size `n`.
fn filling(n: usize) -> impl Strategy<Value = Filling> {
    (shape(n), perm(n)).prop_map(|(lam, p)| {
        let mut it = p.word().iter().map(|&e| e as usize);
        Filling::new(lam.parts().iter().map(|&m| it.by_ref().take(m).collect()).collect()).unwrap()
    })
}

fn column_of(f: &Filling, e: usize) -> usize {
    f.columns().iter().position(|c| c.contains(&e)).unwrap() + 1
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sign_is_multiplicative((p, q) in (1usize..=7).prop_flat_map(|n| (perm(n), perm(n)))) {
        prop_assert_eq!(p.compose(&q).unwrap().sign(), p.sign() * q.sign());
    }

    #[test]
    fn star_is_associative(p in perm_upto(4), q in perm_upto(4), r in perm_upto(4)) {
        prop_assert_eq!(p.star(&q).star(&r), p.star(&q.star(&r)));
    }

    #[test]
    fn star_restricts_and_multiplies_signs(p in perm_upto(5), q in perm_upto(4)) {
        let s = p.star(&q);
        prop_assert_eq!(s.degree(), p.degree() + q.degree());
        for i in 1..=p.degree() {
            prop_assert_eq!(s.apply(i), p.apply(i));
        }
        for j in 1..=q.degree() {
            prop_assert_eq!(s.apply(p.degree() + j), p.degree() + q.apply(j));
        }
        prop_assert_eq!(s.sign(), p.sign() * q.sign());
    }

    #[test]
    fn algebra_product_is_associative(
        (a, b, c) in (1usize..=6).prop_flat_map(|n| (element(n), element(n), element(n)))
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn sequential_and_parallel_products_agree((a, b) in (1usize..=6).prop_flat_map(|n| (element(n), element(n)))) {
        prop_assert_eq!(a.mul_sequential(&b), a.mul_parallel(&b));
    }

    #[test]
    fn symmetrizer_is_equivariant((lam, delta) in (1usize..=5).prop_flat_map(|n| (shape(n), perm(n)))) {
        let t = YoungTableau::canonical(&lam);
        let moved = t.act(&delta).unwrap();
        let c = young_symmetrizer(&t).unwrap().c;
        let expected = c.mul_perm_left(&delta).mul_perm_right(&delta.inverse());
        prop_assert_eq!(young_symmetrizer(&moved).unwrap().c, expected);
    }

    #[test]
    fn quasi_idempotent_for_any_tableau((lam, p) in (1usize..=6).prop_flat_map(|n| (shape(n), perm(n)))) {
        let t = YoungTableau::canonical(&lam).act(&p).unwrap();
        let c = young_symmetrizer(&t).unwrap().c;
        prop_assert_eq!(c.mul(&c).unwrap(), c.scale(&Rational::from_u128(lam.hook_alpha())));
    }

    #[test]
    fn column_sign_relation(f in filling(6), seed in any::<u64>()) {
        // A permutation inside one column of `f`.
        let cols = f.columns();
        let col = &cols[(seed as usize) % cols.len()];
        let n = f.size();
        let mut w: Vec<usize> = (1..=n).collect();
        let shift = (seed >> 8) as usize % col.len();
        for (i, &x) in col.iter().enumerate() {
            w[x - 1] = col[(i + shift) % col.len()];
        }
        let sigma = Permutation::from_word(w).unwrap();
        let moved = realize_tabloid(&f.act(&sigma).unwrap()).unwrap();
        let base = realize_tabloid(&f).unwrap();
        prop_assert_eq!(moved, base.scale(&Rational::from(sigma.sign())));
    }

    #[test]
    fn straightening_moves_entries_left((f, k) in (2usize..=6).prop_flat_map(|n| (filling(n), 1..=n))) {
        let terms = straighten(&f, k).unwrap();
        let (_, sorted) = f.column_sorted();
        let mut total = AlgebraElement::zero(f.size());
        for (c, h) in &terms {
            prop_assert!(h.splits_at(k), "{} does not split at {}", h, k);
            prop_assert!(h.potential(k) <= sorted.potential(k));
            for e in 1..=k {
                prop_assert!(column_of(h, e) <= column_of(&sorted, e));
            }
            total.add_scaled(c, realize_tabloid(h).unwrap().value()).unwrap();
        }
        let expected = realize_tabloid(&f).unwrap();
        prop_assert_eq!(&total, expected.value());
    }

    #[test]
    fn projection_is_multiplicative(
        d in 1usize..=3,
        a in 0usize..=2,
        b in 0usize..=2,
        seed in any::<u64>(),
    ) {
        let word = |m: usize, s: u64| {
            let mut w: Vec<usize> = (1..=m).collect();
            let mut x = s | 1;
            for i in (1..w.len()).rev() {
                x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                w.swap(i, (x as usize) % (i + 1));
            }
            Permutation::from_word(w).unwrap()
        };
        let p = word(a * d, seed);
        let q = word(b * d, seed.rotate_left(17));
        let lhs = project_monomial(&p.star(&q), d).unwrap();
        let rhs = project_monomial(&p, d).unwrap().concat(&project_monomial(&q, d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn certificates_close_under_both_actions(
        (f, h, w, pick) in (2usize..=4).prop_flat_map(|n| (filling(n), element(n), perm_upto(2), any::<usize>()))
    ) {
        let ks: Vec<usize> = (1..=f.size()).filter(|&k| f.splits_at(k)).collect();
        let k = ks[pick % ks.len()];
        let cert = membership_certificate(&f, k).unwrap();
        prop_assert!(cert.verify().unwrap());
        let moved = cert.expression().unwrap().act(&h, &w).unwrap();
        prop_assert!(moved.verify().unwrap());
    }

    #[test]
    fn dn_relabeling_invariance(d in 1usize..=2, p in perm_upto(3), seed in any::<u64>()) {
        let n = p.degree();
        let lams: Vec<Partition> = Partition::all(n * d).collect();
        let lam = &lams[(seed as usize) % lams.len()];
        let fills = ysym::symmetric::dn_fillings(lam, d).unwrap();
        let f = &fills[(seed >> 16) as usize % fills.len()];
        prop_assert_eq!(
            realize_dn_tabloid(&f.act(&p).unwrap(), d).unwrap(),
            realize_dn_tabloid(f, d).unwrap()
        );
    }
}
