//! Randomized invariants of the scalar, algebra and Hopf layers.

use jordeform::fock::BosonWord;
use jordeform::hopf::{build_hopf, tensor_multiply};
use jordeform::liebialg::WedgeElement;
use jordeform::ncalg::{
    automorphism, build_presentation, normal_order_with, Element, Generator, Monomial,
    PresentationName, Strategy as Rewrite, RANK,
};
use jordeform::scalars::{is_squarefree, radical_mul, rat, Radical, Rational, ZSeries};
use proptest::prelude::*;

const ORDER: usize = 3;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn series() -> impl Strategy<Value = ZSeries> {
    prop::collection::vec(small_rational(), ORDER + 1).prop_map(|c| ZSeries::from_coeffs(c, ORDER))
}

fn presentation_name() -> impl Strategy<Value = PresentationName> {
    prop::sample::select(PresentationName::ALL.to_vec())
}

// Ordered monomials of degree at most two.
fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..RANK, 0..=2).prop_map(|gens| {
        gens.into_iter().fold(Monomial::IDENTITY, |m, g| {
            m.concat(&Monomial::generator(Generator::new(g)))
        })
    })
}

// Up to three terms, each `c z^k m`.
fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((monomial(), small_rational(), 0..=ORDER), 1..=3).prop_map(|terms| {
        let mut e = Element::zero(ORDER);
        for (m, c, k) in terms {
            e.add_term(m, &ZSeries::term(c, k, ORDER));
        }
        e
    })
}

fn word() -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec((0..RANK).prop_map(Generator::new), 0..=4)
}

proptest! {
    #[test]
    fn series_ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &ZSeries::zero(ORDER));
        prop_assert_eq!(&a * &ZSeries::one(ORDER), a.clone());
    }

    #[test]
    fn series_inverse(a in series()) {
        prop_assume!(*a.constant_term() != rat(0, 1));
        let inv = a.invert().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn negate_z_is_a_ring_involution(a in series(), b in series()) {
        prop_assert_eq!(a.negate_z().negate_z(), a.clone());
        prop_assert_eq!((&a * &b).negate_z(), &a.negate_z() * &b.negate_z());
    }

    #[test]
    fn radicals_are_squarefree(n in -20i64..=20, d in 1i64..=9, r in 1u64..=400) {
        let x = Radical::new(rat(n, d), r);
        prop_assert!(is_squarefree(x.radicand()));
        prop_assert_eq!(x.square(), rat(n * n, d * d) * rat(r as i64, 1));
    }

    #[test]
    fn radical_product_squares(a in 1u64..=200, b in 1u64..=200, p in -5i64..=5, q in -5i64..=5) {
        let (x, y) = (Radical::new(rat(p, 1), a), Radical::new(rat(q, 1), b));
        let xy = radical_mul(&x, &y);
        prop_assert!(is_squarefree(xy.radicand()));
        prop_assert_eq!(xy.square(), x.square() * y.square());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(name in presentation_name(), a in element(), b in element(), c in element()) {
        let p = build_presentation(name, ORDER);
        let left = p.multiply(&p.multiply(&a, &b), &c);
        let right = p.multiply(&a, &p.multiply(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rewriting_is_confluent(name in presentation_name(), w in word()) {
        let p = build_presentation(name, ORDER);
        let one = ZSeries::one(ORDER);
        let left = normal_order_with(&w, &one, &p, Rewrite::LeftmostFirst);
        let right = normal_order_with(&w, &one, &p, Rewrite::RightmostFirst);
        let gens: Vec<Element> = w.iter().map(|&g| Element::generator(g, ORDER)).collect();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, p.product(gens.iter()));
    }

    #[test]
    fn counit_and_coproduct_are_multiplicative(name in presentation_name(), a in element(), b in element()) {
        let h = build_hopf(name, ORDER);
        let p = h.presentation();
        let ab = p.multiply(&a, &b);
        prop_assert_eq!(h.counit(&ab), &h.counit(&a) * &h.counit(&b));
        let lhs = h.coproduct(&ab);
        let rhs = tensor_multiply(&h.coproduct(&a), &h.coproduct(&b), p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn involution_is_multiplicative(a in element(), b in element()) {
        let h6 = build_presentation(PresentationName::H6Jordanian, ORDER);
        let dual = build_presentation(PresentationName::H6JordanianDual, ORDER);
        prop_assert_eq!(automorphism(&automorphism(&a)), a.clone());
        prop_assert_eq!(
            automorphism(&h6.multiply(&a, &b)),
            dual.multiply(&automorphism(&a), &automorphism(&b))
        );
    }

    #[test]
    fn boson_product_is_associative(
        x in prop::collection::vec((0u32..=2, 0u32..=2, small_rational()), 1..=3),
        y in prop::collection::vec((0u32..=2, 0u32..=2, small_rational()), 1..=3),
        w in prop::collection::vec((0u32..=2, 0u32..=2, small_rational()), 1..=3),
    ) {
        let build = |ts: &[(u32, u32, Rational)]| {
            let mut b = BosonWord::zero(ORDER);
            for (i, j, c) in ts {
                b.add_term(*i, *j, &ZSeries::constant(c.clone(), ORDER));
            }
            b
        };
        let (x, y, w) = (build(&x), build(&y), build(&w));
        prop_assert_eq!(x.multiply(&y).multiply(&w), x.multiply(&y.multiply(&w)));
    }

    #[test]
    fn wedge_is_antisymmetric(i in 0..RANK, j in 0..RANK, c in small_rational()) {
        let mut w = WedgeElement::zero(2, 1);
        w.add(&[i, j], &c);
        w.add(&[j, i], &c);
        prop_assert!(w.is_zero());
    }
}
