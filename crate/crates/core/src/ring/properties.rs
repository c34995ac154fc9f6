use proptest::prelude::*;

use super::*;

fn poly_strategy(p: u32, rank: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, rank), 0..p as i64), 0..6)
        .prop_map(move |terms| LaurentPoly::from_terms(p, rank, terms))
}

fn setting() -> impl Strategy<Value = (u32, usize)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..=2)
}

fn triple() -> impl Strategy<Value = (LaurentPoly, LaurentPoly, LaurentPoly)> {
    setting().prop_flat_map(|(p, s)| (poly_strategy(p, s), poly_strategy(p, s), poly_strategy(p, s)))
}

fn univariate_pair() -> impl Strategy<Value = (LaurentPoly, LaurentPoly)> {
    prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|p| {
        let one = move || {
            prop::collection::vec((-6i64..=6, 0..p as i64), 1..8)
                .prop_map(move |t| LaurentPoly::from_terms(p, 1, t.into_iter().map(|(e, c)| (vec![e], c))))
        };
        (one(), one())
    })
}

proptest! {
    #[test]
    fn ring_axioms((f, g, h) in triple()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &LaurentPoly::one(f.prime(), f.rank()), f.clone());
    }

    #[test]
    fn reflection_is_a_ring_involution((f, g, _h) in triple()) {
        prop_assert_eq!(f.reflect().reflect(), f.clone());
        prop_assert_eq!((&f + &g).reflect(), &f.reflect() + &g.reflect());
        prop_assert_eq!((&f * &g).reflect(), &f.reflect() * &g.reflect());
    }

    #[test]
    fn restriction_is_a_ring_homomorphism((f, g, _h) in triple(), k in 1usize..=2) {
        let k = k.min(f.rank());
        let r = |x: &LaurentPoly| x.restrict_direction(k).unwrap();
        prop_assert_eq!(r(&(&f * &g)), &r(&f) * &r(&g));
        prop_assert_eq!(r(&(&f + &g)), &r(&f) + &r(&g));
        prop_assert_eq!(r(&f.reflect()), r(&f).reflect());
    }

    #[test]
    fn bezout_identity_and_divisibility((f, g) in univariate_pair()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let b = gcd_extended(&f, &g).unwrap();
        prop_assert_eq!(&(&b.f0 * &f) + &(&b.f1 * &g), b.gcd.clone());
        prop_assert!(divmod(&f, &b.gcd).unwrap().1.is_zero());
        prop_assert!(divmod(&g, &b.gcd).unwrap().1.is_zero());
        prop_assert_eq!(b.gcd.min_exponent().unwrap()[0], 0);
        prop_assert_eq!(b.gcd.coeff(&[0]), 1);
    }

    #[test]
    fn division_contract((f, g) in univariate_pair()) {
        prop_assume!(!g.is_zero());
        let (q, r) = divmod(&f, &g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f.clone());
        if !r.is_zero() {
            prop_assert!(degree(&r).unwrap() < degree(&g).unwrap());
        }
    }

    #[test]
    fn text_round_trip(f in setting().prop_flat_map(|(p, s)| poly_strategy(p, s))) {
        let text = f.to_string();
        let back = LaurentPoly::parse(&text, f.prime(), f.rank()).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, f);
    }
}

/// Units are exactly the monomials: brute force over all `g` supported on
/// `[-3, 3]` for p = 2 and every `f` supported on `[-1, 1]`.
#[test]
fn invertible_iff_bounded_inverse_exists() {
    let p = 2;
    let from_mask = |mask: u32, lo: i64, width: u32| {
        LaurentPoly::from_terms(
            p,
            1,
            (0..width)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (vec![lo + b as i64], 1)),
        )
    };
    for fm in 0..(1u32 << 3) {
        let f = from_mask(fm, -1, 3);
        let has_inverse = (0..(1u32 << 7)).any(|gm| (&f * &from_mask(gm, -3, 7)).is_one());
        assert_eq!(has_inverse, f.is_invertible(), "f = {f}");
    }
}
