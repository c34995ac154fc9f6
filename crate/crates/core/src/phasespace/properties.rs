use proptest::prelude::*;

use super::*;
use crate::ring::{gcd, LaurentPoly};

fn poly(p: u32, rank: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, rank), 0..p as i64), 0..5)
        .prop_map(move |terms| LaurentPoly::from_terms(p, rank, terms))
}

fn vector(p: u32, rank: usize) -> impl Strategy<Value = PhaseVector> {
    (poly(p, rank), poly(p, rank)).prop_map(|(a, b)| PhaseVector::new(a, b).unwrap())
}

fn setting() -> impl Strategy<Value = (u32, usize)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..=2)
}

fn pauli(p: u32) -> impl Strategy<Value = PauliProduct> {
    (vector(p, 1), 0..phase_modulus(p) as i64)
        .prop_map(|(v, ph)| PauliProduct::from_vector(&v).with_phase(ph))
}

/// Every vector over F_2 supported on [-2, 2].
fn all_small_qubit_vectors() -> impl Iterator<Item = PhaseVector> {
    (0u32..1 << 10).map(|bits| {
        let comp = |offset: u32| {
            LaurentPoly::from_terms(
                2,
                1,
                (0..5).map(move |i| (vec![i as i64 - 2], ((bits >> (offset + i)) & 1) as i64)),
            )
        };
        PhaseVector::new(comp(0), comp(5)).unwrap()
    })
}

#[test]
fn reflection_invariant_vectors_are_isotropic() {
    for xi in all_small_qubit_vectors().filter(|v| !v.is_zero()) {
        let r = isotropy_verdict(&xi).unwrap();
        if r.reflection_center.is_some() {
            assert!(r.isotropic, "{xi}");
        }
        if r.maximal.is_maximal() {
            assert!(gcd(&xi.plus, &xi.minus).unwrap().is_one());
            let a = r.reflection_center.expect("maximal generator has a center");
            assert!(a.is_integral(), "{xi} has half-integral center");
        }
    }
}

#[test]
fn embedding_over_small_enumeration() {
    for xi in all_small_qubit_vectors().filter(|v| !v.is_zero()) {
        let r = isotropy_verdict(&xi).unwrap();
        if !r.isotropic || r.maximal.is_maximal() {
            continue;
        }
        let eta = embed_isotropic(&xi).unwrap();
        assert!(isotropy_verdict(&eta).unwrap().maximal.is_maximal());
        // ξ = g η: the same quotient must divide both components.
        let g = if eta.plus.is_zero() {
            xi.minus.exact_div(&eta.minus).unwrap()
        } else {
            xi.plus.exact_div(&eta.plus).unwrap()
        }
        .expect("η divides ξ");
        assert_eq!(eta.mul_poly(&g).unwrap(), xi);
    }
}

proptest! {
    #[test]
    fn sesquilinearity(
        (xi, eta, f) in setting().prop_flat_map(|(p, s)| (vector(p, s), vector(p, s), poly(p, s)))
    ) {
        let base = symplectic_form(&xi, &eta).unwrap();
        prop_assert_eq!(
            symplectic_form(&xi.mul_poly(&f).unwrap(), &eta).unwrap(),
            &f.reflect() * &base
        );
        prop_assert_eq!(symplectic_form(&xi, &eta.mul_poly(&f).unwrap()).unwrap(), &f * &base);
        prop_assert_eq!(base, -symplectic_form(&eta, &xi).unwrap().reflect());
    }

    #[test]
    fn weyl_associativity(
        (a, b, c) in prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|p| (pauli(p), pauli(p), pauli(p)))
    ) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_and_commutation(
        (a, b) in prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|p| (pauli(p), pauli(p)))
    ) {
        prop_assert!(a.multiply(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().multiply(&a).unwrap().is_identity());
        // b a = ω^σ a b.
        let sigma = commutation_phase(&a, &b).unwrap().value();
        let omega = PauliProduct::identity(a.prime(), 1)
            .with_phase(if a.prime() == 2 { 2 * sigma as i64 } else { sigma as i64 });
        let ab = a.multiply(&b).unwrap();
        prop_assert_eq!(b.multiply(&a).unwrap(), omega.multiply(&ab).unwrap());
    }

    #[test]
    fn vector_round_trip(xi in setting().prop_flat_map(|(p, s)| vector(p, s))) {
        prop_assert_eq!(pauli_to_vector(&vector_to_pauli(&xi)), xi);
    }

    #[test]
    fn pauli_text_round_trip(
        (a, s) in setting().prop_flat_map(|(p, s)| (vector(p, s), 0..phase_modulus(p) as i64)
            .prop_map(move |(v, ph)| (PauliProduct::from_vector(&v).with_phase(ph), s)))
    ) {
        let text = a.to_string();
        prop_assert_eq!(PauliProduct::parse(&text, a.prime(), s).unwrap(), a);
    }
}
