use proptest::prelude::*;

use super::*;
use crate::phasespace::{
    commutation_phase, isotropy_verdict, phase_modulus, symplectic_form, PauliProduct,
    PhaseVector,
};
use crate::ring::LaurentPoly;

/// A symmetric polynomial `Σ c_k (u^k + u^-k) + c_0` in one lattice direction.
fn symmetric(p: u32, rank: usize) -> impl Strategy<Value = LaurentPoly> {
    (1..=rank, prop::collection::vec(0..p as i64, 3)).prop_map(move |(k, cs)| {
        let mut f = LaurentPoly::constant(p, rank, cs[0]);
        for (n, &c) in cs.iter().enumerate().skip(1) {
            f = &f + &LaurentPoly::symmetric_in(p, rank, k, n as u32).scale(c as u32);
        }
        f
    })
}

/// Shears `[[1,0],[f,1]]` and swaps `[[0,-1/c],[c,0]]`, built without the
/// factorization module.
fn step(p: u32, rank: usize) -> impl Strategy<Value = ScaMatrix> {
    prop_oneof![
        symmetric(p, rank).prop_map(move |f| {
            ScaMatrix::new([
                [LaurentPoly::one(p, rank), LaurentPoly::zero(p, rank)],
                [f, LaurentPoly::one(p, rank)],
            ])
            .unwrap()
        }),
        (1..p as i64).prop_map(move |c| {
            let inv = (1..p as i64).find(|d| (c * d) % p as i64 == 1).unwrap();
            ScaMatrix::new([
                [LaurentPoly::zero(p, rank), LaurentPoly::constant(p, rank, -inv)],
                [LaurentPoly::constant(p, rank, c), LaurentPoly::zero(p, rank)],
            ])
            .unwrap()
        }),
    ]
}

fn automaton_in(p: u32, rank: usize) -> impl Strategy<Value = ScaMatrix> {
    (
        prop::collection::vec(step(p, rank), 1..=6),
        prop::collection::vec(-2i64..=2, rank),
    )
        .prop_map(move |(steps, shift)| {
            let t = steps
                .iter()
                .fold(ScaMatrix::identity(p, rank), |acc, g| acc.mul(g).unwrap());
            t.shift(&shift)
        })
}

fn small_setting() -> impl Strategy<Value = (u32, usize)> {
    (prop::sample::select(vec![2u32, 3]), 1usize..=2)
}

fn vector(p: u32, rank: usize) -> impl Strategy<Value = PhaseVector> {
    let poly = move || {
        prop::collection::vec((prop::collection::vec(-2i64..=2, rank), 0..p as i64), 0..4)
            .prop_map(move |t| LaurentPoly::from_terms(p, rank, t))
    };
    (poly(), poly()).prop_map(|(a, b)| PhaseVector::new(a, b).unwrap())
}

fn cqca_in(p: u32, rank: usize) -> impl Strategy<Value = Cqca> {
    let m = phase_modulus(p);
    (automaton_in(p, rank), 0..m, 0..m).prop_map(move |(t, x, z)| {
        let d = PhaseData::default_for(&t);
        let fix = |want: u32, got: u32| if p == 2 { (got & 2) | want } else { got };
        let phase = PhaseData {
            base_phase_x: fix(d.base_phase_x, x),
            base_phase_z: fix(d.base_phase_z, z),
        };
        Cqca::new(t, phase).unwrap()
    })
}

fn pauli(p: u32, rank: usize) -> impl Strategy<Value = PauliProduct> {
    (vector(p, rank), 0..phase_modulus(p) as i64)
        .prop_map(|(v, ph)| PauliProduct::from_vector(&v).with_phase(ph))
}

fn perturbed(p: u32) -> impl Strategy<Value = ScaMatrix> {
    (automaton_in(p, 1), 0usize..4, -2i64..=2, 1..p as i64).prop_map(move |(t, idx, e, c)| {
        let mut rows = t.entries().clone();
        let cell = &mut rows[idx / 2][idx % 2];
        *cell = &*cell + &LaurentPoly::monomial(p, vec![e], c);
        ScaMatrix::new(rows).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn both_validity_tests_agree(t in prop::sample::select(vec![2u32, 3]).prop_flat_map(|p| prop_oneof![automaton_in(p, 1), perturbed(p)])) {
        let v = t.validate();
        prop_assert_eq!(v.columns_ok, v.determinant_ok, "{}", t);
    }

    #[test]
    fn group_closure((t, s) in small_setting().prop_flat_map(|(p, r)| (automaton_in(p, r), automaton_in(p, r)))) {
        prop_assert!(t.is_valid());
        let ts = t.compose(&s).unwrap();
        prop_assert!(ts.is_valid());
        let inv = t.inverse().unwrap();
        prop_assert!(inv.is_valid());
        prop_assert!(t.compose(&inv).unwrap().is_identity());
        prop_assert!(inv.compose(&t).unwrap().is_identity());
        let c = t.centered().unwrap();
        prop_assert!(c.det().is_one());
        prop_assert_eq!(c.center().unwrap(), vec![0; t.rank()]);
    }

    #[test]
    fn preserves_symplectic_form((t, xi, eta) in small_setting().prop_flat_map(|(p, r)| (automaton_in(p, r), vector(p, r), vector(p, r)))) {
        let lhs = symplectic_form(&t.apply_vector(&xi).unwrap(), &t.apply_vector(&eta).unwrap()).unwrap();
        prop_assert_eq!(lhs, symplectic_form(&xi, &eta).unwrap());
    }

    #[test]
    fn columns_are_maximal(t in prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|p| automaton_in(p, 1))) {
        for j in 0..2 {
            prop_assert!(isotropy_verdict(&t.column(j)).unwrap().maximal.is_maximal());
        }
    }

    #[test]
    fn completion_of_random_columns(t in prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|p| automaton_in(p, 1))) {
        let xi = t.column(1);
        let c = complete_generator(&xi).unwrap();
        prop_assert!(c.is_valid());
        prop_assert_eq!(c.column(1), xi);
    }

    #[test]
    fn cocycle((c, xi, eta) in small_setting().prop_flat_map(|(p, r)| (cqca_in(p, r), vector(p, r), vector(p, r)))) {
        // ϑ(ξ+η) = ϑ(ξ) ϑ(η) ω^{β(ξ,η) - β(tξ,tη)} with β(ξ,η) = -Σ ξ- η+.
        let p = c.prime();
        let m = phase_modulus(p) as i64;
        let unit = if p == 2 { 2 } else { 1 };
        let b = |a: &PhaseVector, b: &PhaseVector| -> i64 {
            a.minus.terms().map(|(x, k)| k as i64 * b.plus.coeff(x) as i64).sum()
        };
        let t = c.matrix();
        let (txi, teta) = (t.apply_vector(&xi).unwrap(), t.apply_vector(&eta).unwrap());
        let lhs = c.phase_function(&xi.checked_add(&eta).unwrap()).unwrap() as i64;
        let rhs = c.phase_function(&xi).unwrap() as i64
            + c.phase_function(&eta).unwrap() as i64
            + unit * (b(&txi, &teta) - b(&xi, &eta));
        prop_assert_eq!(lhs.rem_euclid(m), rhs.rem_euclid(m));
        prop_assert_eq!(c.phase_function(&PhaseVector::zero(p, c.rank())).unwrap(), 0);
    }

    #[test]
    fn pauli_homomorphism((c, a, b) in small_setting().prop_flat_map(|(p, r)| (cqca_in(p, r), pauli(p, r), pauli(p, r)))) {
        let lhs = c.apply_pauli(&a.multiply(&b).unwrap()).unwrap();
        let rhs = c.apply_pauli(&a).unwrap().multiply(&c.apply_pauli(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weyl_covariance((c, eta, a) in small_setting().prop_flat_map(|(p, r)| (cqca_in(p, r), vector(p, r), vector(p, r)))) {
        let w = PauliProduct::from_vector(&eta);
        let single = PauliProduct::from_vector(&a);
        let conj = w.multiply(&single).unwrap().multiply(&w.inverse()).unwrap();
        let tw = PauliProduct::from_vector(&c.matrix().apply_vector(&eta).unwrap());
        let image = c.apply_pauli(&single).unwrap();
        let rhs = tw.multiply(&image).unwrap().multiply(&tw.inverse()).unwrap();
        prop_assert_eq!(c.apply_pauli(&conj).unwrap(), rhs);
        // Conjugation only contributes the commutation phase.
        prop_assert_eq!(
            commutation_phase(&single, &w).unwrap(),
            commutation_phase(&image, &tw).unwrap()
        );
    }

    #[test]
    fn cqca_group_laws((c, d, a) in small_setting().prop_flat_map(|(p, r)| (cqca_in(p, r), cqca_in(p, r), pauli(p, r)))) {
        let inv = c.inverse().unwrap();
        prop_assert_eq!(inv.apply_pauli(&c.apply_pauli(&a).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(c.apply_pauli(&inv.apply_pauli(&a).unwrap()).unwrap(), a.clone());
        let cd = c.compose(&d).unwrap();
        prop_assert_eq!(cd.apply_pauli(&a).unwrap(), c.apply_pauli(&d.apply_pauli(&a).unwrap()).unwrap());
    }

    #[test]
    fn json_round_trip(c in small_setting().prop_flat_map(|(p, r)| cqca_in(p, r))) {
        let text = c.to_json();
        let back = Cqca::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back, c);
    }
}
