use proptest::prelude::*;

use super::*;
use crate::automaton::ScaMatrix;
use crate::ring::{FieldElement, LaurentPoly};

fn generator(p: u32) -> impl Strategy<Value = Generator> {
    prop_oneof![
        (0u32..=4, 1..p as i64).prop_map(move |(n, c)| {
            let w = if n == 0 {
                LaurentPoly::one(p, 1)
            } else {
                LaurentPoly::symmetric(p, n)
            };
            Generator::shear(w.scale(c as u32)).unwrap()
        }),
        (1..p as i64).prop_map(move |c| Generator::fourier(FieldElement::new(c, p)).unwrap()),
    ]
}

fn word() -> impl Strategy<Value = GeneratorSeq> {
    prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|p| {
        prop::collection::vec(generator(p), 0..=8)
            .prop_map(move |fs| GeneratorSeq::new(p, fs).unwrap())
    })
}

fn symmetric(p: u32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(0..p as i64, 4).prop_map(move |cs| {
        cs.iter().enumerate().fold(LaurentPoly::zero(p, 1), |acc, (n, &c)| {
            let w = if n == 0 {
                LaurentPoly::one(p, 1)
            } else {
                LaurentPoly::symmetric(p, n as u32)
            };
            &acc + &w.scale(c as u32)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_round_trip(w in word()) {
        let t = w.product();
        let seq = decompose(&t).unwrap();
        prop_assert_eq!(seq.product(), t);
    }

    #[test]
    fn degree_decreases(w in word()) {
        let mut t = w.product();
        let total = |t: &ScaMatrix| (0..2).map(|j| column_degree(&t.column(j)).unwrap_or(0)).sum::<u64>();
        while !t.is_constant() {
            let (a, b) = (column_degree(&t.column(0)), column_degree(&t.column(1)));
            if a <= b {
                t = t.mul(&fourier_matrix(FieldElement::one(t.prime())).unwrap()).unwrap();
                if a == b {
                    // Equal degrees: a constant shear breaks the tie.
                    let s = decompose(&t).unwrap();
                    prop_assert_eq!(s.product(), t);
                    break;
                }
                continue;
            }
            let before = total(&t);
            prop_assert_eq!(before % 2, 0);
            let (next, f) = reduce_step(&t).unwrap();
            prop_assert_eq!(f.clone(), f.reflect());
            prop_assert!(total(&next) < before);
            t = next;
        }
    }

    #[test]
    fn shear_homomorphism((f, g) in prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|p| (symmetric(p), symmetric(p)))) {
        let lhs = shear_matrix(&(&f + &g)).unwrap();
        let rhs = shear_matrix(&f).unwrap().mul(&shear_matrix(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(w in word()) {
        prop_assert_eq!(GeneratorSeq::parse(&w.to_string(), w.prime()).unwrap(), w);
    }
}
