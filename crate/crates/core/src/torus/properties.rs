use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::automaton::ScaMatrix;
use crate::phasespace::PhaseVector;
use crate::ring::LaurentPoly;

fn basis2() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 2)
        .prop_filter("independent", |b| b[0][0] * b[1][1] - b[0][1] * b[1][0] != 0)
}

fn automaton(p: u32) -> impl Strategy<Value = ScaMatrix> {
    let step = prop_oneof![
        (0u32..=3, 1..p as i64).prop_map(move |(n, c)| {
            let f = if n == 0 {
                LaurentPoly::constant(p, 1, c)
            } else {
                LaurentPoly::symmetric(p, n).scale(c as u32)
            };
            let one = LaurentPoly::one(p, 1);
            ScaMatrix::new([[one.clone(), LaurentPoly::zero(p, 1)], [f, one]]).unwrap()
        }),
        Just(ScaMatrix::new([
            [LaurentPoly::zero(p, 1), LaurentPoly::constant(p, 1, -1)],
            [LaurentPoly::one(p, 1), LaurentPoly::zero(p, 1)],
        ])
        .unwrap()),
    ];
    prop::collection::vec(step, 1..=5).prop_map(move |s| {
        s.iter().fold(ScaMatrix::identity(p, 1), |a, g| a.mul(g).unwrap())
    })
}

fn on_torus(t: &ScaMatrix, lattice: &Arc<TorusLattice>) -> TorusSca {
    let e = |i, j| TorusPoly::from_laurent(t.entry(i, j), lattice).unwrap();
    TorusSca::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]).unwrap()
}

proptest! {
    #[test]
    fn canonicalization_respects_cosets(
        basis in basis2(),
        x in prop::collection::vec(-20i64..=20, 2),
        y in prop::collection::vec(-20i64..=20, 2),
        k in prop::collection::vec(-3i64..=3, 2),
    ) {
        let t = TorusLattice::new(basis.clone()).unwrap();
        prop_assert_eq!(t.sites() as i64, (basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]).abs());
        let moved: Vec<i64> = (0..2).map(|i| x[i] + k[0] * basis[0][i] + k[1] * basis[1][i]).collect();
        prop_assert_eq!(t.index(&x), t.index(&moved));
        // Different classes: x - y outside the lattice iff indices differ.
        let diff: Vec<i64> = (0..2).map(|i| x[i] - y[i]).collect();
        let det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
        let a = diff[0] * basis[1][1] - diff[1] * basis[1][0];
        let b = basis[0][0] * diff[1] - basis[0][1] * diff[0];
        let in_lattice = a % det == 0 && b % det == 0;
        prop_assert_eq!(t.index(&x) == t.index(&y), in_lattice);
    }

    #[test]
    fn restricted_automata_stay_valid(
        (p, t) in prop::sample::select(vec![2u32, 3]).prop_flat_map(|p| (Just(p), automaton(p))),
        n in 1i64..=8,
    ) {
        let lattice = Arc::new(TorusLattice::cyclic(n).unwrap());
        let tt = on_torus(&t, &lattice);
        prop_assert!(torus_validate(&tt));
        for j in 0..2 {
            let v = torus_stabilizer_verdict(&tt.column(j)).unwrap();
            prop_assert!(v.maximal);
        }
        let xi = tt.column(1);
        let c = torus_complete(&xi).unwrap();
        prop_assert!(torus_validate(&c));
        prop_assert_eq!(c.column(1), xi);
        let _ = p;
    }

    #[test]
    fn symplectic_form_is_preserved(
        t in automaton(3),
        a in prop::collection::vec(0i64..3, 10),
        n in 2i64..=6,
    ) {
        let lattice = Arc::new(TorusLattice::cyclic(n).unwrap());
        let tt = on_torus(&t, &lattice);
        let v = |o: usize| {
            let f = |s: usize| LaurentPoly::univariate(3, &[(0, a[s]), (1, a[s + 1]), (3, a[s + 2])]);
            TorusVector::from_phase_vector(&PhaseVector::new(f(o), f(o + 3)).unwrap(), &lattice).unwrap()
        };
        let (xi, eta) = (v(0), v(4));
        let lhs = torus_symplectic_form(&tt.apply_vector(&xi).unwrap(), &tt.apply_vector(&eta).unwrap()).unwrap();
        prop_assert_eq!(lhs, torus_symplectic_form(&xi, &eta).unwrap());
    }
}
