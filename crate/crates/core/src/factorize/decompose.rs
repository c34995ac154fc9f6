use super::generator::{fourier_matrix, shear_matrix, Generator, GeneratorSeq};
use crate::automaton::ScaMatrix;
use crate::error::{Error, Result};
use crate::phasespace::PhaseVector;
use crate::ring::{exponent_range, inv_mod, mul_mod, neg_mod, FieldElement, LaurentPoly};

/// Top exponent of a column: half its degree for centered columns.
fn reach(v: &PhaseVector) -> Option<i64> {
    [&v.plus, &v.minus]
        .into_iter()
        .filter_map(|f| exponent_range(f).map(|(_, hi)| hi))
        .max()
}

/// Degree of a column, `max` over its components.
pub fn column_degree(v: &PhaseVector) -> Option<u64> {
    [&v.plus, &v.minus]
        .into_iter()
        .filter_map(|f| exponent_range(f).map(|(lo, hi)| (hi - lo) as u64))
        .max()
}

/// `c` with `top(a) = c · top(b)`, where `top` is the coefficient pair at the given exponent.
fn leading_ratio(a: &PhaseVector, x: i64, b: &PhaseVector, y: i64) -> Result<u32> {
    let p = a.prime();
    let (a0, a1) = (a.plus.coeff(&[x]), a.minus.coeff(&[x]));
    let (b0, b1) = (b.plus.coeff(&[y]), b.minus.coeff(&[y]));
    let (num, den) = if b0 != 0 { (a0, b0) } else { (a1, b1) };
    let c = mul_mod(num, inv_mod(den, p).expect("nonzero leading pair"), p);
    if mul_mod(c, b0, p) != a0 || mul_mod(c, b1, p) != a1 {
        return Err(Error::Internal(
            "leading coefficients of the columns are not proportional".into(),
        ));
    }
    Ok(c)
}

fn require_centered(t: &ScaMatrix) -> Result<()> {
    if t.rank() != 1 {
        return Err(Error::Domain("factorization is only defined for s = 1".into()));
    }
    let a = t.center()?;
    if a != [0] {
        return Err(Error::Domain(format!(
            "automaton has center {}; factor u^-a t instead",
            a[0]
        )));
    }
    Ok(())
}

/// One reduction: a symmetric `f` with `t_next = t · G(f) · F(1)` of strictly
/// smaller column degrees.
///
/// Requires a centered `t` whose first column has larger degree than the second.
pub fn reduce_step(t: &ScaMatrix) -> Result<(ScaMatrix, LaurentPoly)> {
    require_centered(t)?;
    let p = t.prime();
    let (xi, eta) = (t.column(0), t.column(1));
    let (dx, dy) = (column_degree(&xi), column_degree(&eta));
    if t.is_constant() || dx <= dy {
        return Err(Error::Domain(format!(
            "reduction needs deg(t1) > deg(t2), got {} and {}",
            dx.unwrap_or(0),
            dy.unwrap_or(0)
        )));
    }
    let y = reach(&eta).expect("nonzero column");
    let mut f = LaurentPoly::zero(p, 1);
    let mut cur = xi;
    loop {
        let x = reach(&cur).expect("column pairs to 1 with eta, so nonzero");
        if x < y || (x == y && y == 0) {
            break;
        }
        // Leading pairs at ±x and ±y are proportional because σ̂(ξ, η) = 1
        // has no u^{x+y} term.
        let c = leading_ratio(&cur, x, &eta, y)?;
        let n = (x - y) as u32;
        let step = if n == 0 {
            LaurentPoly::constant(p, 1, neg_mod(c, p) as i64)
        } else {
            LaurentPoly::symmetric(p, n).scale(neg_mod(c, p))
        };
        cur = cur.checked_add(&eta.mul_poly(&step)?)?;
        f = &f + &step;
    }
    let next = t
        .mul(&shear_matrix(&f)?)?
        .mul(&fourier_matrix(FieldElement::one(p))?)?;
    Ok((next, f))
}

/// Factors a constant matrix of determinant 1 into at most 5 constant generators.
pub fn sl2_constant_decompose(m: [[FieldElement; 2]; 2]) -> Result<GeneratorSeq> {
    let [[a, b], [c, d]] = m;
    let p = a.modulus();
    let one = FieldElement::one(p);
    if a * d - b * c != one {
        return Err(Error::Domain("constant matrix must have determinant 1".into()));
    }
    let shear = |x: FieldElement| Generator::Shear(LaurentPoly::constant(p, 1, x.value() as i64));
    let mut factors = Vec::new();
    if let Some(binv) = b.inv() {
        // [[a,b],[c,d]] = G(d/b) F(-1/b) G(a/b).
        factors.push(shear(d * binv));
        factors.push(Generator::Fourier(-binv));
        factors.push(shear(a * binv));
    } else if a == one {
        factors.push(shear(c));
    } else {
        // m F(1) = [[0,-a],[d,-c]] has a nonzero corner; m = (m F(1)) F(-1).
        let inner = sl2_constant_decompose([[FieldElement::zero(p), -a], [d, -c]])?;
        factors.extend(inner.factors().iter().cloned());
        factors.push(Generator::Fourier(-one));
    }
    GeneratorSeq::new(p, simplify(factors))
}

/// Merges adjacent shears and cancels `F(c) F(-c)` and `G(0)`.
fn simplify(factors: Vec<Generator>) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::with_capacity(factors.len());
    for g in factors {
        match (out.last(), &g) {
            (Some(Generator::Shear(f)), Generator::Shear(h)) => {
                let sum = f + h;
                out.pop();
                if !sum.is_zero() {
                    out.push(Generator::Shear(sum));
                }
            }
            (Some(Generator::Fourier(c)), Generator::Fourier(e)) if *c == -*e => {
                out.pop();
            }
            (_, Generator::Shear(h)) if h.is_zero() => {}
            _ => out.push(g),
        }
    }
    out
}

fn constant_entries(t: &ScaMatrix) -> [[FieldElement; 2]; 2] {
    let p = t.prime();
    let e = |i, j| FieldElement::new(t.entry(i, j).constant_term() as i64, p);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Writes a centered one-dimensional automaton as a product of shears and
/// local Fourier transforms.
pub fn decompose(t: &ScaMatrix) -> Result<GeneratorSeq> {
    require_centered(t)?;
    let p = t.prime();
    let f1 = Generator::Fourier(FieldElement::one(p));
    let mut cur = t.clone();
    // Right factors applied so far: cur = t · applied[0] · applied[1] · …
    let mut applied: Vec<Generator> = Vec::new();
    while !cur.is_constant() {
        let (xi, eta) = (cur.column(0), cur.column(1));
        let (dx, dy) = (column_degree(&xi), column_degree(&eta));
        if dx > dy {
            let (next, f) = reduce_step(&cur)?;
            applied.push(Generator::Shear(f));
            applied.push(f1.clone());
            cur = next;
        } else if dx == dy {
            let x = reach(&xi).expect("nonzero");
            let c = leading_ratio(&xi, x, &eta, x)?;
            let g = Generator::Shear(LaurentPoly::constant(p, 1, neg_mod(c, p) as i64));
            cur = cur.mul(&g.matrix())?;
            applied.push(g);
        } else {
            cur = cur.mul(&f1.matrix())?;
            applied.push(f1.clone());
        }
    }
    let mut factors = sl2_constant_decompose(constant_entries(&cur))?.factors().to_vec();
    factors.extend(applied.iter().rev().map(Generator::inverse));
    let seq = GeneratorSeq::new(p, simplify(factors))?;
    if seq.product() != *t {
        return Err(Error::Internal("factor product does not reproduce the input".into()));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exa() -> ScaMatrix {
        let w = |n| LaurentPoly::symmetric(2, n);
        let one = LaurentPoly::one(2, 1);
        ScaMatrix::new([[w(1), one.clone()], [&one + &w(2), w(1)]]).unwrap()
    }

    #[test]
    fn example_decomposition() {
        let t = exa();
        let (next, f) = reduce_step(&t).unwrap();
        assert_eq!(f, LaurentPoly::symmetric(2, 1));
        assert_eq!(
            t.mul(&shear_matrix(&f).unwrap()).unwrap().to_string(),
            "[[0, 1], [1, u^-1 + u]]"
        );
        assert!(next.is_valid());
        let seq = decompose(&t).unwrap();
        assert_eq!(seq.to_string(), "G u^-1 + u\nF 1\nG u^-1 + u\n");
        assert_eq!(seq.product(), t);
    }

    #[test]
    fn trivial_inputs() {
        assert!(decompose(&ScaMatrix::identity(3, 1)).unwrap().is_empty());
        assert!(reduce_step(&ScaMatrix::identity(3, 1)).is_err());
        let f = fourier_matrix(FieldElement::one(2)).unwrap();
        assert!(reduce_step(&f).is_err());
        assert!(decompose(&exa().shift(&[1])).is_err());
    }

    #[test]
    fn constant_examples() {
        let fe = |x: i64, p| FieldElement::new(x, p);
        let s = sl2_constant_decompose([[fe(1, 2), fe(0, 2)], [fe(1, 2), fe(1, 2)]]).unwrap();
        assert_eq!(s.to_string(), "G 1\n");
        let s = sl2_constant_decompose([[fe(0, 3), fe(-1, 3)], [fe(1, 3), fe(0, 3)]]).unwrap();
        assert_eq!(s.to_string(), "F 1\n");
        assert!(sl2_constant_decompose([[fe(1, 3), fe(1, 3)], [fe(1, 3), fe(1, 3)]]).is_err());
    }

    #[test]
    fn all_of_sl2_small_fields() {
        for p in [2u32, 3, 5] {
            let mut count = 0;
            for code in 0..p.pow(4) {
                let v: Vec<i64> = (0..4).map(|i| ((code / p.pow(i)) % p) as i64).collect();
                let m = [
                    [FieldElement::new(v[0], p), FieldElement::new(v[1], p)],
                    [FieldElement::new(v[2], p), FieldElement::new(v[3], p)],
                ];
                if (v[0] * v[3] - v[1] * v[2]).rem_euclid(p as i64) != 1 {
                    continue;
                }
                count += 1;
                let seq = sl2_constant_decompose(m).unwrap();
                assert!(seq.len() <= 5);
                assert_eq!(constant_entries(&seq.product()), m);
            }
            assert_eq!(count, (p * (p * p - 1)) as usize);
        }
    }
}
