//! Univariate degree, division with remainder and the extended Euclidean
//! algorithm in `F_p[u, u^-1]`.

use super::field::{inv_mod, mul_mod};
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

fn require_univariate(f: &LaurentPoly, what: &str) -> Result<()> {
    if f.rank() != 1 {
        return Err(Error::Domain(format!(
            "{what} is only defined for univariate polynomials (rank {})",
            f.rank()
        )));
    }
    Ok(())
}

/// Lowest and highest exponent of a nonzero univariate polynomial.
pub fn exponent_range(f: &LaurentPoly) -> Option<(i64, i64)> {
    Some((f.min_exponent()?[0], f.max_exponent()?[0]))
}

/// `max exponent - min exponent`; undefined for zero.
pub fn degree(f: &LaurentPoly) -> Result<u64> {
    require_univariate(f, "degree")?;
    let (lo, hi) =
        exponent_range(f).ok_or_else(|| Error::Domain("degree of the zero polynomial".into()))?;
    Ok((hi - lo) as u64)
}

/// Division with remainder: `f = q*g + r` with `r = 0` or `deg r < deg g`.
///
/// Quotient terms first cancel `f` from the top down, and the final quotient
/// term cancels the lowest coefficient of `f`. Both ends of `q` are therefore
/// nonzero and `deg q = deg f - deg g` whenever `deg f >= deg g`.
pub fn divmod(f: &LaurentPoly, g: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    require_univariate(f, "divmod")?;
    require_univariate(g, "divmod")?;
    if f.prime() != g.prime() {
        return Err(Error::Structural("field mismatch in divmod".into()));
    }
    let p = f.prime();
    let (g_lo, g_hi) = exponent_range(g).ok_or(Error::DivisionByZero)?;
    let mut q = LaurentPoly::zero(p, 1);
    let Some((f_lo, f_hi)) = exponent_range(f) else {
        return Ok((q, f.clone()));
    };
    let deg_g = g_hi - g_lo;
    if f_hi - f_lo < deg_g {
        return Ok((q, f.clone()));
    }
    let lead_inv = inv_mod(g.coeff(&[g_hi]), p).expect("nonzero leading coefficient");
    let low_inv = inv_mod(g.coeff(&[g_lo]), p).expect("nonzero trailing coefficient");
    let mut r = f.clone();
    // Top-down elimination of positions f_hi ..= f_lo + deg_g + 1.
    let mut pos = f_hi;
    while pos > f_lo + deg_g {
        let c = r.coeff(&[pos]);
        if c != 0 {
            let qc = mul_mod(c, lead_inv, p);
            let shift = pos - g_hi;
            r = &r - &g.shift(&[shift]).scale(qc);
            q.add_term(vec![shift], qc);
        }
        pos -= 1;
    }
    // The lowest coefficient of f is untouched so far; cancelling it leaves r in
    // (f_lo, f_lo + deg_g].
    let c = r.coeff(&[f_lo]);
    debug_assert!(c != 0);
    let qc = mul_mod(c, low_inv, p);
    let shift = f_lo - g_lo;
    r = &r - &g.shift(&[shift]).scale(qc);
    q.add_term(vec![shift], qc);
    Ok((q, r))
}

/// Result of the extended Euclidean algorithm: `f0*f + f1*g = gcd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bezout {
    pub gcd: LaurentPoly,
    pub f0: LaurentPoly,
    pub f1: LaurentPoly,
}

/// Extended Euclid for univariate Laurent polynomials.
///
/// The gcd is normalized to minimal exponent 0 with lowest coefficient 1; the
/// Bezout coefficients are rescaled by the same unit.
pub fn gcd_extended(f: &LaurentPoly, g: &LaurentPoly) -> Result<Bezout> {
    require_univariate(f, "gcd")?;
    require_univariate(g, "gcd")?;
    if f.prime() != g.prime() {
        return Err(Error::Structural("field mismatch in gcd".into()));
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::Domain("gcd of two zero polynomials".into()));
    }
    let p = f.prime();
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (LaurentPoly::one(p, 1), LaurentPoly::zero(p, 1));
    let (mut t0, mut t1) = (LaurentPoly::zero(p, 1), LaurentPoly::one(p, 1));
    while !r1.is_zero() {
        let (q, r) = divmod(&r0, &r1)?;
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let unit = normalizing_unit(&r0);
    Ok(Bezout {
        gcd: &r0 * &unit,
        f0: &s0 * &unit,
        f1: &t0 * &unit,
    })
}

/// The monomial `c*u^k` that moves a nonzero polynomial to minimal exponent 0
/// with lowest coefficient 1.
pub fn normalizing_unit(d: &LaurentPoly) -> LaurentPoly {
    let (lo, _) = exponent_range(d).expect("nonzero");
    let c = inv_mod(d.coeff(&[lo]), d.prime()).expect("nonzero");
    LaurentPoly::monomial(d.prime(), vec![-lo], c as i64)
}

/// Normalized gcd without cofactors.
pub fn gcd(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    Ok(gcd_extended(f, g)?.gcd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(p: u32, terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::univariate(p, terms)
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&LaurentPoly::symmetric(2, 1)).unwrap(), 2);
        assert_eq!(degree(&LaurentPoly::constant(7, 1, 5)).unwrap(), 0);
        assert_eq!(degree(&u(2, &[(0, 1), (1, 1), (3, 1)])).unwrap(), 3);
        assert!(matches!(degree(&LaurentPoly::zero(2, 1)), Err(Error::Domain(_))));
        assert!(matches!(degree(&LaurentPoly::one(2, 2)), Err(Error::Domain(_))));
    }

    fn check_division(f: &LaurentPoly, g: &LaurentPoly) {
        let (q, r) = divmod(f, g).unwrap();
        assert_eq!(&(&q * g) + &r, *f, "f = q g + r");
        if !r.is_zero() {
            assert!(degree(&r).unwrap() < degree(g).unwrap());
        }
        let (df, dg) = (degree(f).unwrap(), degree(g).unwrap());
        if df >= dg {
            assert_eq!(degree(&q).unwrap(), df - dg);
        } else {
            assert!(q.is_zero());
        }
    }

    #[test]
    fn divmod_examples() {
        let w1 = LaurentPoly::symmetric(2, 1);
        let g = u(2, &[(0, 1), (1, 1)]);
        check_division(&w1, &g);
        let (q, r) = divmod(&g, &g).unwrap();
        assert!(r.is_zero());
        assert!(q.is_one());
        let c = LaurentPoly::constant(5, 1, 3);
        let (q, r) = divmod(&c, &u(5, &[(0, 1), (2, 4)])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, c);
        check_division(&u(2, &[(0, 1), (1, 1), (2, 1)]), &u(2, &[(0, 1), (1, 1)]));
        assert!(matches!(
            divmod(&g, &LaurentPoly::zero(2, 1)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_examples() {
        let b = gcd_extended(&LaurentPoly::one(2, 1), &LaurentPoly::symmetric(2, 1)).unwrap();
        assert!(b.gcd.is_one());
        assert!(b.f0.is_one());
        assert!(b.f1.is_zero());

        let common = u(2, &[(0, 1), (1, 1)]);
        let f = common.clone();
        let g = common.shift(&[1]);
        let b = gcd_extended(&f, &g).unwrap();
        assert_eq!(b.gcd, common);
        assert_eq!(&(&b.f0 * &f) + &(&b.f1 * &g), b.gcd);

        assert!(gcd(&LaurentPoly::one(2, 1), &LaurentPoly::symmetric(2, 1))
            .unwrap()
            .is_one());
        assert!(matches!(
            gcd_extended(&LaurentPoly::zero(3, 1), &LaurentPoly::zero(3, 1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gcd_with_zero_operand_is_normalized_other() {
        let g = u(3, &[(-2, 2), (1, 1)]);
        let b = gcd_extended(&LaurentPoly::zero(3, 1), &g).unwrap();
        assert_eq!(b.gcd, u(3, &[(0, 1), (3, 2)]));
        assert_eq!(&b.f1 * &g, b.gcd);
    }
}
