use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{add_mod, mul_mod, Cursor, LaurentPoly};

/// A phase-space vector `(ξ+, ξ-)` after the algebraic Fourier transform.
///
/// `plus` carries the X exponents and `minus` the Z exponents: the
/// coefficient of `u^x` in each component is the `(r, k)` pair at site `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseVector {
    pub plus: LaurentPoly,
    pub minus: LaurentPoly,
}

impl PhaseVector {
    pub fn new(plus: LaurentPoly, minus: LaurentPoly) -> Result<Self> {
        if plus.prime() != minus.prime() || plus.rank() != minus.rank() {
            return Err(Error::Structural(
                "phase vector components must share field and rank".into(),
            ));
        }
        Ok(PhaseVector { plus, minus })
    }

    pub fn zero(p: u32, rank: usize) -> Self {
        PhaseVector {
            plus: LaurentPoly::zero(p, rank),
            minus: LaurentPoly::zero(p, rank),
        }
    }

    /// `(1, 0)`: the single-cell X.
    pub fn x_basis(p: u32, rank: usize) -> Self {
        PhaseVector {
            plus: LaurentPoly::one(p, rank),
            minus: LaurentPoly::zero(p, rank),
        }
    }

    /// `(0, 1)`: the single-cell Z.
    pub fn z_basis(p: u32, rank: usize) -> Self {
        PhaseVector {
            plus: LaurentPoly::zero(p, rank),
            minus: LaurentPoly::one(p, rank),
        }
    }

    pub fn prime(&self) -> u32 {
        self.plus.prime()
    }

    pub fn rank(&self) -> usize {
        self.plus.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.prime() != other.prime() || self.rank() != other.rank() {
            return Err(Error::Structural(format!(
                "phase vectors over F_{} rank {} and F_{} rank {}",
                self.prime(),
                self.rank(),
                other.prime(),
                other.rank()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(PhaseVector {
            plus: &self.plus + &other.plus,
            minus: &self.minus + &other.minus,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(PhaseVector {
            plus: &self.plus - &other.plus,
            minus: &self.minus - &other.minus,
        })
    }

    pub fn neg(&self) -> Self {
        PhaseVector {
            plus: -&self.plus,
            minus: -&self.minus,
        }
    }

    /// Module action `f * ξ`.
    pub fn mul_poly(&self, f: &LaurentPoly) -> Result<Self> {
        Ok(PhaseVector {
            plus: f.checked_mul(&self.plus)?,
            minus: f.checked_mul(&self.minus)?,
        })
    }

    /// Lattice translation by `x`, i.e. multiplication by `u^x`.
    pub fn translate(&self, by: &[i64]) -> Self {
        PhaseVector {
            plus: self.plus.shift(by),
            minus: self.minus.shift(by),
        }
    }

    pub fn reflect(&self) -> Self {
        PhaseVector {
            plus: self.plus.reflect(),
            minus: self.minus.reflect(),
        }
    }

    /// Parses `(poly, poly)`.
    pub fn parse(text: &str, p: u32, rank: usize) -> Result<Self> {
        crate::ring::check_prime(p)?;
        let mut cur = Cursor::new(text);
        if !cur.eat(b'(') {
            return Err(Error::parse(cur.pos, "expected '(' opening a phase vector"));
        }
        let plus = crate::ring::parse_poly(&mut cur, p, rank)?;
        if !cur.eat(b',') {
            return Err(Error::parse(cur.pos, "expected ','"));
        }
        let minus = crate::ring::parse_poly(&mut cur, p, rank)?;
        if !cur.eat(b')') {
            return Err(Error::parse(cur.pos, "expected ')'"));
        }
        if !cur.at_end() {
            return Err(Error::parse(cur.pos, "unexpected trailing input"));
        }
        Ok(PhaseVector { plus, minus })
    }
}

impl fmt::Display for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.plus, self.minus)
    }
}

/// The Laurent-valued symplectic form `reflect(ξ+) η- - reflect(ξ-) η+`.
pub fn symplectic_form(xi: &PhaseVector, eta: &PhaseVector) -> Result<LaurentPoly> {
    xi.check_compatible(eta)?;
    Ok(&(&xi.plus.reflect() * &eta.minus) - &(&xi.minus.reflect() * &eta.plus))
}

/// `Σ_x a(x) b(x)` over the common support, as a residue mod p.
pub(crate) fn pointwise_pairing(a: &LaurentPoly, b: &LaurentPoly) -> u32 {
    let p = a.prime();
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .terms()
        .fold(0, |acc, (e, c)| add_mod(acc, mul_mod(c, large.coeff(e), p), p))
}

/// The bilinear form `Σ_x ξ-(x) η+(x)`: `w(ξ) w(η) = ω^{this} w(ξ + η)`.
pub(crate) fn ordering_form(xi: &PhaseVector, eta: &PhaseVector) -> u32 {
    pointwise_pairing(&xi.minus, &eta.plus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(p: u32, terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::univariate(p, terms)
    }

    #[test]
    fn symplectic_form_examples() {
        let xi2 = PhaseVector::new(LaurentPoly::one(2, 1), LaurentPoly::symmetric(2, 1)).unwrap();
        assert!(symplectic_form(&xi2, &xi2).unwrap().is_zero());
        let s = symplectic_form(&PhaseVector::x_basis(3, 1), &PhaseVector::z_basis(3, 1)).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn antisymmetry_against_direct_expansion() {
        // Oracle: expand σ̂ coefficientwise from the defining sum
        // σ̂(ξ,η)_k = Σ_y ξ+(y) η-(y+k) - ξ-(y) η+(y+k).
        let p = 5;
        let xi = PhaseVector::new(u(p, &[(-1, 2), (0, 1), (2, 3)]), u(p, &[(1, 4), (3, 1)])).unwrap();
        let eta = PhaseVector::new(u(p, &[(0, 1), (1, 1)]), u(p, &[(-2, 3), (2, 2)])).unwrap();
        let direct = |a: &PhaseVector, b: &PhaseVector| {
            let mut terms = Vec::new();
            for k in -8..=8i64 {
                let mut acc = 0i64;
                for y in -8..=8i64 {
                    acc += a.plus.coeff(&[y]) as i64 * b.minus.coeff(&[y + k]) as i64;
                    acc -= a.minus.coeff(&[y]) as i64 * b.plus.coeff(&[y + k]) as i64;
                }
                terms.push((k, acc));
            }
            u(p, &terms)
        };
        let s_xy = symplectic_form(&xi, &eta).unwrap();
        assert_eq!(s_xy, direct(&xi, &eta));
        assert_eq!(s_xy, -symplectic_form(&eta, &xi).unwrap().reflect());
    }

    #[test]
    fn parse_vector() {
        let v = PhaseVector::parse("(1, u + u^-1)", 2, 1).unwrap();
        assert_eq!(v.minus, LaurentPoly::symmetric(2, 1));
        assert_eq!(v.to_string(), "(1, u^-1 + u)");
        assert!(PhaseVector::parse("(1 u)", 2, 1).is_err());
    }
}
