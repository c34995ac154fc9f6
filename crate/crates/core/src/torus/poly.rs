use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::lattice::TorusLattice;
use super::linalg;
use crate::error::{Error, Result};
use crate::ring::{add_mod, check_prime, mul_mod, neg_mod, sub_mod, LaurentPoly};

/// Default bound on `|sites|` for dense linear algebra on the torus.
pub const DEFAULT_SITE_LIMIT: usize = 4096;

pub(crate) fn check_sites(lattice: &TorusLattice, limit: usize) -> Result<()> {
    if lattice.sites() > limit {
        return Err(Error::Guardrail(format!(
            "torus has {} sites, limit is {limit}",
            lattice.sites()
        )));
    }
    Ok(())
}

/// An element of the group algebra `F_p[Z^s / N Z^s]`, stored densely by
/// canonical site index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusPoly {
    p: u32,
    lattice: Arc<TorusLattice>,
    coeffs: Vec<u32>,
}

impl TorusPoly {
    pub fn zero(p: u32, lattice: &Arc<TorusLattice>) -> Self {
        check_prime(p).expect("prime field");
        TorusPoly {
            p,
            lattice: Arc::clone(lattice),
            coeffs: vec![0; lattice.sites()],
        }
    }

    pub fn one(p: u32, lattice: &Arc<TorusLattice>) -> Self {
        let mut out = TorusPoly::zero(p, lattice);
        out.coeffs[0] = 1 % p;
        out
    }

    pub fn monomial(p: u32, lattice: &Arc<TorusLattice>, x: &[i64], c: i64) -> Self {
        let mut out = TorusPoly::zero(p, lattice);
        out.coeffs[lattice.index(x)] = crate::ring::reduce_i64(c, p);
        out
    }

    /// Image of a Laurent polynomial under the periodic identification.
    pub fn from_laurent(f: &LaurentPoly, lattice: &Arc<TorusLattice>) -> Result<Self> {
        if f.rank() != lattice.rank() {
            return Err(Error::Structural(format!(
                "polynomial in {} variables on a rank-{} torus",
                f.rank(),
                lattice.rank()
            )));
        }
        let mut out = TorusPoly::zero(f.prime(), lattice);
        for (x, c) in f.terms() {
            let i = lattice.index(x);
            out.coeffs[i] = add_mod(out.coeffs[i], c, f.prime());
        }
        Ok(out)
    }

    pub fn parse(text: &str, p: u32, lattice: &Arc<TorusLattice>) -> Result<Self> {
        TorusPoly::from_laurent(&LaurentPoly::parse(text, p, lattice.rank())?, lattice)
    }

    /// Lifts each class to its representative lattice point.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.p,
            self.lattice.rank(),
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (self.lattice.representative(i), c as i64)),
        )
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn lattice(&self) -> &Arc<TorusLattice> {
        &self.lattice
    }

    /// Coefficients by canonical site index.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff_at(&self, x: &[i64]) -> u32 {
        self.coeffs[self.lattice.index(x)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.lattice != other.lattice {
            return Err(Error::Structural(format!(
                "torus polynomials over F_{} on {} and F_{} on {}",
                self.p, self.lattice, other.p, other.lattice
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u32, u32, u32) -> u32) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b, self.p))
            .collect();
        Ok(TorusPoly {
            p: self.p,
            lattice: Arc::clone(&self.lattice),
            coeffs,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, add_mod)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, sub_mod)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = TorusPoly::zero(self.p, &self.lattice);
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in other.coeffs.iter().enumerate().filter(|(_, &b)| b != 0) {
                let k = self.lattice.add(i, j);
                out.coeffs[k] = add_mod(out.coeffs[k], mul_mod(a, b, self.p), self.p);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: u32) -> Self {
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = mul_mod(*x, c % self.p, self.p);
        }
        out
    }

    /// `u^x ↦ u^{-x}`, i.e. `u^{N-x}` on the torus.
    pub fn reflect(&self) -> Self {
        let mut out = TorusPoly::zero(self.p, &self.lattice);
        for (i, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.lattice.neg(i)] = c;
        }
        out
    }

    /// Multiplication by `u^by`.
    pub fn shift(&self, by: &[i64]) -> Self {
        let k = self.lattice.index(by);
        let mut out = TorusPoly::zero(self.p, &self.lattice);
        for (i, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.lattice.add(i, k)] = c;
        }
        out
    }

    /// Columns `u^{x_j} f` for every site `x_j`, as rows of coefficient vectors.
    fn translates(&self) -> Vec<Vec<u32>> {
        (0..self.lattice.sites())
            .map(|j| {
                let mut v = vec![0; self.lattice.sites()];
                for (i, &c) in self.coeffs.iter().enumerate() {
                    v[self.lattice.add(i, j)] = c;
                }
                v
            })
            .collect()
    }

    /// The inverse in the group algebra, if it exists.
    pub fn invert(&self) -> Option<Self> {
        self.invert_with_limit(DEFAULT_SITE_LIMIT).ok().flatten()
    }

    /// Solves `f g = 1` as a linear system over F_p.
    pub fn invert_with_limit(&self, limit: usize) -> Result<Option<Self>> {
        check_sites(&self.lattice, limit)?;
        let m = self.lattice.sites();
        let cols = self.translates();
        // Row i of the multiplication operator: coefficient of site i in u^{x_j} f.
        let a: Vec<Vec<u32>> = (0..m).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        let mut b = vec![0; m];
        b[0] = 1 % self.p;
        if linalg::rank(a.clone(), self.p) < m {
            return Ok(None);
        }
        let g = linalg::solve(&a, &b, self.p).expect("nonsingular system");
        Ok(Some(TorusPoly {
            p: self.p,
            lattice: Arc::clone(&self.lattice),
            coeffs: g,
        }))
    }
}

pub fn torus_invert(f: &TorusPoly) -> Option<TorusPoly> {
    f.invert()
}

impl fmt::Display for TorusPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl fmt::Debug for TorusPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusPoly[F_{} on {}]({})", self.p, self.lattice, self)
    }
}

macro_rules! torus_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&TorusPoly> for &TorusPoly {
            type Output = TorusPoly;
            fn $method(self, rhs: &TorusPoly) -> TorusPoly {
                self.$checked(rhs).expect("incompatible torus polynomials")
            }
        }
        impl $trait<TorusPoly> for TorusPoly {
            type Output = TorusPoly;
            fn $method(self, rhs: TorusPoly) -> TorusPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

torus_binop!(Add, add, checked_add);
torus_binop!(Sub, sub, checked_sub);
torus_binop!(Mul, mul, checked_mul);

impl Neg for &TorusPoly {
    type Output = TorusPoly;
    fn neg(self) -> TorusPoly {
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = neg_mod(*x, self.p);
        }
        out
    }
}
