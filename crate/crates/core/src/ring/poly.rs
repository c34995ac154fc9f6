use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{add_mod, check_prime, inv_mod, mul_mod, neg_mod, reduce_i64, FieldElement};
use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial `u^x`; length equals the ring rank.
pub type Exponent = Vec<i64>;

/// A point of the half-integer lattice, stored doubled so all arithmetic is integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfLatticePoint {
    doubled: Vec<i64>,
}

impl HalfLatticePoint {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        HalfLatticePoint { doubled }
    }

    pub fn from_integer(point: &[i64]) -> Self {
        HalfLatticePoint {
            doubled: point.iter().map(|x| 2 * x).collect(),
        }
    }

    pub fn origin(rank: usize) -> Self {
        HalfLatticePoint {
            doubled: vec![0; rank],
        }
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|x| x % 2 == 0)
    }

    /// The point itself when it lies on the integer lattice.
    pub fn to_integer(&self) -> Option<Vec<i64>> {
        self.is_integral()
            .then(|| self.doubled.iter().map(|x| x / 2).collect())
    }
}

impl fmt::Display for HalfLatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coord = |d: i64| {
            if d % 2 == 0 {
                format!("{}", d / 2)
            } else {
                format!("{d}/2")
            }
        };
        if self.doubled.len() == 1 {
            write!(f, "{}", coord(self.doubled[0]))
        } else {
            let parts: Vec<String> = self.doubled.iter().map(|&d| coord(d)).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// A Laurent polynomial in `rank` variables over F_p.
///
/// Terms are kept in canonical form: no stored coefficient is zero and every
/// exponent vector has length `rank`. The map is ordered lexicographically by
/// exponent, which is also the print order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    p: u32,
    rank: usize,
    terms: BTreeMap<Exponent, u32>,
}

impl LaurentPoly {
    /// The zero polynomial. Panics if `p` is not prime or `rank` is zero.
    pub fn zero(p: u32, rank: usize) -> Self {
        check_prime(p).expect("cell dimension must be prime");
        assert!(rank >= 1, "rank must be at least 1");
        LaurentPoly {
            p,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(p: u32, rank: usize) -> Self {
        Self::constant(p, rank, 1)
    }

    pub fn constant(p: u32, rank: usize, c: i64) -> Self {
        let mut out = Self::zero(p, rank);
        out.add_term(vec![0; rank], reduce_i64(c, p));
        out
    }

    /// `c * u^exp`.
    pub fn monomial(p: u32, exp: Exponent, c: i64) -> Self {
        let mut out = Self::zero(p, exp.len());
        out.add_term(exp, reduce_i64(c, p));
        out
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I>(p: u32, rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, i64)>,
    {
        let mut out = Self::zero(p, rank);
        for (exp, c) in terms {
            assert_eq!(exp.len(), rank, "exponent length must equal rank");
            out.add_term(exp, reduce_i64(c, p));
        }
        out
    }

    /// Univariate convenience constructor from `(exponent, coefficient)` pairs.
    pub fn univariate(p: u32, terms: &[(i64, i64)]) -> Self {
        Self::from_terms(p, 1, terms.iter().map(|&(e, c)| (vec![e], c)))
    }

    /// The symmetric basis polynomial `w_n = u^n + u^-n`, with `w_0 = 1`.
    pub fn symmetric(p: u32, n: u32) -> Self {
        if n == 0 {
            Self::one(p, 1)
        } else {
            Self::univariate(p, &[(n as i64, 1), (-(n as i64), 1)])
        }
    }

    /// `u_k^n + u_k^-n` in rank `rank` (1-based `k`); `1` when `n == 0`.
    pub fn symmetric_in(p: u32, rank: usize, k: usize, n: u32) -> Self {
        assert!(k >= 1 && k <= rank);
        if n == 0 {
            return Self::one(p, rank);
        }
        let mut hi = vec![0; rank];
        hi[k - 1] = n as i64;
        let lo: Exponent = hi.iter().map(|x| -x).collect();
        Self::from_terms(p, rank, [(hi, 1), (lo, 1)])
    }

    pub(crate) fn empty_like(&self) -> Self {
        LaurentPoly {
            p: self.p,
            rank: self.rank,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.p;
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = add_mod(*o.get(), c, p);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&vec![0; self.rank]) == Some(&1)
    }

    /// Zero or a pure constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Number of nonzero terms; see [`LaurentPoly::is_zero`] for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic exponent order; coefficients are raw residues.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, u32)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: &[i64]) -> u32 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn coefficient(&self, exp: &[i64]) -> FieldElement {
        FieldElement::new(self.coeff(exp) as i64, self.p)
    }

    /// The value of the constant term.
    pub fn constant_term(&self) -> u32 {
        self.coeff(&vec![0; self.rank])
    }

    pub fn min_exponent(&self) -> Option<&Exponent> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&Exponent> {
        self.terms.keys().next_back()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::Structural(format!(
                "field mismatch: F_{} vs F_{}",
                self.p, other.p
            )));
        }
        if self.rank != other.rank {
            return Err(Error::Structural(format!(
                "rank mismatch: {} vs {}",
                self.rank, other.rank
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), neg_mod(c, self.p));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.empty_like();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, mul_mod(ca, cb, self.p));
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the residue `c`.
    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.p;
        let mut out = self.empty_like();
        if c == 0 {
            return out;
        }
        for (e, &v) in &self.terms {
            out.terms.insert(e.clone(), mul_mod(v, c, self.p));
        }
        out
    }

    /// Multiplication by the monomial `u^by`.
    pub fn shift(&self, by: &[i64]) -> Self {
        assert_eq!(by.len(), self.rank);
        let mut out = self.empty_like();
        for (e, &c) in &self.terms {
            let moved: Exponent = e.iter().zip(by).map(|(x, y)| x + y).collect();
            out.terms.insert(moved, c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.p, self.rank);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The involution `f(u) -> f(u^-1)`.
    pub fn reflect(&self) -> Self {
        let mut out = self.empty_like();
        for (e, &c) in &self.terms {
            out.terms.insert(e.iter().map(|x| -x).collect(), c);
        }
        out
    }

    /// True iff `f = u^{2a} * reflect(f)`.
    pub fn is_reflection_invariant(&self, a: &HalfLatticePoint) -> bool {
        assert_eq!(a.doubled().len(), self.rank);
        self.terms.iter().all(|(e, &c)| {
            let mirror: Exponent = a.doubled().iter().zip(e).map(|(d, x)| d - x).collect();
            self.terms.get(&mirror) == Some(&c)
        })
    }

    /// The unique reflection center of a nonzero polynomial, if it has one.
    ///
    /// Negation reverses lexicographic order, so the center is pinned by the
    /// smallest and largest exponents.
    pub fn reflection_center(&self) -> Option<HalfLatticePoint> {
        let lo = self.min_exponent()?;
        let hi = self.max_exponent()?;
        let a = HalfLatticePoint::from_doubled(lo.iter().zip(hi).map(|(x, y)| x + y).collect());
        self.is_reflection_invariant(&a).then_some(a)
    }

    /// Units of the Laurent ring are exactly the nonzero monomials.
    pub fn is_invertible(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_invertible() {
            return None;
        }
        let (e, &c) = self.terms.iter().next()?;
        let mut out = self.empty_like();
        out.terms
            .insert(e.iter().map(|x| -x).collect(), inv_mod(c, self.p)?);
        Some(out)
    }

    /// Evaluates `u_l = 1` for every `l != k` (1-based), leaving a univariate polynomial in `u_k`.
    pub fn restrict_direction(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.rank {
            return Err(Error::Domain(format!(
                "direction {k} out of range 1..={}",
                self.rank
            )));
        }
        let mut out = LaurentPoly {
            p: self.p,
            rank: 1,
            terms: BTreeMap::new(),
        };
        for (e, &c) in &self.terms {
            out.add_term(vec![e[k - 1]], c);
        }
        Ok(out)
    }

    /// Exact division `self / g` in the Laurent ring, or `None` if `g` does not divide.
    ///
    /// Both operands are shifted to ordinary polynomials with no variable
    /// factor; divisibility is then decided by lexicographic polynomial division.
    pub fn exact_div(&self, g: &Self) -> Result<Option<Self>> {
        self.check_compatible(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(self.empty_like()));
        }
        let fmin = self.componentwise_min();
        let gmin = g.componentwise_min();
        let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| -x).collect() };
        let mut rem = self.shift(&neg(&fmin));
        let divisor = g.shift(&neg(&gmin));
        let (glead, &gc) = divisor.terms.iter().next_back().expect("nonzero");
        let ginv = inv_mod(gc, self.p).expect("nonzero coefficient");
        let mut quotient = self.empty_like();
        while let Some((lead, &lc)) = rem.terms.iter().next_back() {
            let diff: Exponent = lead.iter().zip(glead).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&x| x < 0) {
                return Ok(None);
            }
            let c = mul_mod(lc, ginv, self.p);
            let term = LaurentPoly::monomial(self.p, diff.clone(), c as i64);
            rem = &rem - &(&term * &divisor);
            quotient.add_term(diff, c);
        }
        let back: Vec<i64> = fmin.iter().zip(&gmin).map(|(a, b)| a - b).collect();
        Ok(Some(quotient.shift(&back)))
    }

    fn componentwise_min(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.rank];
        for e in self.terms.keys() {
            for (slot, &x) in m.iter_mut().zip(e) {
                *slot = (*slot).min(x);
            }
        }
        m
    }

    /// Componentwise `(min, max)` over the support, `None` for zero.
    pub fn support_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        if self.is_zero() {
            return None;
        }
        let mut hi = vec![i64::MIN; self.rank];
        for e in self.terms.keys() {
            for (slot, &x) in hi.iter_mut().zip(e) {
                *slot = (*slot).max(x);
            }
        }
        Some((self.componentwise_min(), hi))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[F_{}]({})", self.p, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("incompatible Laurent polynomials")
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(self.p - 1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
