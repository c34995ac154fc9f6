use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Trial-division primality test; cell dimensions are small.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Domain(format!("cell dimension {p} is not prime")))
    }
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub(crate) fn reduce_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

pub(crate) fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse in F_p via Fermat; `None` for zero.
pub(crate) fn inv_mod(a: u32, p: u32) -> Option<u32> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a % p, (p - 2) as u64, p))
    }
}

/// An element of the prime field F_p, stored as its least nonnegative residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    p: u32,
}

impl FieldElement {
    /// Reduces `value` into `[0, p)`. `p` is assumed prime.
    pub fn new(value: i64, p: u32) -> Self {
        FieldElement {
            value: reduce_i64(value, p),
            p,
        }
    }

    pub fn zero(p: u32) -> Self {
        FieldElement { value: 0, p }
    }

    pub fn one(p: u32) -> Self {
        FieldElement { value: 1 % p, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        inv_mod(self.value, self.p).map(|value| FieldElement { value, p: self.p })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "field mismatch");
        FieldElement {
            value: add_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "field mismatch");
        FieldElement {
            value: sub_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "field mismatch");
        FieldElement {
            value: mul_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement {
            value: neg_mod(self.value, self.p),
            p: self.p,
        }
    }
}
