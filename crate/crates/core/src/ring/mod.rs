//! Exact arithmetic in the Laurent polynomial ring `F_p[u_1^±, ..., u_s^±]`.

mod euclid;
mod field;
mod poly;
mod text;

pub use euclid::{degree, divmod, exponent_range, gcd, gcd_extended, normalizing_unit, Bezout};
pub use field::{check_prime, is_prime, FieldElement};
pub(crate) use field::{add_mod, inv_mod, mul_mod, neg_mod, reduce_i64, sub_mod};
pub use poly::{Exponent, HalfLatticePoint, LaurentPoly};
pub(crate) use text::{parse_poly, Cursor};

#[cfg(test)]
mod properties;
