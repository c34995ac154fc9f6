use std::fmt;

use super::vector::{symplectic_form, PhaseVector};
use crate::error::{Error, Result};
use crate::ring::{gcd, inv_mod, HalfLatticePoint, LaurentPoly};

/// Answer to "is this isotropic subspace maximal?".
///
/// Univariate answers are always definite. For `s > 1` only the cases
/// settled without a multivariate gcd are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Maximality {
    Maximal,
    NotMaximal,
    Unknown,
}

impl Maximality {
    pub fn is_maximal(self) -> bool {
        self == Maximality::Maximal
    }
}

impl fmt::Display for Maximality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Maximality::Maximal => "true",
            Maximality::NotMaximal => "false",
            Maximality::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyVerdict {
    pub isotropic: bool,
    pub maximal: Maximality,
    /// Common center of both components, when one exists.
    pub reflection_center: Option<HalfLatticePoint>,
    /// A non-unit common factor of `ξ+` and `ξ-`, when one is known.
    pub common_divisor: Option<LaurentPoly>,
}

/// The center `a` with `ξ± = u^{2a} reflect(ξ±)` for both components.
pub fn vector_reflection_center(xi: &PhaseVector) -> Option<HalfLatticePoint> {
    let (first, second) = if xi.plus.is_zero() {
        (&xi.minus, &xi.plus)
    } else {
        (&xi.plus, &xi.minus)
    };
    let a = first.reflection_center()?;
    second.is_reflection_invariant(&a).then_some(a)
}

/// Shifts to componentwise minimal exponent 0 and scales the lex-lowest
/// coefficient to 1.
pub(crate) fn normalize_divisor(d: &LaurentPoly) -> LaurentPoly {
    let Some((lo, _)) = d.support_box() else {
        return d.clone();
    };
    let shifted = d.shift(&lo.iter().map(|x| -x).collect::<Vec<_>>());
    let (_, c) = shifted.terms().next().expect("nonzero");
    shifted.scale(inv_mod(c, d.prime()).expect("nonzero"))
}

pub fn isotropy_verdict(xi: &PhaseVector) -> Result<IsotropyVerdict> {
    if xi.is_zero() {
        return Err(Error::Domain("isotropy of the zero vector".into()));
    }
    let isotropic = symplectic_form(xi, xi)?.is_zero();
    let reflection_center = vector_reflection_center(xi);
    let (maximal, common_divisor) = if xi.rank() == 1 {
        let g = gcd(&xi.plus, &xi.minus)?;
        let unit = g.is_one();
        let maximal = if isotropic && unit {
            Maximality::Maximal
        } else {
            Maximality::NotMaximal
        };
        (maximal, (!unit).then_some(g))
    } else {
        multivariate_maximality(xi, isotropic)?
    };
    Ok(IsotropyVerdict {
        isotropic,
        maximal,
        reflection_center,
        common_divisor,
    })
}

fn multivariate_maximality(
    xi: &PhaseVector,
    isotropic: bool,
) -> Result<(Maximality, Option<LaurentPoly>)> {
    for (a, b) in [(&xi.plus, &xi.minus), (&xi.minus, &xi.plus)] {
        if a.is_zero() {
            return Ok(if b.is_invertible() {
                (verdict_if(isotropic), None)
            } else {
                (Maximality::NotMaximal, Some(normalize_divisor(b)))
            });
        }
    }
    if xi.plus.is_invertible() || xi.minus.is_invertible() {
        return Ok((verdict_if(isotropic), None));
    }
    if !isotropic {
        return Ok((Maximality::NotMaximal, None));
    }
    for (a, b) in [(&xi.plus, &xi.minus), (&xi.minus, &xi.plus)] {
        if a.exact_div(b)?.is_some() {
            return Ok((Maximality::NotMaximal, Some(normalize_divisor(b))));
        }
    }
    Ok((Maximality::Unknown, None))
}

fn verdict_if(isotropic: bool) -> Maximality {
    if isotropic {
        Maximality::Maximal
    } else {
        Maximality::NotMaximal
    }
}

/// Returns a maximal isotropic generator `η` with `ξ = g η`.
pub fn embed_isotropic(xi: &PhaseVector) -> Result<PhaseVector> {
    let verdict = isotropy_verdict(xi)?;
    if !verdict.isotropic {
        return Err(Error::Domain(format!("{xi} is not isotropic")));
    }
    if verdict.maximal.is_maximal() {
        return Err(Error::Domain(format!("{xi} is already maximally isotropic")));
    }
    let (p, rank) = (xi.prime(), xi.rank());
    let one = || LaurentPoly::one(p, rank);
    let zero = || LaurentPoly::zero(p, rank);
    let eta = if xi.plus.is_zero() {
        PhaseVector::new(zero(), one())?
    } else if xi.minus.is_zero() {
        PhaseVector::new(one(), zero())?
    } else if let Some(f) = xi.plus.exact_div(&xi.minus)? {
        PhaseVector::new(f, one())?
    } else if let Some(f) = xi.minus.exact_div(&xi.plus)? {
        PhaseVector::new(one(), f)?
    } else if rank == 1 {
        let g = gcd(&xi.plus, &xi.minus)?;
        let quotient = |c: &LaurentPoly| {
            c.exact_div(&g)?
                .ok_or_else(|| Error::Internal("gcd does not divide its argument".into()))
        };
        PhaseVector::new(quotient(&xi.plus)?, quotient(&xi.minus)?)?
    } else {
        return Err(Error::Domain(
            "embedding needs a multivariate gcd for this generator".into(),
        ));
    };
    if !isotropy_verdict(&eta)?.maximal.is_maximal() {
        return Err(Error::Internal(format!("embedding {eta} is not maximal")));
    }
    Ok(eta)
}
