use super::matrix::ScaMatrix;
use crate::error::{Error, Result};
use crate::phasespace::{isotropy_verdict, symplectic_form, PhaseVector};
use crate::ring::{gcd_extended, LaurentPoly};

/// Extends a maximal isotropic generator `ξ` to an automaton `t = (η, ξ)`.
///
/// From `f+ ξ+ + f- ξ- = 1` the vector `η' = (reflect f-, -reflect f+)`
/// already pairs to 1 with `ξ`. Its defect `h = σ̂(η', η')` is antisymmetric
/// and is absorbed by `η = η' + f ξ` where `f` collects minus the
/// positive-exponent half of `h`.
pub fn complete_generator(xi: &PhaseVector) -> Result<ScaMatrix> {
    if xi.rank() != 1 {
        return Err(Error::Domain(
            "generator completion needs the univariate Euclidean algorithm".into(),
        ));
    }
    let verdict = isotropy_verdict(xi)?;
    if !verdict.isotropic {
        return Err(Error::Domain(format!(
            "{xi} is not isotropic: σ̂(ξ,ξ) = {}",
            symplectic_form(xi, xi)?
        )));
    }
    if let Some(g) = &verdict.common_divisor {
        return Err(Error::Domain(format!(
            "gcd(ξ+, ξ-) = {g} is not a unit"
        )));
    }
    match &verdict.reflection_center {
        Some(a) if a.is_integral() => {}
        Some(a) => {
            return Err(Error::Domain(format!(
                "{xi} is only reflection invariant about the half-integral point {a}"
            )))
        }
        None => {
            return Err(Error::Domain(format!(
                "{xi} is not reflection invariant about any lattice point"
            )))
        }
    }
    let b = gcd_extended(&xi.plus, &xi.minus)?;
    debug_assert!(b.gcd.is_one());
    let eta0 = PhaseVector::new(b.f1.reflect(), -b.f0.reflect())?;
    let h = symplectic_form(&eta0, &eta0)?;
    let f = LaurentPoly::from_terms(
        xi.prime(),
        1,
        h.terms()
            .filter(|(e, _)| e[0] > 0)
            .map(|(e, c)| (e.clone(), -(c as i64))),
    );
    let eta = eta0.checked_add(&xi.mul_poly(&f)?)?;
    let t = ScaMatrix::from_columns(&eta, xi)?;
    let v = t.validate();
    if !v.ok {
        return Err(Error::Internal(format!(
            "completion of {xi} does not validate: {}",
            v.failure.unwrap_or_default()
        )));
    }
    Ok(t)
}
