use std::fmt;

use crate::error::{Error, Result};
use crate::phasespace::{symplectic_form, PhaseVector};
use crate::ring::{HalfLatticePoint, LaurentPoly};

/// A translation-invariant symplectic map of phase space, as a 2x2 matrix
/// over the Laurent ring.
///
/// Column `j` is the image of the `j`th basis vector: column 0 of `(1, 0)`
/// (the X at the origin), column 1 of `(0, 1)` (the Z).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaMatrix {
    entries: [[LaurentPoly; 2]; 2],
}

/// Outcome of [`ScaMatrix::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub ok: bool,
    /// The lattice point `a` with `det t = u^{2a}`.
    pub center: Option<Vec<i64>>,
    pub failure: Option<String>,
    /// Column test: both columns isotropic, `σ̂(t1, t2) = 1`.
    pub columns_ok: bool,
    /// Determinant test: `det t = u^{2a}` and every entry reflection invariant about `a`.
    pub determinant_ok: bool,
}

impl ScaMatrix {
    /// Builds `[[t11, t12], [t21, t22]]` from rows.
    pub fn new(entries: [[LaurentPoly; 2]; 2]) -> Result<Self> {
        let (p, rank) = (entries[0][0].prime(), entries[0][0].rank());
        if entries
            .iter()
            .flatten()
            .any(|e| e.prime() != p || e.rank() != rank)
        {
            return Err(Error::Structural(
                "matrix entries must share field and rank".into(),
            ));
        }
        Ok(ScaMatrix { entries })
    }

    pub fn from_columns(first: &PhaseVector, second: &PhaseVector) -> Result<Self> {
        ScaMatrix::new([
            [first.plus.clone(), second.plus.clone()],
            [first.minus.clone(), second.minus.clone()],
        ])
    }

    pub fn identity(p: u32, rank: usize) -> Self {
        let (o, z) = (LaurentPoly::one(p, rank), LaurentPoly::zero(p, rank));
        ScaMatrix {
            entries: [[o.clone(), z.clone()], [z, o]],
        }
    }

    pub fn prime(&self) -> u32 {
        self.entries[0][0].prime()
    }

    pub fn rank(&self) -> usize {
        self.entries[0][0].rank()
    }

    /// Entry at row `i`, column `j` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[[LaurentPoly; 2]; 2] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> PhaseVector {
        PhaseVector {
            plus: self.entries[0][j].clone(),
            minus: self.entries[1][j].clone(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().flatten().all(LaurentPoly::is_constant)
    }

    pub fn is_identity(&self) -> bool {
        *self == ScaMatrix::identity(self.prime(), self.rank())
    }

    pub fn det(&self) -> LaurentPoly {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.prime() != other.prime() || self.rank() != other.rank() {
            return Err(Error::Structural(format!(
                "automata over F_{} rank {} and F_{} rank {}",
                self.prime(),
                self.rank(),
                other.prime(),
                other.rank()
            )));
        }
        Ok(())
    }

    /// Matrix product `self * other`: apply `other` first.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let a = &self.entries;
        let b = &other.entries;
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Ok(ScaMatrix {
            entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
        })
    }

    /// Multiplies every entry by `f`.
    pub fn scale_poly(&self, f: &LaurentPoly) -> Result<Self> {
        let mut entries = self.entries.clone();
        for e in entries.iter_mut().flatten() {
            *e = f.checked_mul(e)?;
        }
        Ok(ScaMatrix { entries })
    }

    /// Multiplies every entry by `u^by`.
    pub fn shift(&self, by: &[i64]) -> Self {
        let mut entries = self.entries.clone();
        for e in entries.iter_mut().flatten() {
            *e = e.shift(by);
        }
        ScaMatrix { entries }
    }

    pub fn apply_vector(&self, xi: &PhaseVector) -> Result<PhaseVector> {
        let [[a, b], [c, d]] = &self.entries;
        PhaseVector::new(
            &a.checked_mul(&xi.plus)? + &b.checked_mul(&xi.minus)?,
            &c.checked_mul(&xi.plus)? + &d.checked_mul(&xi.minus)?,
        )
    }

    pub fn validate(&self) -> Validation {
        let (columns_ok, column_failure) = self.column_test();
        let (determinant_ok, center, det_failure) = self.determinant_test();
        let failure = match (column_failure, det_failure) {
            (None, None) => None,
            (Some(c), Some(d)) => Some(format!("{d}; {c}")),
            (Some(c), None) => Some(format!("{c} although the determinant test passes")),
            (None, Some(d)) => Some(format!("{d} although the column test passes")),
        };
        Validation {
            ok: columns_ok && determinant_ok,
            center: if determinant_ok { center } else { None },
            failure,
            columns_ok,
            determinant_ok,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().ok
    }

    fn column_test(&self) -> (bool, Option<String>) {
        let (t1, t2) = (self.column(0), self.column(1));
        let form = |a, b| symplectic_form(a, b).expect("entries share field and rank");
        let s11 = form(&t1, &t1);
        if !s11.is_zero() {
            return (false, Some(format!("first column is not isotropic: σ̂(t1,t1) = {s11}")));
        }
        let s22 = form(&t2, &t2);
        if !s22.is_zero() {
            return (false, Some(format!("second column is not isotropic: σ̂(t2,t2) = {s22}")));
        }
        let s12 = form(&t1, &t2);
        if !s12.is_one() {
            return (false, Some(format!("columns are not a symplectic pair: σ̂(t1,t2) = {s12}")));
        }
        (true, None)
    }

    fn determinant_test(&self) -> (bool, Option<Vec<i64>>, Option<String>) {
        let det = self.det();
        let mut terms = det.terms();
        let center = match (terms.next(), terms.next()) {
            (Some((e, 1)), None) if e.iter().all(|x| x % 2 == 0) => {
                e.iter().map(|x| x / 2).collect::<Vec<_>>()
            }
            _ => {
                return (
                    false,
                    None,
                    Some(format!("det(t) = {det} is not of the form u^(2a)")),
                )
            }
        };
        let a = HalfLatticePoint::from_integer(&center);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_reflection_invariant(&a) {
                    return (
                        false,
                        Some(center),
                        Some(format!(
                            "entry t{}{} = {e} is not reflection invariant about a = {a}",
                            i + 1,
                            j + 1
                        )),
                    );
                }
            }
        }
        (true, Some(center), None)
    }

    fn require_valid(&self) -> Result<Vec<i64>> {
        let v = self.validate();
        match (v.ok, v.center) {
            (true, Some(a)) => Ok(a),
            _ => Err(Error::InvalidAutomaton(
                v.failure.unwrap_or_else(|| "validation failed".into()),
            )),
        }
    }

    /// The lattice point `a` of a valid automaton.
    pub fn center(&self) -> Result<Vec<i64>> {
        self.require_valid()
    }

    /// `u^{-a} t`, reflection invariant about the origin with determinant 1.
    pub fn centered(&self) -> Result<Self> {
        let a = self.require_valid()?;
        Ok(self.shift(&a.iter().map(|x| -x).collect::<Vec<_>>()))
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.require_valid()?;
        other.require_valid()?;
        self.mul(other)
    }

    /// `u^{-2a} [[t22, -t12], [-t21, t11]]`.
    pub fn inverse(&self) -> Result<Self> {
        let a = self.require_valid()?;
        let back: Vec<i64> = a.iter().map(|x| -2 * x).collect();
        let [[t11, t12], [t21, t22]] = &self.entries;
        Ok(ScaMatrix {
            entries: [
                [t22.shift(&back), (-t12).shift(&back)],
                [(-t21).shift(&back), t11.shift(&back)],
            ],
        })
    }

    /// Entrywise evaluation `u_l = 1` for `l != k` (1-based direction).
    pub fn restrict(&self, k: usize) -> Result<Self> {
        self.require_valid()?;
        let mut entries = self.entries.clone();
        for e in entries.iter_mut().flatten() {
            *e = e.restrict_direction(k)?;
        }
        let out = ScaMatrix { entries };
        out.require_valid()
            .map_err(|e| Error::Internal(format!("restriction lost validity: {e}")))?;
        Ok(out)
    }

    /// Smallest box containing every exponent of every entry.
    pub fn neighborhood(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut acc: Option<(Vec<i64>, Vec<i64>)> = None;
        for e in self.entries.iter().flatten() {
            let Some((lo, hi)) = e.support_box() else {
                continue;
            };
            acc = Some(match acc {
                None => (lo, hi),
                Some((alo, ahi)) => (
                    alo.iter().zip(&lo).map(|(a, b)| *a.min(b)).collect(),
                    ahi.iter().zip(&hi).map(|(a, b)| *a.max(b)).collect(),
                ),
            });
        }
        acc
    }
}

impl fmt::Display for ScaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// `[[f, f h - 1], [1, h]]` for reflection-invariant `f`, `h`.
pub fn trivial_construction(f: &LaurentPoly, h: &LaurentPoly) -> Result<ScaMatrix> {
    let origin = HalfLatticePoint::origin(f.rank());
    for (name, g) in [("f", f), ("h", h)] {
        if g.rank() != origin.doubled().len() || !g.is_reflection_invariant(&origin) {
            return Err(Error::Domain(format!(
                "{name} = {g} is not reflection invariant about the origin"
            )));
        }
    }
    let one = LaurentPoly::one(f.prime(), f.rank());
    let t = ScaMatrix::new([
        [f.clone(), &f.checked_mul(h)? - &one],
        [one, h.clone()],
    ])?;
    debug_assert!(t.is_valid());
    Ok(t)
}
