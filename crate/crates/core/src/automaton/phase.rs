use super::matrix::ScaMatrix;
use crate::error::{Error, Result};
use crate::phasespace::{ordering_form, phase_modulus, PauliProduct, PhaseVector};
use crate::ring::{add_mod, inv_mod, mul_mod, sub_mod, LaurentPoly};

/// The phases `ϑ(1,0)` and `ϑ(0,1)` as exponents of `i` (p = 2) or `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhaseData {
    pub base_phase_x: u32,
    pub base_phase_z: u32,
}

/// A Clifford quantum cellular automaton: a symplectic matrix with phases.
///
/// Acts as `T(w(ξ)) = ϑ(ξ) w(t ξ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cqca {
    matrix: ScaMatrix,
    phase: PhaseData,
    kernel: PhaseKernel,
}

/// Correlations `reflect(t_c-) t_d+` between columns: `Σ_z (u^x t_c)-(z) (u^y t_d)+(z)`
/// is their coefficient of `u^{x-y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PhaseKernel {
    corr: [[LaurentPoly; 2]; 2],
}

impl PhaseKernel {
    fn new(t: &ScaMatrix) -> Self {
        let col = |c: usize| t.column(c);
        let k = |c: usize, d: usize| &col(c).minus.reflect() * &col(d).plus;
        PhaseKernel {
            corr: [[k(0, 0), k(0, 1)], [k(1, 0), k(1, 1)]],
        }
    }

    /// `Σ (t e_i)- (t e_j)+` for `e_i = u^x e_c`, `e_j = u^y e_d`.
    fn image_ordering(&self, c: usize, x: &[i64], d: usize, y: &[i64]) -> u32 {
        let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.corr[c][d].coeff(&diff)
    }
}

impl PhaseData {
    /// The least admissible phases.
    ///
    /// For odd p both are 0. For p = 2, `ϑ(e)^2` is forced to be
    /// `(-1)^{Σ (te)- (te)+}`, which fixes the parity of each base phase.
    pub fn default_for(t: &ScaMatrix) -> Self {
        if t.prime() != 2 {
            return PhaseData {
                base_phase_x: 0,
                base_phase_z: 0,
            };
        }
        let parity = |c: usize| {
            let col = t.column(c);
            ordering_form(&col, &col)
        };
        PhaseData {
            base_phase_x: parity(0),
            base_phase_z: parity(1),
        }
    }

    fn check(&self, t: &ScaMatrix) -> Result<()> {
        let m = phase_modulus(t.prime());
        if self.base_phase_x >= m || self.base_phase_z >= m {
            return Err(Error::Domain(format!(
                "base phases must be reduced mod {m}"
            )));
        }
        let d = PhaseData::default_for(t);
        if t.prime() == 2 {
            for (name, got, want) in [
                ("X", self.base_phase_x, d.base_phase_x),
                ("Z", self.base_phase_z, d.base_phase_z),
            ] {
                if got % 2 != want {
                    return Err(Error::Domain(format!(
                        "base phase for {name} must be {} mod 2 so that the image squares correctly",
                        want
                    )));
                }
            }
        }
        Ok(())
    }
}

impl Cqca {
    pub fn new(matrix: ScaMatrix, phase: PhaseData) -> Result<Self> {
        let v = matrix.validate();
        if !v.ok {
            return Err(Error::InvalidAutomaton(v.failure.unwrap_or_default()));
        }
        phase.check(&matrix)?;
        let kernel = PhaseKernel::new(&matrix);
        Ok(Cqca {
            matrix,
            phase,
            kernel,
        })
    }

    pub fn with_default_phases(matrix: ScaMatrix) -> Result<Self> {
        let phase = PhaseData::default_for(&matrix);
        Cqca::new(matrix, phase)
    }

    pub fn matrix(&self) -> &ScaMatrix {
        &self.matrix
    }

    pub fn phases(&self) -> PhaseData {
        self.phase
    }

    pub fn prime(&self) -> u32 {
        self.matrix.prime()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `φ(ξ)` with `ϑ(ξ) = i^φ` (p = 2) or `ω^φ` (odd p).
    pub fn phase_function(&self, xi: &PhaseVector) -> Result<u32> {
        let p = self.prime();
        if xi.prime() != p || xi.rank() != self.rank() {
            return Err(Error::Structural("vector does not match the automaton".into()));
        }
        if p == 2 {
            Ok(self.qubit_phase(xi))
        } else {
            self.odd_phase(xi)
        }
    }

    /// `½(β(ξ,ξ) - β(tξ,tξ)) + λ(ξ)` with `β(ξ,η) = -Σ ξ- η+`.
    fn odd_phase(&self, xi: &PhaseVector) -> Result<u32> {
        let p = self.prime();
        let half = inv_mod(2, p).expect("odd prime");
        let q = |v: &PhaseVector| -> Result<u32> {
            let tv = self.matrix.apply_vector(v)?;
            Ok(mul_mod(half, sub_mod(ordering_form(&tv, &tv), ordering_form(v, v), p), p))
        };
        let lambda_x = sub_mod(self.phase.base_phase_x, q(&PhaseVector::x_basis(p, self.rank()))?, p);
        let lambda_z = sub_mod(self.phase.base_phase_z, q(&PhaseVector::z_basis(p, self.rank()))?, p);
        let total = |f: &LaurentPoly| f.terms().fold(0, |acc, (_, c)| add_mod(acc, c, p));
        let lambda = add_mod(
            mul_mod(lambda_x, total(&xi.plus), p),
            mul_mod(lambda_z, total(&xi.minus), p),
            p,
        );
        Ok(add_mod(q(xi)?, lambda, p))
    }

    /// `Σ_i γ_i + Σ_{i<j} γ_ij` over the unit vectors in the support of `ξ`,
    /// where `γ_ij = 2(β(e_i,e_j) - β(te_i,te_j))` mod 4.
    fn qubit_phase(&self, xi: &PhaseVector) -> u32 {
        let mut support: Vec<(usize, &[i64])> = Vec::new();
        support.extend(xi.plus.terms().map(|(x, _)| (0usize, x.as_slice())));
        support.extend(xi.minus.terms().map(|(x, _)| (1usize, x.as_slice())));
        let base = [self.phase.base_phase_x, self.phase.base_phase_z];
        let mut phase = 0u32;
        for (i, &(c, x)) in support.iter().enumerate() {
            phase += base[c];
            for &(d, y) in &support[i + 1..] {
                let plain = u32::from(c == 1 && d == 0 && x == y);
                let image = self.kernel.image_ordering(c, x, d, y);
                phase += 2 * ((plain + image) % 2);
            }
        }
        phase % 4
    }

    /// Signed image of a Pauli product.
    pub fn apply_pauli(&self, a: &PauliProduct) -> Result<PauliProduct> {
        if a.prime() != self.prime() || a.rank() != self.rank() {
            return Err(Error::Structural("Pauli product does not match the automaton".into()));
        }
        let xi = a.to_vector();
        let image = self.matrix.apply_vector(&xi)?;
        let phi = self.phase_function(&xi)?;
        let m = phase_modulus(self.prime());
        Ok(PauliProduct::from_vector(&image).with_phase(((a.phase_exp() + phi) % m) as i64))
    }

    /// `T^-1` with phases `ϑ'(e) = ϑ(t^-1 e)^-1`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self.matrix.inverse()?;
        let (p, s) = (self.prime(), self.rank());
        let m = phase_modulus(p);
        let base = |e: PhaseVector| -> Result<u32> {
            let phi = self.phase_function(&inv.apply_vector(&e)?)?;
            Ok((m - phi) % m)
        };
        let phase = PhaseData {
            base_phase_x: base(PhaseVector::x_basis(p, s))?,
            base_phase_z: base(PhaseVector::z_basis(p, s))?,
        };
        Cqca::new(inv, phase)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let matrix = self.matrix.compose(&other.matrix)?;
        let (p, s) = (self.prime(), self.rank());
        let m = phase_modulus(p);
        let base = |e: PhaseVector| -> Result<u32> {
            let first = other.phase_function(&e)?;
            let second = self.phase_function(&other.matrix.apply_vector(&e)?)?;
            Ok((first + second) % m)
        };
        let phase = PhaseData {
            base_phase_x: base(PhaseVector::x_basis(p, s))?,
            base_phase_z: base(PhaseVector::z_basis(p, s))?,
        };
        Cqca::new(matrix, phase)
    }
}
