//! Brute-force verification with explicit Weyl matrices on small systems.
//!
//! Independent of the symbolic layer: operators are built from
//! `X|q> = |q+1>`, `Z|q> = ω^q |q>` on `p^n`-dimensional space with site 0
//! as the most significant digit.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::phasespace::{phase_modulus, PauliProduct};
use crate::ring::FieldElement;
use crate::torus::TorusVector;

/// Largest Hilbert space dimension the oracle will build by default.
pub const DEFAULT_DIM_LIMIT: usize = 4096;

/// Singular values above this fraction of the largest count towards the rank.
pub const RANK_THRESHOLD: f64 = 1e-6;

const SCALAR_TOLERANCE: f64 = 1e-9;

/// `W|q> = phase[q] |target[q]>`: every Weyl operator is monomial.
#[derive(Debug, Clone)]
struct Monomial {
    target: Vec<usize>,
    phase: Vec<Complex64>,
}

/// A dense complex matrix on `n_sites` qudits of dimension `p`.
#[derive(Debug, Clone)]
pub struct DenseOperator {
    pub p: u32,
    pub n_sites: usize,
    pub matrix: DMatrix<Complex64>,
}

impl DenseOperator {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `‖U†U − I‖` in the Frobenius norm.
    pub fn unitarity_defect(&self) -> f64 {
        let d = self.dim();
        (self.matrix.adjoint() * &self.matrix - DMatrix::identity(d, d)).norm()
    }
}

fn root_of_unity(k: u32, n: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

fn dimension(p: u32, n_sites: usize, limit: usize) -> Result<usize> {
    let mut d = 1usize;
    for _ in 0..n_sites {
        d = d.checked_mul(p as usize).filter(|&d| d <= limit).ok_or_else(|| {
            Error::Guardrail(format!("{p}^{n_sites} exceeds the dimension limit {limit}"))
        })?;
    }
    Ok(d)
}

fn monomial(a: &PauliProduct, n_sites: usize, limit: usize) -> Result<Monomial> {
    if a.rank() != 1 {
        return Err(Error::Domain("the oracle works on a single chain of sites".into()));
    }
    let p = a.prime();
    let d = dimension(p, n_sites, limit)?;
    let mut local = vec![(0u32, 0u32); n_sites];
    for (x, r, k) in a.sites() {
        let i = usize::try_from(x[0])
            .ok()
            .filter(|&i| i < n_sites)
            .ok_or_else(|| Error::Domain(format!("site {} outside [0, {n_sites})", x[0])))?;
        local[i] = (r.value(), k.value());
    }
    let global = root_of_unity(a.phase_exp(), phase_modulus(p));
    let mut target = vec![0; d];
    let mut phase = vec![global; d];
    let mut digits = vec![0u32; n_sites];
    for q in 0..d {
        let mut rest = q;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        let mut out = 0usize;
        let mut exp = 0u32;
        for (&digit, &(r, k)) in digits.iter().zip(&local) {
            out = out * p as usize + ((digit + r) % p) as usize;
            exp = (exp + k * digit) % p;
        }
        target[q] = out;
        phase[q] *= root_of_unity(exp, p);
    }
    Ok(Monomial { target, phase })
}

impl Monomial {
    fn identity(d: usize) -> Self {
        Monomial {
            target: (0..d).collect(),
            phase: vec![Complex64::new(1.0, 0.0); d],
        }
    }

    /// `self · other`: apply `other` first.
    fn then(&self, other: &Monomial) -> Monomial {
        let (target, phase) = other
            .target
            .iter()
            .zip(&other.phase)
            .map(|(&t, &c)| (self.target[t], self.phase[t] * c))
            .unzip();
        Monomial { target, phase }
    }

    fn approx_eq(&self, other: &Monomial) -> bool {
        self.target == other.target
            && self
                .phase
                .iter()
                .zip(&other.phase)
                .all(|(a, b)| (a - b).norm() < SCALAR_TOLERANCE)
    }

    fn dense(&self) -> DMatrix<Complex64> {
        let d = self.target.len();
        let mut m = DMatrix::zeros(d, d);
        for q in 0..d {
            m[(self.target[q], q)] = self.phase[q];
        }
        m
    }

    /// `W M` for dense `M`, in `O(d^2)`.
    fn apply_left(&self, m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(m.nrows(), m.ncols());
        for q in 0..self.target.len() {
            let (row, c) = (self.target[q], self.phase[q]);
            for j in 0..m.ncols() {
                out[(row, j)] = c * m[(q, j)];
            }
        }
        out
    }
}

pub fn weyl_dense(a: &PauliProduct, n_sites: usize) -> Result<DenseOperator> {
    weyl_dense_with_limit(a, n_sites, DEFAULT_DIM_LIMIT)
}

pub fn weyl_dense_with_limit(a: &PauliProduct, n_sites: usize, limit: usize) -> Result<DenseOperator> {
    Ok(DenseOperator {
        p: a.prime(),
        n_sites,
        matrix: monomial(a, n_sites, limit)?.dense(),
    })
}

/// Reads off `ω^σ` from the scalar `U_B U_A (U_A U_B)^{-1}`.
pub fn commute_dense(a: &PauliProduct, b: &PauliProduct, n_sites: usize) -> Result<FieldElement> {
    let p = a.prime();
    if b.prime() != p {
        return Err(Error::Structural("operators over different fields".into()));
    }
    let ua = weyl_dense(a, n_sites)?.matrix;
    let ub = weyl_dense(b, n_sites)?.matrix;
    let ab = &ua * &ub;
    let ratio = &ub * &ua * ab.adjoint();
    let c = ratio[(0, 0)];
    let d = ratio.nrows();
    if (ratio - DMatrix::identity(d, d) * c).norm() > SCALAR_TOLERANCE {
        return Err(Error::Internal("group commutator is not a scalar".into()));
    }
    (0..p)
        .find(|&k| (c - root_of_unity(k, p)).norm() < SCALAR_TOLERANCE)
        .map(|k| FieldElement::new(k as i64, p))
        .ok_or_else(|| Error::Internal(format!("commutator phase {c} is not a root of unity")))
}

/// Dimension of the joint +1 eigenspace of commuting generators with `W^p = I`.
pub fn joint_eigenspace_dim(generators: &[PauliProduct], n_sites: usize) -> Result<usize> {
    joint_eigenspace_dim_with_limit(generators, n_sites, DEFAULT_DIM_LIMIT)
}

pub fn joint_eigenspace_dim_with_limit(
    generators: &[PauliProduct],
    n_sites: usize,
    limit: usize,
) -> Result<usize> {
    let Some(first) = generators.first() else {
        return dimension(2, 0, limit);
    };
    let p = first.prime();
    let d = dimension(p, n_sites, limit)?;
    let ops = generators
        .iter()
        .map(|g| monomial(g, n_sites, limit))
        .collect::<Result<Vec<_>>>()?;
    let identity = Monomial::identity(d);
    for (i, a) in ops.iter().enumerate() {
        let power = (1..p).fold(a.clone(), |acc, _| a.then(&acc));
        if !power.approx_eq(&identity) {
            return Err(Error::Domain(format!(
                "generator {} does not satisfy W^p = I",
                generators[i]
            )));
        }
        for (j, b) in ops.iter().enumerate().skip(i + 1) {
            if !a.then(b).approx_eq(&b.then(a)) {
                return Err(Error::Domain(format!(
                    "generators {} and {} do not commute",
                    generators[i], generators[j]
                )));
            }
        }
    }
    let mut proj = DMatrix::<Complex64>::identity(d, d);
    for op in &ops {
        // (I + W + … + W^{p-1}) / p applied on the left.
        let mut term = proj.clone();
        let mut sum = proj.clone();
        for _ in 1..p {
            term = op.apply_left(&term);
            sum += &term;
        }
        proj = sum / Complex64::new(p as f64, 0.0);
    }
    let singular = proj.clone().svd(false, false).singular_values;
    let largest = singular.iter().cloned().fold(0.0, f64::max);
    // An empty joint eigenspace leaves only rounding noise.
    let rank = if largest < RANK_THRESHOLD {
        0
    } else {
        singular.iter().filter(|&&s| s > RANK_THRESHOLD * largest).count()
    };
    let trace = proj.trace().re;
    if (trace - rank as f64).abs() > 1e-6 {
        return Err(Error::Internal(format!(
            "projector trace {trace} disagrees with its rank {rank}"
        )));
    }
    Ok(rank)
}

/// Translates of `w(ξ)` on a torus, phased so that `W^p = I`.
///
/// Site `i` is the canonical index of the torus point. For qubits each `XZ`
/// site contributes a factor `i`, turning it into `Y`.
pub fn stabilizer_generators(xi: &TorusVector) -> Vec<PauliProduct> {
    let lattice = xi.lattice();
    let p = xi.prime();
    (0..lattice.sites())
        .map(|shift| {
            let mut g = PauliProduct::identity(p, 1);
            let mut ys = 0i64;
            for i in 0..lattice.sites() {
                let (r, k) = (xi.plus.coeffs()[i], xi.minus.coeffs()[i]);
                if r == 0 && k == 0 {
                    continue;
                }
                let site = lattice.add(i, shift) as i64;
                g = g
                    .multiply(&PauliProduct::single(p, vec![site], r as i64, k as i64))
                    .expect("same field");
                ys += (r * k) as i64;
            }
            // Disjoint sites: the product carries no ordering phase.
            let base = g.phase_exp() as i64;
            g.with_phase(base + if p == 2 { ys } else { 0 })
        })
        .collect()
}
