use std::fmt;

use crate::error::{Error, Result};

/// The torus `Z^s / N Z^s` for independent period vectors `N_1, …, N_s`.
///
/// Smith normal form `U B V = diag(d_1, …, d_s)` of the basis matrix gives
/// canonical coordinates `x ↦ (U x) mod d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusLattice {
    basis: Vec<Vec<i64>>,
    diag: Vec<i64>,
    u: Vec<Vec<i64>>,
    u_inv: Vec<Vec<i64>>,
    strides: Vec<usize>,
    sites: usize,
}

struct Smith {
    a: Vec<Vec<i64>>,
    u: Vec<Vec<i64>>,
    u_inv: Vec<Vec<i64>>,
}

impl Smith {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in &mut self.u_inv {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
    }

    /// `row_i += q row_k`.
    fn add_row(&mut self, i: usize, k: usize, q: i64) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[k].clone();
            for (x, y) in m[i].iter_mut().zip(src) {
                *x += q * y;
            }
        }
        for row in &mut self.u_inv {
            row[k] -= q * row[i];
        }
    }

    /// `col_j += q col_k`.
    fn add_col(&mut self, j: usize, k: usize, q: i64) {
        for row in &mut self.a {
            row[j] += q * row[k];
        }
    }

    fn negate_row(&mut self, k: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in &mut m[k] {
                *x = -*x;
            }
        }
        for row in &mut self.u_inv {
            row[k] = -row[k];
        }
    }

    fn run(&mut self) {
        let s = self.a.len();
        for k in 0..s {
            loop {
                let (pi, pj) = (k..s)
                    .flat_map(|i| (k..s).map(move |j| (i, j)))
                    .filter(|&(i, j)| self.a[i][j] != 0)
                    .min_by_key(|&(i, j)| self.a[i][j].abs())
                    .expect("nonsingular basis");
                self.swap_rows(k, pi);
                self.swap_cols(k, pj);
                let pivot = self.a[k][k];
                let mut clean = true;
                for i in k + 1..s {
                    let q = self.a[i][k] / pivot;
                    self.add_row(i, k, -q);
                    clean &= self.a[i][k] == 0;
                }
                for j in k + 1..s {
                    let q = self.a[k][j] / pivot;
                    self.add_col(j, k, -q);
                    clean &= self.a[k][j] == 0;
                }
                if !clean {
                    continue;
                }
                let offender = (k + 1..s).find(|&i| (k + 1..s).any(|j| self.a[i][j] % pivot != 0));
                match offender {
                    Some(i) => self.add_row(k, i, 1),
                    None => break,
                }
            }
            if self.a[k][k] < 0 {
                self.negate_row(k);
            }
        }
    }
}

impl TorusLattice {
    /// Period vectors as rows: `basis[i]` is `N_i`.
    pub fn new(basis: Vec<Vec<i64>>) -> Result<Self> {
        let s = basis.len();
        if s == 0 || basis.iter().any(|v| v.len() != s) {
            return Err(Error::Domain(
                "torus basis must be s vectors of length s".into(),
            ));
        }
        let identity: Vec<Vec<i64>> = (0..s)
            .map(|i| (0..s).map(|j| i64::from(i == j)).collect())
            .collect();
        // Columns of the working matrix are the period vectors.
        let a: Vec<Vec<i64>> = (0..s).map(|i| (0..s).map(|j| basis[j][i]).collect()).collect();
        if determinant(&a) == 0 {
            return Err(Error::Domain("torus basis vectors are linearly dependent".into()));
        }
        let mut smith = Smith {
            a,
            u: identity.clone(),
            u_inv: identity,
        };
        smith.run();
        let diag: Vec<i64> = (0..s).map(|i| smith.a[i][i]).collect();
        let mut strides = Vec::with_capacity(s);
        let mut sites = 1usize;
        for &d in &diag {
            strides.push(sites);
            sites = sites
                .checked_mul(d as usize)
                .ok_or_else(|| Error::Guardrail("torus has too many sites".into()))?;
        }
        Ok(TorusLattice {
            basis,
            diag,
            u: smith.u,
            u_inv: smith.u_inv,
            strides,
            sites,
        })
    }

    /// The ring `Z_N`.
    pub fn cyclic(n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(Error::Domain(format!("torus size must be positive, got {n}")));
        }
        TorusLattice::new(vec![vec![n]])
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Invariant factors `d_1 | d_2 | … | d_s`.
    pub fn invariant_factors(&self) -> &[i64] {
        &self.diag
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    /// Canonical coordinates in `prod Z_{d_i}`.
    pub fn canonicalize(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.rank(), "exponent rank");
        self.u
            .iter()
            .zip(&self.diag)
            .map(|(row, &d)| row.iter().zip(x).map(|(a, b)| a * b).sum::<i64>().rem_euclid(d))
            .collect()
    }

    pub fn index_of_coords(&self, c: &[i64]) -> usize {
        c.iter()
            .zip(&self.strides)
            .map(|(&ci, &st)| ci as usize * st)
            .sum()
    }

    pub fn index(&self, x: &[i64]) -> usize {
        self.index_of_coords(&self.canonicalize(x))
    }

    pub fn coords(&self, index: usize) -> Vec<i64> {
        self.diag
            .iter()
            .zip(&self.strides)
            .map(|(&d, &st)| ((index / st) % d as usize) as i64)
            .collect()
    }

    /// A lattice point in the class of `index`.
    pub fn representative(&self, index: usize) -> Vec<i64> {
        let c = self.coords(index);
        self.u_inv
            .iter()
            .map(|row| row.iter().zip(&c).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        if self.rank() == 1 {
            return (i + j) % self.sites;
        }
        let (a, b) = (self.coords(i), self.coords(j));
        let c: Vec<i64> = a
            .iter()
            .zip(&b)
            .zip(&self.diag)
            .map(|((x, y), d)| (x + y) % d)
            .collect();
        self.index_of_coords(&c)
    }

    pub fn neg(&self, i: usize) -> usize {
        if self.rank() == 1 {
            return (self.sites - i) % self.sites;
        }
        let c: Vec<i64> = self
            .coords(i)
            .iter()
            .zip(&self.diag)
            .map(|(x, d)| (-x).rem_euclid(*d))
            .collect();
        self.index_of_coords(&c)
    }
}

impl fmt::Display for TorusLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 1 {
            return write!(f, "Z_{}", self.sites);
        }
        let parts: Vec<String> = self.diag.iter().map(|d| format!("Z_{d}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Exact integer determinant by fraction-free elimination.
fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
