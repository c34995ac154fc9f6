use std::fmt;
use std::sync::Arc;

use super::lattice::TorusLattice;
use super::linalg;
use super::poly::{check_sites, TorusPoly, DEFAULT_SITE_LIMIT};
use crate::error::{Error, Result};
use crate::phasespace::PhaseVector;
use crate::ring::{neg_mod, Cursor};

/// A phase-space vector on the torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusVector {
    pub plus: TorusPoly,
    pub minus: TorusPoly,
}

impl TorusVector {
    pub fn new(plus: TorusPoly, minus: TorusPoly) -> Result<Self> {
        plus.check_compatible(&minus)?;
        Ok(TorusVector { plus, minus })
    }

    pub fn from_phase_vector(xi: &PhaseVector, lattice: &Arc<TorusLattice>) -> Result<Self> {
        TorusVector::new(
            TorusPoly::from_laurent(&xi.plus, lattice)?,
            TorusPoly::from_laurent(&xi.minus, lattice)?,
        )
    }

    pub fn parse(text: &str, p: u32, lattice: &Arc<TorusLattice>) -> Result<Self> {
        let xi = PhaseVector::parse(text, p, lattice.rank())?;
        TorusVector::from_phase_vector(&xi, lattice)
    }

    pub fn prime(&self) -> u32 {
        self.plus.prime()
    }

    pub fn lattice(&self) -> &Arc<TorusLattice> {
        self.plus.lattice()
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        TorusVector::new(
            self.plus.checked_add(&other.plus)?,
            self.minus.checked_add(&other.minus)?,
        )
    }

    pub fn mul_poly(&self, f: &TorusPoly) -> Result<Self> {
        TorusVector::new(f.checked_mul(&self.plus)?, f.checked_mul(&self.minus)?)
    }
}

impl fmt::Display for TorusVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.plus, self.minus)
    }
}

pub fn torus_symplectic_form(xi: &TorusVector, eta: &TorusVector) -> Result<TorusPoly> {
    let a = xi.plus.reflect().checked_mul(&eta.minus)?;
    let b = xi.minus.reflect().checked_mul(&eta.plus)?;
    a.checked_sub(&b)
}

/// A symplectic cellular automaton on a torus; no locality is imposed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusSca {
    entries: [[TorusPoly; 2]; 2],
}

impl TorusSca {
    pub fn new(entries: [[TorusPoly; 2]; 2]) -> Result<Self> {
        let first = entries[0][0].clone();
        for e in entries.iter().flatten() {
            first.check_compatible(e)?;
        }
        Ok(TorusSca { entries })
    }

    pub fn from_columns(first: &TorusVector, second: &TorusVector) -> Result<Self> {
        TorusSca::new([
            [first.plus.clone(), second.plus.clone()],
            [first.minus.clone(), second.minus.clone()],
        ])
    }

    /// Parses rows of polynomial strings.
    pub fn parse(rows: [[&str; 2]; 2], p: u32, lattice: &Arc<TorusLattice>) -> Result<Self> {
        let cell = |s: &str| TorusPoly::parse(s, p, lattice);
        TorusSca::new([
            [cell(rows[0][0])?, cell(rows[0][1])?],
            [cell(rows[1][0])?, cell(rows[1][1])?],
        ])
    }

    pub fn identity(p: u32, lattice: &Arc<TorusLattice>) -> Self {
        let (o, z) = (TorusPoly::one(p, lattice), TorusPoly::zero(p, lattice));
        TorusSca {
            entries: [[o.clone(), z.clone()], [z, o]],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &TorusPoly {
        &self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> TorusVector {
        TorusVector {
            plus: self.entries[0][j].clone(),
            minus: self.entries[1][j].clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        let e = &self.entries[0][0];
        *self == TorusSca::identity(e.prime(), e.lattice())
    }

    pub fn apply_vector(&self, xi: &TorusVector) -> Result<TorusVector> {
        let [[a, b], [c, d]] = &self.entries;
        TorusVector::new(
            a.checked_mul(&xi.plus)?.checked_add(&b.checked_mul(&xi.minus)?)?,
            c.checked_mul(&xi.plus)?.checked_add(&d.checked_mul(&xi.minus)?)?,
        )
    }

    /// The first violated column condition, if any.
    pub fn validation_failure(&self) -> Option<String> {
        let (t1, t2) = (self.column(0), self.column(1));
        let form = |a, b| torus_symplectic_form(a, b).expect("shared torus");
        let s11 = form(&t1, &t1);
        if !s11.is_zero() {
            return Some(format!("first column is not isotropic: σ̂(t1,t1) = {s11}"));
        }
        let s22 = form(&t2, &t2);
        if !s22.is_zero() {
            return Some(format!("second column is not isotropic: σ̂(t2,t2) = {s22}"));
        }
        let s12 = form(&t1, &t2);
        if !s12.is_one() {
            return Some(format!("columns are not a symplectic pair: σ̂(t1,t2) = {s12}"));
        }
        None
    }
}

impl fmt::Display for TorusSca {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

pub fn torus_validate(t: &TorusSca) -> bool {
    t.validation_failure().is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusVerdict {
    pub maximal: bool,
    /// Dimension of the span of the translates of `ξ`.
    pub rank: usize,
    pub sites: usize,
}

/// Unrolls `ξ` into `F_p^{2M}`: plus coefficients, then minus coefficients.
fn unrolled(xi: &TorusVector) -> Vec<u32> {
    xi.plus.coeffs().iter().chain(xi.minus.coeffs()).copied().collect()
}

fn translates(xi: &TorusVector) -> Vec<TorusVector> {
    let lattice = xi.lattice();
    (0..lattice.sites())
        .map(|i| {
            let x = lattice.representative(i);
            TorusVector {
                plus: xi.plus.shift(&x),
                minus: xi.minus.shift(&x),
            }
        })
        .collect()
}

fn require_isotropic(xi: &TorusVector) -> Result<()> {
    if xi.is_zero() {
        return Err(Error::Domain("zero vector".into()));
    }
    let s = torus_symplectic_form(xi, xi)?;
    if !s.is_zero() {
        return Err(Error::Domain(format!("{xi} is not isotropic: σ̂(ξ,ξ) = {s}")));
    }
    Ok(())
}

/// Whether the translates of an isotropic `ξ` span a maximal isotropic subspace.
pub fn torus_stabilizer_verdict(xi: &TorusVector) -> Result<TorusVerdict> {
    torus_stabilizer_verdict_with_limit(xi, DEFAULT_SITE_LIMIT)
}

pub fn torus_stabilizer_verdict_with_limit(xi: &TorusVector, limit: usize) -> Result<TorusVerdict> {
    check_sites(xi.lattice(), limit)?;
    require_isotropic(xi)?;
    let rows: Vec<Vec<u32>> = translates(xi).iter().map(unrolled).collect();
    let sites = xi.lattice().sites();
    let rank = linalg::rank(rows, xi.prime());
    Ok(TorusVerdict {
        maximal: rank == sites,
        rank,
        sites,
    })
}

/// Extends a maximal isotropic `ξ` to an automaton with second column `ξ`.
pub fn torus_complete(xi: &TorusVector) -> Result<TorusSca> {
    torus_complete_with_limit(xi, DEFAULT_SITE_LIMIT)
}

pub fn torus_complete_with_limit(xi: &TorusVector, limit: usize) -> Result<TorusSca> {
    let verdict = torus_stabilizer_verdict_with_limit(xi, limit)?;
    if !verdict.maximal {
        return Err(Error::Domain(format!(
            "translates of {xi} span only {} of {} dimensions",
            verdict.rank, verdict.sites
        )));
    }
    let (p, lattice) = (xi.prime(), Arc::clone(xi.lattice()));
    let m = lattice.sites();
    // Dual vector: σ(η̂, τ_x ξ) = δ_{x0}, where
    // σ(a, b) = Σ_y a+(y) b-(y) - a-(y) b+(y).
    let a: Vec<Vec<u32>> = translates(xi)
        .iter()
        .map(|v| {
            v.minus
                .coeffs()
                .iter()
                .copied()
                .chain(v.plus.coeffs().iter().map(|&c| neg_mod(c, p)))
                .collect()
        })
        .collect();
    let mut b = vec![0; m];
    b[0] = 1 % p;
    let sol = linalg::solve(&a, &b, p)
        .ok_or_else(|| Error::Internal("no dual vector for a maximal generator".into()))?;
    let poly = |c: &[u32]| {
        let mut f = TorusPoly::zero(p, &lattice);
        for (i, &v) in c.iter().enumerate() {
            if v != 0 {
                f = &f + &TorusPoly::monomial(p, &lattice, &lattice.representative(i), v as i64);
            }
        }
        f
    };
    let eta0 = TorusVector::new(poly(&sol[..m]), poly(&sol[m..]))?;
    // f - reflect(f) = -h with h = σ̂(η', η') antisymmetric.
    let h = torus_symplectic_form(&eta0, &eta0)?;
    let f: Vec<u32> = (0..m)
        .map(|i| if i < lattice.neg(i) { neg_mod(h.coeffs()[i], p) } else { 0 })
        .collect();
    let eta = eta0.checked_add(&xi.mul_poly(&poly(&f))?)?;
    let t = TorusSca::from_columns(&eta, xi)?;
    if let Some(reason) = t.validation_failure() {
        return Err(Error::Internal(format!("completion does not validate: {reason}")));
    }
    Ok(t)
}

/// `[[1, γ̂], [0, 1]]` for a symmetric adjacency polynomial `γ̂`.
pub fn graph_state_automaton(gamma: &TorusPoly) -> Result<TorusSca> {
    if gamma.reflect() != *gamma {
        return Err(Error::Domain(format!(
            "adjacency polynomial {gamma} is not symmetric"
        )));
    }
    let (p, lattice) = (gamma.prime(), gamma.lattice());
    TorusSca::new([
        [TorusPoly::one(p, lattice), gamma.clone()],
        [TorusPoly::zero(p, lattice), TorusPoly::one(p, lattice)],
    ])
}

/// `γ(z) = Γ(z, 0)` from an adjacency matrix indexed by canonical site index,
/// checking `Γ(x, y) = γ(x - y)`.
pub fn gamma_from_adjacency(
    adjacency: &[Vec<u32>],
    p: u32,
    lattice: &Arc<TorusLattice>,
) -> Result<TorusPoly> {
    let m = lattice.sites();
    if adjacency.len() != m || adjacency.iter().any(|r| r.len() != m) {
        return Err(Error::Domain(format!(
            "adjacency matrix must be {m}x{m} for {lattice}"
        )));
    }
    let mut gamma = TorusPoly::zero(p, lattice);
    for (z, row) in adjacency.iter().enumerate() {
        if row[0] != 0 {
            gamma = &gamma
                + &TorusPoly::monomial(p, lattice, &lattice.representative(z), row[0] as i64);
        }
    }
    for (x, row) in adjacency.iter().enumerate() {
        for (y, &v) in row.iter().enumerate() {
            let d = lattice.add(x, lattice.neg(y));
            if v % p != gamma.coeffs()[d] {
                return Err(Error::Domain(format!(
                    "adjacency is not translation invariant at ({x}, {y})"
                )));
            }
        }
    }
    Ok(gamma)
}

/// Parses whitespace- or comma-separated rows of integers, one row per line.
pub fn parse_adjacency(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut rows = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let mut cur = Cursor::new(line);
        let mut row = Vec::new();
        while !cur.at_end() {
            let start = cur.pos;
            let v = cur.integer().map_err(|_| Error::parse(offset + start, "expected 0 or 1"))?;
            if !(0..=1).contains(&v) {
                return Err(Error::parse(offset + start, "adjacency entries must be 0 or 1"));
            }
            row.push(v as u32);
            cur.eat(b',');
        }
        if !row.is_empty() {
            rows.push(row);
        }
        offset += line.len();
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> Arc<TorusLattice> {
        Arc::new(TorusLattice::cyclic(n).unwrap())
    }

    /// (1 + u + u^3) (u^-1 + u, 1) over F_2.
    fn periodic_vector(n: i64) -> TorusVector {
        let g = crate::ring::LaurentPoly::parse("1 + u + u^3", 2, 1).unwrap();
        let xi = PhaseVector::new(&g * &crate::ring::LaurentPoly::symmetric(2, 1), g).unwrap();
        assert_eq!(xi.to_string(), "(u^-1 + 1 + u + u^4, 1 + u + u^3)");
        TorusVector::from_phase_vector(&xi, &z(n)).unwrap()
    }

    #[test]
    fn verdicts_depend_on_size() {
        assert!(!torus_stabilizer_verdict(&periodic_vector(7)).unwrap().maximal);
        let v6 = torus_stabilizer_verdict(&periodic_vector(6)).unwrap();
        assert!(v6.maximal);
        assert_eq!(v6.rank, 6);
        for n in 1..=8 {
            let t = z(n);
            let zb = TorusVector::new(TorusPoly::zero(3, &t), TorusPoly::one(3, &t)).unwrap();
            assert!(torus_stabilizer_verdict(&zb).unwrap().maximal);
            assert!(torus_complete(&zb).unwrap().is_identity());
        }
    }

    #[test]
    fn graph_state() {
        let t6 = z(6);
        let gamma = TorusPoly::parse("u^2 + u^3 + u^4", 2, &t6).unwrap();
        let t = graph_state_automaton(&gamma).unwrap();
        assert!(torus_validate(&t));
        assert_eq!(t.to_string(), "[[1, u^2 + u^3 + u^4], [0, 1]]");
        assert_eq!(torus_complete(&t.column(1)).unwrap(), t);
        assert!(graph_state_automaton(&TorusPoly::zero(2, &t6)).unwrap().is_identity());
        assert!(graph_state_automaton(&TorusPoly::parse("u", 2, &t6).unwrap()).is_err());

        let adjacency = parse_adjacency(
            "0 0 1 1 1 0\n0 0 0 1 1 1\n1 0 0 0 1 1\n1 1 0 0 0 1\n1 1 1 0 0 0\n0 1 1 1 0 0\n",
        )
        .unwrap();
        assert_eq!(gamma_from_adjacency(&adjacency, 2, &t6).unwrap(), gamma);
        let mut broken = adjacency.clone();
        broken[0][1] = 1;
        assert!(gamma_from_adjacency(&broken, 2, &t6).is_err());
    }

    #[test]
    fn column_conditions() {
        let t6 = z(6);
        let bad = TorusSca::parse([["1", "u"], ["0", "1"]], 2, &t6).unwrap();
        assert!(!torus_validate(&bad));
        assert!(bad.validation_failure().unwrap().contains("second column"));
        let tilde = TorusSca::parse([["1", "u^-1 + u"], ["0", "1"]], 2, &t6).unwrap();
        assert!(torus_validate(&tilde));
        // With first entry reflect((1+u+u^3)^-1) = u + u^2 + u^5 the pair condition holds.
        let fixed = TorusSca::parse(
            [["u + u^2 + u^5", "u^-1 + 1 + u + u^4"], ["0", "1 + u + u^3"]],
            2,
            &t6,
        )
        .unwrap();
        assert!(torus_validate(&fixed));
    }

    #[test]
    fn completion_of_periodic_vector() {
        let xi = periodic_vector(6);
        let t = torus_complete(&xi).unwrap();
        assert!(torus_validate(&t));
        assert_eq!(t.column(1), xi);
        assert!(torus_complete(&periodic_vector(7)).is_err());
    }
}
