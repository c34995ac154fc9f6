use std::collections::BTreeMap;
use std::fmt;

use super::vector::PhaseVector;
use crate::error::{Error, Result};
use crate::ring::{
    add_mod, check_prime, mul_mod, neg_mod, reduce_i64, sub_mod, Cursor, Exponent, FieldElement,
    LaurentPoly,
};

/// Modulus of the phase exponent: powers of `i` for qubits, of `ω = e^{2πi/p}` otherwise.
pub fn phase_modulus(p: u32) -> u32 {
    if p == 2 {
        4
    } else {
        p
    }
}

/// A phase times a tensor product of single-site Weyl operators `X^r Z^k`.
///
/// `X|q> = |q+1>` and `Z = diag(ω^q)`. The realized operator is
/// `i^phase` (p = 2) or `ω^phase` (odd p) times `⊗_x X^{r_x} Z^{k_x}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliProduct {
    p: u32,
    rank: usize,
    sites: BTreeMap<Exponent, (u32, u32)>,
    phase: u32,
}

impl PauliProduct {
    pub fn identity(p: u32, rank: usize) -> Self {
        check_prime(p).expect("prime field");
        assert!(rank >= 1, "lattice rank must be positive");
        PauliProduct {
            p,
            rank,
            sites: BTreeMap::new(),
            phase: 0,
        }
    }

    /// `X^r Z^k` at one site.
    pub fn single(p: u32, site: Exponent, r: i64, k: i64) -> Self {
        let mut out = PauliProduct::identity(p, site.len());
        out.set_site(site, reduce_i64(r, p), reduce_i64(k, p));
        out
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn phase_exp(&self) -> u32 {
        self.phase
    }

    pub fn with_phase(mut self, phase: i64) -> Self {
        self.phase = reduce_i64(phase, phase_modulus(self.p));
        self
    }

    pub fn sites(&self) -> impl Iterator<Item = (&Exponent, FieldElement, FieldElement)> + '_ {
        self.sites.iter().map(|(x, &(r, k))| {
            (
                x,
                FieldElement::new(r as i64, self.p),
                FieldElement::new(k as i64, self.p),
            )
        })
    }

    pub fn site(&self, x: &[i64]) -> (u32, u32) {
        self.sites.get(x).copied().unwrap_or((0, 0))
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> usize {
        self.sites.len()
    }

    pub fn is_identity(&self) -> bool {
        self.sites.is_empty() && self.phase == 0
    }

    fn set_site(&mut self, x: Exponent, r: u32, k: u32) {
        assert_eq!(x.len(), self.rank);
        if r == 0 && k == 0 {
            self.sites.remove(&x);
        } else {
            self.sites.insert(x, (r, k));
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.rank != other.rank {
            return Err(Error::Structural(format!(
                "Pauli products over p={} rank {} and p={} rank {}",
                self.p, self.rank, other.p, other.rank
            )));
        }
        Ok(())
    }

    /// Converts `ω^n` into units of the phase exponent.
    fn omega_units(&self, n: u32) -> u32 {
        if self.p == 2 {
            (2 * n) % 4
        } else {
            n % self.p
        }
    }

    /// `Σ_x ξ-(x) η+(x)` for `self = w(ξ)`, `other = w(η)`.
    fn ordering_sum(&self, other: &Self) -> u32 {
        self.sites.iter().fold(0, |acc, (x, &(_, k))| {
            let (r2, _) = other.site(x);
            add_mod(acc, mul_mod(k, r2, self.p), self.p)
        })
    }

    /// The operator product `self · other`.
    ///
    /// Uses `w(ξ) w(η) = ω^{Σ ξ-(x) η+(x)} w(ξ + η)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let m = phase_modulus(self.p);
        let mut out = self.clone();
        for (x, &(r, k)) in &other.sites {
            let (r0, k0) = out.site(x);
            out.set_site(x.clone(), add_mod(r0, r, self.p), add_mod(k0, k, self.p));
        }
        let extra = self.omega_units(self.ordering_sum(other));
        out.phase = (self.phase + other.phase + extra) % m;
        Ok(out)
    }

    /// `(c w(ξ))^{-1} = c^{-1} ω^{Σ ξ-ξ+} w(-ξ)`.
    pub fn inverse(&self) -> Self {
        let m = phase_modulus(self.p);
        let self_sum = self.ordering_sum(self);
        let mut out = PauliProduct::identity(self.p, self.rank);
        for (x, &(r, k)) in &self.sites {
            out.set_site(x.clone(), neg_mod(r, self.p), neg_mod(k, self.p));
        }
        out.phase = (m - self.phase + self.omega_units(self_sum)) % m;
        out
    }

    /// Relabels every site `x -> x + by`.
    pub fn translate(&self, by: &[i64]) -> Self {
        let mut out = PauliProduct::identity(self.p, self.rank);
        out.phase = self.phase;
        for (x, &rk) in &self.sites {
            let y: Exponent = x.iter().zip(by).map(|(a, b)| a + b).collect();
            out.sites.insert(y, rk);
        }
        out
    }

    pub fn from_vector(xi: &PhaseVector) -> Self {
        let mut out = PauliProduct::identity(xi.prime(), xi.rank());
        for (x, r) in xi.plus.terms() {
            out.set_site(x.clone(), r, 0);
        }
        for (x, k) in xi.minus.terms() {
            let (r, _) = out.site(x);
            out.set_site(x.clone(), r, k);
        }
        out
    }

    /// Drops the phase.
    pub fn to_vector(&self) -> PhaseVector {
        let plus = LaurentPoly::from_terms(
            self.p,
            self.rank,
            self.sites.iter().map(|(x, &(r, _))| (x.clone(), r as i64)),
        );
        let minus = LaurentPoly::from_terms(
            self.p,
            self.rank,
            self.sites.iter().map(|(x, &(_, k))| (x.clone(), k as i64)),
        );
        PhaseVector { plus, minus }
    }

    /// Parses the Pauli string format.
    ///
    /// ```text
    /// string := [phase] token* | 'I'
    /// phase  := 'i^' int (p = 2) | 'w^' int (odd p)
    /// token  := ('X' | 'Y' | 'Z' | 'W(' int ',' int ')') '_' site
    /// site   := int | '(' int (',' int)* ')'
    /// ```
    ///
    /// Tokens are multiplied left to right as operators. `Y = i X Z` and is
    /// only accepted for p = 2.
    pub fn parse(text: &str, p: u32, rank: usize) -> Result<Self> {
        check_prime(p)?;
        let mut out = PauliProduct::identity(p, rank);
        let mut cur = Cursor::new(text);
        let m = phase_modulus(p);
        let phase_letter = if p == 2 { b'i' } else { b'w' };
        if cur.peek() == Some(phase_letter) {
            cur.pos += 1;
            if !cur.eat(b'^') {
                return Err(Error::parse(cur.pos, "expected '^' after phase symbol"));
            }
            out.phase = reduce_i64(cur.integer()?, m);
        }
        if cur.peek() == Some(b'I') {
            cur.pos += 1;
            if !cur.at_end() {
                return Err(Error::parse(cur.pos, "unexpected input after identity 'I'"));
            }
            return Ok(out);
        }
        while !cur.at_end() {
            let start = cur.pos;
            let letter = cur.peek().expect("not at end");
            cur.pos += 1;
            let (r, k, extra) = match letter {
                b'X' => (1, 0, 0),
                b'Z' => (0, 1, 0),
                b'Y' if p == 2 => (1, 1, 1),
                b'W' => {
                    if !cur.eat(b'(') {
                        return Err(Error::parse(cur.pos, "expected '(' after W"));
                    }
                    let r = cur.integer()?;
                    if !cur.eat(b',') {
                        return Err(Error::parse(cur.pos, "expected ','"));
                    }
                    let k = cur.integer()?;
                    if !cur.eat(b')') {
                        return Err(Error::parse(cur.pos, "expected ')'"));
                    }
                    (r, k, 0)
                }
                _ => {
                    return Err(Error::parse(
                        start,
                        format!("unknown Pauli token '{}'", letter as char),
                    ))
                }
            };
            if !cur.eat(b'_') {
                return Err(Error::parse(cur.pos, "expected '_' before site"));
            }
            let site = parse_site(&mut cur, rank)?;
            let factor = PauliProduct::single(p, site, r, k).with_phase(extra);
            out = out.multiply(&factor)?;
        }
        Ok(out)
    }
}

fn parse_site(cur: &mut Cursor<'_>, rank: usize) -> Result<Exponent> {
    let start = cur.pos;
    let mut site = Vec::with_capacity(rank);
    if cur.eat(b'(') {
        loop {
            site.push(cur.integer()?);
            if cur.eat(b')') {
                break;
            }
            if !cur.eat(b',') {
                return Err(Error::parse(cur.pos, "expected ',' or ')' in site"));
            }
        }
    } else {
        site.push(cur.integer()?);
    }
    if site.len() != rank {
        return Err(Error::parse(
            start,
            format!("site has {} coordinates, lattice rank is {rank}", site.len()),
        ));
    }
    Ok(site)
}

fn fmt_site(x: &[i64]) -> String {
    if x.len() == 1 {
        x[0].to_string()
    } else {
        let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for PauliProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = phase_modulus(self.p);
        let mut tokens = Vec::with_capacity(self.sites.len());
        let mut phase = self.phase;
        for (x, &(r, k)) in &self.sites {
            let site = fmt_site(x);
            let tok = if self.p == 2 {
                match (r, k) {
                    (1, 0) => format!("X_{site}"),
                    (0, 1) => format!("Z_{site}"),
                    _ => {
                        phase = sub_mod(phase, 1, m);
                        format!("Y_{site}")
                    }
                }
            } else {
                format!("W({r},{k})_{site}")
            };
            tokens.push(tok);
        }
        let symbol = if self.p == 2 { "i" } else { "w" };
        match (phase, tokens.is_empty()) {
            (0, true) => f.write_str("I"),
            (0, false) => f.write_str(&tokens.join(" ")),
            (n, true) => write!(f, "{symbol}^{n} I"),
            (n, false) => write!(f, "{symbol}^{n} {}", tokens.join(" ")),
        }
    }
}

/// `σ(ξ, η) = Σ_x ξ+(x) η-(x) - ξ-(x) η+(x)`; `w(η) w(ξ) = ω^σ w(ξ) w(η)`.
pub fn commutation_phase(a: &PauliProduct, b: &PauliProduct) -> Result<FieldElement> {
    a.check_compatible(b)?;
    let p = a.p;
    let s = a.sites.iter().fold(0, |acc, (x, &(r1, k1))| {
        let (r2, k2) = b.site(x);
        add_mod(acc, sub_mod(mul_mod(r1, k2, p), mul_mod(k1, r2, p), p), p)
    });
    Ok(FieldElement::new(s as i64, p))
}

pub fn weyl_multiply(a: &PauliProduct, b: &PauliProduct) -> Result<PauliProduct> {
    a.multiply(b)
}

pub fn vector_to_pauli(xi: &PhaseVector) -> PauliProduct {
    PauliProduct::from_vector(xi)
}

pub fn pauli_to_vector(a: &PauliProduct) -> PhaseVector {
    a.to_vector()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_products() {
        let x0 = PauliProduct::parse("X_0", 2, 1).unwrap();
        let z0 = PauliProduct::parse("Z_0", 2, 1).unwrap();
        let xz = x0.multiply(&z0).unwrap();
        assert_eq!(xz.site(&[0]), (1, 1));
        assert_eq!(xz.phase_exp(), 0);
        let zx = z0.multiply(&x0).unwrap();
        assert_eq!(zx.site(&[0]), (1, 1));
        assert_eq!(zx.phase_exp(), 2);
        // Y = i X Z.
        let y = PauliProduct::parse("Y_0", 2, 1).unwrap();
        assert_eq!(y.phase_exp(), 1);
        assert_eq!(y.to_string(), "Y_0");
        assert!(y.multiply(&y).unwrap().is_identity());
    }

    #[test]
    fn commutation_examples() {
        let p = |s: &str| PauliProduct::parse(s, 2, 1).unwrap();
        assert!(commutation_phase(&p("X_0"), &p("Z_1")).unwrap().is_zero());
        assert_eq!(commutation_phase(&p("X_0"), &p("Z_0")).unwrap().value(), 1);
        let c = p("Z_-1 X_0 Z_1");
        assert!(commutation_phase(&c, &c.translate(&[1])).unwrap().is_zero());
    }

    #[test]
    fn vector_round_trip() {
        let xi2 = PhaseVector::new(LaurentPoly::one(2, 1), LaurentPoly::symmetric(2, 1)).unwrap();
        let w = vector_to_pauli(&xi2);
        assert_eq!(w.to_string(), "Z_-1 X_0 Z_1");
        assert_eq!(pauli_to_vector(&w), xi2);
        assert!(vector_to_pauli(&PhaseVector::zero(2, 1)).is_identity());
    }

    #[test]
    fn text_forms() {
        let a = PauliProduct::parse("w^2 W(1,2)_(0,1) W(0,1)_(-1,3)", 3, 2).unwrap();
        assert_eq!(a.phase_exp(), 2);
        assert_eq!(a.to_string(), "w^2 W(0,1)_(-1,3) W(1,2)_(0,1)");
        assert_eq!(PauliProduct::parse(&a.to_string(), 3, 2).unwrap(), a);
        let b = PauliProduct::parse("i^3 I", 2, 1).unwrap();
        assert_eq!(b.to_string(), "i^3 I");
        assert!(PauliProduct::parse("Y_0", 3, 1).is_err());
        assert!(PauliProduct::parse("X_(0,1)", 2, 1).is_err());
        assert!(matches!(
            PauliProduct::parse("X_0 Q_1", 2, 1),
            Err(Error::Parse { offset: 4, .. })
        ));
    }
}
