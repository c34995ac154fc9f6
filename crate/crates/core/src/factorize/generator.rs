use std::fmt;

use crate::automaton::ScaMatrix;
use crate::error::{Error, Result};
use crate::ring::{FieldElement, HalfLatticePoint, LaurentPoly};

/// A univariate shear `G(f) = [[1,0],[f,1]]` or local Fourier transform
/// `F(c) = [[0,-1/c],[c,0]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    Shear(LaurentPoly),
    Fourier(FieldElement),
}

impl Generator {
    pub fn shear(f: LaurentPoly) -> Result<Self> {
        if f.rank() != 1 {
            return Err(Error::Domain("shears are univariate".into()));
        }
        if !f.is_reflection_invariant(&HalfLatticePoint::origin(1)) {
            return Err(Error::Domain(format!(
                "shear polynomial {f} is not reflection invariant"
            )));
        }
        Ok(Generator::Shear(f))
    }

    pub fn fourier(c: FieldElement) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Domain("Fourier parameter must be nonzero".into()));
        }
        Ok(Generator::Fourier(c))
    }

    pub fn prime(&self) -> u32 {
        match self {
            Generator::Shear(f) => f.prime(),
            Generator::Fourier(c) => c.modulus(),
        }
    }

    pub fn matrix(&self) -> ScaMatrix {
        match self {
            Generator::Shear(f) => shear_matrix(f).expect("checked at construction"),
            Generator::Fourier(c) => fourier_matrix(*c).expect("checked at construction"),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            Generator::Shear(f) => Generator::Shear(-f),
            Generator::Fourier(c) => Generator::Fourier(-*c),
        }
    }

    /// Parses `G <poly>` or `F <int>`.
    pub fn parse(line: &str, p: u32) -> Result<Self> {
        let line = line.trim();
        let (head, rest) = line.split_at(line.find(char::is_whitespace).unwrap_or(line.len()));
        let lead = line.len() - line.trim_start().len();
        let arg_offset = head.len() + (rest.len() - rest.trim_start().len());
        let shift = |e: Error| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset: lead + head.len() + offset,
                message,
            },
            other => other,
        };
        match head {
            "G" => Generator::shear(LaurentPoly::parse(rest, p, 1).map_err(shift)?),
            "F" => {
                let c: i64 = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(lead + arg_offset, "expected an integer Fourier parameter"))?;
                Generator::fourier(FieldElement::new(c, p))
            }
            _ => Err(Error::parse(0, format!("unknown generator '{head}'"))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Shear(g) => write!(f, "G {g}"),
            Generator::Fourier(c) => write!(f, "F {}", c.value()),
        }
    }
}

/// `G(f) = [[1,0],[f,1]]`: `X ↦ X·w(0,f)`, `Z ↦ Z`.
pub fn shear_matrix(f: &LaurentPoly) -> Result<ScaMatrix> {
    Generator::shear(f.clone())?;
    let (p, one) = (f.prime(), LaurentPoly::one(f.prime(), 1));
    ScaMatrix::new([[one.clone(), LaurentPoly::zero(p, 1)], [f.clone(), one]])
}

/// `F(c) = [[0,-1/c],[c,0]]`; `F(c)^-1 = F(-c)` and `F(1)` swaps X and Z up to sign.
pub fn fourier_matrix(c: FieldElement) -> Result<ScaMatrix> {
    let inv = c
        .inv()
        .ok_or_else(|| Error::Domain("Fourier parameter must be nonzero".into()))?;
    let p = c.modulus();
    let k = |x: FieldElement| LaurentPoly::constant(p, 1, x.value() as i64);
    ScaMatrix::new([
        [LaurentPoly::zero(p, 1), k(-inv)],
        [k(c), LaurentPoly::zero(p, 1)],
    ])
}

/// Ordered factors; the product `factors[0] · factors[1] · …` is the automaton,
/// so the last factor acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSeq {
    p: u32,
    factors: Vec<Generator>,
}

impl GeneratorSeq {
    pub fn new(p: u32, factors: Vec<Generator>) -> Result<Self> {
        crate::ring::check_prime(p)?;
        if let Some(g) = factors.iter().find(|g| g.prime() != p) {
            return Err(Error::Structural(format!("generator {g} is not over F_{p}")));
        }
        Ok(GeneratorSeq { p, factors })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> ScaMatrix {
        self.factors
            .iter()
            .fold(ScaMatrix::identity(self.p, 1), |acc, g| {
                acc.mul(&g.matrix()).expect("same field")
            })
    }

    /// One generator per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, p: u32) -> Result<Self> {
        crate::ring::check_prime(p)?;
        let mut factors = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.trim();
            if !body.is_empty() && !body.starts_with('#') {
                let g = Generator::parse(line, p).map_err(|e| match e {
                    Error::Parse { offset: o, message } => Error::Parse {
                        offset: offset + o,
                        message,
                    },
                    other => other,
                })?;
                factors.push(g);
            }
            offset += line.len();
        }
        GeneratorSeq::new(p, factors)
    }
}

impl fmt::Display for GeneratorSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.factors {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
