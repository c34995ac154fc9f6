//! Text grammar for Laurent polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coeff ['*' mono] | mono
//! mono   := var ['^' int] ('*' var ['^' int])*
//! var    := 'u' (rank 1) | 'u' digit+ (rank > 1, 1-based)
//! coeff  := digit+
//! int    := ['-'] digit+
//! ```

use std::fmt;

use super::field::{check_prime, mul_mod, neg_mod};
use super::poly::{Exponent, LaurentPoly};
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    pub(crate) src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Option<(usize, &'a [u8])> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, &self.src[start..self.pos]))
    }

    /// Unsigned decimal literal reduced modulo `p`.
    pub(crate) fn natural_mod(&mut self, p: u32) -> Result<u32> {
        let (_, ds) = self
            .digits()
            .ok_or_else(|| Error::parse(self.pos, "expected digits"))?;
        Ok(ds.iter().fold(0u32, |acc, d| {
            ((acc as u64 * 10 + (d - b'0') as u64) % p as u64) as u32
        }))
    }

    pub(crate) fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.eat(b'-');
        let (_, ds) = self
            .digits()
            .ok_or_else(|| Error::parse(self.pos, "expected integer"))?;
        let text = std::str::from_utf8(ds).expect("ascii digits");
        let magnitude: i64 = text
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))?;
        Ok(if negative { -magnitude } else { magnitude })
    }
}

fn parse_var(cur: &mut Cursor<'_>, rank: usize) -> Result<usize> {
    cur.skip_ws();
    let start = cur.pos;
    if !cur.eat(b'u') {
        return Err(Error::parse(start, "expected variable"));
    }
    // Digits must follow 'u' immediately to form a variable name.
    let idx_start = cur.pos;
    while cur.pos < cur.src.len() && cur.src[cur.pos].is_ascii_digit() {
        cur.pos += 1;
    }
    let suffix = &cur.src[idx_start..cur.pos];
    let name = String::from_utf8_lossy(&cur.src[start..cur.pos]).into_owned();
    match (rank, suffix.is_empty()) {
        (1, true) => Ok(0),
        (1, false) => Err(Error::parse(start, format!("unknown variable '{name}'"))),
        (_, true) => Err(Error::parse(
            start,
            format!("variable needs a direction index in rank {rank}"),
        )),
        (_, false) => {
            let k: usize = std::str::from_utf8(suffix)
                .expect("ascii")
                .parse()
                .map_err(|_| Error::parse(start, format!("unknown variable '{name}'")))?;
            if k == 0 || k > rank {
                Err(Error::parse(start, format!("unknown variable '{name}'")))
            } else {
                Ok(k - 1)
            }
        }
    }
}

fn parse_mono(cur: &mut Cursor<'_>, rank: usize) -> Result<Exponent> {
    let mut exp = vec![0i64; rank];
    loop {
        let k = parse_var(cur, rank)?;
        let e = if cur.eat(b'^') { cur.integer()? } else { 1 };
        exp[k] += e;
        // A '*' continues the monomial only when a variable follows.
        let save = cur.pos;
        if cur.eat(b'*') && cur.peek() == Some(b'u') {
            continue;
        }
        cur.pos = save;
        return Ok(exp);
    }
}

fn parse_term(cur: &mut Cursor<'_>, p: u32, rank: usize) -> Result<(Exponent, u32)> {
    match cur.peek() {
        Some(b) if b.is_ascii_digit() => {
            let c = cur.natural_mod(p)?;
            if cur.eat(b'*') {
                let exp = parse_mono(cur, rank)?;
                Ok((exp, c))
            } else {
                Ok((vec![0; rank], c))
            }
        }
        Some(b'u') => Ok((parse_mono(cur, rank)?, 1 % p)),
        _ => Err(Error::parse(cur.pos, "expected coefficient or variable")),
    }
}

impl LaurentPoly {
    /// Parses the polynomial grammar over F_p in `rank` variables.
    pub fn parse(text: &str, p: u32, rank: usize) -> Result<Self> {
        check_prime(p)?;
        if rank == 0 {
            return Err(Error::Domain("rank must be at least 1".into()));
        }
        let mut cur = Cursor::new(text);
        let out = parse_poly(&mut cur, p, rank)?;
        if !cur.at_end() {
            return Err(Error::parse(cur.pos, "unexpected trailing input"));
        }
        Ok(out)
    }
}

pub(crate) fn parse_poly(cur: &mut Cursor<'_>, p: u32, rank: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(p, rank);
    let mut sign_negative = cur.eat(b'-');
    loop {
        let (exp, c) = parse_term(cur, p, rank)?;
        let c = if sign_negative { neg_mod(c, p) } else { c };
        out.add_term(exp, mul_mod(c, 1, p));
        if cur.eat(b'+') {
            sign_negative = false;
        } else if cur.eat(b'-') {
            sign_negative = true;
        } else {
            return Ok(out);
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: ascending lexicographic exponents, coefficients in `[1, p)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(k, &e)| {
                    let name = if self.rank() == 1 {
                        "u".to_string()
                    } else {
                        format!("u{}", k + 1)
                    };
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            match (vars.is_empty(), c) {
                (true, _) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{}", vars.join("*"))?,
                (false, _) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}
