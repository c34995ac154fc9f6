use std::fs;
use std::io::Read;
use std::sync::Arc;

use cqca_core::automaton::AutomatonDoc;
use cqca_core::torus::{TorusDoc, TorusLattice};
use cqca_core::{Cqca, Error, LaurentPoly, PauliProduct, PhaseData, PhaseVector, ScaMatrix};

use crate::args::TorusArgs;
use crate::CliError;

/// Resolves `@path` and `-`; anything else is the text itself.
pub fn load(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

/// Field and rank after reconciling flags with document contents.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub p: u32,
    pub s: usize,
}

impl Shape {
    pub fn from_flags(p: Option<u32>, s: Option<usize>) -> Self {
        Shape {
            p: p.unwrap_or(2),
            s: s.unwrap_or(1),
        }
    }

    fn agree(p: Option<u32>, s: Option<usize>, doc_p: u32, doc_s: usize) -> Result<Self, CliError> {
        if p.is_some_and(|p| p != doc_p) {
            return Err(CliError::Usage(format!("--p {} conflicts with p = {doc_p} in the document", p.unwrap())));
        }
        if s.is_some_and(|s| s != doc_s) {
            return Err(CliError::Usage(format!("--s {} conflicts with s = {doc_s} in the document", s.unwrap())));
        }
        Ok(Shape { p: doc_p, s: doc_s })
    }
}

/// Shifts the offset of a parse error by `by` bytes.
fn relocate(err: Error, by: usize) -> Error {
    match err {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

/// A JSON automaton document, or matrix rows `a, b; c, d` over `--p`/`--s`.
pub fn matrix(
    text: &str,
    p: Option<u32>,
    s: Option<usize>,
) -> Result<(ScaMatrix, Option<PhaseData>, Shape), CliError> {
    if text.trim_start().starts_with('{') {
        let doc = AutomatonDoc::parse(text)?;
        let shape = Shape::agree(p, s, doc.p, doc.s)?;
        return Ok((doc.matrix()?, doc.phases()?, shape));
    }
    let shape = Shape::from_flags(p, s);
    Ok((matrix_rows(text, shape)?, None, shape))
}

pub fn automaton(text: &str, p: Option<u32>, s: Option<usize>) -> Result<(Cqca, Shape), CliError> {
    let (t, phases, shape) = matrix(text, p, s)?;
    let phases = phases.unwrap_or_else(|| PhaseData::default_for(&t));
    Ok((Cqca::new(t, phases)?, shape))
}

fn matrix_rows(text: &str, shape: Shape) -> Result<ScaMatrix, CliError> {
    let mut entries = Vec::new();
    let mut start = 0;
    for (r, row) in text.split(';').enumerate() {
        for (c, cell) in row.split(',').enumerate() {
            if r > 1 || c > 1 {
                return Err(Error::Parse {
                    offset: start,
                    message: "expected two rows of two entries".into(),
                }
                .into());
            }
            entries.push(LaurentPoly::parse(cell, shape.p, shape.s).map_err(|e| relocate(e, start))?);
            start += cell.len() + 1;
        }
    }
    let Ok([a, b, c, d]) = <[LaurentPoly; 4]>::try_from(entries) else {
        return Err(Error::Parse {
            offset: text.len(),
            message: "expected two rows of two entries".into(),
        }
        .into());
    };
    Ok(ScaMatrix::new([[a, b], [c, d]])?)
}

pub fn pauli(text: &str, shape: Shape) -> Result<PauliProduct, CliError> {
    Ok(PauliProduct::parse(text.trim(), shape.p, shape.s)?)
}

/// `(plus, minus)` or a Pauli product.
pub fn vector(text: &str, shape: Shape) -> Result<PhaseVector, CliError> {
    let text = text.trim();
    if text.starts_with('(') {
        Ok(PhaseVector::parse(text, shape.p, shape.s)?)
    } else {
        Ok(pauli(text, shape)?.to_vector())
    }
}

/// The torus from `--torus`/`--basis`, with the field and rank it implies.
pub fn torus(
    args: &TorusArgs,
    p: Option<u32>,
    s: Option<usize>,
) -> Result<Option<(Arc<TorusLattice>, Shape)>, CliError> {
    let (lattice, doc_p) = match (args.torus, &args.basis) {
        (Some(n), None) => (TorusLattice::cyclic(n)?, None),
        (None, Some(doc)) => {
            let doc = TorusDoc::parse(&load(doc)?)?;
            (doc.lattice()?, doc.p)
        }
        (None, None) => return Ok(None),
        (Some(_), Some(_)) => return Err(CliError::Usage("--torus and --basis are exclusive".into())),
    };
    let shape = match doc_p {
        Some(doc_p) => Shape::agree(p, s, doc_p, lattice.rank())?,
        None => Shape::agree(None, s, p.unwrap_or(2), lattice.rank())?,
    };
    Ok(Some((Arc::new(lattice), shape)))
}
