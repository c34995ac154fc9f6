use serde::{Deserialize, Serialize};

use super::matrix::ScaMatrix;
use super::phase::{Cqca, PhaseData};
use crate::error::{Error, Result};
use crate::phasespace::phase_modulus;
use crate::ring::{check_prime, LaurentPoly};

/// Serialized automaton: `{"p", "s", "entries", "base_phase_X", "base_phase_Z"}`.
///
/// Entries are row-major polynomial strings. Base phases may be omitted on
/// input and are always written on output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDoc {
    pub p: u32,
    pub s: usize,
    pub entries: [[String; 2]; 2],
    #[serde(rename = "base_phase_X", default, skip_serializing_if = "Option::is_none")]
    pub base_phase_x: Option<i64>,
    #[serde(rename = "base_phase_Z", default, skip_serializing_if = "Option::is_none")]
    pub base_phase_z: Option<i64>,
}

/// Maps a serde_json error position to a byte offset.
pub(crate) fn json_error(text: &str, err: &serde_json::Error) -> Error {
    let offset = text
        .split_inclusive('\n')
        .take(err.line().saturating_sub(1))
        .map(str::len)
        .sum::<usize>()
        + err.column().saturating_sub(1);
    Error::parse(offset, err.to_string())
}

impl AutomatonDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(text, &e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_matrix(t: &ScaMatrix, phase: Option<PhaseData>) -> Self {
        AutomatonDoc {
            p: t.prime(),
            s: t.rank(),
            entries: t.entries().clone().map(|row| row.map(|e| e.to_string())),
            base_phase_x: phase.map(|d| d.base_phase_x as i64),
            base_phase_z: phase.map(|d| d.base_phase_z as i64),
        }
    }

    pub fn from_cqca(c: &Cqca) -> Self {
        AutomatonDoc::from_matrix(c.matrix(), Some(c.phases()))
    }

    /// The matrix, without checking validity.
    pub fn matrix(&self) -> Result<ScaMatrix> {
        check_prime(self.p)?;
        if self.s == 0 {
            return Err(Error::Domain("lattice rank s must be at least 1".into()));
        }
        let mut rows = Vec::with_capacity(2);
        for (i, row) in self.entries.iter().enumerate() {
            let mut cells = Vec::with_capacity(2);
            for (j, text) in row.iter().enumerate() {
                let f = LaurentPoly::parse(text, self.p, self.s).map_err(|e| match e {
                    Error::Parse { offset, message } => Error::Parse {
                        offset,
                        message: format!("entry t{}{}: {message}", i + 1, j + 1),
                    },
                    other => other,
                })?;
                cells.push(f);
            }
            let [a, b]: [LaurentPoly; 2] = cells.try_into().expect("two cells");
            rows.push([a, b]);
        }
        let [r0, r1]: [[LaurentPoly; 2]; 2] = rows.try_into().expect("two rows");
        ScaMatrix::new([r0, r1])
    }

    /// Declared base phases, if both are present.
    pub fn phases(&self) -> Result<Option<PhaseData>> {
        let m = phase_modulus(self.p) as i64;
        let check = |name: &str, v: i64| -> Result<u32> {
            if (0..m).contains(&v) {
                Ok(v as u32)
            } else {
                Err(Error::Domain(format!("{name} = {v} is outside 0..{m}")))
            }
        };
        match (self.base_phase_x, self.base_phase_z) {
            (None, None) => Ok(None),
            (Some(x), Some(z)) => Ok(Some(PhaseData {
                base_phase_x: check("base_phase_X", x)?,
                base_phase_z: check("base_phase_Z", z)?,
            })),
            _ => Err(Error::Domain(
                "base_phase_X and base_phase_Z must be given together".into(),
            )),
        }
    }

    /// A validated automaton, filling in default phases if none were given.
    pub fn cqca(&self) -> Result<Cqca> {
        let t = self.matrix()?;
        match self.phases()? {
            Some(ph) => Cqca::new(t, ph),
            None => Cqca::with_default_phases(t),
        }
    }
}

impl Cqca {
    pub fn from_json(text: &str) -> Result<Self> {
        AutomatonDoc::parse(text)?.cqca()
    }

    pub fn to_json(&self) -> String {
        AutomatonDoc::from_cqca(self).to_json()
    }
}
