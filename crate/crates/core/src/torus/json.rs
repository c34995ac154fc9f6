use serde::{Deserialize, Serialize};

use super::lattice::TorusLattice;
use crate::automaton::json_error;
use crate::error::{Error, Result};

/// Torus description: `{"s", "basis", "p"}`, or `{"N"}` for `Z_N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
}

impl TorusDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(text, &e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn lattice(&self) -> Result<TorusLattice> {
        match (self.n, &self.basis) {
            (Some(n), None) => {
                if self.s.is_some_and(|s| s != 1) {
                    return Err(Error::Domain("the N shorthand is one-dimensional".into()));
                }
                TorusLattice::cyclic(n)
            }
            (None, Some(basis)) => {
                if let Some(s) = self.s {
                    if s != basis.len() {
                        return Err(Error::Domain(format!(
                            "s = {s} but {} basis vectors given",
                            basis.len()
                        )));
                    }
                }
                TorusLattice::new(basis.clone())
            }
            (Some(_), Some(_)) => Err(Error::Domain("give either N or basis, not both".into())),
            (None, None) => Err(Error::Domain("torus needs N or basis".into())),
        }
    }
}
