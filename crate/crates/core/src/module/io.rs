//! JSON module files. All matrix entries are exact `"p/q"` strings, row-major.

use serde::{Deserialize, Serialize};

use super::{Boundary, WeightSpace, WeightWindowModule};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryFile {
    pub lo: Boundary,
    pub hi: Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub dim: usize,
    #[serde(rename = "N")]
    pub nilpotent: Vec<Vec<String>>,
    #[serde(rename = "D")]
    pub down: Vec<Vec<String>>,
    #[serde(rename = "U")]
    pub up: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub base_weight: String,
    pub lo: i64,
    pub hi: i64,
    pub boundary: BoundaryFile,
    pub spaces: Vec<SpaceFile>,
}

impl From<&WeightWindowModule> for ModuleFile {
    fn from(m: &WeightWindowModule) -> Self {
        ModuleFile {
            base_weight: format_rational(m.base_weight()),
            lo: m.lo(),
            hi: m.hi(),
            boundary: BoundaryFile {
                lo: m.lower_boundary(),
                hi: m.upper_boundary(),
            },
            spaces: m
                .spaces()
                .iter()
                .map(|s| SpaceFile {
                    dim: s.dim(),
                    nilpotent: s.nilpotent.to_string_rows(),
                    down: s.down.to_string_rows(),
                    up: s.up.to_string_rows(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&ModuleFile> for WeightWindowModule {
    type Error = Error;

    fn try_from(f: &ModuleFile) -> Result<Self> {
        if f.hi < f.lo || f.spaces.len() as i64 != f.hi - f.lo + 1 {
            return Err(Error::Format(format!(
                "window [{}, {}] does not match {} spaces",
                f.lo,
                f.hi,
                f.spaces.len()
            )));
        }
        let dims: Vec<usize> = f.spaces.iter().map(|s| s.dim).collect();
        let spaces = f
            .spaces
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let below = if k > 0 { dims[k - 1] } else { 0 };
                let above = dims.get(k + 1).copied().unwrap_or(0);
                let at = |e: Error| Error::Format(format!("space {}: {e}", f.lo + k as i64));
                Ok(WeightSpace {
                    nilpotent: Matrix::from_string_rows(&s.nilpotent, s.dim, s.dim).map_err(at)?,
                    down: Matrix::from_string_rows(&s.down, below, s.dim).map_err(at)?,
                    up: Matrix::from_string_rows(&s.up, above, s.dim).map_err(at)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let base = parse_rational(&f.base_weight).map_err(|e| Error::Format(e.to_string()))?;
        WeightWindowModule::from_parts(base, f.lo, f.boundary.lo, f.boundary.hi, spaces)
            .map_err(|e| Error::Format(e.to_string()))
    }
}

impl WeightWindowModule {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ModuleFile::from(self)).expect("module files always serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModuleFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        WeightWindowModule::try_from(&file)
    }
}
