use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use spinpair::DensityMatrix;

/// On-disk form of a state: `{"dim": 4, "re": [...], "im": [...], "meta": {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrixFile {
    pub dim: usize,
    pub re: [[f64; 4]; 4],
    pub im: [[f64; 4]; 4],
    #[serde(default)]
    pub meta: BTreeMap<String, Value>,
}

impl DensityMatrixFile {
    pub fn from_state(rho: &DensityMatrix, meta: BTreeMap<String, Value>) -> Self {
        DensityMatrixFile {
            dim: 4,
            re: rho.real_part(),
            im: rho.imag_part(),
            meta,
        }
    }

    pub fn to_state(&self) -> Result<DensityMatrix> {
        if self.dim != 4 {
            bail!("dim must be 4, got {}", self.dim);
        }
        Ok(DensityMatrix::from_parts(&self.re, &self.im)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: DensityMatrixFile = serde_json::from_str(text).context("malformed density-matrix JSON")?;
        file.to_state()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serialises");
        s.push('\n');
        s
    }
}

pub fn load_state(path: &Path) -> Result<(DensityMatrix, DensityMatrixFile)> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let file = DensityMatrixFile::parse(&text).with_context(|| format!("invalid state file {}", path.display()))?;
    Ok((file.to_state()?, file))
}

/// Writes `text` to `path`, or to standard output when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A scalar applied to every element, or a path to a 4x4 JSON array.
pub fn element_errors(spec: &str) -> Result<[[f64; 4]; 4]> {
    if let Ok(v) = spec.parse::<f64>() {
        if !(v.is_finite() && v >= 0.0) {
            bail!("element error must be a non-negative number, got {spec}");
        }
        return Ok([[v; 4]; 4]);
    }
    let text = fs::read_to_string(spec).with_context(|| format!("cannot read element-error file {spec}"))?;
    serde_json::from_str(&text).with_context(|| format!("{spec} is not a 4x4 JSON array of numbers"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use spinpair::fixtures::MEASURED_JSON;

    #[test]
    fn shipped_fixture_round_trips() {
        let file = DensityMatrixFile::parse(MEASURED_JSON).unwrap();
        let again = DensityMatrixFile::parse(&file.to_json()).unwrap();
        assert_eq!(file, again);
        assert_eq!(file.re, spinpair::fixtures::MEASURED_RE);
        assert_eq!(file.im, spinpair::fixtures::MEASURED_IM);
    }

    #[test]
    fn rejects_wrong_dimension_and_bad_states() {
        let mut file = DensityMatrixFile::parse(MEASURED_JSON).unwrap();
        file.dim = 2;
        assert!(DensityMatrixFile::parse(&file.to_json()).is_err());
        file.dim = 4;
        file.re[0][0] = 5.0;
        assert!(DensityMatrixFile::parse(&file.to_json()).is_err());
    }

    #[test]
    fn scalar_element_error() {
        assert_eq!(element_errors("0.01").unwrap(), [[0.01; 4]; 4]);
        assert!(element_errors("-1").is_err());
    }
}
