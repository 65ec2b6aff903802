//! JSON sequence specs: `{"coefficients": ["1","1"], "initials": ["0","1"]}`.
//!
//! Unknown keys are ignored, so the JSON printed by the subcommands can be
//! fed back through `--spec`.

use std::path::Path;

use lrs_core::rational::parse_rational;
use lrs_core::{CoefficientSet, Rational, SequenceSpec};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecFile {
    pub coefficients: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initials: Option<Vec<Scalar>>,
}

/// Rationals are written as strings; bare JSON integers are accepted too.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Text(String),
    Int(i64),
}

impl Scalar {
    fn parse(&self) -> Result<Rational, CliError> {
        match self {
            Scalar::Text(s) => Ok(parse_rational(s)?),
            Scalar::Int(v) => Ok(Rational::from_integer((*v).into())),
        }
    }
}

impl SpecFile {
    pub fn from_spec(spec: &SequenceSpec) -> Self {
        SpecFile {
            coefficients: strings(spec.coefficients().as_slice()),
            initials: Some(strings(spec.initials())),
        }
    }

    pub fn to_spec(&self) -> Result<SequenceSpec, CliError> {
        let coeffs = self.coefficients.iter().map(Scalar::parse).collect::<Result<Vec<_>, _>>()?;
        let cs = CoefficientSet::new(coeffs)?;
        match &self.initials {
            None => Ok(SequenceSpec::irs(&cs)),
            Some(a) => {
                let a = a.iter().map(Scalar::parse).collect::<Result<Vec<_>, _>>()?;
                Ok(SequenceSpec::new(cs, a)?)
            }
        }
    }

    pub fn read(path: &Path) -> Result<SequenceSpec, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io { path: path.to_path_buf(), message: e.to_string() })?;
        let file: SpecFile = serde_json::from_str(&text).map_err(|e| CliError::SpecFile(e.to_string()))?;
        file.to_spec()
    }
}

fn strings(v: &[Rational]) -> Vec<Scalar> {
    v.iter().map(|q| Scalar::Text(q.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let spec = SequenceSpec::from_integers(&[1, 1, 1], &[2, 1, 1]).unwrap();
        let json = serde_json::to_string(&SpecFile::from_spec(&spec)).unwrap();
        assert_eq!(json, r#"{"coefficients":["1","1","1"],"initials":["2","1","1"]}"#);
        let back: SpecFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_spec().unwrap(), spec);
    }

    #[test]
    fn missing_initials_give_the_irs() {
        let file: SpecFile = serde_json::from_str(r#"{"coefficients":["1/2", 3], "extra": true}"#).unwrap();
        let spec = file.to_spec().unwrap();
        assert!(spec.is_irs());
        assert_eq!(spec.coefficients().p(1), &lrs_core::rational::frac(1, 2));
    }

    #[test]
    fn bad_rational() {
        let file: SpecFile = serde_json::from_str(r#"{"coefficients":["1/0"]}"#).unwrap();
        assert_eq!(file.to_spec().unwrap_err().code(), "parse-rational");
    }
}
