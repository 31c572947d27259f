//! JSON input formats: code descriptions, mixing-matrix descriptions, and
//! matrix-product spec files, resolved into domain objects with validation.
//!
//! A code is either cyclic (`{"type":"cyclic","n":12,"gen":"x+1"}`) or given
//! by an explicit generator matrix of element strings
//! (`{"n":2,"gen":[["1","1"]]}`). A matrix is one of
//! `{"type":"character","r":2}`, `{"type":"rows","rows":[[..]]}`,
//! `{"type":"double_odd"}`, `{"type":"double_char2"}`,
//! `{"type":"triple_binary"}`.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Mat;
use crate::mproduct::{character_matrix, MPSpec};
use crate::poly::Poly;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeSpecJson {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    /// Field descriptor; optional when the context supplies one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub n: usize,
    /// Cyclic: a generator polynomial string. Explicit: array of rows of
    /// element strings.
    pub gen: serde_json::Value,
}

impl CodeSpecJson {
    pub fn resolve(&self, context_field: Option<&Field>) -> Result<(Field, LinearCode)> {
        let field = match (&self.field, context_field) {
            (Some(desc), _) => Field::parse(desc)?,
            (None, Some(f)) => f.clone(),
            (None, None) => {
                return Err(Error::Schema("code spec needs a field descriptor".into()))
            }
        };
        let code = match self.kind.as_deref() {
            Some("cyclic") => {
                let gen_str = self.gen.as_str().ok_or_else(|| {
                    Error::Schema("cyclic code needs a generator polynomial string".into())
                })?;
                let g = Poly::parse(&field, gen_str)?;
                CyclicCode::new(&field, self.n, &g)?.code()
            }
            None => {
                let rows_json = self.gen.as_array().ok_or_else(|| {
                    Error::Schema("explicit code needs an array of generator rows".into())
                })?;
                let mut rows = Vec::with_capacity(rows_json.len());
                for row in rows_json {
                    let row = row.as_array().ok_or_else(|| {
                        Error::Schema("generator rows must be arrays of element strings".into())
                    })?;
                    if row.len() != self.n {
                        return Err(Error::Schema(format!(
                            "generator row has {} entries, expected n = {}",
                            row.len(),
                            self.n
                        )));
                    }
                    let mut out = Vec::with_capacity(row.len());
                    for e in row {
                        let s = e.as_str().ok_or_else(|| {
                            Error::Schema("matrix entries must be element strings".into())
                        })?;
                        out.push(field.parse_elem(s)?);
                    }
                    rows.push(out);
                }
                if rows.is_empty() {
                    LinearCode::zero_code(&field, self.n)
                } else {
                    LinearCode::from_generator(&field, &Mat::from_rows(rows)?)
                }
            }
            Some(other) => {
                return Err(Error::Schema(format!("unknown code type `{other}`")));
            }
        };
        Ok((field, code))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MatrixSpecJson {
    /// Sylvester-type character table of size 2^r.
    Character { r: u32 },
    /// Explicit rows of element strings.
    Rows { rows: Vec<Vec<String>> },
    /// `[[1,1],[1,p-1]]`, odd characteristic.
    DoubleOdd,
    /// `[[1,1],[0,1]]`, characteristic 2.
    DoubleChar2,
    /// The fixed binary 3x3 matrix `[[1,0,1],[1,1,0],[1,1,1]]`.
    TripleBinary,
}

impl MatrixSpecJson {
    pub fn resolve(&self, field: &Field) -> Result<Mat> {
        match self {
            MatrixSpecJson::Character { r } => character_matrix(field, *r),
            MatrixSpecJson::Rows { rows } => {
                let mut out = Vec::with_capacity(rows.len());
                for row in rows {
                    let mut r = Vec::with_capacity(row.len());
                    for e in row {
                        r.push(field.parse_elem(e)?);
                    }
                    out.push(r);
                }
                Mat::from_rows(out)
            }
            MatrixSpecJson::DoubleOdd => {
                if field.p() == 2 {
                    return Err(Error::WrongCharacteristic(
                        "double_odd needs odd characteristic".into(),
                    ));
                }
                Ok(Mat::from_ints(field, &[&[1, 1], &[1, -1]]))
            }
            MatrixSpecJson::DoubleChar2 => {
                if field.p() != 2 {
                    return Err(Error::WrongCharacteristic(
                        "double_char2 needs characteristic 2".into(),
                    ));
                }
                Ok(Mat::from_ints(field, &[&[1, 1], &[0, 1]]))
            }
            MatrixSpecJson::TripleBinary => {
                if field.p() != 2 || field.m() != 1 {
                    return Err(Error::WrongCharacteristic(
                        "triple_binary is defined over F_2".into(),
                    ));
                }
                Ok(Mat::from_ints(field, &[&[1, 0, 1], &[1, 1, 0], &[1, 1, 1]]))
            }
        }
    }
}

/// A matrix-product construction: shared field, component codes, matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MpSpecJson {
    pub field: String,
    pub codes: Vec<CodeSpecJson>,
    pub matrix: MatrixSpecJson,
}

impl MpSpecJson {
    pub fn resolve(&self) -> Result<(Field, MPSpec)> {
        let field = Field::parse(&self.field)?;
        let mut components = Vec::with_capacity(self.codes.len());
        for c in &self.codes {
            let (_, code) = c.resolve(Some(&field))?;
            components.push(code);
        }
        let matrix = self.matrix.resolve(&field)?;
        Ok((field.clone(), MPSpec::new(components, matrix)?))
    }

    pub fn from_path(path: &std::path::Path) -> Result<MpSpecJson> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolve_cyclic_and_explicit_codes() {
        let spec: CodeSpecJson =
            serde_json::from_str(r#"{"type":"cyclic","field":"5^1","n":12,"gen":"x+1"}"#).unwrap();
        let (field, code) = spec.resolve(None).unwrap();
        assert_eq!(field.q(), 5);
        assert_eq!((code.len(), code.dim()), (12, 11));

        let spec: CodeSpecJson =
            serde_json::from_str(r#"{"field":"5^1","n":2,"gen":[["1","1"],["2","2"]]}"#).unwrap();
        let (_, code) = spec.resolve(None).unwrap();
        assert_eq!((code.len(), code.dim()), (2, 1));

        // context field fills in when missing
        let spec: CodeSpecJson =
            serde_json::from_str(r#"{"type":"cyclic","n":2,"gen":"x+1"}"#).unwrap();
        assert!(spec.resolve(None).is_err());
        let f5 = Field::new(5, 1).unwrap();
        assert!(spec.resolve(Some(&f5)).is_ok());
    }

    #[test]
    fn resolve_full_mp_spec() {
        let text = r#"{
            "field": "5^1",
            "codes": [
                {"type":"cyclic","n":12,"gen":"x+1"},
                {"type":"cyclic","n":12,"gen":"x+1"},
                {"type":"cyclic","n":12,"gen":"x+1"},
                {"type":"cyclic","n":12,"gen":"(x+1)(x^2+2*x+4)(x^2+3*x+4)"}
            ],
            "matrix": {"type":"character","r":2}
        }"#;
        let spec: MpSpecJson = serde_json::from_str(text).unwrap();
        let (_, mp) = spec.resolve().unwrap();
        let code = crate::mproduct::mp_code(&mp).unwrap();
        assert_eq!((code.len(), code.dim()), (48, 40));
    }

    #[test]
    fn schema_errors_are_reported() {
        let bad: CodeSpecJson =
            serde_json::from_str(r#"{"type":"weird","field":"5^1","n":2,"gen":"x"}"#).unwrap();
        assert!(bad.resolve(None).is_err());

        let bad: CodeSpecJson =
            serde_json::from_str(r#"{"field":"5^1","n":3,"gen":[["1","1"]]}"#).unwrap();
        assert!(bad.resolve(None).is_err(), "row length must equal n");

        let m: MatrixSpecJson = serde_json::from_str(r#"{"type":"character","r":2}"#).unwrap();
        assert!(m.resolve(&Field::new(2, 1).unwrap()).is_err());
        let m: MatrixSpecJson = serde_json::from_str(r#"{"type":"triple_binary"}"#).unwrap();
        assert!(m.resolve(&Field::new(5, 1).unwrap()).is_err());
    }
}
