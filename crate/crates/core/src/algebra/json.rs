//! JSON algebra format:
//!
//! ```json
//! {"dim": 3, "basis": ["e-", "h", "e+"], "flavor": "lie", "grading": null,
//!  "table": [[0, 1, [[0, "-1/1"]]], ...]}
//! ```
//!
//! Omitted `(i, j)` pairs are zero products. Rationals are `"p/q"` strings.

use serde::{Deserialize, Serialize};

use super::{make_algebra, AlgebraSpec, Flavor, RawAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{format_scalar, parse_scalar};

/// `(i, j, [(k, coefficient)])`: the product of basis elements i and j.
pub type JsonProduct = (usize, usize, Vec<(usize, String)>);

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub flavor: String,
    #[serde(default)]
    pub grading: Option<Vec<i64>>,
    pub table: Vec<JsonProduct>,
}

impl AlgebraJson {
    pub fn from_algebra(alg: &AlgebraSpec) -> Self {
        let n = alg.dim();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = alg.product(i, j);
                if !p.is_empty() {
                    table.push((
                        i,
                        j,
                        p.iter().map(|(k, c)| (*k, format_scalar(c))).collect(),
                    ));
                }
            }
        }
        Self {
            name: Some(alg.name().to_string()),
            dim: n,
            basis: alg.basis_names().to_vec(),
            flavor: alg.flavor().as_str().to_string(),
            grading: alg.grading().map(<[i64]>::to_vec),
            table,
        }
    }

    pub fn into_algebra(self) -> Result<AlgebraSpec> {
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: self.basis.len(),
            });
        }
        let mut raw = RawAlgebra::new(
            self.name.unwrap_or_else(|| "custom".into()),
            self.basis,
            Flavor::parse(&self.flavor)?,
        );
        raw.grading = self.grading;
        for (i, j, prod) in self.table {
            let prod = prod
                .into_iter()
                .map(|(k, q)| Ok((k, parse_scalar(&q)?)))
                .collect::<Result<Vec<_>>>()?;
            raw.set(i, j, prod);
        }
        make_algebra(raw)
    }
}

pub fn algebra_to_json(alg: &AlgebraSpec) -> serde_json::Value {
    serde_json::to_value(AlgebraJson::from_algebra(alg)).expect("algebra serializes")
}

pub fn algebra_from_json_str(s: &str) -> Result<AlgebraSpec> {
    let j: AlgebraJson = serde_json::from_str(s)?;
    j.into_algebra()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra_name;

    #[test]
    fn roundtrip_builtins() {
        for name in ["sl2", "heisenberg", "trunc_poly3", "sp4"] {
            let a = parse_algebra_name(name).unwrap();
            let text = serde_json::to_string(&algebra_to_json(&a)).unwrap();
            assert_eq!(algebra_from_json_str(&text).unwrap(), a);
        }
    }

    #[test]
    fn literal_document() {
        let doc = r#"{"dim": 2, "basis": ["x", "y"], "flavor": "lie", "grading": null,
                      "table": [[0, 1, [[0, "1/1"]]], [1, 0, [[0, "-1"]]]]}"#;
        let a = algebra_from_json_str(doc).unwrap();
        assert_eq!(a.product_vec(0, 1), a.unit(0));
    }

    #[test]
    fn rejects_bad_documents() {
        let not_lie =
            r#"{"dim": 1, "basis": ["x"], "flavor": "lie", "table": [[0, 0, [[0, "1/1"]]]]}"#;
        assert!(matches!(
            algebra_from_json_str(not_lie),
            Err(Error::LawViolation { .. })
        ));
        let bad_q =
            r#"{"dim": 1, "basis": ["x"], "flavor": "unchecked", "table": [[0, 0, [[0, "1/0"]]]]}"#;
        assert!(matches!(algebra_from_json_str(bad_q), Err(Error::Parse(_))));
        let bad_dim = r#"{"dim": 2, "basis": ["x"], "flavor": "lie", "table": []}"#;
        assert!(algebra_from_json_str(bad_dim).is_err());
    }
}
