use serde::{Deserialize, Serialize};

use super::{BracketEntry, BracketTable, LieAlgebraSpec};
use crate::error::Result;
use crate::poly::parse_rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub gen: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub value: Vec<TermJson>,
}

/// On-disk form of a [`LieAlgebraSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub name: String,
    pub dim: usize,
    pub brackets: Vec<BracketJson>,
}

impl SpecJson {
    pub fn into_spec(self) -> Result<LieAlgebraSpec> {
        let mut table = BracketTable::new();
        for b in self.brackets {
            let value = b
                .value
                .iter()
                .map(|t| Ok((t.gen, parse_rational(&t.coeff)?)))
                .collect::<Result<Vec<_>>>()?;
            table.entries.push(BracketEntry { i: b.i, j: b.j, value });
        }
        Ok(LieAlgebraSpec::new(self.name, self.dim, table))
    }
}

impl From<&LieAlgebraSpec> for SpecJson {
    fn from(spec: &LieAlgebraSpec) -> Self {
        let mut brackets: Vec<BracketJson> = spec
            .brackets
            .entries
            .iter()
            .map(|e| BracketJson {
                i: e.i,
                j: e.j,
                value: e
                    .value
                    .iter()
                    .map(|(g, c)| TermJson {
                        coeff: c.to_string(),
                        gen: *g,
                    })
                    .collect(),
            })
            .collect();
        brackets.sort_by(|a, b| (a.i, a.j).cmp(&(b.i, b.j)));
        SpecJson {
            name: spec.name.clone(),
            dim: spec.dim,
            brackets,
        }
    }
}

impl LieAlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<SpecJson>(text)?.into_spec()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SpecJson::from(self)).expect("spec serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{builtin, validate, CATALOG};

    #[test]
    fn catalog_round_trips() {
        for name in CATALOG {
            let spec = builtin(name).unwrap().spec().clone();
            let back = LieAlgebraSpec::from_json(&spec.to_json()).unwrap();
            assert_eq!(back, spec);
        }
    }

    #[test]
    fn parses_documented_schema() {
        let text = r#"{"name": "h", "dim": 3,
            "brackets": [{"i": 3, "j": 2, "value": [{"coeff": "-1", "gen": 1}]}]}"#;
        let spec = LieAlgebraSpec::from_json(text).unwrap();
        assert_eq!(spec, builtin("n3_1").unwrap().spec().clone().renamed("h"));
    }

    #[test]
    fn fractional_coefficients() {
        let text = r#"{"name": "q", "dim": 2,
            "brackets": [{"i": 2, "j": 1, "value": [{"coeff": "3/6", "gen": 1}]}]}"#;
        let spec = LieAlgebraSpec::from_json(text).unwrap();
        assert!(validate(&spec).ok);
        assert!(spec.to_json().contains("\"1/2\""));
    }

    #[test]
    fn bad_coefficient_is_an_error() {
        let text = r#"{"name": "q", "dim": 2,
            "brackets": [{"i": 2, "j": 1, "value": [{"coeff": "1/0", "gen": 1}]}]}"#;
        assert!(LieAlgebraSpec::from_json(text).is_err());
    }

    #[test]
    fn illegal_keys_load_but_fail_validation() {
        let text = r#"{"name": "q", "dim": 2,
            "brackets": [{"i": 1, "j": 2, "value": [{"coeff": "1", "gen": 1}]}]}"#;
        let spec = LieAlgebraSpec::from_json(text).unwrap();
        assert!(!validate(&spec).ok);
    }
}
