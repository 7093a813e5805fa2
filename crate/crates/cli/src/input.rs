use std::path::Path;

use higgs_cover::cover::{BasePoly, BaseTerm, ChartFamily};
use higgs_cover::matkernel::Matrix;
use higgs_cover::C64;
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    n: usize,
    d: usize,
    #[serde(default)]
    matrices: Option<Vec<Vec<Vec<C64>>>>,
    #[serde(default)]
    family: Option<Vec<Vec<Vec<Vec<BaseTerm>>>>>,
    #[serde(default)]
    label: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum InputBody {
    Matrices(Vec<Matrix>),
    Family(ChartFamily),
}

/// A validated input document: either `d` constant `n × n` matrices or a
/// polynomial family over `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct InputDocument {
    pub n: usize,
    pub d: usize,
    pub label: Option<String>,
    pub body: InputBody,
}

fn check_len(field: String, expected: usize, got: usize, what: &str) -> Result<(), CliError> {
    if expected != got {
        return Err(CliError::field(field, format!("expected {expected} {what}, got {got}")));
    }
    Ok(())
}

pub fn parse_input_str(text: &str) -> Result<InputDocument, CliError> {
    let raw: RawInput = serde_json::from_str(text).map_err(|e| {
        CliError::input(format!("malformed input document: {e}"))
    })?;
    let (n, d) = (raw.n, raw.d);
    if n == 0 {
        return Err(CliError::field("n", "n must be at least 1"));
    }
    if d == 0 {
        return Err(CliError::field("d", "d must be at least 1"));
    }
    let body = match (raw.matrices, raw.family) {
        (Some(_), Some(_)) => {
            return Err(CliError::input("exactly one of \"matrices\" and \"family\" may be present"))
        }
        (None, None) => return Err(CliError::input("one of \"matrices\" or \"family\" is required")),
        (Some(ms), None) => {
            check_len("matrices".into(), d, ms.len(), "matrices (d)")?;
            let mut mats = Vec::with_capacity(d);
            for (j, rows) in ms.into_iter().enumerate() {
                check_len(format!("matrices[{j}]"), n, rows.len(), "rows (n)")?;
                let mut data = Vec::with_capacity(n * n);
                for (r, row) in rows.into_iter().enumerate() {
                    check_len(format!("matrices[{j}][{r}]"), n, row.len(), "entries (n)")?;
                    data.extend(row);
                }
                mats.push(
                    Matrix::new(n, n, data)
                        .map_err(|e| CliError::field(format!("matrices[{j}]"), e.to_string()))?,
                );
            }
            InputBody::Matrices(mats)
        }
        (None, Some(fs)) => {
            check_len("family".into(), d, fs.len(), "components (d)")?;
            let mut comps = Vec::with_capacity(d);
            for (j, rows) in fs.into_iter().enumerate() {
                check_len(format!("family[{j}]"), n, rows.len(), "rows (n)")?;
                let mut entries = Vec::with_capacity(n * n);
                for (r, row) in rows.into_iter().enumerate() {
                    check_len(format!("family[{j}][{r}]"), n, row.len(), "entries (n)")?;
                    for (c, terms) in row.into_iter().enumerate() {
                        for (k, t) in terms.iter().enumerate() {
                            check_len(
                                format!("family[{j}][{r}][{c}][{k}].exponents"),
                                d,
                                t.exponents.len(),
                                "exponents (d)",
                            )?;
                        }
                        entries.push(BasePoly { terms });
                    }
                }
                comps.push(entries);
            }
            InputBody::Family(
                ChartFamily::new(n, d, comps, raw.label.clone())
                    .map_err(|e| CliError::field("family", e.to_string()))?,
            )
        }
    };
    Ok(InputDocument {
        n,
        d,
        label: raw.label,
        body,
    })
}

pub fn parse_input(path: &Path) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::field("input", format!("cannot read {}: {e}", path.display())))?;
    parse_input_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_matrix_document() {
        let doc = parse_input_str(r#"{"n": 2, "d": 1, "matrices": [[[[1,0],[0,0]],[[0,0],[2,0.5]]]]}"#).unwrap();
        let InputBody::Matrices(ms) = doc.body else { panic!() };
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].get(1, 1), C64::new(2.0, 0.5));
    }

    #[test]
    fn family_document() {
        let doc = parse_input_str(
            r#"{"n": 2, "d": 1, "label": "w^2 = z", "family": [[
                [[], [{"exponents": [0], "coefficient": [1, 0]}]],
                [[{"exponents": [1], "coefficient": [1, 0]}], []]
            ]]}"#,
        )
        .unwrap();
        let InputBody::Family(f) = doc.body else { panic!() };
        assert_eq!(f.label(), Some("w^2 = z"));
        let m = f.matrices_at(&[C64::new(4.0, 0.0)]).unwrap();
        assert_eq!(m[0], Matrix::from_real(&[&[0.0, 1.0], &[4.0, 0.0]]).unwrap());
    }

    #[test]
    fn inconsistent_documents() {
        let e = parse_input_str(r#"{"n": 2, "d": 2, "matrices": [[[[1,0],[0,0]],[[0,0],[2,0]]]]}"#).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("expected 2 matrices"));
        for bad in [
            r#"{"n": 2, "d": 1}"#,
            r#"{"n": 2, "d": 1, "matrices": [[[[1,0],[0,0]]]]}"#,
            r#"{"n": 1, "d": 1, "matrices": [[[[1,0]]]], "family": []}"#,
            r#"{"n": 1, "d": 1, "matrices": [[[[1,0]]]], "extra": 1}"#,
            r#"{"n": 1, "d": 1, "matrices": [[[[1,0,3]]]]}"#,
            r#"{"n": 1, "d": 1, "family": [[[[{"exponents": [1, 1], "coefficient": [1, 0]}]]]]}"#,
            r#"{"n": 0, "d": 1, "matrices": []}"#,
            "{\"n\": 1,\n \"d\": }",
        ] {
            assert_eq!(parse_input_str(bad).unwrap_err().exit_code(), 2, "{bad}");
        }
        assert!(parse_input_str("{\"n\": 1,\n \"d\": }").unwrap_err().to_string().contains("line 2"));
    }

    #[test]
    fn numbers_are_kept_exactly() {
        let doc = parse_input_str(r#"{"n": 1, "d": 1, "matrices": [[[[0.1, 2.2250738585072014e-308]]]]}"#).unwrap();
        let InputBody::Matrices(ms) = doc.body else { panic!() };
        assert_eq!(ms[0].get(0, 0), C64::new(0.1, 2.2250738585072014e-308));
    }
}
