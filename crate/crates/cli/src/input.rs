//! System files: `{"A": [[..]], "B": [[..]], "C": [[..]], "D": [[..]]}`.
//! Unknown keys are ignored, so a `--full` report can be read back.

use std::fs;
use std::path::Path;

use hamsub_core::{Matrix, SystemQuadruple};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Deserialize)]
pub struct SystemFile {
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<f64>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<f64>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<f64>>,
}

fn to_matrix(name: &str, rows: &[Vec<f64>]) -> Result<Matrix, CliError> {
    let Some(first) = rows.first() else {
        return Err(CliError::Input(format!("{name}: matrix has no rows")));
    };
    let cols = first.len();
    if cols == 0 {
        return Err(CliError::Input(format!("{name}: matrix has no columns")));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != cols) {
        return Err(CliError::Input(format!(
            "{name}: row {} has {} entries, expected {cols}",
            i + 1,
            rows[i].len()
        )));
    }
    let data = rows.iter().flatten().copied().collect();
    Matrix::from_row_major(rows.len(), cols, data).map_err(CliError::from)
}

impl SystemFile {
    pub fn into_system(self) -> Result<SystemQuadruple, CliError> {
        let a = to_matrix("A", &self.a)?;
        let b = to_matrix("B", &self.b)?;
        let c = to_matrix("C", &self.c)?;
        let d = to_matrix("D", &self.d)?;
        Ok(SystemQuadruple::new(a, b, c, d)?)
    }
}

pub fn parse_system(text: &str) -> Result<SystemQuadruple, CliError> {
    let file: SystemFile = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("invalid system file: {e}")))?;
    file.into_system()
}

pub fn read_system(path: &Path) -> Result<SystemQuadruple, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_system(&text)
}

/// Comma-separated finite numbers of the given length.
pub fn parse_vector(name: &str, text: &str, len: usize) -> Result<Vec<f64>, CliError> {
    let values = text
        .split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Input(format!("{name}: '{s}' is not a finite number")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != len {
        return Err(CliError::Input(format!(
            "{name}: expected {len} entries, found {}",
            values.len()
        )));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_row_names_field() {
        let text = r#"{"A": [[1]], "B": [[1], [2, 3]], "C": [[1]], "D": [[0]]}"#;
        let err = parse_system(text).unwrap_err().to_string();
        assert!(err.starts_with("B:"), "{err}");
    }

    #[test]
    fn wrong_row_count_names_field() {
        let text = r#"{"A": [[1, 0], [0, 1]], "B": [[1]], "C": [[1, 0]], "D": [[0]]}"#;
        let err = parse_system(text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("in B"), "{err}");
    }

    #[test]
    fn unknown_keys_are_ignored() {
        let text = r#"{"A": [[0.5]], "B": [[1]], "C": [[1]], "D": [[1]], "note": "x"}"#;
        assert_eq!(parse_system(text).unwrap().n(), 1);
    }

    #[test]
    fn vectors_are_checked() {
        assert_eq!(
            parse_vector("x0", "1, 2.5,-3", 3).unwrap(),
            vec![1.0, 2.5, -3.0]
        );
        assert!(parse_vector("x0", "1,2", 3)
            .unwrap_err()
            .to_string()
            .starts_with("x0:"));
        assert!(parse_vector("xf", "1,nan", 2).is_err());
    }
}
