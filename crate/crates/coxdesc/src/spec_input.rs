//! Group specifications on the command line: a type name such as `F4` or
//! `I2(5)`, or `@path/to/file.json`.
//!
//! A spec file is either `{"type": "H3"}` or a Coxeter matrix
//! `{"rank": 3, "m": [[1,5,2],[5,1,3],[2,3,1]], "name": "H3"}` (rank and name
//! optional).

use std::path::Path;

use coxdesc_core::coxeter::CoxeterSpec;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SpecFile {
    Named {
        #[serde(rename = "type")]
        type_name: String,
    },
    Matrix {
        rank: Option<usize>,
        m: Vec<Vec<u32>>,
        name: Option<String>,
    },
}

pub fn parse_spec_arg(arg: &str) -> CliResult<CoxeterSpec> {
    match arg.strip_prefix('@') {
        Some(path) => load_spec_file(Path::new(path)),
        None => Ok(CoxeterSpec::named(arg)?),
    }
}

pub fn load_spec_file(path: &Path) -> CliResult<CoxeterSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_spec_json(&text)
}

pub fn parse_spec_json(text: &str) -> CliResult<CoxeterSpec> {
    let file: SpecFile = serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("spec file: expected {{\"type\": ...}} or {{\"rank\", \"m\"}}: {e}")))?;
    match file {
        SpecFile::Named { type_name } => Ok(CoxeterSpec::named(&type_name)?),
        SpecFile::Matrix { rank, m, name } => {
            if let Some(r) = rank {
                if r != m.len() {
                    return Err(CliError::Usage(format!(
                        "spec file: rank {} does not match a {}-row matrix",
                        r,
                        m.len()
                    )));
                }
            }
            let spec = CoxeterSpec::from_matrix(&m)?;
            Ok(match name {
                Some(n) => spec.with_type_tag(n),
                None => spec,
            })
        }
    }
}
