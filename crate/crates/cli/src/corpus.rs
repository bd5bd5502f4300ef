//! The bundled fixture corpus and input resolution.
//!
//! A group or chain argument is resolved in order: an existing file path;
//! a file named `<arg>.json` under the directory in `FC_FIXTURE_DIR`; the
//! corpus embedded in the binary. Chains bundled with a fixture are
//! addressed as `<name>.nilpotent` and `<name>.solvable`.

use std::path::Path;

use crate::error::CliError;

/// Environment variable naming a directory searched for fixture files
/// before the embedded corpus.
pub const FIXTURE_DIR_ENV: &str = "FC_FIXTURE_DIR";

/// Embedded group files, by fixture name.
pub const GROUPS: &[(&str, &str)] = &[
    ("trivial", include_str!("../fixtures/trivial.json")),
    ("s3", include_str!("../fixtures/s3.json")),
    ("d8", include_str!("../fixtures/d8.json")),
    ("a4", include_str!("../fixtures/a4.json")),
    ("c12", include_str!("../fixtures/c12.json")),
    ("dinf", include_str!("../fixtures/dinf.json")),
    ("zxs3", include_str!("../fixtures/zxs3.json")),
    ("z2c4", include_str!("../fixtures/z2c4.json")),
];

/// Embedded chain files, by `<fixture>.<kind>` name.
pub const CHAINS: &[(&str, &str)] = &[
    ("trivial.nilpotent", include_str!("../fixtures/trivial.nilpotent.json")),
    ("trivial.solvable", include_str!("../fixtures/trivial.solvable.json")),
    ("s3.nilpotent", include_str!("../fixtures/s3.nilpotent.json")),
    ("s3.solvable", include_str!("../fixtures/s3.solvable.json")),
    ("d8.nilpotent", include_str!("../fixtures/d8.nilpotent.json")),
    ("d8.solvable", include_str!("../fixtures/d8.solvable.json")),
    ("a4.nilpotent", include_str!("../fixtures/a4.nilpotent.json")),
    ("a4.solvable", include_str!("../fixtures/a4.solvable.json")),
    ("c12.nilpotent", include_str!("../fixtures/c12.nilpotent.json")),
    ("c12.solvable", include_str!("../fixtures/c12.solvable.json")),
    ("dinf.nilpotent", include_str!("../fixtures/dinf.nilpotent.json")),
    ("dinf.solvable", include_str!("../fixtures/dinf.solvable.json")),
    ("zxs3.nilpotent", include_str!("../fixtures/zxs3.nilpotent.json")),
    ("zxs3.solvable", include_str!("../fixtures/zxs3.solvable.json")),
    ("z2c4.nilpotent", include_str!("../fixtures/z2c4.nilpotent.json")),
    ("z2c4.solvable", include_str!("../fixtures/z2c4.solvable.json")),
];

/// A resolved input: where it came from and its raw bytes.
pub struct ResolvedInput {
    /// A path for real files, `fixture:<name>` for corpus entries.
    pub source: String,
    pub bytes: Vec<u8>,
    /// The fixture name when the input came from the corpus (or the
    /// fixture directory), used to pick default chains.
    pub fixture: Option<String>,
}

fn lookup(table: &[(&str, &str)], name: &str) -> Option<Vec<u8>> {
    table
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.as_bytes().to_vec())
}

fn resolve(arg: &str, table: &[(&str, &str)], what: &str) -> Result<ResolvedInput, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(ResolvedInput {
            source: arg.to_string(),
            bytes: std::fs::read(path)
                .map_err(|e| CliError::io(format!("reading {arg}: {e}")))?,
            fixture: None,
        });
    }
    let plausible_name = !arg.contains('/') && !arg.ends_with(".json");
    if plausible_name {
        if let Ok(dir) = std::env::var(FIXTURE_DIR_ENV) {
            let candidate = Path::new(&dir).join(format!("{arg}.json"));
            if candidate.is_file() {
                return Ok(ResolvedInput {
                    source: format!("fixture:{arg}"),
                    bytes: std::fs::read(&candidate).map_err(|e| {
                        CliError::io(format!("reading {}: {e}", candidate.display()))
                    })?,
                    fixture: Some(arg.to_string()),
                });
            }
        }
        if let Some(bytes) = lookup(table, arg) {
            return Ok(ResolvedInput {
                source: format!("fixture:{arg}"),
                bytes,
                fixture: Some(arg.to_string()),
            });
        }
    }
    Err(CliError::io(format!(
        "{what} {arg:?} is neither a file nor a bundled fixture"
    )))
}

pub fn resolve_group(arg: &str) -> Result<ResolvedInput, CliError> {
    resolve(arg, GROUPS, "group")
}

pub fn resolve_chain(arg: &str) -> Result<ResolvedInput, CliError> {
    resolve(arg, CHAINS, "chain")
}
