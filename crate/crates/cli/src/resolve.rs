//! Resolving poset and algebra specs: built-in names or JSON files.

use std::fmt;
use tinytopos_core::order::{algebra_from_spec, enumerate_downsets, named_poset, Heyting, Poset};

/// A usage or input error; always exits with code 2.
#[derive(Debug)]
pub struct CliError(String);

impl CliError {
    pub fn new(message: impl Into<String>) -> Self {
        CliError(message.into())
    }

    pub fn from_display(e: impl fmt::Display) -> Self {
        CliError(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

impl From<tinytopos_core::order::OrderError> for CliError {
    fn from(e: tinytopos_core::order::OrderError) -> Self {
        CliError(e.to_string())
    }
}

impl From<tinytopos_core::presheaf::PresheafError> for CliError {
    fn from(e: tinytopos_core::presheaf::PresheafError) -> Self {
        CliError(e.to_string())
    }
}

fn read_poset_file(spec: &str) -> Result<Poset, CliError> {
    let text = std::fs::read_to_string(spec).map_err(|e| {
        CliError::new(format!(
            "`{spec}` is not a built-in poset name and cannot be read as a file: {e}"
        ))
    })?;
    Ok(Poset::from_json(&text)?)
}

/// `powerset:N` / `chain:N` / `diamond` / `vee`, or a path to a poset JSON
/// file.
pub fn load_poset(spec: &str) -> Result<Poset, CliError> {
    match named_poset(spec)? {
        Some(p) => Ok(p),
        None => read_poset_file(spec),
    }
}

/// Algebra spec: `chain:N` is the N-element chain algebra; any other spec is
/// a poset (built-in name or file) whose downset algebra is used.
pub fn load_algebra(spec: &str) -> Result<Heyting, CliError> {
    match algebra_from_spec(spec)? {
        Some(h) => Ok(h),
        None => Ok(enumerate_downsets(&read_poset_file(spec)?)?),
    }
}
