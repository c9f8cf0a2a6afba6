//! Reads a JSON task document, runs the checkers and solvers it names, and
//! reports per-condition verdicts.

pub mod build;
pub mod doc;
mod render;
pub mod run;

pub use build::{load, Certificate, Env, Module};
pub use doc::SpecDocument;
pub use render::table;
pub use run::{run_tasks, validate, Outcome, RunReport, Search, TaskReport, Verdict, DEFAULT_LIMIT, OPS};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed document, unresolved name, bad shape or field.
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
        }
    }
}

/// Parses a document and resolves every name and shape in it.
pub fn parse_spec(text: &str) -> Result<SpecDocument, CliError> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| CliError::Input(format!("parse error: {e}")))?;
    validate(&doc)?;
    Ok(doc)
}
