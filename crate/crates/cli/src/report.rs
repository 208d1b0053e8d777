use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::RunConfig;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// What a command computed: machine-readable results, a verdict, and a table for humans.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub results: Value,
    pub passed: bool,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub engine: String,
    pub config: RunConfig,
    pub results: Value,
    pub passed: bool,
    pub cached: bool,
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub text: String,
}
