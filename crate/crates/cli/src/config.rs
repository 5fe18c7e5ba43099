//! Run configuration: `chevwidth.toml` mirrors the global flags, and
//! flags win over the file.

use crate::cmd::CliError;
use serde::Deserialize;
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    #[serde(rename = "cacheDir")]
    pub cache_dir: Option<PathBuf>,
    #[serde(rename = "expensiveSuites")]
    pub expensive_suites: Option<bool>,
    #[serde(rename = "outputFormat")]
    pub output_format: Option<Format>,
}

/// Read the config file. An explicit path must exist; the implicit
/// `./chevwidth.toml` is optional.
pub fn load(explicit: Option<&Path>) -> Result<FileConfig, CliError> {
    let path = match explicit {
        Some(p) => p.to_path_buf(),
        None => {
            let p = PathBuf::from("chevwidth.toml");
            if !p.exists() {
                return Ok(FileConfig::default());
            }
            p
        }
    };
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        err: e,
    })?;
    toml::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}
