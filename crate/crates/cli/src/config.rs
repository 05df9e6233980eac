//! Resource bounds. Each setting is taken from the first source that has it:
//! command-line flag, then `KZD_*` environment variable (both handled by
//! clap), then the config file, then the built-in default.
//!
//! The config file is TOML with optional top-level keys:
//!
//! ```toml
//! max_n = 6        # longest composition accepted
//! max_weight = 12  # largest |μ| accepted
//! threads = 4      # worker threads; 0 means one per core
//! window_cap = 64  # widest window tried by global-duality checks
//! ```

use std::path::{Path, PathBuf};

use kzduality::Limits;
use serde::Deserialize;

pub const DEFAULT_FILE: &str = "kzduality.toml";
pub const DEFAULT_WINDOW_CAP: usize = 64;

#[derive(Debug, Default, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_n: Option<usize>,
    pub max_weight: Option<u32>,
    pub threads: Option<usize>,
    pub window_cap: Option<usize>,
}

impl FileConfig {
    /// Reads `path` if given, else `kzduality.toml` in the working directory
    /// when it exists. An explicit path that cannot be read is an error.
    pub fn load(path: Option<&Path>) -> Result<Self, String> {
        let (path, required) = match path {
            Some(p) => (p.to_path_buf(), true),
            None => (PathBuf::from(DEFAULT_FILE), false),
        };
        match std::fs::read_to_string(&path) {
            Ok(text) => toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display())),
            Err(_) if !required => Ok(Self::default()),
            Err(e) => Err(format!("{}: {e}", path.display())),
        }
    }
}

/// Settings after precedence has been applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub limits: Limits,
    pub threads: usize,
    pub window_cap: usize,
}

/// Values already resolved from flags and environment.
#[derive(Debug, Default, Clone, Copy)]
pub struct Overrides {
    pub max_n: Option<usize>,
    pub max_weight: Option<u32>,
    pub threads: Option<usize>,
    pub window_cap: Option<usize>,
}

pub fn resolve(overrides: Overrides, file: &FileConfig) -> Settings {
    let defaults = Limits::default();
    Settings {
        limits: Limits {
            max_n: overrides.max_n.or(file.max_n).unwrap_or(defaults.max_n),
            max_weight: overrides.max_weight.or(file.max_weight).unwrap_or(defaults.max_weight),
        },
        threads: overrides.threads.or(file.threads).unwrap_or(0),
        window_cap: overrides.window_cap.or(file.window_cap).unwrap_or(DEFAULT_WINDOW_CAP),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_beat_file_beat_defaults() {
        let file: FileConfig = toml::from_str("max_n = 4\nmax_weight = 5\n").unwrap();
        let s = resolve(Overrides { max_n: Some(3), ..Overrides::default() }, &file);
        assert_eq!(s.limits, Limits { max_n: 3, max_weight: 5 });
        assert_eq!(s.window_cap, DEFAULT_WINDOW_CAP);
        assert!(toml::from_str::<FileConfig>("max_depth = 1").is_err());
    }
}
