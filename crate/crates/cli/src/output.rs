//! Result serialization: data goes to the output path (written atomically
//! via a temporary file) or to stdout; diagnostics stay on stderr.

use std::path::{Path, PathBuf};

use cplx_core::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Bare value for scalar results, CSV for tables.
    Plain,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::config(format!("unknown format {other:?}"))),
        }
    }
}

/// Write `content` to `path` (atomic: temp file + rename) or stdout.
pub fn emit(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let tmp: PathBuf = {
                let mut name = path.file_name().unwrap_or_default().to_os_string();
                name.push(".tmp");
                path.with_file_name(name)
            };
            std::fs::write(&tmp, content).map_err(|e| {
                Error::internal(format!("cannot write {}: {e}", tmp.display()))
            })?;
            std::fs::rename(&tmp, path).map_err(|e| {
                let _ = std::fs::remove_file(&tmp);
                Error::internal(format!("cannot move output into {}: {e}", path.display()))
            })
        }
    }
}

/// Shortest representation that still shows a decimal point, so scalar
/// outputs read as floats (1.0 rather than 1).
pub fn float(v: f64) -> String {
    format!("{v:?}")
}
