//! `key = value` configuration files mirroring the command-line flags.
//!
//! Flags take precedence over config values, which take precedence over the
//! built-in defaults. Unknown keys are rejected so typos fail loudly before
//! any computation starts.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use cplx_core::{Error, Result};

#[derive(Debug, Default)]
pub struct ConfigFile {
    /// key -> (line number, raw value)
    entries: BTreeMap<String, (usize, String)>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stripped = raw.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                continue;
            }
            let (key, value) = stripped
                .split_once('=')
                .ok_or_else(|| Error::parse(line, format!("expected `key = value`, got {raw:?}")))?;
            let key = key.trim().to_string();
            if key.is_empty() {
                return Err(Error::parse(line, "empty config key"));
            }
            if entries
                .insert(key.clone(), (line, value.trim().to_string()))
                .is_some()
            {
                return Err(Error::parse(line, format!("duplicate config key {key:?}")));
            }
        }
        Ok(ConfigFile { entries })
    }

    /// Remove and parse a key. Returns `None` when the key is absent.
    pub fn take<T: FromStr>(&mut self, key: &str) -> Result<Option<T>> {
        match self.entries.remove(key) {
            None => Ok(None),
            Some((line, raw)) => raw.parse::<T>().map(Some).map_err(|_| {
                Error::parse(line, format!("invalid value {raw:?} for key {key:?}"))
            }),
        }
    }

    /// Error out if any unconsumed (unknown) keys remain.
    pub fn finish(self) -> Result<()> {
        if let Some((key, (line, _))) = self.entries.into_iter().next() {
            return Err(Error::parse(line, format!("unknown config key {key:?}")));
        }
        Ok(())
    }
}

/// Flag > config > default resolution for one field.
pub fn resolve<T>(flag: Option<T>, config: Option<T>, default: T) -> T {
    flag.or(config).unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_values_and_comments() {
        let mut cfg = ConfigFile::parse("seed = 42  # master seed\n\ngrid-points=1024\n").unwrap();
        assert_eq!(cfg.take::<u64>("seed").unwrap(), Some(42));
        assert_eq!(cfg.take::<usize>("grid-points").unwrap(), Some(1024));
        cfg.finish().unwrap();
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let cfg = ConfigFile::parse("grid_pints = 9\n").unwrap();
        match cfg.finish() {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 1);
                assert!(message.contains("grid_pints"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn bad_values_carry_line_numbers() {
        let mut cfg = ConfigFile::parse("# comment\nseed = not-a-number\n").unwrap();
        match cfg.take::<u64>("seed") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_and_malformed_lines_fail() {
        assert!(ConfigFile::parse("a = 1\na = 2\n").is_err());
        assert!(ConfigFile::parse("just some words\n").is_err());
    }

    #[test]
    fn resolution_order_is_flag_config_default() {
        assert_eq!(resolve(Some(1), Some(2), 3), 1);
        assert_eq!(resolve(None, Some(2), 3), 2);
        assert_eq!(resolve::<i32>(None, None, 3), 3);
    }
}
