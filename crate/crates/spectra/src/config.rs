//! Run configuration shared by the command-line entry points.

use crate::groebner::{FieldSpec, NotPrime, PrimeField};
use std::path::PathBuf;
use thiserror::Error;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "SPECTRA_CACHE";

#[derive(Clone, Debug)]
pub struct Config {
    pub max_c2: i64,
    pub field: FieldSpec,
    pub seed: u64,
    pub trials: u32,
    pub output: OutputFormat,
    pub cache_dir: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Tsv,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("max_c2 must be >= 1, got {0}")]
    BadMaxC2(i64),
    #[error("trials must be >= 1, got {0}")]
    BadTrials(u32),
    #[error(transparent)]
    BadPrime(#[from] NotPrime),
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_c2: 21,
            field: FieldSpec::Rationals,
            seed: 42,
            trials: 3,
            output: OutputFormat::Json,
            cache_dir: default_cache_dir(),
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_c2 < 1 {
            return Err(ConfigError::BadMaxC2(self.max_c2));
        }
        if self.trials < 1 {
            return Err(ConfigError::BadTrials(self.trials));
        }
        if let FieldSpec::Prime(p) = self.field {
            PrimeField::new(p)?;
        }
        Ok(())
    }
}

/// `SPECTRA_CACHE` when set, else `.spectra-cache` in the working directory.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".spectra-cache"))
}

/// Parses `rationals` or `prime:P`.
pub fn parse_field_spec(s: &str) -> Result<FieldSpec, String> {
    if s == "rationals" || s == "q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = s.strip_prefix("prime:") {
        let p: u64 = p.parse().map_err(|_| format!("bad prime: {p}"))?;
        PrimeField::new(p).map_err(|e| e.to_string())?;
        return Ok(FieldSpec::Prime(p));
    }
    Err(format!(
        "unknown field {s:?}; expected `rationals` or `prime:P`"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut c = Config::default();
        c.validate().unwrap();
        c.max_c2 = 0;
        assert!(c.validate().is_err());
        c.max_c2 = 5;
        c.field = FieldSpec::Prime(32003);
        c.validate().unwrap();
        c.field = FieldSpec::Prime(32001);
        assert!(c.validate().is_err());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(parse_field_spec("rationals").unwrap(), FieldSpec::Rationals);
        assert_eq!(
            parse_field_spec("prime:32003").unwrap(),
            FieldSpec::Prime(32003)
        );
        assert!(parse_field_spec("prime:32001").is_err());
        assert!(parse_field_spec("float").is_err());
    }
}
