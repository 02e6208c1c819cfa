use std::path::PathBuf;

use cplx_core::measures::{shannon_entropy, SymbolDistribution};
use cplx_core::{Error, Result};

use crate::config::{resolve, ConfigFile};
use crate::output::{emit, float, Format};

#[derive(clap::Args)]
pub struct EntropyArgs {
    /// UTF-8 input text; tokens are whitespace-delimited and case-sensitive
    #[arg(long)]
    input: Option<PathBuf>,
    /// Fold tokens to lowercase before counting
    #[arg(long)]
    lowercase: bool,
    /// key = value file mirroring these flags
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl EntropyArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let input = resolve(self.input, cfg.take("input")?, PathBuf::new());
        let lowercase = self.lowercase || cfg.take("lowercase")?.unwrap_or(false);
        let format = resolve(self.format, cfg.take("format")?, Format::Plain);
        cfg.finish()?;
        if input.as_os_str().is_empty() {
            return Err(Error::config("missing required --input"));
        }
        let text = std::fs::read_to_string(&input)
            .map_err(|e| Error::config(format!("cannot read {}: {e}", input.display())))?;
        let dist = SymbolDistribution::from_text(&text, lowercase);
        let bits = shannon_entropy(&dist)?;
        let body = match format {
            Format::Plain => format!("{}\n", float(bits)),
            Format::Csv => format!("entropy_bits\n{}\n", float(bits)),
            Format::Json => format!(
                "{}\n",
                serde_json::json!({
                    "entropy_bits": bits,
                    "symbols": dist.symbol_count(),
                    "tokens": dist.total(),
                })
            ),
        };
        emit(self.output.as_deref(), &body)
    }
}
