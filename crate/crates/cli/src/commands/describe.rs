use std::path::PathBuf;

use cplx_core::measures::{description_length_proxy, logical_depth_proxy};
use cplx_core::{Error, Result};

use crate::config::{resolve, ConfigFile};
use crate::output::{emit, float, Format};

#[derive(clap::Args)]
pub struct DescribeArgs {
    /// Input file, treated as raw bytes
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl DescribeArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let input = resolve(self.input, cfg.take("input")?, PathBuf::new());
        let format = resolve(self.format, cfg.take("format")?, Format::Csv);
        cfg.finish()?;
        if input.as_os_str().is_empty() {
            return Err(Error::config("missing required --input"));
        }
        let data = std::fs::read(&input)
            .map_err(|e| Error::config(format!("cannot read {}: {e}", input.display())))?;
        let report = description_length_proxy(&data)?;
        let depth = logical_depth_proxy(&data)?;
        let body = match format {
            Format::Plain | Format::Csv => format!(
                "original_length,compressed_length,ratio,depth_steps\n{},{},{},{}\n",
                report.original_length,
                report.compressed_length,
                float(report.ratio),
                depth
            ),
            Format::Json => format!(
                "{}\n",
                serde_json::json!({
                    "original_length": report.original_length,
                    "compressed_length": report.compressed_length,
                    "ratio": report.ratio,
                    "depth_steps": depth,
                })
            ),
        };
        emit(self.output.as_deref(), &body)
    }
}
