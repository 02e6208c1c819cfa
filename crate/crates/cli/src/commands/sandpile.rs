use std::path::PathBuf;

use cplx_core::measures::sandpile_avalanches;
use cplx_core::{Error, Result};

use crate::config::{resolve, ConfigFile};
use crate::output::{emit, Format};

#[derive(clap::Args)]
pub struct SandpileArgs {
    /// Grid width [default: 64]
    #[arg(long)]
    width: Option<usize>,
    /// Grid height [default: 64]
    #[arg(long)]
    height: Option<usize>,
    /// Grains recorded after the warm-up [default: 100000]
    #[arg(long)]
    grains: Option<usize>,
    /// Warm-up grains dropped before recording [default: 10000]
    #[arg(long)]
    warmup: Option<usize>,
    /// Master seed [default: 0]
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl SandpileArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let width = resolve(self.width, cfg.take("width")?, 64);
        let height = resolve(self.height, cfg.take("height")?, 64);
        let grains = resolve(self.grains, cfg.take("grains")?, 100_000);
        let warmup = resolve(self.warmup, cfg.take("warmup")?, 10_000);
        let seed = resolve(self.seed, cfg.take("seed")?, 0);
        let format = resolve(self.format, cfg.take("format")?, Format::Csv);
        cfg.finish()?;
        if grains == 0 {
            return Err(Error::config("need at least one recorded grain"));
        }

        let all = sandpile_avalanches(width, height, warmup + grains, seed)?;
        let sizes = &all[warmup..];
        let body = match format {
            Format::Plain | Format::Csv => {
                let mut out = String::from("grain,avalanche_size\n");
                for (i, &s) in sizes.iter().enumerate() {
                    out.push_str(&format!("{i},{s}\n"));
                }
                out
            }
            Format::Json => format!(
                "{}\n",
                serde_json::json!({
                    "width": width,
                    "height": height,
                    "warmup": warmup,
                    "seed": seed,
                    "avalanche_sizes": sizes,
                })
            ),
        };
        emit(self.output.as_deref(), &body)
    }
}
