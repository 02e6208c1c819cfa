use std::path::PathBuf;

use cplx_core::measures::{iterate_map_pair, largest_lyapunov, MapId};
use cplx_core::Result;

use crate::config::{resolve, ConfigFile};
use crate::output::{emit, float, Format};

#[derive(clap::Args)]
pub struct LyapunovArgs {
    /// Map to iterate (only `logistic` for now) [default: logistic]
    #[arg(long)]
    map: Option<String>,
    /// Map parameter r [default: 4.0]
    #[arg(long)]
    r: Option<f64>,
    /// Initial state in (0, 1) [default: 0.3]
    #[arg(long)]
    x0: Option<f64>,
    /// Initial separation in (0, 1e-6] [default: 1e-9]
    #[arg(long)]
    delta0: Option<f64>,
    /// Iteration count [default: 100000]
    #[arg(long)]
    steps: Option<usize>,
    /// Use the raw two-trajectory separations instead of per-step
    /// renormalization (saturates quickly for chaotic maps)
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl LyapunovArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let map: String = resolve(self.map, cfg.take("map")?, "logistic".into());
        let r = resolve(self.r, cfg.take("r")?, 4.0);
        let x0 = resolve(self.x0, cfg.take("x0")?, 0.3);
        let delta0 = resolve(self.delta0, cfg.take("delta0")?, 1e-9);
        let steps = resolve(self.steps, cfg.take("steps")?, 100_000);
        let raw = self.raw || cfg.take("raw")?.unwrap_or(false);
        let format = resolve(self.format, cfg.take("format")?, Format::Plain);
        cfg.finish()?;

        let map: MapId = map.parse()?;
        let pair = iterate_map_pair(map, r, x0, delta0, steps, !raw)?;
        let lambda = largest_lyapunov(&pair)?;
        let body = match format {
            Format::Plain => format!("{}\n", float(lambda)),
            Format::Csv => format!("lambda\n{}\n", float(lambda)),
            Format::Json => format!(
                "{}\n",
                serde_json::json!({
                    "lambda": lambda,
                    "steps": steps,
                    "renormalized": !raw,
                })
            ),
        };
        emit(self.output.as_deref(), &body)
    }
}
