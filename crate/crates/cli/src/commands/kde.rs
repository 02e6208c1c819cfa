use std::path::PathBuf;

use cplx_core::cost::CostCombiner;
use cplx_core::kde::{
    default_sweep_values, reconstruct, sweep_samples, CostModel, ReconstructionConfig,
    SampleMode, TargetFunction1D,
};
use cplx_core::{Error, Result};

use crate::commands::parse_usize_list;
use crate::config::{resolve, ConfigFile};
use crate::output::{emit, float, Format};

#[derive(clap::Args)]
pub struct KdeSweepArgs {
    /// Comma-separated sample counts (overrides the n-min/n-max/n-step range)
    #[arg(long)]
    n_values: Option<String>,
    /// Sweep start [default: 10]
    #[arg(long)]
    n_min: Option<usize>,
    /// Sweep end, inclusive [default: 2000]
    #[arg(long)]
    n_max: Option<usize>,
    /// Sweep stride [default: 10]
    #[arg(long)]
    n_step: Option<usize>,
    /// Evaluation grid resolution [default: 2048]
    #[arg(long)]
    grid_points: Option<usize>,
    /// Bandwidth factor kappa; kernel width is kappa*(b-a)/N [default: 1.0]
    #[arg(long)]
    bandwidth_factor: Option<f64>,
    /// Sampling mode: deterministic | random [default: deterministic]
    #[arg(long)]
    mode: Option<String>,
    /// Modeling cost model: count | operations [default: count]
    #[arg(long)]
    cost_model: Option<String>,
    /// Master seed (random mode only) [default: 0]
    #[arg(long)]
    seed: Option<u64>,
    /// Combiner weight of the modeling channel [default: 1.0]
    #[arg(long)]
    w_model: Option<f64>,
    /// Combiner weight of the operation channel [default: 1.0]
    #[arg(long)]
    w_oper: Option<f64>,
    /// Also dump the reconstruction at this sample count
    #[arg(long)]
    dump_n: Option<usize>,
    /// Where the reconstruction dump goes (x,target,reconstruction CSV)
    #[arg(long)]
    dump_output: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl KdeSweepArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let n_values = self.n_values.or(cfg.take("n-values")?);
        let n_min = resolve(self.n_min, cfg.take("n-min")?, 10);
        let n_max = resolve(self.n_max, cfg.take("n-max")?, 2000);
        let n_step = resolve(self.n_step, cfg.take("n-step")?, 10);
        let grid_points = resolve(self.grid_points, cfg.take("grid-points")?, 2048);
        let bandwidth_factor = resolve(self.bandwidth_factor, cfg.take("bandwidth-factor")?, 1.0);
        let mode: String = resolve(self.mode, cfg.take("mode")?, "deterministic".into());
        let cost_model: String = resolve(self.cost_model, cfg.take("cost-model")?, "count".into());
        let seed = resolve(self.seed, cfg.take("seed")?, 0);
        let w_model = resolve(self.w_model, cfg.take("w-model")?, 1.0);
        let w_oper = resolve(self.w_oper, cfg.take("w-oper")?, 1.0);
        let dump_n = self.dump_n.or(cfg.take("dump-n")?);
        let dump_output = self.dump_output.or(cfg.take("dump-output")?);
        let format = resolve(self.format, cfg.take("format")?, Format::Csv);
        cfg.finish()?;

        let ns = match &n_values {
            Some(list) => parse_usize_list(list)?,
            None => {
                if n_step == 0 || n_max < n_min {
                    return Err(Error::config("need n-step > 0 and n-max >= n-min"));
                }
                let mut ns = Vec::new();
                let mut n = n_min;
                while n <= n_max {
                    ns.push(n);
                    n += n_step;
                }
                if ns.is_empty() {
                    default_sweep_values()
                } else {
                    ns
                }
            }
        };
        let target = TargetFunction1D::default_target();
        let rc = ReconstructionConfig {
            grid_points,
            bandwidth_factor,
            mode: mode.parse::<SampleMode>()?,
            seed,
        };
        let combiner = CostCombiner::new(w_model, w_oper)?;
        let curve = sweep_samples(&target, &rc, &ns, cost_model.parse::<CostModel>()?, &combiner)?;

        if let Some(n) = dump_n {
            let path = dump_output
                .ok_or_else(|| Error::config("--dump-n needs --dump-output"))?;
            let rec = reconstruct(&target, n, &rc)?;
            let mut dump = String::from("x,P,R\n");
            for i in 0..rec.xs.len() {
                dump.push_str(&format!(
                    "{},{},{}\n",
                    float(rec.xs[i]),
                    float(rec.target[i]),
                    float(rec.reconstructed[i])
                ));
            }
            emit(Some(&path), &dump)?;
        }

        let body = match format {
            Format::Plain | Format::Csv => curve.to_csv(),
            Format::Json => format!("{}\n", curve.to_json()),
        };
        emit(self.output.as_deref(), &body)
    }
}
