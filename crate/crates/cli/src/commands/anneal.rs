use std::path::PathBuf;

use cplx_core::anneal::{
    run_agent, sweep_agents, AgentConfig, AnnealSchedule, GaussianSurface2D,
    DEFAULT_SURFACE_SEED,
};
use cplx_core::cost::CostCombiner;
use cplx_core::rng::derive_seed;
use cplx_core::{Error, Result};

use crate::commands::parse_usize_list;
use crate::config::{resolve, ConfigFile};
use crate::output::{emit, float, Format};

#[derive(clap::Args)]
pub struct AnnealSweepArgs {
    /// Comma-separated agent counts (overrides --max-agents)
    #[arg(long)]
    agent_counts: Option<String>,
    /// Sweep n = 1..=max [default: 10]
    #[arg(long)]
    max_agents: Option<usize>,
    /// Repetitions per sweep point [default: 30]
    #[arg(long)]
    repetitions: Option<usize>,
    /// Initial temperature [default: 1.0]
    #[arg(long)]
    t0: Option<f64>,
    /// Multiplicative decay per period [default: 0.9]
    #[arg(long)]
    decay: Option<f64>,
    /// Steps per temperature period [default: 100]
    #[arg(long)]
    period: Option<usize>,
    /// Stop temperature [default: 0.001]
    #[arg(long)]
    t_min: Option<f64>,
    /// Gradient step size [default: 0.05]
    #[arg(long)]
    step_size: Option<f64>,
    /// Noise scale per unit temperature [default: 1.0]
    #[arg(long)]
    noise_scale: Option<f64>,
    /// Step budget per agent [default: 5000]
    #[arg(long)]
    max_steps: Option<usize>,
    /// Boltzmann constant k [default: 1.0]
    #[arg(long)]
    k: Option<f64>,
    /// Seed of the random landscape [default: 11]
    #[arg(long)]
    surface_seed: Option<u64>,
    /// Number of Gaussian wells in the landscape [default: 8]
    #[arg(long)]
    surface_components: Option<usize>,
    /// Master seed for agent randomness [default: 0]
    #[arg(long)]
    seed: Option<u64>,
    /// Combiner weight of the modeling channel [default: 1.0]
    #[arg(long)]
    w_model: Option<f64>,
    /// Combiner weight of the operation channel [default: 1.0]
    #[arg(long)]
    w_oper: Option<f64>,
    /// Dump the first agent's trajectory (step,x,y,f,T CSV) to this path
    #[arg(long)]
    dump_trajectory: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl AnnealSweepArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let agent_counts = self.agent_counts.or(cfg.take("agent-counts")?);
        let max_agents = resolve(self.max_agents, cfg.take("max-agents")?, 10);
        let repetitions = resolve(self.repetitions, cfg.take("repetitions")?, 30);
        let t0 = resolve(self.t0, cfg.take("t0")?, 1.0);
        let decay = resolve(self.decay, cfg.take("decay")?, 0.9);
        let period = resolve(self.period, cfg.take("period")?, 100);
        let t_min = resolve(self.t_min, cfg.take("t-min")?, 1e-3);
        let step_size = resolve(self.step_size, cfg.take("step-size")?, 0.05);
        let noise_scale = resolve(self.noise_scale, cfg.take("noise-scale")?, 1.0);
        let max_steps = resolve(self.max_steps, cfg.take("max-steps")?, 5000);
        let k = resolve(self.k, cfg.take("k")?, 1.0);
        let surface_seed = resolve(self.surface_seed, cfg.take("surface-seed")?, DEFAULT_SURFACE_SEED);
        let surface_components = resolve(self.surface_components, cfg.take("surface-components")?, 8);
        let seed = resolve(self.seed, cfg.take("seed")?, 0);
        let w_model = resolve(self.w_model, cfg.take("w-model")?, 1.0);
        let w_oper = resolve(self.w_oper, cfg.take("w-oper")?, 1.0);
        let dump_trajectory = self.dump_trajectory.or(cfg.take("dump-trajectory")?);
        let format = resolve(self.format, cfg.take("format")?, Format::Csv);
        cfg.finish()?;

        let ns = match &agent_counts {
            Some(list) => parse_usize_list(list)?,
            None => {
                if max_agents < 3 {
                    return Err(Error::config("--max-agents must be at least 3"));
                }
                (1..=max_agents).collect()
            }
        };
        let surface = GaussianSurface2D::from_seed(surface_seed, surface_components, 10.0);
        let schedule = AnnealSchedule {
            initial_temperature: t0,
            decay,
            period,
            min_temperature: t_min,
        };
        let agent_cfg = AgentConfig {
            step_size,
            noise_scale,
            max_steps,
            boltzmann_k: k,
            seed,
        };
        let combiner = CostCombiner::new(w_model, w_oper)?;

        if let Some(path) = &dump_trajectory {
            let first = AgentConfig {
                seed: derive_seed(seed, 0, 0),
                ..agent_cfg
            };
            let run = run_agent(&surface, &schedule, &first)?;
            let mut dump = String::from("step,x,y,f,T\n");
            for s in &run.trajectory {
                dump.push_str(&format!(
                    "{},{},{},{},{}\n",
                    s.step,
                    float(s.x),
                    float(s.y),
                    float(s.value),
                    float(s.temperature)
                ));
            }
            emit(Some(path), &dump)?;
        }

        let sweep = sweep_agents(&surface, &schedule, &agent_cfg, &ns, repetitions, &combiner)?;
        let body = match format {
            Format::Plain | Format::Csv => sweep.to_csv(),
            Format::Json => {
                let points: Vec<_> = sweep
                    .curve
                    .points()
                    .iter()
                    .zip(&sweep.stddev_total)
                    .map(|(p, sd)| {
                        serde_json::json!({
                            "parameter": p.parameter,
                            "modeling_cost": p.modeling_cost,
                            "operation_cost": p.operation_cost,
                            "total_cost": p.total_cost,
                            "stddev_total": sd,
                        })
                    })
                    .collect();
                format!(
                    "{}\n",
                    serde_json::json!({"normalized": true, "points": points})
                )
            }
        };
        emit(self.output.as_deref(), &body)
    }
}
