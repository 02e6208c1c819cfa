use std::path::PathBuf;

use cplx_core::cost::CostCombiner;
use cplx_core::network::{run_budget_experiment, year_records_to_csv, BudgetPolicy};
use cplx_core::{Error, Result};

use crate::config::{resolve, ConfigFile};
use crate::loader::{load_fuel, load_graph};
use crate::output::{emit, Format};

#[derive(clap::Args)]
pub struct NetworkBudgetArgs {
    /// Airport nodes CSV (`id,lat,lon`)
    #[arg(long)]
    nodes: Option<PathBuf>,
    /// Flight edges CSV (`src,dst[,weight_km]`)
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Fuel price CSV (`year,price_usd_per_gallon`)
    #[arg(long)]
    fuel: Option<PathBuf>,
    /// Constant complexity level B [default: 1.0]
    #[arg(long)]
    budget: Option<f64>,
    /// Combiner weight of the modeling channel [default: 1.0]
    #[arg(long)]
    w_model: Option<f64>,
    /// Combiner weight of the operation channel [default: 1.0]
    #[arg(long)]
    w_oper: Option<f64>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl NetworkBudgetArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let nodes = resolve(self.nodes, cfg.take("nodes")?, PathBuf::new());
        let edges = resolve(self.edges, cfg.take("edges")?, PathBuf::new());
        let fuel = resolve(self.fuel, cfg.take("fuel")?, PathBuf::new());
        let budget = resolve(self.budget, cfg.take("budget")?, 1.0);
        let w_model = resolve(self.w_model, cfg.take("w-model")?, 1.0);
        let w_oper = resolve(self.w_oper, cfg.take("w-oper")?, 1.0);
        let format = resolve(self.format, cfg.take("format")?, Format::Csv);
        cfg.finish()?;
        for (name, path) in [("--nodes", &nodes), ("--edges", &edges), ("--fuel", &fuel)] {
            if path.as_os_str().is_empty() {
                return Err(Error::config(format!("missing required {name}")));
            }
        }

        let graph = load_graph(&nodes, &edges)?;
        let series = load_fuel(&fuel)?;
        let policy = BudgetPolicy {
            budget,
            combiner: CostCombiner::new(w_model, w_oper)?,
        };
        let records = run_budget_experiment(&graph, &series, &policy)?;
        for r in records.iter().filter(|r| r.clamped) {
            eprintln!(
                "warning: year {} implied a modeling budget outside [0, 1]; clamped",
                r.year
            );
        }
        let body = match format {
            Format::Plain | Format::Csv => year_records_to_csv(&records),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&records).unwrap()),
        };
        emit(self.output.as_deref(), &body)
    }
}
