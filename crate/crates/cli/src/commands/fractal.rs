use std::path::PathBuf;

use cplx_core::measures::{box_counting_dimension, lacunarity, BinaryGrid2D};
use cplx_core::{Error, Result};

use crate::commands::parse_usize_list;
use crate::config::{resolve, ConfigFile};
use crate::output::{emit, float, Format};

/// Build a grid from a PBM-style file or a named generator:
/// `koch:<depth>`, `line:<size>`, `filled:<size>`, `random:<size>:<fraction>:<seed>`.
pub(crate) fn load_or_generate_grid(
    input: Option<&PathBuf>,
    generate: Option<&str>,
) -> Result<BinaryGrid2D> {
    match (input, generate) {
        (Some(_), Some(_)) => Err(Error::config("pass either --input or --generate, not both")),
        (None, None) => Err(Error::config("missing --input (or --generate)")),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
            BinaryGrid2D::parse_pbm(&text)
        }
        (None, Some(pattern)) => {
            let parts: Vec<&str> = pattern.split(':').collect();
            match parts.as_slice() {
                ["koch", depth] => {
                    let depth = depth
                        .parse()
                        .map_err(|_| Error::config(format!("invalid koch depth {depth:?}")))?;
                    BinaryGrid2D::koch_curve(depth)
                }
                ["line", size] => {
                    let size = size
                        .parse()
                        .map_err(|_| Error::config(format!("invalid size {size:?}")))?;
                    BinaryGrid2D::horizontal_line(size)
                }
                ["filled", size] => {
                    let size = size
                        .parse()
                        .map_err(|_| Error::config(format!("invalid size {size:?}")))?;
                    BinaryGrid2D::filled(size)
                }
                ["random", size, fraction, seed] => {
                    let size = size
                        .parse()
                        .map_err(|_| Error::config(format!("invalid size {size:?}")))?;
                    let fraction = fraction
                        .parse()
                        .map_err(|_| Error::config(format!("invalid fraction {fraction:?}")))?;
                    let seed = seed
                        .parse()
                        .map_err(|_| Error::config(format!("invalid seed {seed:?}")))?;
                    BinaryGrid2D::random_occupancy(size, fraction, seed)
                }
                _ => Err(Error::config(format!(
                    "unknown generator {pattern:?}; try koch:<depth>, line:<size>, filled:<size>, random:<size>:<fraction>:<seed>"
                ))),
            }
        }
    }
}

/// Powers of two up to a quarter of the grid extent (at least {1, 2, 4}).
fn default_box_sizes(grid: &BinaryGrid2D) -> Vec<usize> {
    let limit = (grid.width().min(grid.height()) / 4).max(4);
    let mut sizes = vec![];
    let mut s = 1;
    while s <= limit {
        sizes.push(s);
        s *= 2;
    }
    sizes
}

#[derive(clap::Args)]
pub struct FractalArgs {
    /// PBM-style ASCII grid file (P1 magic, width height, 0/1 cells)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generate the grid instead: koch:DEPTH, line:SIZE, filled:SIZE,
    /// random:SIZE:FRACTION:SEED
    #[arg(long)]
    generate: Option<String>,
    /// Comma-separated box sizes, e.g. 1,3,9,27,81 (default: powers of 2)
    #[arg(long)]
    box_sizes: Option<String>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl FractalArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let input = self.input.or(cfg.take("input")?);
        let generate = self.generate.or(cfg.take("generate")?);
        let box_sizes = self.box_sizes.or(cfg.take("box-sizes")?);
        let format = resolve(self.format, cfg.take("format")?, Format::Plain);
        cfg.finish()?;

        let grid = load_or_generate_grid(input.as_ref(), generate.as_deref())?;
        let sizes = match &box_sizes {
            Some(list) => parse_usize_list(list)?,
            None => default_box_sizes(&grid),
        };
        let fit = box_counting_dimension(&grid, &sizes)?;
        let body = match format {
            Format::Plain => format!("{}\n", float(fit.dimension)),
            Format::Csv => {
                let mut out = String::from("box_size,occupied_boxes,fitted_dimension\n");
                for &(s, n) in &fit.counts {
                    out.push_str(&format!("{s},{n},{}\n", float(fit.dimension)));
                }
                out
            }
            Format::Json => format!(
                "{}\n",
                serde_json::json!({
                    "dimension": fit.dimension,
                    "counts": fit
                        .counts
                        .iter()
                        .map(|&(s, n)| serde_json::json!({"box_size": s, "occupied_boxes": n}))
                        .collect::<Vec<_>>(),
                })
            ),
        };
        emit(self.output.as_deref(), &body)
    }
}

#[derive(clap::Args)]
pub struct LacunarityArgs {
    /// PBM-style ASCII grid file (P1 magic, width height, 0/1 cells)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generate the grid instead: koch:DEPTH, line:SIZE, filled:SIZE,
    /// random:SIZE:FRACTION:SEED
    #[arg(long)]
    generate: Option<String>,
    /// Comma-separated gliding-box sizes (default: powers of 2)
    #[arg(long)]
    box_sizes: Option<String>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl LacunarityArgs {
    pub fn run(self) -> Result<()> {
        let mut cfg = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let input = self.input.or(cfg.take("input")?);
        let generate = self.generate.or(cfg.take("generate")?);
        let box_sizes = self.box_sizes.or(cfg.take("box-sizes")?);
        let format = resolve(self.format, cfg.take("format")?, Format::Csv);
        cfg.finish()?;

        let grid = load_or_generate_grid(input.as_ref(), generate.as_deref())?;
        let sizes = match &box_sizes {
            Some(list) => parse_usize_list(list)?,
            None => default_box_sizes(&grid),
        };
        let values = lacunarity(&grid, &sizes)?;
        let body = match format {
            Format::Plain | Format::Csv => {
                let mut out = String::from("box_size,lacunarity\n");
                for &(s, lac) in &values {
                    out.push_str(&format!("{s},{}\n", float(lac)));
                }
                out
            }
            Format::Json => format!(
                "{}\n",
                serde_json::json!(values
                    .iter()
                    .map(|&(s, lac)| serde_json::json!({"box_size": s, "lacunarity": lac}))
                    .collect::<Vec<_>>())
            ),
        };
        emit(self.output.as_deref(), &body)
    }
}
