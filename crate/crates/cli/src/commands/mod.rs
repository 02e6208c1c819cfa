use cplx_core::Result;

mod anneal;
mod describe;
mod entropy;
mod fractal;
mod kde;
mod lyapunov;
mod network;
mod sandpile;

#[derive(clap::Subcommand)]
pub enum Command {
    /// Shannon entropy (bits) of the whitespace tokens of a text file
    Entropy(entropy::EntropyArgs),
    /// Box-counting fractal dimension of a binary grid
    Fractal(fractal::FractalArgs),
    /// Gliding-box lacunarity of a binary grid
    Lacunarity(fractal::LacunarityArgs),
    /// Largest Lyapunov exponent of a one-dimensional map
    Lyapunov(lyapunov::LyapunovArgs),
    /// Sandpile avalanche sizes under random grain drops
    Sandpile(sandpile::SandpileArgs),
    /// Compression-based description length and logical depth proxies
    Describe(describe::DescribeArgs),
    /// Sample-count cost sweep of the convolution reconstruction
    KdeSweep(kde::KdeSweepArgs),
    /// Agent-count cost sweep of annealed gradient descent
    AnnealSweep(anneal::AnnealSweepArgs),
    /// Constant-complexity edge budget on an airport network
    NetworkBudget(network::NetworkBudgetArgs),
}

impl Command {
    pub fn run(self) -> Result<()> {
        match self {
            Command::Entropy(args) => args.run(),
            Command::Fractal(args) => args.run(),
            Command::Lacunarity(args) => args.run(),
            Command::Lyapunov(args) => args.run(),
            Command::Sandpile(args) => args.run(),
            Command::Describe(args) => args.run(),
            Command::KdeSweep(args) => args.run(),
            Command::AnnealSweep(args) => args.run(),
            Command::NetworkBudget(args) => args.run(),
        }
    }
}

/// Parse a comma-separated list of unsigned integers.
pub(crate) fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| cplx_core::Error::config(format!("invalid integer {tok:?} in list")))
        })
        .collect()
}
