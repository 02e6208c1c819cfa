//! Classical complexity quantifiers, each a pure deterministic function of
//! its inputs (plus an explicit seed where randomness is involved).

pub mod entropy;
pub mod fractal;
pub mod grid;
pub mod lyapunov;
pub mod lz77;
pub mod mdl;
pub mod sandpile;

pub use entropy::{shannon_entropy, SymbolDistribution};
pub use fractal::{box_counting_dimension, lacunarity, BoxCountFit};
pub use grid::BinaryGrid2D;
pub use lyapunov::{
    iterate_map_pair, largest_lyapunov, largest_lyapunov_windowed, MapId, TrajectoryPair,
};
pub use mdl::{description_length_proxy, logical_depth_proxy, DescriptionLength};
pub use sandpile::{sandpile_avalanches, Sandpile};
