//! Cost-based complexity toolkit.
//!
//! The library has two halves. [`measures`] collects classical complexity
//! quantifiers (Shannon entropy, box-counting dimension and lacunarity,
//! the largest Lyapunov exponent, sandpile avalanches, and compression-based
//! proxies for description length and logical depth). [`cost`] frames
//! complexity as the combined cost of building a model and operating it,
//! and the three experiment modules ([`kde`], [`anneal`], [`network`]) trace
//! that trade-off over a swept parameter, each emitting a normalized
//! [`cost::CostCurve`].

pub mod anneal;
pub mod cost;
pub mod kde;
pub mod measures;
pub mod network;
pub mod rng;
pub mod stats;

mod error;

pub use error::{Error, Result};
