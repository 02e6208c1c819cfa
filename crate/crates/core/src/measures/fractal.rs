//! Box-counting fractal dimension and gliding-box lacunarity.

use crate::error::{Error, Result};
use crate::measures::grid::BinaryGrid2D;
use crate::stats::ols_line;

/// Per-size occupied-box counts together with the fitted dimension.
#[derive(Debug, Clone)]
pub struct BoxCountFit {
    /// Negated slope of the least-squares line of log N(s) vs log s,
    /// clamped to the planar range [0, 2].
    pub dimension: f64,
    /// (box size, number of boxes containing at least one occupied cell)
    pub counts: Vec<(usize, u64)>,
}

fn validated_sizes(grid: &BinaryGrid2D, box_sizes: &[usize], minimum: usize) -> Result<Vec<usize>> {
    let limit = grid.width().min(grid.height());
    let mut sizes: Vec<usize> = box_sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.contains(&0) {
        return Err(Error::config("box sizes must be positive"));
    }
    if let Some(&too_big) = sizes.iter().find(|&&s| s > limit) {
        return Err(Error::config(format!(
            "box size {too_big} exceeds grid extent {limit}"
        )));
    }
    if sizes.len() < minimum {
        return Err(Error::config(format!(
            "need at least {minimum} distinct box sizes, got {}",
            sizes.len()
        )));
    }
    Ok(sizes)
}

/// Count the boxes of size `s` (anchored at the grid origin) that contain at
/// least one occupied cell. Partial boxes along the far edges participate.
pub fn occupied_boxes(grid: &BinaryGrid2D, s: usize) -> u64 {
    let boxes_w = grid.width().div_ceil(s);
    let boxes_h = grid.height().div_ceil(s);
    let mut seen = vec![false; boxes_w * boxes_h];
    let mut count = 0u64;
    for row in 0..grid.height() {
        for col in 0..grid.width() {
            if grid.get(row, col) {
                let idx = (row / s) * boxes_w + col / s;
                if !seen[idx] {
                    seen[idx] = true;
                    count += 1;
                }
            }
        }
    }
    count
}

/// Estimate the box-counting dimension over the given box sizes.
///
/// Requires at least three distinct sizes, each within the grid extent, and
/// a non-empty grid.
pub fn box_counting_dimension(grid: &BinaryGrid2D, box_sizes: &[usize]) -> Result<BoxCountFit> {
    let sizes = validated_sizes(grid, box_sizes, 3)?;
    if grid.is_empty() {
        return Err(Error::domain("box counting requires an occupied grid"));
    }
    let counts: Vec<(usize, u64)> = sizes
        .iter()
        .map(|&s| (s, occupied_boxes(grid, s)))
        .collect();
    let points: Vec<(f64, f64)> = counts
        .iter()
        .map(|&(s, n)| ((s as f64).ln(), (n as f64).ln()))
        .collect();
    let (slope, _) = ols_line(&points)
        .ok_or_else(|| Error::config("box sizes do not span distinct scales"))?;
    Ok(BoxCountFit {
        dimension: (-slope).clamp(0.0, 2.0),
        counts,
    })
}

/// Gliding-box lacunarity `Λ(s) = E[m²] / E[m]²` where `m` is the occupied
/// count inside each s-by-s window (all positions, stride 1).
pub fn lacunarity(grid: &BinaryGrid2D, box_sizes: &[usize]) -> Result<Vec<(usize, f64)>> {
    let sizes = validated_sizes(grid, box_sizes, 1)?;
    if grid.is_empty() {
        return Err(Error::domain("lacunarity requires an occupied grid"));
    }
    // Summed-area table, one row/column of zero padding.
    let w = grid.width();
    let h = grid.height();
    let mut integral = vec![0u64; (w + 1) * (h + 1)];
    for row in 0..h {
        for col in 0..w {
            let cell = grid.get(row, col) as u64;
            integral[(row + 1) * (w + 1) + (col + 1)] = cell
                + integral[row * (w + 1) + (col + 1)]
                + integral[(row + 1) * (w + 1) + col]
                - integral[row * (w + 1) + col];
        }
    }
    let window_sum = |row: usize, col: usize, s: usize| -> u64 {
        integral[(row + s) * (w + 1) + (col + s)] + integral[row * (w + 1) + col]
            - integral[row * (w + 1) + (col + s)]
            - integral[(row + s) * (w + 1) + col]
    };
    let mut result = Vec::with_capacity(sizes.len());
    for &s in &sizes {
        let positions = ((w - s + 1) * (h - s + 1)) as f64;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for row in 0..=(h - s) {
            for col in 0..=(w - s) {
                let m = window_sum(row, col, s) as f64;
                sum += m;
                sum_sq += m * m;
            }
        }
        let mean = sum / positions;
        let mean_sq = sum_sq / positions;
        if mean == 0.0 {
            // Unreachable for a non-empty grid: every occupied cell lies in
            // at least one window.
            return Err(Error::internal("gliding-box mean vanished"));
        }
        result.push((s, mean_sq / (mean * mean)));
    }
    Ok(result)
}
