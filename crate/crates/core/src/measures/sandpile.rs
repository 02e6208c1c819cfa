//! Bak-Tang-Wiesenfeld sandpile on a rectangular lattice with open
//! (dissipative) boundaries: grains toppling past the edge are lost.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::rng::Rng;

pub const DEFAULT_THRESHOLD: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sandpile {
    width: usize,
    height: usize,
    threshold: u32,
    heights: Vec<u32>,
    grains_dropped: u64,
    grains_lost: u64,
}

impl Sandpile {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        Self::with_threshold(width, height, DEFAULT_THRESHOLD)
    }

    pub fn with_threshold(width: usize, height: usize, threshold: u32) -> Result<Self> {
        if width < 2 || height < 2 {
            return Err(Error::config("sandpile needs at least a 2x2 grid"));
        }
        // one grain per von Neumann neighbor and per topple unit keeps the
        // grain count conserved, so the threshold must split evenly four ways
        if threshold < 4 || !threshold.is_multiple_of(4) {
            return Err(Error::config("topple threshold must be a positive multiple of 4"));
        }
        Ok(Sandpile {
            width,
            height,
            threshold,
            heights: vec![0; width * height],
            grains_dropped: 0,
            grains_lost: 0,
        })
    }

    /// Preload every cell to the given height (the pile is relaxed first if
    /// the preload is unstable).
    pub fn preloaded(width: usize, height: usize, level: u32) -> Result<Self> {
        let mut pile = Self::new(width, height)?;
        pile.heights.fill(level);
        if level >= pile.threshold {
            let all: Vec<usize> = (0..pile.heights.len()).collect();
            pile.relax(all.into(), false);
        }
        Ok(pile)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn height_at(&self, row: usize, col: usize) -> u32 {
        self.heights[row * self.width + col]
    }

    pub fn total_height(&self) -> u64 {
        self.heights.iter().map(|&h| h as u64).sum()
    }

    pub fn grains_dropped(&self) -> u64 {
        self.grains_dropped
    }

    pub fn grains_lost(&self) -> u64 {
        self.grains_lost
    }

    pub fn is_stable(&self) -> bool {
        self.heights.iter().all(|&h| h < self.threshold)
    }

    /// Drop one grain at the given cell and relax fully. Returns the
    /// avalanche size (number of topple events).
    pub fn drop_at(&mut self, row: usize, col: usize) -> u64 {
        debug_assert!(row < self.height && col < self.width);
        let idx = row * self.width + col;
        self.grains_dropped += 1;
        self.heights[idx] += 1;
        if self.heights[idx] >= self.threshold {
            self.relax(VecDeque::from([idx]), false)
        } else {
            0
        }
    }

    /// Drop one grain on a uniformly random cell.
    pub fn drop_random(&mut self, rng: &mut Rng) -> u64 {
        let idx = rng.index(self.heights.len());
        self.drop_at(idx / self.width, idx % self.width)
    }

    /// Relax all cells in the worklist until stable, counting topples.
    /// `lifo` flips the processing order; the final state is the same either
    /// way (the model is abelian), which the tests assert.
    fn relax(&mut self, mut work: VecDeque<usize>, lifo: bool) -> u64 {
        let mut topples = 0u64;
        while let Some(idx) = if lifo { work.pop_back() } else { work.pop_front() } {
            while self.heights[idx] >= self.threshold {
                self.heights[idx] -= self.threshold;
                topples += 1;
                let row = idx / self.width;
                let col = idx % self.width;
                let share = self.threshold / 4;
                // von Neumann neighborhood; missing neighbors dissipate
                let mut give = |r: isize, c: isize| {
                    if r < 0 || c < 0 || r as usize >= self.height || c as usize >= self.width {
                        self.grains_lost += share as u64;
                    } else {
                        let n = r as usize * self.width + c as usize;
                        self.heights[n] += share;
                        if self.heights[n] >= self.threshold {
                            work.push_back(n);
                        }
                    }
                };
                give(row as isize - 1, col as isize);
                give(row as isize + 1, col as isize);
                give(row as isize, col as isize - 1);
                give(row as isize, col as isize + 1);
            }
        }
        topples
    }
}

/// Drop `grains` grains on uniformly random cells of a fresh pile and record
/// each avalanche size. Deterministic for a fixed seed.
pub fn sandpile_avalanches(
    width: usize,
    height: usize,
    grains: usize,
    seed: u64,
) -> Result<Vec<u64>> {
    if grains < 1 {
        return Err(Error::config("need at least one grain"));
    }
    let mut pile = Sandpile::new(width, height)?;
    let mut rng = Rng::new(seed);
    let mut sizes = Vec::with_capacity(grains);
    for _ in 0..grains {
        sizes.push(pile.drop_random(&mut rng));
    }
    debug_assert!(pile.is_stable());
    Ok(sizes)
}
