//! Binary occupancy grids: the discrete shape carrier for the geometrical
//! measures, plus parsing of PBM-style ASCII files and a few reference
//! rasters (line, filled block, Koch curve).

use crate::error::{Error, Result};
use crate::rng::Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryGrid2D {
    width: usize,
    height: usize,
    cells: Vec<bool>, // row-major
}

impl BinaryGrid2D {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::config("grid dimensions must be positive"));
        }
        Ok(BinaryGrid2D {
            width,
            height,
            cells: vec![false; width * height],
        })
    }

    pub fn from_cells(width: usize, height: usize, cells: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::config("grid dimensions must be positive"));
        }
        if cells.len() != width * height {
            return Err(Error::config(format!(
                "expected {} cells for a {}x{} grid, got {}",
                width * height,
                width,
                height,
                cells.len()
            )));
        }
        Ok(BinaryGrid2D {
            width,
            height,
            cells,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.cells[row * self.width + col] = value;
    }

    pub fn occupied_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.cells.iter().any(|&c| c)
    }

    /// Parse a PBM-style ASCII grid: a `P1` magic token, then `width height`,
    /// then `width*height` binary digits row-major. Digits may be packed
    /// (`0110`) or whitespace-separated; `#` starts a comment to end of line.
    pub fn parse_pbm(text: &str) -> Result<Self> {
        let mut tokens: Vec<(usize, String)> = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line = raw_line.split('#').next().unwrap_or("");
            for tok in line.split_whitespace() {
                tokens.push((idx + 1, tok.to_string()));
            }
        }
        let mut iter = tokens.into_iter();
        let (line, magic) = iter
            .next()
            .ok_or_else(|| Error::parse(1, "empty grid file"))?;
        if magic != "P1" {
            return Err(Error::parse(line, format!("expected P1 magic, got {magic:?}")));
        }
        let mut next_number = |what: &str| -> Result<(usize, usize)> {
            let (line, tok) = iter
                .next()
                .ok_or_else(|| Error::parse(0, format!("missing {what}")))?;
            let v = tok
                .parse::<usize>()
                .map_err(|_| Error::parse(line, format!("invalid {what}: {tok:?}")))?;
            Ok((line, v))
        };
        let (_, width) = next_number("width")?;
        let (line_h, height) = next_number("height")?;
        if width == 0 || height == 0 {
            return Err(Error::parse(line_h, "grid dimensions must be positive"));
        }
        let mut cells = Vec::with_capacity(width * height);
        let mut last_line = line_h;
        for (line, tok) in iter {
            last_line = line;
            for ch in tok.chars() {
                match ch {
                    '0' => cells.push(false),
                    '1' => cells.push(true),
                    other => {
                        return Err(Error::parse(line, format!("invalid cell digit {other:?}")))
                    }
                }
            }
        }
        if cells.len() != width * height {
            return Err(Error::parse(
                last_line,
                format!(
                    "expected {} cells for a {width}x{height} grid, found {}",
                    width * height,
                    cells.len()
                ),
            ));
        }
        Self::from_cells(width, height, cells)
    }

    /// Serialize in the same PBM-style ASCII format `parse_pbm` accepts.
    pub fn to_pbm(&self) -> String {
        let mut out = String::with_capacity(self.cells.len() + 32);
        out.push_str("P1\n");
        out.push_str(&format!("{} {}\n", self.width, self.height));
        for row in 0..self.height {
            for col in 0..self.width {
                out.push(if self.get(row, col) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// A single fully occupied horizontal line through the middle row.
    pub fn horizontal_line(size: usize) -> Result<Self> {
        let mut grid = Self::new(size, size)?;
        let row = size / 2;
        for col in 0..size {
            grid.set(row, col, true);
        }
        Ok(grid)
    }

    /// Every cell occupied.
    pub fn filled(size: usize) -> Result<Self> {
        let mut grid = Self::new(size, size)?;
        grid.cells.fill(true);
        Ok(grid)
    }

    /// Occupy each cell independently with probability `fraction`.
    pub fn random_occupancy(size: usize, fraction: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&fraction) {
            return Err(Error::config("occupancy fraction must lie in [0, 1]"));
        }
        let mut grid = Self::new(size, size)?;
        let mut rng = Rng::new(seed);
        for cell in grid.cells.iter_mut() {
            *cell = rng.next_f64() < fraction;
        }
        Ok(grid)
    }

    /// Rasterize the Koch curve of the given recursion depth onto a
    /// `3^depth`-wide square grid, baseline along the bottom edge.
    ///
    /// The polyline is built by the usual four-segment replacement (each
    /// segment split in thirds with a 60-degree peak) and drawn with
    /// Bresenham segments.
    pub fn koch_curve(depth: u32) -> Result<Self> {
        if depth == 0 || depth > 8 {
            return Err(Error::config("koch depth must lie in 1..=8"));
        }
        let size = 3usize.pow(depth);
        let mut points: Vec<(f64, f64)> = vec![(0.0, 0.0), (1.0, 0.0)];
        for _ in 0..depth {
            let mut refined = Vec::with_capacity(points.len() * 4);
            for pair in points.windows(2) {
                let (x0, y0) = pair[0];
                let (x1, y1) = pair[1];
                let dx = (x1 - x0) / 3.0;
                let dy = (y1 - y0) / 3.0;
                let a = (x0 + dx, y0 + dy);
                let b = (x0 + 2.0 * dx, y0 + 2.0 * dy);
                // peak: rotate the middle third by +60 degrees about `a`
                let (cos60, sin60) = (0.5, 3f64.sqrt() / 2.0);
                let peak = (a.0 + dx * cos60 - dy * sin60, a.1 + dx * sin60 + dy * cos60);
                refined.push((x0, y0));
                refined.push(a);
                refined.push(peak);
                refined.push(b);
            }
            refined.push(*points.last().unwrap());
            points = refined;
        }
        let mut grid = Self::new(size, size)?;
        let scale = (size - 1) as f64;
        let to_cell = |p: (f64, f64)| -> (i64, i64) {
            let col = (p.0 * scale).round() as i64;
            // y grows upward; row 0 is the bottom of the raster
            let row = (p.1 * scale).round() as i64;
            (row, col)
        };
        for pair in points.windows(2) {
            let (r0, c0) = to_cell(pair[0]);
            let (r1, c1) = to_cell(pair[1]);
            grid.draw_segment(r0, c0, r1, c1);
        }
        Ok(grid)
    }

    fn draw_segment(&mut self, r0: i64, c0: i64, r1: i64, c1: i64) {
        // Bresenham over integer cells, clamped to the grid.
        let dc = (c1 - c0).abs();
        let dr = -(r1 - r0).abs();
        let step_c = if c0 < c1 { 1 } else { -1 };
        let step_r = if r0 < r1 { 1 } else { -1 };
        let mut err = dc + dr;
        let (mut r, mut c) = (r0, c0);
        loop {
            if r >= 0 && c >= 0 && (r as usize) < self.height && (c as usize) < self.width {
                self.set(r as usize, c as usize, true);
            }
            if r == r1 && c == c1 {
                break;
            }
            let e2 = 2 * err;
            if e2 >= dr {
                err += dr;
                c += step_c;
            }
            if e2 <= dc {
                err += dc;
                r += step_r;
            }
        }
    }
}
