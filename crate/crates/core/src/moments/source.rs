use alloc::vec;
use alloc::vec::Vec;

use super::{MomentKind, MomentSource, MomentTable};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub w: f64,
}

/// Weighted point masses.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PointCloud {
    pub points: Vec<Point>,
}

impl PointCloud {
    pub fn new(points: Vec<Point>) -> Self {
        Self { points }
    }

    pub fn total_weight(&self) -> f64 {
        self.points.iter().map(|p| p.w).sum()
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Self {
        Self::new(
            self.points
                .iter()
                .map(|p| Point { x: p.x + dx, y: p.y + dy, w: p.w })
                .collect(),
        )
    }

    /// Image of the density under `(x, y) ↦ s·(x, y)`: coordinates scale by
    /// `s` and each mass by the area factor `s²`.
    pub fn scaled(&self, s: f64) -> Self {
        Self::new(
            self.points
                .iter()
                .map(|p| Point { x: s * p.x, y: s * p.y, w: s * s * p.w })
                .collect(),
        )
    }
}

impl MomentSource for PointCloud {
    fn geometric_moments(&self, max_order: u32) -> Result<MomentTable> {
        if max_order < 2 {
            return Err(Error::Domain("moment order must be at least 2"));
        }
        if self.total_weight() == 0.0 {
            return Err(Error::DegenerateInput("zero total mass"));
        }
        let points = self.points.iter().map(|p| (p.x, p.y, p.w));
        Ok(accumulate(points, max_order))
    }
}

fn accumulate(points: impl Iterator<Item = (f64, f64, f64)>, max_order: u32) -> MomentTable {
    let order = max_order as usize;
    let mut sums = vec![vec![0.0f64; order + 1]; order + 1];
    let mut xs = vec![0.0; order + 1];
    let mut ys = vec![0.0; order + 1];
    for (x, y, w) in points {
        if w == 0.0 {
            continue;
        }
        xs[0] = 1.0;
        ys[0] = 1.0;
        for k in 1..=order {
            xs[k] = xs[k - 1] * x;
            ys[k] = ys[k - 1] * y;
        }
        for p in 0..=order {
            for q in 0..=order - p {
                sums[p][q] += w * xs[p] * ys[q];
            }
        }
    }
    let mut table = MomentTable::new(MomentKind::Geometric, max_order);
    for p in 0..=order {
        for q in 0..=order - p {
            table.set(p as u32, q as u32, sums[p][q]);
        }
    }
    table
}

/// Counterclockwise rotation by `theta` about the origin.
pub fn rotate_point_cloud(pc: &PointCloud, theta: f64) -> PointCloud {
    let (s, c) = libm::sincos(theta);
    PointCloud::new(
        pc.points
            .iter()
            .map(|p| Point {
                x: c * p.x - s * p.y,
                y: s * p.x + c * p.y,
                w: p.w,
            })
            .collect(),
    )
}

/// Grey-level raster, row 0 at the top.
///
/// Pixel `(col, row)` is the unit square centred at
/// `(col + 0.5, height − row − 0.5)`, so the y axis points up.
#[derive(Clone, Debug, PartialEq)]
pub struct RasterImage {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
}

impl RasterImage {
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Domain("raster dimensions must be positive"));
        }
        if pixels.len() != width * height {
            return Err(Error::Domain("pixel count does not match dimensions"));
        }
        if pixels.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::Domain("pixel values must be finite and nonnegative"));
        }
        Ok(Self { width, height, pixels })
    }

    /// Samples `f(x, y)` at every pixel centre.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(f64, f64) -> f64) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width * height);
        for row in 0..height {
            for col in 0..width {
                let (x, y) = pixel_center(height, col, row);
                pixels.push(f(x, y));
            }
        }
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn get(&self, col: usize, row: usize) -> f64 {
        self.pixels[row * self.width + col]
    }

    pub fn center(&self) -> (f64, f64) {
        (self.width as f64 / 2.0, self.height as f64 / 2.0)
    }

    /// Bilinear interpolation at `(x, y)`, zero outside the image.
    pub fn sample(&self, x: f64, y: f64) -> f64 {
        let fc = x - 0.5;
        let fr = self.height as f64 - y - 0.5;
        let c0 = libm::floor(fc);
        let r0 = libm::floor(fr);
        let (tx, ty) = (fc - c0, fr - r0);
        let fetch = |c: f64, r: f64| {
            if c < 0.0 || r < 0.0 || c >= self.width as f64 || r >= self.height as f64 {
                0.0
            } else {
                self.get(c as usize, r as usize)
            }
        };
        let top = fetch(c0, r0) * (1.0 - tx) + fetch(c0 + 1.0, r0) * tx;
        let bottom = fetch(c0, r0 + 1.0) * (1.0 - tx) + fetch(c0 + 1.0, r0 + 1.0) * tx;
        top * (1.0 - ty) + bottom * ty
    }
}

fn pixel_center(height: usize, col: usize, row: usize) -> (f64, f64) {
    (col as f64 + 0.5, height as f64 - row as f64 - 0.5)
}

impl MomentSource for RasterImage {
    fn geometric_moments(&self, max_order: u32) -> Result<MomentTable> {
        if max_order < 2 {
            return Err(Error::Domain("moment order must be at least 2"));
        }
        if self.pixels.iter().all(|v| *v == 0.0) {
            return Err(Error::DegenerateInput("raster has no nonzero pixel"));
        }
        let h = self.height;
        let w = self.width;
        let points = (0..h).flat_map(move |row| {
            (0..w).map(move |col| {
                let (x, y) = pixel_center(h, col, row);
                (x, y, self.pixels[row * w + col])
            })
        });
        Ok(accumulate(points, max_order))
    }
}

/// Counterclockwise rotation by `theta` about the image centre, resampled
/// bilinearly onto a grid of the same size.
pub fn rotate_raster(img: &RasterImage, theta: f64) -> RasterImage {
    let (s, c) = libm::sincos(theta);
    let (cx, cy) = img.center();
    let pixels = (0..img.height)
        .flat_map(|row| (0..img.width).map(move |col| (col, row)))
        .map(|(col, row)| {
            let (x, y) = pixel_center(img.height, col, row);
            let (dx, dy) = (x - cx, y - cy);
            // inverse map
            img.sample(cx + c * dx + s * dy, cy - s * dx + c * dy)
        })
        .collect();
    RasterImage {
        width: img.width,
        height: img.height,
        pixels,
    }
}
