//! Persistence images: points mapped to (birth, persistence), each spread
//! as an isotropic Gaussian integrated exactly over the grid cells and
//! weighted linearly in persistence.

use serde::{Deserialize, Serialize};
use statrs::function::erf::erf;

use super::PersistenceDiagram;
use crate::error::Error;

/// Fixed grid over (birth, persistence), shared by every diagram of a corpus.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImageGrid {
    pub birth_min: f64,
    pub birth_max: f64,
    pub persistence_max: f64,
    pub rows: usize,
    pub cols: usize,
}

impl ImageGrid {
    pub fn cell_width(&self) -> f64 {
        (self.birth_max - self.birth_min) / self.cols as f64
    }

    pub fn cell_height(&self) -> f64 {
        self.persistence_max / self.rows as f64
    }

    /// Half the cell diagonal.
    pub fn default_bandwidth(&self) -> f64 {
        self.cell_width().hypot(self.cell_height()) / 2.0
    }

    /// Grid covering the given (birth, persistence) points, with a cell of
    /// margin on each side. Degenerate ranges are widened to unit length.
    pub fn covering(points: impl IntoIterator<Item = (f64, f64)>, rows: usize, cols: usize) -> Self {
        let (mut bmin, mut bmax, mut pmax) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
        for (b, p) in points {
            bmin = bmin.min(b);
            bmax = bmax.max(b);
            pmax = pmax.max(p);
        }
        if !bmin.is_finite() {
            (bmin, bmax) = (0.0, 1.0);
        }
        if bmax <= bmin {
            bmax = bmin + 1.0;
        }
        if pmax <= 0.0 {
            pmax = 1.0;
        }
        let pad_b = (bmax - bmin) / cols as f64;
        let pad_p = pmax / rows as f64;
        ImageGrid {
            birth_min: bmin - pad_b,
            birth_max: bmax + pad_b,
            persistence_max: pmax + pad_p,
            rows,
            cols,
        }
    }
}

/// Image parameters. `bandwidth = None` means half the cell diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImageParams {
    pub rows: usize,
    pub cols: usize,
    pub bandwidth: Option<f64>,
    /// Essential deaths become `m + essential_margin * |m|`, with `m` the
    /// corpus-wide maximum finite value.
    pub essential_margin: f64,
}

impl Default for ImageParams {
    fn default() -> Self {
        ImageParams {
            rows: 20,
            cols: 20,
            bandwidth: None,
            essential_margin: 0.05,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PersistenceImage {
    pub dim: usize,
    pub rows: usize,
    pub cols: usize,
    pub bandwidth: f64,
    pub weight: &'static str,
    /// Row-major; row 0 is the lowest persistence band.
    pub pixels: Vec<f64>,
}

/// Mass of N(center, sigma²) on `[lo, hi]`.
fn interval_mass(lo: f64, hi: f64, center: f64, sigma: f64) -> f64 {
    let s = sigma * std::f64::consts::SQRT_2;
    0.5 * (erf((hi - center) / s) - erf((lo - center) / s))
}

/// Image of the dimension-`dim` points of `d`. Essential points are closed
/// at `essential_death`; zero-persistence points are skipped. The weight of
/// a point is its persistence over the grid's persistence range, capped at 1.
pub fn persistence_image(
    d: &PersistenceDiagram,
    dim: usize,
    grid: &ImageGrid,
    bandwidth: f64,
    essential_death: f64,
) -> Result<PersistenceImage, Error> {
    if bandwidth.is_nan() || bandwidth <= 0.0 {
        return Err(Error::Parameter(format!("bandwidth must be positive, got {bandwidth}")));
    }
    let (w, h) = (grid.cell_width(), grid.cell_height());
    let mut pixels = vec![0.0; grid.rows * grid.cols];
    for p in d.off_diagonal(dim) {
        let death = if p.is_essential() { essential_death } else { p.death };
        let pers = death - p.birth;
        if pers <= 0.0 {
            continue;
        }
        let weight = (pers / grid.persistence_max).min(1.0);
        let col_mass: Vec<f64> = (0..grid.cols)
            .map(|c| {
                let lo = grid.birth_min + c as f64 * w;
                interval_mass(lo, lo + w, p.birth, bandwidth)
            })
            .collect();
        for r in 0..grid.rows {
            let lo = r as f64 * h;
            let row_mass = weight * interval_mass(lo, lo + h, pers, bandwidth);
            for (c, m) in col_mass.iter().enumerate() {
                pixels[r * grid.cols + c] += row_mass * m;
            }
        }
    }
    Ok(PersistenceImage {
        dim,
        rows: grid.rows,
        cols: grid.cols,
        bandwidth,
        weight: "linear",
        pixels,
    })
}
