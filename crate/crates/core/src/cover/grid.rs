use serde::{Deserialize, Serialize};

use super::CoverError;
use crate::C64;

/// One base axis: `points` samples of `center + half_width · t`, with `t`
/// evenly spaced on `[−1, 1]`. A complex axis samples the square
/// `center + half_width · (s + i t)` with `points × points` nodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisSpec {
    pub center: C64,
    pub half_width: f64,
    pub points: usize,
    #[serde(default)]
    pub complex: bool,
}

impl AxisSpec {
    pub fn real(center: f64, half_width: f64, points: usize) -> Self {
        AxisSpec {
            center: C64::new(center, 0.0),
            half_width,
            points,
            complex: false,
        }
    }

    pub fn complex(center: C64, half_width: f64, points: usize) -> Self {
        AxisSpec {
            center,
            half_width,
            points,
            complex: true,
        }
    }

    fn offsets(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![0.0];
        }
        let m = (self.points - 1) as f64;
        (0..self.points)
            .map(|k| self.half_width * (2.0 * k as f64 / m - 1.0))
            .collect()
    }

    pub fn values(&self) -> Vec<C64> {
        let off = self.offsets();
        if self.complex {
            off.iter()
                .flat_map(|&s| off.iter().map(move |&t| C64::new(s, t)))
                .map(|u| self.center + u)
                .collect()
        } else {
            off.iter().map(|&s| self.center + s).collect()
        }
    }

    /// Distance between neighbouring nodes.
    pub fn spacing(&self) -> f64 {
        if self.points < 2 {
            0.0
        } else {
            2.0 * self.half_width / (self.points - 1) as f64
        }
    }

    pub fn len(&self) -> usize {
        if self.complex {
            self.points * self.points
        } else {
            self.points
        }
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }
}

/// Tensor grid over the base. Points are enumerated with the last axis
/// varying fastest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GridSpec {
    pub axes: Vec<AxisSpec>,
}

impl GridSpec {
    pub fn new(axes: Vec<AxisSpec>) -> Self {
        GridSpec { axes }
    }

    pub fn validate(&self, d: usize) -> Result<(), CoverError> {
        if self.axes.len() != d {
            return Err(CoverError::AxisCount {
                expected: d,
                got: self.axes.len(),
            });
        }
        if d > 2 && self.axes.iter().any(|a| a.complex) {
            return Err(CoverError::ComplexAxesTooMany { d });
        }
        for (i, a) in self.axes.iter().enumerate() {
            if a.points == 0 {
                return Err(CoverError::EmptyAxis { axis: i });
            }
            if !(a.half_width.is_finite() && a.half_width >= 0.0) {
                return Err(CoverError::BadAxis {
                    axis: i,
                    message: format!("half-width must be finite and non-negative, got {}", a.half_width),
                });
            }
            if !(a.center.re.is_finite() && a.center.im.is_finite()) {
                return Err(CoverError::BadAxis {
                    axis: i,
                    message: "center is not finite".into(),
                });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(AxisSpec::len).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<Vec<C64>> {
        let mut out: Vec<Vec<C64>> = vec![Vec::new()];
        for axis in &self.axes {
            let vals = axis.values();
            out = out
                .into_iter()
                .flat_map(|p| {
                    vals.iter().map(move |&v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Index pairs of grid neighbours along each real axis direction.
    pub fn neighbours(&self) -> Vec<(usize, usize)> {
        let dims: Vec<usize> = self
            .axes
            .iter()
            .flat_map(|a| if a.complex { vec![a.points, a.points] } else { vec![a.points] })
            .collect();
        let total: usize = dims.iter().product();
        let mut strides = vec![1usize; dims.len()];
        for k in (0..dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * dims[k + 1];
        }
        let mut out = Vec::new();
        for i in 0..total {
            for (&dim, &stride) in dims.iter().zip(&strides) {
                if (i / stride) % dim + 1 < dim {
                    out.push((i, i + stride));
                }
            }
        }
        out
    }
}
