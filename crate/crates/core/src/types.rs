//! Dense tensor value types shared by every other module.
//!
//! All stacks use one canonical layout: row-major with `(row, column,
//! channel)` indexing, i.e. element `(h, w, c)` of an `H x W x C` stack lives
//! at `(h * W + w) * C + c`. Values are normalized floating point; 8-bit
//! inputs are divided by 255 on ingest. Every type validates its invariants
//! at construction and is immutable afterwards, so instances can be shared
//! freely across threads.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
fn check_dims(context: &'static str, dims: &[usize]) -> Result<()> {
    if dims.iter().any(|&d| d == 0) {
        return Err(Error::InvalidConfig(format!(
            "{context}: zero-sized dimension in {dims:?}"
        )));
    }
    Ok(())
}

#[inline]
fn check_len(context: &'static str, expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::InvalidConfig(format!(
            "{context}: data length {actual} does not match shape ({expected} elements)"
        )));
    }
    Ok(())
}

/// A plain `H x W` real-valued image. Working buffer for measurements,
/// score maps, probability fields and reconstructed frames; unlike the
/// domain stacks below it is mutable.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl Plane {
    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        check_dims("Plane", &[height, width])?;
        check_len("Plane", height * width, data.len())?;
        for &v in &data {
            if !v.is_finite() {
                return Err(Error::OutOfRange {
                    context: "Plane value",
                    value: v,
                    lo: f64::NEG_INFINITY,
                    hi: f64::INFINITY,
                });
            }
        }
        Ok(Plane {
            height,
            width,
            data,
        })
    }

    pub fn zeros(height: usize, width: usize) -> Self {
        Plane {
            height,
            width,
            data: vec![0.0; height * width],
        }
    }

    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(height * width);
        for h in 0..height {
            for w in 0..width {
                data.push(f(h, w));
            }
        }
        Plane {
            height,
            width,
            data,
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    #[inline]
    pub fn get(&self, h: usize, w: usize) -> f64 {
        self.data[h * self.width + w]
    }

    #[inline]
    pub fn set(&mut self, h: usize, w: usize, v: f64) {
        self.data[h * self.width + w] = v;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn min_max(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in &self.data {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }

    pub fn mean(&self) -> f64 {
        self.data.iter().sum::<f64>() / self.data.len() as f64
    }
}

/// `H x W x C` stack of ground-truth luminance frames, values in `[0, 1]`.
/// `C` is the compression rate: the number of frames folded into one
/// measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameCube {
    height: usize,
    width: usize,
    depth: usize,
    data: Vec<f64>,
}

impl FrameCube {
    pub fn new(height: usize, width: usize, depth: usize, data: Vec<f64>) -> Result<Self> {
        check_dims("FrameCube", &[height, width, depth])?;
        check_len("FrameCube", height * width * depth, data.len())?;
        for &v in &data {
            if !(v.is_finite() && (0.0..=1.0).contains(&v)) {
                return Err(Error::OutOfRange {
                    context: "FrameCube value",
                    value: v,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        Ok(FrameCube {
            height,
            width,
            depth,
            data,
        })
    }

    /// Stacks `C` planes (frame order = channel order) into a cube.
    pub fn from_planes(planes: &[Plane]) -> Result<Self> {
        let first = planes.first().ok_or_else(|| {
            Error::InvalidConfig("FrameCube::from_planes: no frames".into())
        })?;
        let (height, width) = first.dims();
        let depth = planes.len();
        let mut data = vec![0.0; height * width * depth];
        for (c, plane) in planes.iter().enumerate() {
            if plane.dims() != (height, width) {
                return Err(Error::DimensionMismatch {
                    left: vec![height, width],
                    right: vec![plane.height(), plane.width()],
                });
            }
            for h in 0..height {
                for w in 0..width {
                    data[(h * width + w) * depth + c] = plane.get(h, w);
                }
            }
        }
        FrameCube::new(height, width, depth, data)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Frames per measurement (the compression rate).
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.height, self.width, self.depth)
    }

    #[inline]
    pub fn get(&self, h: usize, w: usize, c: usize) -> f64 {
        self.data[(h * self.width + w) * self.depth + c]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Copies out frame `c` as a plane.
    pub fn frame(&self, c: usize) -> Plane {
        assert!(c < self.depth, "frame index out of range");
        Plane::from_fn(self.height, self.width, |h, w| self.get(h, w, c))
    }

    pub fn to_f32_vec(&self) -> Vec<f32> {
        self.data.iter().map(|&v| v as f32).collect()
    }
}

/// `H x W x C` binary coding masks: element `(h, w, c)` decides whether
/// frame `c` contributes to the measurement at pixel `(h, w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskStack {
    height: usize,
    width: usize,
    depth: usize,
    data: Vec<u8>,
}

impl MaskStack {
    pub fn new(height: usize, width: usize, depth: usize, data: Vec<u8>) -> Result<Self> {
        check_dims("MaskStack", &[height, width, depth])?;
        check_len("MaskStack", height * width * depth, data.len())?;
        for &v in &data {
            if v > 1 {
                return Err(Error::OutOfRange {
                    context: "MaskStack value",
                    value: v as f64,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        Ok(MaskStack {
            height,
            width,
            depth,
            data,
        })
    }

    /// Rebuilds a stack from floating-point storage; every element must be
    /// exactly 0.0 or 1.0.
    pub fn from_f32(height: usize, width: usize, depth: usize, data: &[f32]) -> Result<Self> {
        check_len("MaskStack", height * width * depth, data.len())?;
        let mut out = Vec::with_capacity(data.len());
        for &v in data {
            if v == 0.0 {
                out.push(0u8);
            } else if v == 1.0 {
                out.push(1u8);
            } else {
                return Err(Error::OutOfRange {
                    context: "MaskStack value",
                    value: v as f64,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        MaskStack::new(height, width, depth, out)
    }

    pub fn all_ones(height: usize, width: usize, depth: usize) -> Self {
        MaskStack {
            height,
            width,
            depth,
            data: vec![1; height * width * depth],
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.height, self.width, self.depth)
    }

    #[inline]
    pub fn get(&self, h: usize, w: usize, c: usize) -> u8 {
        self.data[(h * self.width + w) * self.depth + c]
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn is_all_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Fraction of active elements.
    pub fn mean(&self) -> f64 {
        self.data.iter().map(|&v| v as u64).sum::<u64>() as f64 / self.data.len() as f64
    }

    pub fn to_f32_vec(&self) -> Vec<f32> {
        self.data.iter().map(|&v| v as f32).collect()
    }
}

/// One `H x W` compressed snapshot: the masked sum of `C` frames plus
/// optional noise. `capture_index` is the position of this measurement in
/// its sequence. Noiseless values lie in `[0, C]`; noisy values are stored
/// as captured, without clipping.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    height: usize,
    width: usize,
    capture_index: usize,
    data: Vec<f64>,
}

impl Measurement {
    pub fn new(height: usize, width: usize, capture_index: usize, data: Vec<f64>) -> Result<Self> {
        check_dims("Measurement", &[height, width])?;
        check_len("Measurement", height * width, data.len())?;
        for &v in &data {
            if !v.is_finite() {
                return Err(Error::OutOfRange {
                    context: "Measurement value",
                    value: v,
                    lo: f64::NEG_INFINITY,
                    hi: f64::INFINITY,
                });
            }
        }
        Ok(Measurement {
            height,
            width,
            capture_index,
            data,
        })
    }

    pub fn from_f32(height: usize, width: usize, capture_index: usize, data: &[f32]) -> Result<Self> {
        Measurement::new(
            height,
            width,
            capture_index,
            data.iter().map(|&v| v as f64).collect(),
        )
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn capture_index(&self) -> usize {
        self.capture_index
    }

    #[inline]
    pub fn get(&self, h: usize, w: usize) -> f64 {
        self.data[h * self.width + w]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn to_plane(&self) -> Plane {
        Plane {
            height: self.height,
            width: self.width,
            data: self.data.clone(),
        }
    }

    pub fn to_f32_vec(&self) -> Vec<f32> {
        self.data.iter().map(|&v| v as f32).collect()
    }
}

/// `H x W x D` stack of binary detection maps. The depth always equals the
/// configured maximum number of detections `D`; maps beyond the detections
/// actually found stay all-zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaliencyStack {
    height: usize,
    width: usize,
    depth: usize,
    data: Vec<u8>,
}

impl SaliencyStack {
    pub fn new(height: usize, width: usize, depth: usize, data: Vec<u8>) -> Result<Self> {
        check_dims("SaliencyStack", &[height, width, depth])?;
        check_len("SaliencyStack", height * width * depth, data.len())?;
        for &v in &data {
            if v > 1 {
                return Err(Error::OutOfRange {
                    context: "SaliencyStack value",
                    value: v as f64,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        Ok(SaliencyStack {
            height,
            width,
            depth,
            data,
        })
    }

    /// D all-zero maps (no detections).
    pub fn empty(height: usize, width: usize, depth: usize) -> Self {
        SaliencyStack {
            height,
            width,
            depth,
            data: vec![0; height * width * depth],
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Maximum number of detections `D`.
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.height, self.width, self.depth)
    }

    #[inline]
    pub fn get(&self, h: usize, w: usize, d: usize) -> u8 {
        self.data[(h * self.width + w) * self.depth + d]
    }

    /// Number of detection maps covering pixel `(h, w)`.
    #[inline]
    pub fn coverage(&self, h: usize, w: usize) -> usize {
        let base = (h * self.width + w) * self.depth;
        self.data[base..base + self.depth]
            .iter()
            .map(|&v| v as usize)
            .sum()
    }

    /// Whether any map marks pixel `(h, w)`.
    pub fn any_at(&self, h: usize, w: usize) -> bool {
        self.coverage(h, w) > 0
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    /// Ones in map `d`.
    pub fn map_area(&self, d: usize) -> usize {
        let mut n = 0;
        for h in 0..self.height {
            for w in 0..self.width {
                n += self.get(h, w, d) as usize;
            }
        }
        n
    }

    pub fn to_f32_vec(&self) -> Vec<f32> {
        self.data.iter().map(|&v| v as f32).collect()
    }
}

/// Per-pixel Bernoulli parameters in `[0, 1]` used to sample the next mask
/// stack. `floor` records the background probability assigned to pixels
/// without any detection (zero when the map was not built from saliency).
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMap {
    height: usize,
    width: usize,
    floor: f64,
    data: Vec<f64>,
}

impl ProbabilityMap {
    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        Self::with_floor(height, width, 0.0, data)
    }

    pub fn with_floor(height: usize, width: usize, floor: f64, data: Vec<f64>) -> Result<Self> {
        check_dims("ProbabilityMap", &[height, width])?;
        check_len("ProbabilityMap", height * width, data.len())?;
        for &v in &data {
            if !(v.is_finite() && (0.0..=1.0).contains(&v)) {
                return Err(Error::OutOfRange {
                    context: "ProbabilityMap value",
                    value: v,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        if !(floor.is_finite() && (0.0..=1.0).contains(&floor)) {
            return Err(Error::OutOfRange {
                context: "ProbabilityMap floor",
                value: floor,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(ProbabilityMap {
            height,
            width,
            floor,
            data,
        })
    }

    pub fn uniform(height: usize, width: usize, p: f64) -> Result<Self> {
        Self::new(height, width, vec![p; height * width])
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    /// Background probability assigned where no detection hit.
    pub fn floor(&self) -> f64 {
        self.floor
    }

    #[inline]
    pub fn get(&self, h: usize, w: usize) -> f64 {
        self.data[h * self.width + w]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// `Some(v)` when every pixel equals `v`.
    pub fn uniform_value(&self) -> Option<f64> {
        let first = self.data[0];
        self.data.iter().all(|&v| v == first).then_some(first)
    }

    pub fn to_f32_vec(&self) -> Vec<f32> {
        self.data.iter().map(|&v| v as f32).collect()
    }
}

/// Additive measurement noise model. `None` ignores any sigma.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum NoiseModel {
    None,
    Gaussian { sigma: f64 },
}

impl NoiseModel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            NoiseModel::None => Ok(()),
            NoiseModel::Gaussian { sigma } => {
                if sigma.is_finite() && sigma >= 0.0 {
                    Ok(())
                } else {
                    Err(Error::OutOfRange {
                        context: "NoiseModel sigma",
                        value: sigma,
                        lo: 0.0,
                        hi: f64::INFINITY,
                    })
                }
            }
        }
    }
}

impl Default for NoiseModel {
    fn default() -> Self {
        NoiseModel::None
    }
}

/// Succeeds iff frames and masks agree in all three dimensions.
pub fn validate_dimensions(frames: &FrameCube, masks: &MaskStack) -> Result<()> {
    if frames.dims() != masks.dims() {
        let (fh, fw, fc) = frames.dims();
        let (mh, mw, mc) = masks.dims();
        return Err(Error::DimensionMismatch {
            left: vec![fh, fw, fc],
            right: vec![mh, mw, mc],
        });
    }
    Ok(())
}
