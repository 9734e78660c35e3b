use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Two tensors that must agree in shape do not.
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: Vec<usize>, right: Vec<usize> },

    /// The operation needs a minimum spatial extent.
    #[error("image too small: {height}x{width}, need at least {min}x{min}")]
    ImageTooSmall {
        height: usize,
        width: usize,
        min: usize,
    },

    /// A region-restricted metric was given a mask with no active pixels.
    #[error("region mask has no active pixels")]
    EmptyRegion,

    /// Every mask element is zero, so no pixel is ever exposed.
    #[error("mask stack is all zeros")]
    DegenerateMasks,

    /// A value violates the declared range of its type.
    #[error("{context}: value {value} outside [{lo}, {hi}]")]
    OutOfRange {
        context: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// A configuration field fails validation.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A frame referenced by a dataset manifest does not exist.
    #[error("missing frame: {path}")]
    MissingFrame { path: PathBuf },

    /// A frame file exists but cannot be decoded as declared.
    #[error("corrupt image {path}: {reason}")]
    CorruptImage { path: PathBuf, reason: String },

    /// A frame decodes to the wrong spatial size.
    #[error(
        "frame {path} is {actual_h}x{actual_w}, expected {expected_h}x{expected_w}"
    )]
    ShapeMismatch {
        path: PathBuf,
        expected_h: usize,
        expected_w: usize,
        actual_h: usize,
        actual_w: usize,
    },

    /// Filesystem or decode failure outside the cases above.
    #[error("io failure on {path}: {reason}")]
    IoFailure { path: PathBuf, reason: String },

    /// A tensor sidecar disagrees with the binary payload next to it.
    #[error(
        "sidecar mismatch for {path}: dims {dims:?} imply {expected_bytes} bytes, \
         file has {actual_bytes}"
    )]
    SidecarMismatch {
        path: PathBuf,
        dims: Vec<usize>,
        expected_bytes: usize,
        actual_bytes: usize,
    },

    /// Two run reports cannot be compared row by row.
    #[error("reports are not comparable: {0}")]
    MismatchedRuns(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, err: impl std::fmt::Display) -> Self {
        Error::IoFailure {
            path: path.into(),
            reason: err.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
