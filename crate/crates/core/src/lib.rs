//! Simulation and evaluation toolkit for video snapshot compressive imaging
//! (SCI) with saliency-adaptive coding masks.
//!
//! An SCI camera folds `C` video frames into a single 2D measurement through
//! per-frame binary coding masks. This crate simulates that capture process,
//! detects salient regions directly on the compressed measurements, feeds the
//! detections back into the per-pixel Bernoulli parameters of the next mask,
//! reconstructs the frames with TV-regularized iterative solvers, and scores
//! the result against ground truth.
//!
//! Module map:
//! - [`types`] / [`rng`]: dense tensor value types, their invariants, and
//!   seeded random streams (ChaCha8, pinned for reproducibility).
//! - [`forward`]: the coded capture equation `Y = sum_c A_c .* X_c + E`.
//! - [`policy`]: Bernoulli(0.5) mask initialization, saliency-to-probability
//!   conversion with a `1/D` floor, and adaptive mask resampling.
//! - [`saliency`]: spectral-residual saliency on normalized measurements plus
//!   greedy multi-scale window selection.
//! - [`recon`]: GAP-TV and ADMM-TV solvers around a Chambolle dual TV prox.
//! - [`metrics`]: PSNR / SSIM / region-restricted PSNR and quality reports.
//! - [`io`]: frame-sequence loading, the `.f32` tensor format, PGM previews.
//! - [`pipeline`]: the adaptive capture loop and the traditional baseline,
//!   artifact persistence, and run comparison.
//! - [`bench`]: timing of the per-measurement policy update.
//! - [`synth`]: deterministic synthetic scenes for tests and benchmarks.

pub mod bench;
mod error;
pub mod fft;
pub mod forward;
pub mod io;
pub mod metrics;
pub mod pipeline;
pub mod policy;
pub mod recon;
pub mod rng;
pub mod saliency;
pub mod synth;
pub mod types;

pub use error::{Error, Result};
