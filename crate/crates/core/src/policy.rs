//! Mask sampling policy: traditional Bernoulli(0.5) initialization,
//! saliency-to-probability conversion with the `1/D` background floor, and
//! probability-guided resampling of the next mask stack.

use rand::distr::{Bernoulli, Distribution};

use crate::rng::RngSeed;
use crate::types::{MaskStack, ProbabilityMap, SaliencyStack};

/// Draws every mask element independently from Bernoulli(0.5).
/// Deterministic given the seed.
pub fn init_mask(height: usize, width: usize, depth: usize, seed: RngSeed) -> MaskStack {
    assert!(height >= 1 && width >= 1 && depth >= 1, "empty mask shape");
    let mut rng = seed.rng();
    let data: Vec<u8> = (0..height * width * depth)
        .map(|_| rand::Rng::random::<bool>(&mut rng) as u8)
        .collect();
    MaskStack::new(height, width, depth, data).expect("bernoulli draws are binary")
}

/// Converts a detection stack into per-pixel sampling probabilities:
/// `p(h, w) = (1/D) * sum_d s(h, w, d)`, then pixels with zero accumulated
/// saliency are raised to the floor `1/D` so every pixel keeps nonzero
/// sampling coverage. The division is always by the configured depth `D`,
/// not by the number of nonempty maps, so every output value is `k/D` for
/// an integer `k` in `[1, D]`.
pub fn probability_from_saliency(sal: &SaliencyStack) -> ProbabilityMap {
    let (height, width, depth) = sal.dims();
    let d = depth as f64;
    let mut data = Vec::with_capacity(height * width);
    for h in 0..height {
        for w in 0..width {
            let covered = sal.coverage(h, w).max(1);
            data.push(covered as f64 / d);
        }
    }
    ProbabilityMap::with_floor(height, width, 1.0 / d, data)
        .expect("k/D with 1 <= k <= D is a valid probability")
}

/// Samples an `H x W x C` mask stack where element `(h, w, c)` is an
/// independent Bernoulli(`p(h, w)`) draw: one probability per pixel governs
/// all `C` channels, but each channel is drawn independently. Draw order is
/// row-major pixels, channels innermost; deterministic given the seed.
pub fn sample_mask(p: &ProbabilityMap, depth: usize, seed: RngSeed) -> MaskStack {
    assert!(depth >= 1, "empty mask depth");
    let (height, width) = p.dims();
    let mut rng = seed.rng();
    let mut data = Vec::with_capacity(height * width * depth);
    for &prob in p.data() {
        let dist = Bernoulli::new(prob).expect("probability validated in [0, 1]");
        for _ in 0..depth {
            data.push(dist.sample(&mut rng) as u8);
        }
    }
    MaskStack::new(height, width, depth, data).expect("bernoulli draws are binary")
}
