//! The coded capture model: `Y = sum_c A_c .* X_c + E`.

use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::rng::RngSeed;
use crate::types::{validate_dimensions, FrameCube, MaskStack, Measurement, NoiseModel, Plane};

/// Compresses `C` frames into one snapshot through the binary masks.
///
/// Noise, when enabled, is i.i.d. Gaussian drawn from a stream derived from
/// `(seed, capture_index)`, so captures at different sequence positions are
/// independent regardless of evaluation order. Negative post-noise values
/// are recorded as-is; the model is linear and never clips.
pub fn capture(
    frames: &FrameCube,
    masks: &MaskStack,
    noise: &NoiseModel,
    seed: RngSeed,
    capture_index: usize,
) -> Result<Measurement> {
    validate_dimensions(frames, masks)?;
    noise.validate()?;

    let (height, width, depth) = frames.dims();
    let x = frames.data();
    let a = masks.data();
    let mut out = vec![0.0f64; height * width];
    for (pixel, acc) in out.iter_mut().enumerate() {
        let base = pixel * depth;
        let mut sum = 0.0;
        for c in 0..depth {
            if a[base + c] == 1 {
                sum += x[base + c];
            }
        }
        *acc = sum;
    }

    if let NoiseModel::Gaussian { sigma } = *noise {
        if sigma > 0.0 {
            let normal = Normal::new(0.0, sigma)
                .map_err(|e| Error::InvalidConfig(format!("noise sigma: {e}")))?;
            let mut rng = seed.derive(&[capture_index as u64]).rng();
            for v in out.iter_mut() {
                *v += normal.sample(&mut rng);
            }
        }
    }

    Measurement::new(height, width, capture_index, out)
}

/// Per-pixel count of active mask entries across the `C` channels:
/// `R(h, w) = sum_c a_hwc`. This is the diagonal of `A A^T` and the
/// normalizer used by measurement preprocessing and both solvers.
pub fn effective_exposure(masks: &MaskStack) -> Plane {
    let (height, width, depth) = masks.dims();
    let a = masks.data();
    let mut out = vec![0.0f64; height * width];
    for (pixel, acc) in out.iter_mut().enumerate() {
        let base = pixel * depth;
        let mut count = 0u32;
        for c in 0..depth {
            count += a[base + c] as u32;
        }
        *acc = count as f64;
    }
    Plane::new(height, width, out).expect("exposure counts are finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngSeed;

    fn cube_from(frames: &[Vec<f64>], h: usize, w: usize) -> FrameCube {
        let c = frames.len();
        let mut data = vec![0.0; h * w * c];
        for (ci, f) in frames.iter().enumerate() {
            for p in 0..h * w {
                data[p * c + ci] = f[p];
            }
        }
        FrameCube::new(h, w, c, data).unwrap()
    }

    fn masks_from(masks: &[Vec<u8>], h: usize, w: usize) -> MaskStack {
        let c = masks.len();
        let mut data = vec![0u8; h * w * c];
        for (ci, m) in masks.iter().enumerate() {
            for p in 0..h * w {
                data[p * c + ci] = m[p];
            }
        }
        MaskStack::new(h, w, c, data).unwrap()
    }

    #[test]
    fn capture_matches_hand_computed_sum() {
        // Element-wise oracle: y(h,w) = sum_c a(h,w,c) * x(h,w,c).
        let frames = cube_from(
            &[vec![0.2, 0.4, 0.6, 0.8], vec![1.0, 1.0, 1.0, 1.0]],
            2,
            2,
        );
        let masks = masks_from(&[vec![1, 0, 0, 1], vec![0, 1, 1, 0]], 2, 2);
        let y = capture(&frames, &masks, &NoiseModel::None, RngSeed::new(0), 0).unwrap();
        let expected = [0.2, 1.0, 1.0, 0.8];
        for (i, &e) in expected.iter().enumerate() {
            assert!((y.data()[i] - e).abs() < 1e-15, "pixel {i}");
        }
    }

    #[test]
    fn capture_all_ones_sums_to_depth() {
        let frames = FrameCube::new(3, 3, 2, vec![1.0; 18]).unwrap();
        let masks = MaskStack::all_ones(3, 3, 2);
        let y = capture(&frames, &masks, &NoiseModel::None, RngSeed::new(1), 0).unwrap();
        assert!(y.data().iter().all(|&v| v == 2.0));
    }

    #[test]
    fn capture_zero_masks_gives_zero() {
        let frames = FrameCube::new(3, 3, 2, vec![0.7; 18]).unwrap();
        let masks = MaskStack::new(3, 3, 2, vec![0; 18]).unwrap();
        let y = capture(&frames, &masks, &NoiseModel::None, RngSeed::new(1), 0).unwrap();
        assert!(y.data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn capture_propagates_dimension_mismatch() {
        let frames = FrameCube::new(2, 2, 2, vec![0.5; 8]).unwrap();
        let masks = MaskStack::all_ones(2, 2, 3);
        assert!(matches!(
            capture(&frames, &masks, &NoiseModel::None, RngSeed::new(0), 0),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn exposure_counts_active_entries() {
        let all_ones = MaskStack::all_ones(2, 2, 8);
        assert!(effective_exposure(&all_ones).data().iter().all(|&v| v == 8.0));

        let zeros = MaskStack::new(2, 2, 3, vec![0; 12]).unwrap();
        assert!(effective_exposure(&zeros).data().iter().all(|&v| v == 0.0));

        // Complementary pair: every pixel sees exactly one active channel.
        let pair = masks_from(&[vec![1, 0, 0, 1], vec![0, 1, 1, 0]], 2, 2);
        assert!(effective_exposure(&pair).data().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn capture_is_linear_in_the_frames() {
        let mut rng = RngSeed::new(99).rng();
        use rand::Rng;
        for _ in 0..10 {
            let h = 4;
            let w = 5;
            let c = 3;
            let xa: Vec<f64> = (0..h * w * c).map(|_| rng.random::<f64>()).collect();
            let xb: Vec<f64> = (0..h * w * c).map(|_| rng.random::<f64>()).collect();
            let mask_data: Vec<u8> = (0..h * w * c).map(|_| rng.random::<bool>() as u8).collect();
            let masks = MaskStack::new(h, w, c, mask_data).unwrap();

            let alpha = 0.3;
            let beta = 0.45;
            let mix: Vec<f64> = xa
                .iter()
                .zip(&xb)
                .map(|(&a, &b)| alpha * a + beta * b)
                .collect();

            let ya = capture(
                &FrameCube::new(h, w, c, xa).unwrap(),
                &masks,
                &NoiseModel::None,
                RngSeed::new(0),
                0,
            )
            .unwrap();
            let yb = capture(
                &FrameCube::new(h, w, c, xb).unwrap(),
                &masks,
                &NoiseModel::None,
                RngSeed::new(0),
                0,
            )
            .unwrap();
            let ymix = capture(
                &FrameCube::new(h, w, c, mix).unwrap(),
                &masks,
                &NoiseModel::None,
                RngSeed::new(0),
                0,
            )
            .unwrap();

            for p in 0..h * w {
                let expected = alpha * ya.data()[p] + beta * yb.data()[p];
                let got = ymix.data()[p];
                let scale = expected.abs().max(1.0);
                assert!((got - expected).abs() / scale < 1e-12);
            }
        }
    }

    #[test]
    fn noiseless_measurement_bounded_by_exposure() {
        let mut rng = RngSeed::new(5).rng();
        use rand::Rng;
        let h = 8;
        let w = 8;
        let c = 4;
        let frames = FrameCube::new(
            h,
            w,
            c,
            (0..h * w * c).map(|_| rng.random::<f64>()).collect(),
        )
        .unwrap();
        let masks = MaskStack::new(
            h,
            w,
            c,
            (0..h * w * c).map(|_| rng.random::<bool>() as u8).collect(),
        )
        .unwrap();
        let y = capture(&frames, &masks, &NoiseModel::None, RngSeed::new(0), 0).unwrap();
        let r = effective_exposure(&masks);
        for p in 0..h * w {
            assert!(y.data()[p] >= 0.0);
            assert!(y.data()[p] <= r.data()[p] + 1e-12);
            assert!(r.data()[p] <= c as f64);
        }
    }

    #[test]
    fn gaussian_noise_statistics_on_zero_scene() {
        let h = 256;
        let w = 256;
        let frames = FrameCube::new(h, w, 1, vec![0.0; h * w]).unwrap();
        let masks = MaskStack::all_ones(h, w, 1);
        let y = capture(
            &frames,
            &masks,
            &NoiseModel::Gaussian { sigma: 0.1 },
            RngSeed::new(2024),
            0,
        )
        .unwrap();
        let n = (h * w) as f64;
        let mean = y.data().iter().sum::<f64>() / n;
        let var = y.data().iter().map(|&v| (v - mean) * (v - mean)).sum::<f64>() / n;
        let std = var.sqrt();
        assert!(mean.abs() < 0.005, "mean {mean}");
        assert!((std - 0.1).abs() < 0.005, "std {std}");
    }

    #[test]
    fn noise_streams_differ_by_capture_index() {
        let frames = FrameCube::new(4, 4, 1, vec![0.0; 16]).unwrap();
        let masks = MaskStack::all_ones(4, 4, 1);
        let noise = NoiseModel::Gaussian { sigma: 0.5 };
        let seed = RngSeed::new(3);
        let y0 = capture(&frames, &masks, &noise, seed, 0).unwrap();
        let y1 = capture(&frames, &masks, &noise, seed, 1).unwrap();
        let y0b = capture(&frames, &masks, &noise, seed, 0).unwrap();
        assert_ne!(y0.data(), y1.data());
        assert_eq!(y0.data(), y0b.data());
    }
}
