//! Minimal 2D FFT on row-major complex buffers, built from rustfft's 1D
//! plans (rows, transpose, rows, transpose back).

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

fn transpose(height: usize, width: usize, src: &[Complex<f64>], dst: &mut [Complex<f64>]) {
    for h in 0..height {
        for w in 0..width {
            dst[w * height + h] = src[h * width + w];
        }
    }
}

fn fft_2d_impl(height: usize, width: usize, data: &mut [Complex<f64>], inverse: bool) {
    assert_eq!(data.len(), height * width);
    let mut planner = FftPlanner::new();
    let row_fft = if inverse {
        planner.plan_fft_inverse(width)
    } else {
        planner.plan_fft_forward(width)
    };
    let col_fft = if inverse {
        planner.plan_fft_inverse(height)
    } else {
        planner.plan_fft_forward(height)
    };

    for row in data.chunks_exact_mut(width) {
        row_fft.process(row);
    }
    let mut scratch = vec![Complex::default(); data.len()];
    transpose(height, width, data, &mut scratch);
    for col in scratch.chunks_exact_mut(height) {
        col_fft.process(col);
    }
    transpose(width, height, &scratch, data);
}

/// In-place forward 2D DFT of an `H x W` row-major buffer (unnormalized).
pub fn fft2d(height: usize, width: usize, data: &mut [Complex<f64>]) {
    fft_2d_impl(height, width, data, false);
}

/// In-place inverse 2D DFT including the `1/(H*W)` normalization, so
/// `ifft2d(fft2d(x)) == x` up to rounding.
pub fn ifft2d(height: usize, width: usize, data: &mut [Complex<f64>]) {
    fft_2d_impl(height, width, data, true);
    let scale = 1.0 / (height * width) as f64;
    for v in data.iter_mut() {
        *v *= scale;
    }
}
