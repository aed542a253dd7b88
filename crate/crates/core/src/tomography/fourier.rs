use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::tomography::SignalTrace;
use crate::{Error, Result};

fn corrected(trace: &SignalTrace) -> Vec<Complex64> {
    trace.samples.iter().map(|z| z - trace.baseline).collect()
}

fn forward(buf: &mut [Complex64]) {
    FftPlanner::<f64>::new().plan_fft_forward(buf.len()).process(buf);
}

fn check_window(n: usize, frequency: f64, peak_half_width: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Config("empty trace".into()));
    }
    if !(frequency.is_finite() && frequency.abs() <= 0.5) {
        return Err(Error::Config(format!("frequency {frequency} lies outside [-1/2, 1/2]")));
    }
    if 2 * peak_half_width + 1 > n {
        return Err(Error::Config(format!(
            "peak window of {} bins exceeds the {n}-point trace",
            2 * peak_half_width + 1
        )));
    }
    Ok(())
}

/// Baseline-corrected Fourier amplitude of `trace` integrated over the
/// `2 * peak_half_width + 1` bins of a grid centred on `frequency`, with 1/N
/// normalisation. A single tone `c e^{i 2 pi f n}` returns `c` exactly.
pub fn fourier_peak(trace: &SignalTrace, frequency: f64, peak_half_width: usize) -> Result<Complex64> {
    let n = trace.len();
    check_window(n, frequency, peak_half_width)?;
    let mut buf: Vec<Complex64> = corrected(trace)
        .into_iter()
        .enumerate()
        .map(|(k, z)| z * Complex64::from_polar(1.0, -2.0 * PI * frequency * k as f64))
        .collect();
    forward(&mut buf);
    let hw = peak_half_width as isize;
    let sum: Complex64 = (-hw..=hw).map(|k| buf[k.rem_euclid(n as isize) as usize]).sum();
    Ok(sum / n as f64)
}

/// Per-quadrature standard deviation of `fourier_peak` for white noise of
/// `noise_sigma` per quadrature, including the baseline subtraction.
pub fn peak_noise_std(
    noise_sigma: f64,
    n_points: usize,
    baseline_samples: usize,
    frequency: f64,
    peak_half_width: usize,
) -> f64 {
    let n = n_points as f64;
    let hw = peak_half_width as isize;
    // response of the peak integral to a constant offset
    let leak: Complex64 = (0..n_points)
        .map(|k| {
            (-hw..=hw)
                .map(|j| Complex64::from_polar(1.0, -2.0 * PI * (frequency + j as f64 / n) * k as f64))
                .sum::<Complex64>()
        })
        .sum::<Complex64>()
        / n;
    let var = (2 * peak_half_width + 1) as f64 / n + leak.norm_sqr() / baseline_samples as f64;
    noise_sigma * var.sqrt()
}

/// Centred spectrum `(frequency, amplitude)` with 1/N normalisation.
pub fn spectrum(trace: &SignalTrace) -> Vec<(f64, Complex64)> {
    let n = trace.len();
    let mut buf = corrected(trace);
    forward(&mut buf);
    let half = n / 2;
    (0..n)
        .map(|i| {
            let k = (i + n - half) % n;
            let signed = if k >= n - half && n > 1 {
                k as f64 - n as f64
            } else {
                k as f64
            };
            let f = signed / n as f64;
            (f, buf[k] / n as f64)
        })
        .collect()
}

pub fn spectrum_csv<W: Write>(trace: &SignalTrace, mut out: W) -> std::io::Result<()> {
    writeln!(out, "freq_cycles_per_shot,re,im,abs")?;
    for (f, z) in spectrum(trace) {
        writeln!(out, "{f:.10},{:.17e},{:.17e},{:.17e}", z.re, z.im, z.norm())?;
    }
    Ok(())
}
