//! Headline checks, one line per criterion. Exits non-zero if any fails.

mod support;

use std::f64::consts::{PI, SQRT_2};
use std::process::ExitCode;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spinpair::fixtures::measured_density_matrix;
use spinpair::metrics::{
    alpha_from_enhancement, concurrence, echo_enhancement, entropy_decrease, fidelity, linear_entropy,
    ppt_min_eigenvalue, ppt_threshold, werner_threshold,
};
use spinpair::montecarlo::{run_mc, run_mc_serial, McConfig};
use spinpair::pulse::{parse_sequence, run_sequence};
use spinpair::spin::{hyperpolarised_state, target_entangled_state, thermal_state};
use spinpair::tomography::{
    fourier_peak, labelled_state, signature_frequency, simulate_tomography, CoherencePair, SignalTrace,
    TomographyConfig,
};
use spinpair::{DensityMatrix, Strategy, SystemParams};
use support::{hyperpolarised_oracle, max_diff, random_state, target_oracle};

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Real root of `a^3 - (1 - a)^2 / 4` on [0, 1] by plain bisection.
fn cubic_root() -> f64 {
    let f = |a: f64| a.powi(3) - (1.0 - a).powi(2) / 4.0;
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn criterion_1() -> Outcome {
    let t = ppt_threshold(Strategy::Hyperpolarised).alpha;
    let root = cubic_root();
    check(
        (t - root).abs() <= 1e-6 && (t - 0.432).abs() <= 5e-4,
        format!("threshold(iv) = {t:.6}, cubic root {root:.6}, expected 0.432"),
    )
}

fn criterion_2() -> Outcome {
    let i = ppt_threshold(Strategy::PseudopureThermal).alpha;
    let ii = ppt_threshold(Strategy::Thermal).alpha;
    let iii = ppt_threshold(Strategy::PseudopureHyperpolarised).alpha;
    // the positive crossing, |2 sqrt 2 - 3|
    let want_ii = (2.0 * SQRT_2 - 3.0).abs();
    let want_iii = SQRT_2 - 1.0;
    check(
        i == 0.0 && (ii - want_ii).abs() <= 1e-6 && (iii - want_iii).abs() <= 1e-6,
        format!("threshold(i) = {i}, (ii) = {ii:.6} vs {want_ii:.6}, (iii) = {iii:.6} vs {want_iii:.6}"),
    )
}

fn criterion_3() -> Outcome {
    match werner_threshold(&DensityMatrix::bell()) {
        Ok(eps) => check(
            (eps - 1.0 / 3.0).abs() <= 1e-6,
            format!("Werner crossing at eps = {eps:.8}"),
        ),
        Err(e) => check(false, format!("Werner threshold failed: {e}")),
    }
}

fn criterion_4() -> Outcome {
    let mut worst = (0.0_f64, 0.0_f64, 0.0_f64);
    for alpha in [0.1, 0.217, 0.4] {
        let run = || -> spinpair::Result<(f64, f64, f64)> {
            let params = SystemParams::at_alpha(alpha)?;
            let thermal = thermal_state(alpha)?;
            let finite = parse_sequence("MW 1-3 pi phase=0\nRF 3-4 pi phase=0\nWAIT 8*T1e")?;
            let infinite = parse_sequence("MW 1-3 pi phase=0\nRF 3-4 pi phase=0\nWAIT inf*T1e")?;
            let entangle = parse_sequence("MW 1-3 pi/2 phase=pi/2\nRF 3-4 pi phase=pi/2")?;
            let hyper_8 = run_sequence(&thermal, &finite, &params)?;
            let hyper_inf = run_sequence(&thermal, &infinite, &params)?;
            let entangled = run_sequence(&hyper_inf, &entangle, &params)?;
            Ok((
                max_diff(hyper_8.matrix(), &hyperpolarised_oracle(alpha)),
                max_diff(hyper_inf.matrix(), &hyperpolarised_oracle(alpha)),
                max_diff(entangled.matrix(), &target_oracle(alpha)),
            ))
        };
        match run() {
            Ok((a, b, c)) => worst = (worst.0.max(a), worst.1.max(b), worst.2.max(c)),
            Err(e) => return check(false, format!("sequence run failed at alpha {alpha}: {e}")),
        }
    }
    check(
        worst.0 <= 5e-4 && worst.1 <= 1e-9 && worst.2 <= 1e-9,
        format!(
            "hyperpolarisation dev {:.2e} (8 T1e), {:.2e} (inf); entangling dev {:.2e}",
            worst.0, worst.1, worst.2
        ),
    )
}

fn criterion_5() -> Outcome {
    let e = echo_enhancement(0.217).unwrap();
    let back = alpha_from_enhancement(1.643).unwrap();
    check(
        (e - 1.6434).abs() <= 1e-3 && (e - 1.643).abs() <= 1e-3 && (back - 0.217).abs() <= 0.002,
        format!("e(0.217) = {e:.4}, alpha(1.643) = {back:.4}"),
    )
}

fn criterion_6() -> Outcome {
    let rho = measured_density_matrix();
    let target = target_entangled_state(0.217).unwrap();
    let pt = ppt_min_eigenvalue(&rho);
    let c = concurrence(&rho);
    let f = fidelity(&rho, &target);
    check(
        (-0.20..=-0.18).contains(&pt) && (0.39..=0.47).contains(&c) && (0.977..=0.987).contains(&f),
        format!("measured: PT min {pt:.4}, concurrence {c:.4}, fidelity {f:.4}"),
    )
}

fn criterion_7() -> Outcome {
    let mut worst = 0.0_f64;
    let mut increase = false;
    for k in 0..100 {
        let a = k as f64 / 99.0;
        let th = linear_entropy(&thermal_state(a).unwrap());
        let hy = linear_entropy(&hyperpolarised_state(a).unwrap());
        let th_cf = 2.0 * (1.0 + 4.0 * a + a * a) / (3.0 * (1.0 + a).powi(2));
        let hy_cf = 16.0 * a * (1.0 + a + a * a) / (3.0 * (1.0 + a).powi(4));
        let diff_cf = 2.0 * (1.0 - a).powi(2) * (1.0 + a * a) / (3.0 * (1.0 + a).powi(4));
        worst = worst
            .max((th - th_cf).abs())
            .max((hy - hy_cf).abs())
            .max((th - hy - diff_cf).abs())
            .max((entropy_decrease(a).unwrap() - diff_cf).abs());
        increase |= hy > th + 1e-15;
    }
    check(
        worst <= 1e-12 && !increase,
        format!("linear entropy max dev {worst:.2e} over 100 alphas, increase seen: {increase}"),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cfg = TomographyConfig::default();
    let mut worst_fid = 1.0_f64;
    let mut worst_pop = 0.0_f64;
    for _ in 0..50 {
        let rho = random_state(&mut rng);
        match simulate_tomography(&rho, &cfg, None) {
            Ok(r) => worst_fid = worst_fid.min(fidelity(&r.rho_full, &rho)),
            Err(e) => return check(false, format!("tomography failed: {e}")),
        }
        for n in 0..cfg.n_points {
            let l = labelled_state(&rho, n, &cfg).unwrap();
            for k in 0..4 {
                worst_pop = worst_pop.max((l.populations()[k] - rho.populations()[k]).abs());
            }
        }
    }

    // six simultaneous tones on the bin grid
    let on_bin = TomographyConfig {
        nu_phi: 6.0 / 128.0,
        nu_sigma: 4.0 / 128.0,
        ..Default::default()
    };
    let amps: Vec<Complex64> = (0..6)
        .map(|k| Complex64::new(0.05 * (k as f64 + 1.0), -0.02 * k as f64))
        .collect();
    let samples = (0..on_bin.n_points)
        .map(|n| {
            CoherencePair::ALL
                .iter()
                .zip(&amps)
                .map(|(p, a)| a * Complex64::from_polar(1.0, 2.0 * PI * signature_frequency(*p, &on_bin) * n as f64))
                .sum()
        })
        .collect();
    let trace = SignalTrace::new(None, samples).unwrap();
    let crosstalk = CoherencePair::ALL
        .iter()
        .zip(&amps)
        .map(|(p, a)| (fourier_peak(&trace, signature_frequency(*p, &on_bin), 1).unwrap() - a).norm())
        .fold(0.0, f64::max);

    let dq = signature_frequency(
        CoherencePair::new(spinpair::spin::Level::Two, spinpair::spin::Level::Three).unwrap(),
        &cfg,
    );
    check(
        worst_fid >= 1.0 - 1e-6 && worst_pop <= 1e-12 && crosstalk <= 1e-8 && (dq + 0.08).abs() < 1e-12,
        format!(
            "round trip min fidelity {worst_fid:.10}, labelling pop dev {worst_pop:.1e}, cross-talk {crosstalk:.1e}, |2><3| at {dq:.3}"
        ),
    )
}

fn criterion_9() -> Outcome {
    let rho = measured_density_matrix();
    let target = target_entangled_state(0.217).unwrap();
    let zero = McConfig {
        target: Some(target),
        ..Default::default()
    };
    let z = match run_mc(&rho, &zero) {
        Ok(r) => r,
        Err(e) => return check(false, format!("zero-error run failed: {e}")),
    };
    let zero_ok = z.concurrence.std == 0.0 && z.ppt_min_eigenvalue.std == 0.0 && z.fidelity.map(|f| f.std) == Some(0.0);
    let cfg = McConfig {
        seed: 1,
        target: Some(target),
        ..McConfig::uniform(0.010)
    };
    let (par, ser) = match (run_mc(&rho, &cfg), run_mc_serial(&rho, &cfg)) {
        (Ok(p), Ok(s)) => (p, s),
        _ => return check(false, "uniform-error run failed".into()),
    };
    let std = par.concurrence.std;
    check(
        zero_ok && par == ser && (0.01..=0.08).contains(&std),
        format!(
            "zero-error stds zero: {zero_ok}; serial == parallel: {}; concurrence std {std:.4} ({} of {} accepted)",
            par == ser,
            par.accepted,
            par.n_samples
        ),
    )
}

fn criterion_10() -> Outcome {
    let rho = target_entangled_state(0.217).unwrap();
    let m = rho.matrix();
    let p = |i: usize| m[(i, i)].re;
    let x_state_c = (2.0 * (m[(0, 3)].norm() - (p(1) * p(2)).sqrt()))
        .max(2.0 * (m[(1, 2)].norm() - (p(0) * p(3)).sqrt()))
        .max(0.0);
    // the partial transpose moves rho_14 into the 2-3 block
    let block_min = 0.5 * (p(1) + p(2)) - ((0.5 * (p(1) - p(2))).powi(2) + m[(0, 3)].norm_sqr()).sqrt();
    let c = concurrence(&rho);
    let pt = ppt_min_eigenvalue(&rho);
    check(
        (c - x_state_c).abs() <= 1e-3
            && (c - 0.392).abs() <= 1e-3
            && (pt - block_min).abs() <= 1e-3
            && (pt + 0.181).abs() <= 1e-3,
        format!("target(0.217): concurrence {c:.4} (oracle {x_state_c:.4}), PT min {pt:.4} (oracle {block_min:.4})"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("thresholds: strategy iv", criterion_1),
        ("thresholds: strategies i-iii", criterion_2),
        ("Werner crossing", criterion_3),
        ("sequence algebra", criterion_4),
        ("echo enhancement", criterion_5),
        ("measured matrix", criterion_6),
        ("linear entropy", criterion_7),
        ("tomography round trip", criterion_8),
        ("Monte Carlo", criterion_9),
        ("closed-form cross-checks", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2} {name}: {}", i + 1, out.detail);
        if !out.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
