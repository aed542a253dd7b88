//! Headline numbers recomputed end to end, as a pass/fail table.

use std::f64::consts::SQRT_2;

use anyhow::Result;
use spinpair::fixtures::measured_density_matrix;
use spinpair::metrics::{
    alpha_from_enhancement, concurrence, echo_enhancement, fidelity, ppt_min_eigenvalue, ppt_threshold,
    werner_threshold,
};
use spinpair::montecarlo::{run_mc, McConfig};
use spinpair::pulse::{run_sequence, PulseSequence};
use spinpair::spin::{hyperpolarised_state, target_entangled_state, thermal_state};
use spinpair::tomography::{simulate_tomography, TomographyConfig};
use spinpair::{DensityMatrix, Strategy, SystemParams};

pub struct Row {
    pub name: &'static str,
    pub computed: String,
    pub reference: String,
    pub pass: bool,
}

fn row(name: &'static str, computed: String, reference: &str, pass: bool) -> Row {
    Row {
        name,
        computed,
        reference: reference.to_string(),
        pass,
    }
}

fn failed(name: &'static str, reference: &str, err: impl std::fmt::Display) -> Row {
    row(name, format!("error: {err}"), reference, false)
}

fn sequence_rows() -> Vec<Row> {
    let run = || -> spinpair::Result<(f64, f64)> {
        let (mut hyper, mut ent) = (0.0_f64, 0.0_f64);
        for alpha in [0.1, 0.217, 0.4] {
            let params = SystemParams::at_alpha(alpha)?;
            let hp = run_sequence(&thermal_state(alpha)?, &PulseSequence::hyperpolarisation(8.0), &params)?;
            hyper = hyper.max(hp.max_abs_diff(&hyperpolarised_state(alpha)?));
            let pumped = run_sequence(
                &thermal_state(alpha)?,
                &PulseSequence::hyperpolarisation(f64::INFINITY),
                &params,
            )?;
            let e = run_sequence(&pumped, &PulseSequence::entangling(), &params)?;
            ent = ent.max(e.max_abs_diff(&target_entangled_state(alpha)?));
        }
        Ok((hyper, ent))
    };
    match run() {
        Ok((h, e)) => vec![
            row(
                "hyperpolarisation, 8 T1e",
                format!("max dev {h:.1e}"),
                "<= 5e-4",
                h <= 5e-4,
            ),
            row("entangling program", format!("max dev {e:.1e}"), "<= 1e-9", e <= 1e-9),
        ],
        Err(err) => vec![failed("sequence algebra", "closed-form states", err)],
    }
}

pub fn rows() -> Vec<Row> {
    let mut out = Vec::new();

    let iv = ppt_threshold(Strategy::Hyperpolarised).alpha;
    out.push(row(
        "threshold(iv)",
        format!("{iv:.4}"),
        "0.432",
        (iv - 0.432).abs() <= 5e-4,
    ));
    let ii = ppt_threshold(Strategy::Thermal).alpha;
    out.push(row(
        "threshold(ii)",
        format!("{ii:.4}"),
        "0.17",
        (ii - (3.0 - 2.0 * SQRT_2)).abs() <= 1e-6,
    ));
    let iii = ppt_threshold(Strategy::PseudopureHyperpolarised).alpha;
    out.push(row(
        "threshold(iii)",
        format!("{iii:.4}"),
        "0.4142",
        (iii - (SQRT_2 - 1.0)).abs() <= 1e-6,
    ));
    let i = ppt_threshold(Strategy::PseudopureThermal).alpha;
    out.push(row("threshold(i)", format!("{i}"), "0", i == 0.0));
    out.push(match werner_threshold(&DensityMatrix::bell()) {
        Ok(eps) => row(
            "Werner eps",
            format!("{eps:.6}"),
            "1/3",
            (eps - 1.0 / 3.0).abs() <= 1e-6,
        ),
        Err(e) => failed("Werner eps", "1/3", e),
    });

    match (echo_enhancement(0.217), alpha_from_enhancement(1.643)) {
        (Ok(e), Ok(a)) => out.push(row(
            "enhancement",
            format!("{e:.3} -> {a:.3}"),
            "1.643(2) -> 0.217",
            (e - 1.643).abs() <= 1e-3 && (a - 0.217).abs() <= 0.002,
        )),
        _ => out.push(failed("enhancement", "1.643(2)", "out of range")),
    }

    out.extend(sequence_rows());

    let measured = measured_density_matrix();
    let target = target_entangled_state(0.217).expect("alpha in range");
    let pt = ppt_min_eigenvalue(&measured);
    out.push(row(
        "measured PT min eigenvalue",
        format!("{pt:.3}"),
        "-0.19(1)",
        (-0.20..=-0.18).contains(&pt),
    ));
    let c = concurrence(&measured);
    out.push(row(
        "measured concurrence",
        format!("{c:.3}"),
        "0.43(4)",
        (0.39..=0.47).contains(&c),
    ));
    let f = fidelity(&measured, &target);
    out.push(row(
        "measured fidelity",
        format!("{f:.4}"),
        "0.982(2)",
        (0.977..=0.987).contains(&f),
    ));

    let mc = McConfig {
        seed: 1,
        target: Some(target),
        ..McConfig::uniform(0.010)
    };
    out.push(match run_mc(&measured, &mc) {
        Ok(r) => row(
            "MC concurrence std (element std 0.010)",
            format!("{:.3}", r.concurrence.std),
            "0.04",
            (0.01..=0.08).contains(&r.concurrence.std),
        ),
        Err(e) => failed("MC concurrence std", "0.04", e),
    });

    out.push(match simulate_tomography(&target, &TomographyConfig::default(), None) {
        Ok(r) => {
            let f = fidelity(&r.rho_full, &target);
            row(
                "noiseless tomography round trip",
                format!("{f:.9}"),
                ">= 1 - 1e-6",
                f >= 1.0 - 1e-6,
            )
        }
        Err(e) => failed("noiseless tomography round trip", ">= 1 - 1e-6", e),
    });
    out
}

pub fn render(rows: &[Row]) -> String {
    let w = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let cw = rows.iter().map(|r| r.computed.len()).max().unwrap_or(0).max(8);
    let mut s = format!("{:<w$}  {:<cw$}  {:<18}  result\n", "check", "computed", "reference");
    for r in rows {
        s += &format!(
            "{:<w$}  {:<cw$}  {:<18}  {}\n",
            r.name,
            r.computed,
            r.reference,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    s
}

pub fn cmd_paper_repro() -> Result<bool> {
    let rows = rows();
    print!("{}", render(&rows));
    Ok(rows.iter().all(|r| r.pass))
}
