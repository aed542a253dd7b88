use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde_json::json;
use spinpair::metrics::{analytic_threshold, fidelity, ppt_threshold, werner_threshold, MetricReport};
use spinpair::montecarlo::{run_mc, McConfig, McReport};
use spinpair::pulse::{parse_sequence, run_sequence};
use spinpair::spin::{
    hyperpolarised_state, pseudopure_state, target_entangled_state, thermal_state, werner_mixture, PseudopureSource,
};
use spinpair::tomography::{run_tomography, spectrum_csv, TomographyRun};
use spinpair::{DensityMatrix, Strategy};

use crate::config::{Format, RunConfig};
use crate::io::{element_errors, emit, load_state, DensityMatrixFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    Thermal,
    Hyperpolarised,
    Target,
    PseudopureThermal,
    PseudopureHyper,
    Werner,
}

pub fn build_state(kind: StateKind, alpha: Option<f64>, eps: Option<f64>) -> Result<DensityMatrix> {
    let alpha = || alpha.context("this state needs --alpha or --field-tesla with --temp-kelvin");
    Ok(match kind {
        StateKind::Thermal => thermal_state(alpha()?)?,
        StateKind::Hyperpolarised => hyperpolarised_state(alpha()?)?,
        StateKind::Target => target_entangled_state(alpha()?)?,
        StateKind::PseudopureThermal => pseudopure_state(PseudopureSource::Thermal, alpha()?)?,
        StateKind::PseudopureHyper => pseudopure_state(PseudopureSource::Hyperpolarised, alpha()?)?,
        StateKind::Werner => {
            let Some(eps) = eps else {
                bail!("the werner state needs --eps")
            };
            werner_mixture(eps, &DensityMatrix::bell())?
        }
    })
}

pub fn summary_text(report: &MetricReport) -> String {
    format!(
        "ppt_min_eigenvalue {:.6}\nnegativity {:.6}\nconcurrence {:.6}\npurity {:.6}\nlinear_entropy {:.6}\nentangled {}\n",
        report.ppt_min_eigenvalue,
        report.negativity,
        report.concurrence,
        report.purity,
        report.linear_entropy,
        report.entangled()
    )
}

/// Metric summary goes to stdout when the state itself goes to a file.
fn write_state(cfg: &RunConfig, file: &DensityMatrixFile, rho: &DensityMatrix) -> Result<()> {
    let summary = summary_text(&MetricReport::of(rho));
    match &cfg.output_path {
        Some(path) => {
            emit(Some(path), &file.to_json())?;
            print!("{summary}");
        }
        None => {
            print!("{}", file.to_json());
            eprint!("{summary}");
        }
    }
    Ok(())
}

pub fn cmd_state(kind: StateKind, eps: Option<f64>, cfg: &RunConfig) -> Result<()> {
    let alpha = if cfg.has_sample() { Some(cfg.alpha()?) } else { None };
    let rho = build_state(kind, alpha, eps)?;
    let mut meta = alpha.map(|a| cfg.meta(a)).unwrap_or_default();
    meta.insert("kind".into(), json!(format!("{kind:?}").to_lowercase()));
    if let Some(e) = eps {
        meta.insert("eps".into(), json!(e));
    }
    write_state(cfg, &DensityMatrixFile::from_state(&rho, meta), &rho)
}

pub fn cmd_run(initial: Option<StateKind>, input: Option<&Path>, cfg: &RunConfig) -> Result<()> {
    let Some(seq_path) = &cfg.sequence_path else {
        bail!("run needs --seq PATH")
    };
    let text = fs::read_to_string(seq_path).with_context(|| format!("cannot read {}", seq_path.display()))?;
    let seq = parse_sequence(&text).with_context(|| format!("{}", seq_path.display()))?;
    let params = cfg.params()?;
    let alpha = cfg.alpha()?;
    let rho0 = match input {
        Some(path) => load_state(path)?.0,
        None => build_state(initial.unwrap_or(StateKind::Thermal), Some(alpha), None)?,
    };
    let rho = run_sequence(&rho0, &seq, &params)?;
    let mut meta = cfg.meta(alpha);
    meta.insert("sequence".into(), json!(seq_path.display().to_string()));
    write_state(cfg, &DensityMatrixFile::from_state(&rho, meta), &rho)
}

pub fn cmd_metrics(inputs: &[PathBuf], cfg: &RunConfig) -> Result<()> {
    let states = inputs
        .iter()
        .map(|p| load_state(p).map(|s| s.0))
        .collect::<Result<Vec<_>>>()?;
    let report = MetricReport::of(&states[0]);
    let fid = states.get(1).map(|other| fidelity(&states[0], other));
    let text = match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(report)?;
            if let Some(f) = fid {
                v["fidelity"] = json!(f);
            }
            v["entangled"] = json!(report.entangled());
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Csv => {
            let mut s = String::from("metric,value\n");
            let _ = writeln!(s, "ppt_min_eigenvalue,{}", report.ppt_min_eigenvalue);
            let _ = writeln!(s, "negativity,{}", report.negativity);
            let _ = writeln!(s, "concurrence,{}", report.concurrence);
            let _ = writeln!(s, "purity,{}", report.purity);
            let _ = writeln!(s, "linear_entropy,{}", report.linear_entropy);
            if let Some(f) = fid {
                let _ = writeln!(s, "fidelity,{f}");
            }
            s
        }
    };
    emit(cfg.output_path.as_deref(), &text)
}

pub fn cmd_tomography(input: Option<&Path>, alpha_estimate: Option<f64>, cfg: &RunConfig) -> Result<TomographyRun> {
    let tcfg = cfg.tomography();
    let rho = match input {
        Some(path) => load_state(path)?.0,
        None => target_entangled_state(if cfg.has_sample() {
            cfg.alpha()?
        } else {
            tcfg.sample_alpha
        })?,
    };
    let run = run_tomography(&rho, &tcfg, alpha_estimate)?;
    let dir = cfg
        .output_path
        .clone()
        .unwrap_or_else(|| PathBuf::from("tomography_out"));
    fs::create_dir_all(&dir).with_context(|| format!("cannot create {}", dir.display()))?;

    let r = &run.result;
    let mut meta = cfg.meta(r.alpha_estimate);
    meta.insert("kind".into(), json!("tomography"));
    meta.insert("projected".into(), json!(r.projected));
    emit(
        Some(&dir.join("rho_full.json")),
        &DensityMatrixFile::from_state(&r.rho_full, meta).to_json(),
    )?;
    for trace in &run.traces {
        let label = trace.pair.map(|p| p.label()).unwrap_or_default();
        let mut buf = Vec::new();
        trace.write_csv(&mut buf)?;
        fs::write(dir.join(format!("trace_{label}.csv")), &buf)?;
        buf.clear();
        spectrum_csv(trace, &mut buf)?;
        fs::write(dir.join(format!("spectrum_{label}.csv")), &buf)?;
    }
    let re =
        |m: &spinpair::CMatrix4| -> Vec<Vec<f64>> { (0..4).map(|i| (0..4).map(|j| m[(i, j)].re).collect()).collect() };
    let im =
        |m: &spinpair::CMatrix4| -> Vec<Vec<f64>> { (0..4).map(|i| (0..4).map(|j| m[(i, j)].im).collect()).collect() };
    let fid = fidelity(&r.rho_full, &rho);
    let summary = json!({
        "alpha_estimate": r.alpha_estimate,
        "alpha_measured": run.alpha_measured,
        "fidelity_vs_input": fid,
        "projected": r.projected,
        "rho_pp": {"re": re(&r.rho_pp), "im": im(&r.rho_pp)},
        "element_errors": r.element_errors.iter().map(|row| row.iter().map(|e| if e.is_finite() { json!(e) } else { json!(null) }).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "metrics": MetricReport::of(&r.rho_full),
        "config": {
            "nu_phi": tcfg.nu_phi,
            "nu_sigma": tcfg.nu_sigma,
            "n_points": tcfg.n_points,
            "noise_sigma": tcfg.noise_sigma,
            "seed": tcfg.seed,
            "peak_half_width": tcfg.peak_half_width,
            "baseline_samples": tcfg.baseline_samples,
            "sample_alpha": tcfg.sample_alpha,
        },
    });
    emit(
        Some(&dir.join("summary.json")),
        &(serde_json::to_string_pretty(&summary)? + "\n"),
    )?;
    println!("alpha_estimate {:.6}", r.alpha_estimate);
    println!("fidelity_vs_input {fid:.9}");
    println!("projected {}", r.projected);
    print!("{}", summary_text(&MetricReport::of(&r.rho_full)));
    println!("wrote {}", dir.display());
    Ok(run)
}

pub fn cmd_mc(input: Option<&Path>, cfg: &RunConfig) -> Result<McReport> {
    let rho = match input {
        Some(path) => load_state(path)?.0,
        None => spinpair::fixtures::measured_density_matrix(),
    };
    let Some(spec) = &cfg.element_error else {
        bail!("mc needs --element-error F|PATH")
    };
    let target_alpha = if cfg.has_sample() {
        cfg.alpha()?
    } else {
        spinpair::constants::ALPHA_MEASURED
    };
    let mc = McConfig {
        n_samples: cfg.samples.unwrap_or(McConfig::default().n_samples),
        element_errors: element_errors(spec)?,
        seed: cfg.seed,
        target: Some(target_entangled_state(target_alpha)?),
    };
    let report = run_mc(&rho, &mc)?;
    emit(
        cfg.output_path.as_deref(),
        &(serde_json::to_string_pretty(&report)? + "\n"),
    )?;
    Ok(report)
}

pub fn cmd_thresholds(cfg: &RunConfig) -> Result<()> {
    let rows: Vec<_> = Strategy::ALL
        .iter()
        .map(|&s| {
            let t = ppt_threshold(s);
            (s, t.alpha, analytic_threshold(s))
        })
        .collect();
    let werner = werner_threshold(&DensityMatrix::bell())?;
    let text = match cfg.format {
        Format::Json => {
            let strategies: Vec<_> = rows
                .iter()
                .map(|(s, a, an)| json!({"strategy": s.roman(), "alpha": a, "analytic": an}))
                .collect();
            serde_json::to_string_pretty(&json!({"strategies": strategies, "werner_eps": werner}))? + "\n"
        }
        Format::Csv => {
            let mut s = String::from("strategy,alpha,analytic\n");
            for (st, a, an) in &rows {
                let _ = writeln!(
                    s,
                    "{},{a},{}",
                    st.roman(),
                    an.map(|x| x.to_string()).unwrap_or_default()
                );
            }
            let _ = writeln!(s, "werner_eps,{werner},{}", 1.0 / 3.0);
            s
        }
    };
    emit(cfg.output_path.as_deref(), &text)
}
