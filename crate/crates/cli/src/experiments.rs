//! Experiment runners: each turns a [`RunConfig`] into a numeric dataset.

use num_complex::Complex64;

use pdmosc::classical::{self, OrbitRegime, OrbitSpec};
use pdmosc::coherent::{
    cs_dispersions, cs_evolved_expectations, CatParity, CatState, CoherentState,
};
use pdmosc::grid::support_interval;
use pdmosc::spectrum::{
    bound_state_count, classical_amplitude, energy_level, expectation_suite,
    uncertainty_report, Eigenstate,
};
use pdmosc::{catalog, Error, ModelParams, Result};

use crate::config::{Experiment, Options, RunConfig};
use crate::dataset::FigureDataset;

pub fn run_experiment(cfg: &RunConfig) -> Result<FigureDataset> {
    let params = cfg.params.build()?;
    match cfg.experiment {
        Experiment::Spectrum => spectrum(&params, &cfg.options),
        Experiment::Eigenfunction => eigenfunction(&params, &cfg.options),
        Experiment::ClassicalOrbit => classical_orbit(&params, &cfg.options),
        Experiment::PhasePortrait => phase_portrait(&params, &cfg.options),
        Experiment::MorseCatalog => morse_catalog(&params),
        Experiment::CoherentEvolve => coherent_evolve(&params, &cfg.options),
        Experiment::CatEvolve => cat_evolve(&params, &cfg.options),
        Experiment::Uncertainties => uncertainties(&params, &cfg.options),
        Experiment::Verify => Err(Error::InvalidParam { name: "experiment verify (use the verify subcommand)", value: 0.0 }),
    }
}

fn samples_or(opts: &Options, default: usize) -> usize {
    if opts.samples == 0 {
        default
    } else {
        opts.samples
    }
}

fn periods_or(opts: &Options, default: f64) -> f64 {
    if opts.periods == 0.0 {
        default
    } else {
        opts.periods
    }
}

/// Level table: n, E_n, <T>, <V> for every bound state (first 20 levels
/// when gamma = 0).
fn spectrum(params: &ModelParams, _opts: &Options) -> Result<FigureDataset> {
    let count = bound_state_count(params).unwrap_or(20);
    let mut ds = FigureDataset::new(
        "spectrum",
        &["n", "E_n [hbar*omega0]", "T [hbar*omega0]", "V [hbar*omega0]"],
    );
    let scale = params.hbar() * params.omega0();
    for n in 0..count {
        let st = Eigenstate::new(*params, n)?;
        let e = expectation_suite(&st);
        ds.push(vec![n as f64, st.energy() / scale, e.kinetic / scale, e.potential / scale]);
    }
    Ok(ds)
}

/// Wavefunctions and densities on a grid; the correspondence panel adds
/// the classical density of the equal-energy orbit.
fn eigenfunction(params: &ModelParams, opts: &Options) -> Result<FigureDataset> {
    let ns = if opts.n_list.is_empty() { vec![0] } else { opts.n_list.clone() };
    let gs_list = if opts.gamma_sigma0_list.is_empty() {
        vec![params.gamma_sigma0()]
    } else {
        opts.gamma_sigma0_list.clone()
    };
    let m = samples_or(opts, 600);

    if opts.panel.as_deref() == Some("correspondence") {
        let n = *ns.first().unwrap_or(&20);
        let st = Eigenstate::new(*params, n)?;
        let a_n = classical_amplitude(params, n)?;
        let spec = OrbitSpec::new(*params, a_n, 0.0)?;
        let (lo, hi) = (spec.x_min(), spec.x_max()?);
        let mut ds = FigureDataset::new(
            "eigenfunction-correspondence",
            &["x [sigma0]", "density", "classical_density"],
        );
        for i in 0..=m {
            let x = lo + (hi - lo) * i as f64 / m as f64;
            let rho_c = classical::classical_density(&spec, x).unwrap_or(f64::INFINITY);
            if !rho_c.is_finite() {
                continue;
            }
            ds.push(vec![x, st.evaluate(x).powi(2), rho_c]);
        }
        return Ok(ds);
    }

    let mut ds = FigureDataset::new(
        "eigenfunction",
        &["gamma_sigma0", "n", "x [sigma0]", "psi", "density"],
    );
    for &gs in &gs_list {
        let p = ModelParams::new(params.m0(), params.omega0(), params.hbar(), gs / params.sigma0())?;
        for &n in &ns {
            let st = Eigenstate::new(p, n)?;
            let (lo, hi) = window(&p, n, opts);
            for i in 0..=m {
                let x = lo + (hi - lo) * i as f64 / m as f64;
                let v = st.evaluate(x);
                ds.push(vec![gs, n as f64, x, v, v * v]);
            }
        }
    }
    Ok(ds)
}

fn window(p: &ModelParams, n: usize, opts: &Options) -> (f64, f64) {
    match (opts.x_min, opts.x_max) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            if p.gamma() == 0.0 {
                let w = p.sigma0() * (2.0 * n as f64 + 1.0).sqrt() + 4.0 * p.sigma0();
                (-w, w)
            } else {
                let s = p.s();
                let nu = 2.0 * s - 2.0 * n as f64 - 1.0;
                support_interval(p, 2.0 * s + 2.0 * n as f64, nu + 1.0, -24.0)
            }
        }
    }
}

/// Exact trajectories in both charts, gamma*A0 by gamma*A0.
fn classical_orbit(params: &ModelParams, opts: &Options) -> Result<FigureDataset> {
    let gas = if opts.gamma_a0_list.is_empty() { vec![0.4] } else { opts.gamma_a0_list.clone() };
    let m = samples_or(opts, 1000);
    let periods = periods_or(opts, 3.0);
    let mut ds = FigureDataset::new(
        "classical-orbit",
        &[
            "gamma_A0",
            "t [1/omega0]",
            "x [A0]",
            "p [m0*omega0*A0]",
            "v [omega0*A0]",
            "x_gamma [A0]",
            "Pi_gamma [m0*omega0*A0]",
        ],
    );
    for &ga in &gas {
        let p = ModelParams::new(params.m0(), params.omega0(), params.hbar(), ga)?;
        let spec = OrbitSpec::new(p, 1.0, 0.0)?;
        let horizon = match spec.regime() {
            OrbitRegime::Elliptic => periods * spec.period()?,
            _ => periods * 2.0 * std::f64::consts::PI / p.omega0(),
        };
        let (t0, t1) = match spec.regime() {
            OrbitRegime::Elliptic => (0.0, horizon),
            _ => (-0.5 * horizon, 0.5 * horizon),
        };
        for i in 0..=m {
            let t = t0 + (t1 - t0) * i as f64 / m as f64;
            let st = classical::exact_state(&spec, t);
            let def = classical::to_deformed(&p, &st)?;
            ds.push(vec![
                ga,
                t,
                st.x,
                st.p,
                classical::exact_velocity(&spec, t),
                def.x_gamma,
                def.pi_gamma,
            ]);
        }
    }
    Ok(ds)
}

/// Phase-space paths (x, v) per deformation, or the potential curves panel.
fn phase_portrait(params: &ModelParams, opts: &Options) -> Result<FigureDataset> {
    let gas = if opts.gamma_a0_list.is_empty() {
        vec![0.0, 0.2, 0.4, 0.8, 1.0, 1.5, 2.0]
    } else {
        opts.gamma_a0_list.clone()
    };
    let m = samples_or(opts, 800);
    if opts.panel.as_deref() == Some("potential") {
        let mut ds =
            FigureDataset::new("phase-portrait-potential", &["gamma_A0", "x [A0]", "V [E0]"]);
        for &ga in &gas {
            let p = ModelParams::new(params.m0(), params.omega0(), params.hbar(), ga)?;
            let e0 = 0.5 * p.m0() * p.omega0() * p.omega0();
            let lo = if ga > 0.0 { (-1.0 / ga).max(-3.0) + 1e-3 } else { -3.0 };
            for i in 0..=m {
                let x = lo + (4.0 - lo) * i as f64 / m as f64;
                ds.push(vec![ga, x, p.potential(x)? / e0]);
            }
        }
        return Ok(ds);
    }
    let mut ds =
        FigureDataset::new("phase-portrait", &["gamma_A0", "t [1/omega0]", "x [A0]", "v [omega0*A0]"]);
    for &ga in &gas {
        let p = ModelParams::new(params.m0(), params.omega0(), params.hbar(), ga)?;
        let spec = OrbitSpec::new(p, 1.0, 0.0)?;
        let (t0, t1) = match spec.regime() {
            OrbitRegime::Elliptic => (0.0, spec.period()?),
            _ => (-6.0 / p.omega0(), 6.0 / p.omega0()),
        };
        for i in 0..=m {
            let t = t0 + (t1 - t0) * i as f64 / m as f64;
            ds.push(vec![ga, t, classical::exact_position(&spec, t), classical::exact_velocity(&spec, t)]);
        }
    }
    Ok(ds)
}

/// Map-identity table over deterministic sample points for all six entries.
fn morse_catalog(params: &ModelParams) -> Result<FigureDataset> {
    let p = if params.gamma() > 0.0 {
        *params
    } else {
        ModelParams::new(params.m0(), params.omega0(), params.hbar(), 0.5)?
    };
    let mut ds = FigureDataset::new(
        "morse-catalog",
        &["case", "x", "p", "H_chi", "K_morse", "residual"],
    );
    for (idx, entry) in catalog::morse_catalog(&p)?.iter().enumerate() {
        let (lo, hi) = entry.domain();
        let lo = lo.max(-4.0) + 1e-2;
        let hi = hi.min(4.0) - 1e-2;
        for i in 0..25 {
            let x = lo + (hi - lo) * i as f64 / 24.0;
            let pm = -3.0 + 6.0 * (i as f64 * 7.0 % 25.0) / 24.0;
            let mass = entry.mass(x)?;
            let h = pm * pm / (2.0 * mass) + entry.potential(x)?;
            let pi = (p.m0() / mass).sqrt() * pm;
            let e = (-p.gamma() * entry.eta(x)?).exp() - 1.0;
            let k = pi * pi / (2.0 * p.m0()) + p.well_depth() * e * e;
            ds.push(vec![idx as f64, x, pm, h, k, (h - k).abs()]);
        }
    }
    Ok(ds)
}

/// Coherent-state dynamics: expectation series, or density snapshots when
/// snapshot times are given.
fn coherent_evolve(params: &ModelParams, opts: &Options) -> Result<FigureDataset> {
    let alpha = Complex64::new(opts.alpha_re, opts.alpha_im);
    let cs = CoherentState::new(*params, alpha)?;
    let tau0 = 2.0 * std::f64::consts::PI / params.omega0();

    if !opts.snapshot_times.is_empty() {
        let m = samples_or(opts, 600);
        let lam = cs.lambda();
        let (lo, hi) = if params.gamma() > 0.0 {
            support_interval(params, lam + 1.0, lam + 1.0, -18.0)
        } else {
            (-4.0 * params.sigma0() - cs.amplitude(), 4.0 * params.sigma0() + cs.amplitude())
        };
        let mut ds = FigureDataset::new(
            "coherent-evolve-snapshots",
            &["t [2pi/omega0]", "x [sigma0]", "density"],
        );
        for &frac in &opts.snapshot_times {
            let rotated = cs.at_time(frac * tau0)?;
            for i in 0..=m {
                let x = lo + (hi - lo) * i as f64 / m as f64;
                ds.push(vec![frac, x, rotated.density(x)]);
            }
        }
        return Ok(ds);
    }

    let m = samples_or(opts, 600);
    let horizon = periods_or(opts, 3.0) * 2.0 * std::f64::consts::PI / cs.frequency()?;
    let mut ds = FigureDataset::new(
        "coherent-evolve",
        &["t [1/omega0]", "x [sigma0]", "p [hbar/sigma0]", "Pi [hbar/sigma0]"],
    );
    for i in 0..=m {
        let t = horizon * i as f64 / m as f64;
        let e = cs_evolved_expectations(&cs, t)?;
        ds.push(vec![t, e.x, e.p, e.pi]);
    }
    Ok(ds)
}

/// Even/odd cat-state density snapshots.
fn cat_evolve(params: &ModelParams, opts: &Options) -> Result<FigureDataset> {
    let alpha = Complex64::new(opts.alpha_re, opts.alpha_im);
    let parity = match opts.parity.as_deref() {
        Some("odd") => CatParity::Odd,
        _ => CatParity::Even,
    };
    let cat = CatState::new(*params, alpha, parity)?;
    let cs = CoherentState::new(*params, alpha)?;
    let tau0 = 2.0 * std::f64::consts::PI / params.omega0();
    let times = if opts.snapshot_times.is_empty() {
        vec![0.0, 0.25, 0.5]
    } else {
        opts.snapshot_times.clone()
    };
    let m = samples_or(opts, 600);
    let (lo, hi) = if params.gamma() > 0.0 {
        let lam_hi = CoherentState::new(*params, -alpha)?.lambda().max(cs.lambda());
        let lam_lo = CoherentState::new(*params, -alpha)?.lambda().min(cs.lambda());
        support_interval(params, lam_hi + 1.0, lam_lo + 1.0, -18.0)
    } else {
        (-2.5 * cs.amplitude() - 4.0, 2.5 * cs.amplitude() + 4.0)
    };
    let mut ds = FigureDataset::new(
        "cat-evolve",
        &["t [2pi/omega0]", "x [sigma0]", "density"],
    );
    for &frac in &times {
        for i in 0..=m {
            let x = lo + (hi - lo) * i as f64 / m as f64;
            let v = cat.evaluate(x, frac * tau0)?;
            ds.push(vec![frac, x, v.norm_sqr()]);
        }
    }
    Ok(ds)
}

/// Uncertainty tables: eigenstate sweep, coherent time series, or the
/// coherent label surface, selected by the panel option.
fn uncertainties(params: &ModelParams, opts: &Options) -> Result<FigureDataset> {
    match opts.panel.as_deref() {
        Some("coherent-time") => {
            let alpha = Complex64::new(opts.alpha_re, opts.alpha_im);
            let gs_list = if opts.gamma_sigma0_list.is_empty() {
                vec![0.0, 0.2, 0.4]
            } else {
                opts.gamma_sigma0_list.clone()
            };
            let m = samples_or(opts, 400);
            let mut ds = FigureDataset::new(
                "uncertainties-coherent-time",
                &["gamma_sigma0", "t [1/omega0]", "dx", "dp", "dx_dp"],
            );
            for &gs in &gs_list {
                let p = ModelParams::new(
                    params.m0(),
                    params.omega0(),
                    params.hbar(),
                    gs / params.sigma0(),
                )?;
                let cs = CoherentState::new(p, alpha)?;
                let horizon =
                    periods_or(opts, 3.0) * 2.0 * std::f64::consts::PI / cs.frequency()?;
                for i in 0..=m {
                    let t = horizon * i as f64 / m as f64;
                    let d = cs_dispersions(&cs.at_time(t)?)?;
                    ds.push(vec![gs, t, d.dx, d.dp, d.dx_dp]);
                }
            }
            Ok(ds)
        }
        Some("coherent-surface") => {
            let gs_list = if opts.gamma_sigma0_list.is_empty() {
                vec![0.0, 0.1, 0.2]
            } else {
                opts.gamma_sigma0_list.clone()
            };
            let m = samples_or(opts, 41);
            let mut ds = FigureDataset::new(
                "uncertainties-coherent-surface",
                &["gamma_sigma0", "alpha_re", "alpha_im", "dx", "dp", "dx_dp"],
            );
            for &gs in &gs_list {
                let p = ModelParams::new(
                    params.m0(),
                    params.omega0(),
                    params.hbar(),
                    gs / params.sigma0(),
                )?;
                for i in 0..m {
                    for j in 0..m {
                        let re = -2.0 + 4.0 * i as f64 / (m - 1) as f64;
                        let im = -2.0 + 4.0 * j as f64 / (m - 1) as f64;
                        let cs = match CoherentState::new(p, Complex64::new(re, im)) {
                            Ok(c) => c,
                            Err(_) => continue,
                        };
                        match cs_dispersions(&cs) {
                            Ok(d) if d.dx.is_finite() => {
                                ds.push(vec![gs, re, im, d.dx, d.dp, d.dx_dp])
                            }
                            _ => continue,
                        }
                    }
                }
            }
            Ok(ds)
        }
        _ => {
            let ns = if opts.n_list.is_empty() { vec![0, 1, 2] } else { opts.n_list.clone() };
            let gs_list = if opts.gamma_sigma0_list.is_empty() {
                (0..=18).map(|i| 0.05 * i as f64).collect()
            } else {
                opts.gamma_sigma0_list.clone()
            };
            let mut ds = FigureDataset::new(
                "uncertainties-eigen",
                &[
                    "gamma_sigma0",
                    "n",
                    "dx2",
                    "dp2",
                    "dx_dp",
                    "dx_dpi",
                    "gup_bound",
                ],
            );
            for &gs in &gs_list {
                let p = ModelParams::new(
                    params.m0(),
                    params.omega0(),
                    params.hbar(),
                    gs / params.sigma0(),
                )?;
                for &n in &ns {
                    let st = match Eigenstate::new(p, n) {
                        Ok(s) => s,
                        Err(_) => continue, // unbound at this deformation
                    };
                    let r = uncertainty_report(&st);
                    let row = vec![
                        gs,
                        n as f64,
                        r.dx * r.dx,
                        r.dp * r.dp,
                        r.dx_dp,
                        r.dx_dpi,
                        r.gup_bound,
                    ];
                    // divergent-moment states have no plottable point
                    if row.iter().all(|v| v.is_finite()) {
                        ds.push(row);
                    }
                }
            }
            Ok(ds)
        }
    }
}

/// The spectrum figure's companion panel: the potential with level lines.
pub fn potential_with_levels(params: &ModelParams, samples: usize) -> Result<FigureDataset> {
    let e0 = 0.5 * params.hbar() * params.omega0();
    let count = bound_state_count(params).unwrap_or(12);
    let mut cols: Vec<String> = vec!["x [sigma0]".into(), "V [eps0]".into()];
    for n in 0..count {
        cols.push(format!("E_{n} [eps0]"));
    }
    let col_refs: Vec<&str> = cols.iter().map(|s| s.as_str()).collect();
    let mut ds = FigureDataset::new("spectrum-potential", &col_refs);
    let lo = params.domain_min().max(-6.0 * params.sigma0()) + 1e-3;
    let hi = 40.0 * params.sigma0();
    for i in 0..=samples {
        let x = lo + (hi - lo) * i as f64 / samples as f64;
        let mut row = vec![x, params.potential(x)? / e0];
        for n in 0..count {
            row.push(energy_level(params, n)? / e0);
        }
        ds.push(row);
    }
    Ok(ds)
}
