//! Ready-to-run configurations reproducing each figure panel's data.

use crate::config::{Experiment, Options, OutputConfig, ParamsConfig, RunConfig};

fn base(gamma: f64, experiment: Experiment, options: Options) -> RunConfig {
    RunConfig {
        params: ParamsConfig { m0: 1.0, omega0: 1.0, hbar: 1.0, gamma },
        experiment,
        options,
        output: OutputConfig::default(),
    }
}

/// Map of figure-id to the configuration that emits its data.
pub fn figure_manifest() -> Vec<(String, RunConfig)> {
    let mut out: Vec<(String, RunConfig)> = Vec::new();
    let all_ga = vec![0.0, 0.2, 0.4, 0.8, 1.0, 1.5, 2.0];

    out.push((
        "fig1a".into(),
        base(
            0.0,
            Experiment::PhasePortrait,
            Options {
                gamma_a0_list: all_ga.clone(),
                panel: Some("potential".into()),
                ..Default::default()
            },
        ),
    ));
    out.push((
        "fig1b".into(),
        base(
            0.0,
            Experiment::PhasePortrait,
            Options { gamma_a0_list: all_ga, ..Default::default() },
        ),
    ));

    // closed and open orbit dynamics in both charts
    for (id, gas) in [
        ("fig2", vec![0.0, 0.2, 0.4]),
        ("fig3", vec![1.0, 1.5, 2.0]),
    ] {
        for (panel, tag) in
            [("x", "a"), ("p", "b"), ("xp", "c"), ("xgamma", "d"), ("pigamma", "e"), ("morse", "f")]
        {
            out.push((
                format!("{id}{tag}"),
                base(
                    0.0,
                    Experiment::ClassicalOrbit,
                    Options {
                        gamma_a0_list: gas.clone(),
                        periods: 3.0,
                        panel: Some(panel.into()),
                        ..Default::default()
                    },
                ),
            ));
        }
    }

    // eigenfunctions and densities, n = 0, 1, 2
    for (tag, n, panel) in [
        ("a", 0, "psi"),
        ("b", 1, "psi"),
        ("c", 2, "psi"),
        ("d", 0, "rho"),
        ("e", 1, "rho"),
        ("f", 2, "rho"),
    ] {
        out.push((
            format!("fig4{tag}"),
            base(
                0.2,
                Experiment::Eigenfunction,
                Options {
                    n_list: vec![n],
                    gamma_sigma0_list: vec![0.0, 0.2, 0.4],
                    panel: Some(panel.into()),
                    ..Default::default()
                },
            ),
        ));
    }

    out.push((
        "fig5".into(),
        base(
            0.1,
            Experiment::Eigenfunction,
            Options {
                n_list: vec![20],
                panel: Some("correspondence".into()),
                ..Default::default()
            },
        ),
    ));

    out.push((
        "fig6a".into(),
        base(0.3, Experiment::Spectrum, Options { panel: Some("potential".into()), ..Default::default() }),
    ));
    out.push(("fig6b".into(), base(0.3, Experiment::Spectrum, Options::default())));

    for (tag, _) in [("a", "dx2"), ("b", "dp2"), ("c", "dxdp"), ("d", "dxdpi")] {
        out.push((
            format!("fig7{tag}"),
            base(
                0.0,
                Experiment::Uncertainties,
                Options { n_list: vec![0, 1, 2], ..Default::default() },
            ),
        ));
    }

    for tag in ["a", "b", "c"] {
        out.push((
            format!("fig8{tag}"),
            base(
                0.0,
                Experiment::Uncertainties,
                Options {
                    panel: Some("coherent-surface".into()),
                    gamma_sigma0_list: vec![0.0, 0.1, 0.2],
                    ..Default::default()
                },
            ),
        ));
    }

    let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
    out.push((
        "fig9".into(),
        base(
            0.4,
            Experiment::CoherentEvolve,
            Options {
                alpha_re: inv_sqrt2,
                snapshot_times: vec![0.0, 0.25, 0.5],
                ..Default::default()
            },
        ),
    ));

    for tag in ["a", "b", "c"] {
        out.push((
            format!("fig10{tag}"),
            base(
                0.0,
                Experiment::Uncertainties,
                Options {
                    panel: Some("coherent-time".into()),
                    alpha_re: inv_sqrt2,
                    gamma_sigma0_list: vec![0.0, 0.2, 0.4],
                    periods: 3.0,
                    ..Default::default()
                },
            ),
        ));
    }

    // even (a-c) and odd (d-f) cats at |alpha| = sqrt(2)
    for (tag, gs, parity) in [
        ("a", 0.0, "even"),
        ("b", 0.1, "even"),
        ("c", 0.2, "even"),
        ("d", 0.0, "odd"),
        ("e", 0.1, "odd"),
        ("f", 0.2, "odd"),
    ] {
        out.push((
            format!("fig11{tag}"),
            base(
                gs,
                Experiment::CatEvolve,
                Options {
                    alpha_re: 2.0_f64.sqrt(),
                    parity: Some(parity.into()),
                    snapshot_times: vec![0.0, 0.25, 0.5],
                    ..Default::default()
                },
            ),
        ));
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_ids_unique() {
        let man = figure_manifest();
        let mut ids: Vec<&str> = man.iter().map(|(id, _)| id.as_str()).collect();
        let before = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), before);
        assert!(before >= 30, "expected a panel per figure, got {before}");
    }

    #[test]
    fn fig5_and_fig10_parameters() {
        let man = figure_manifest();
        let fig5 = &man.iter().find(|(id, _)| id == "fig5").unwrap().1;
        assert_eq!(fig5.params.gamma, 0.1);
        assert_eq!(fig5.options.n_list, vec![20]);
        let fig10 = &man.iter().find(|(id, _)| id == "fig10a").unwrap().1;
        assert!((fig10.options.alpha_re - 1.0 / 2.0_f64.sqrt()).abs() < 1e-15);
    }
}
