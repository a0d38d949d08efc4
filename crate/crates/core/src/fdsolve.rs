//! Finite-difference diagonalization of the Morse-chart Hamiltonian, the
//! independent spectral oracle for the closed-form energies.

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::tridiag;

/// Uniform grid specification in the Morse chart (x_gamma coordinate).
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub x_lo: f64,
    pub x_hi: f64,
    pub n_points: usize,
}

/// Lowest k eigenvalues of the Dirichlet finite-difference Hamiltonian
/// -(hbar^2/2m0) d^2/dx_gamma^2 + W_gamma (e^(-gamma x_gamma) - 1)^2 on the
/// given grid (harmonic well for gamma = 0).  Second order in the spacing,
/// so Richardson-extrapolatable in h^2.
pub fn fd_diagonalize(params: &ModelParams, grid: &GridSpec, k: usize) -> Result<Vec<f64>> {
    if grid.n_points < 3 || !(grid.x_hi > grid.x_lo) {
        return Err(Error::InvalidParam { name: "grid", value: grid.n_points as f64 });
    }
    if k >= grid.n_points {
        return Err(Error::InvalidParam { name: "k", value: k as f64 });
    }
    let n = grid.n_points;
    let h = (grid.x_hi - grid.x_lo) / (n as f64 + 1.0);
    let kin = params.hbar() * params.hbar() / (2.0 * params.m0() * h * h);
    let potential = |x: f64| -> f64 {
        if params.gamma() == 0.0 {
            let w = params.omega0();
            0.5 * params.m0() * w * w * x * x
        } else {
            let e = (-params.gamma() * x).exp() - 1.0;
            params.well_depth() * e * e
        }
    };
    let diag: Vec<f64> = (0..n)
        .map(|i| 2.0 * kin + potential(grid.x_lo + h * (i as f64 + 1.0)))
        .collect();
    let off = vec![-kin; n - 1];
    tridiag::lowest_eigenvalues(&diag, &off, k)
}

/// Grid-refined spectral oracle: domain chosen from the tail amplitudes of
/// the requested states, then extent and resolution doubled (with h^2
/// Richardson extrapolation) until the levels move by less than `tol`.
pub fn morse_levels_refined(params: &ModelParams, k: usize, tol: f64) -> Result<Vec<f64>> {
    let (mut x_lo, mut x_hi) = initial_domain(params, k);
    let sigma0 = params.sigma0();
    let mut n_points = (16.0 * (x_hi - x_lo) / sigma0).ceil() as usize;

    let mut prev: Option<Vec<f64>> = None;
    for _ in 0..8 {
        let e_h = fd_diagonalize(params, &GridSpec { x_lo, x_hi, n_points }, k)?;
        let e_h2 =
            fd_diagonalize(params, &GridSpec { x_lo, x_hi, n_points: 2 * n_points + 1 }, k)?;
        let rich: Vec<f64> =
            e_h.iter().zip(&e_h2).map(|(a, b)| (4.0 * b - a) / 3.0).collect();
        if let Some(p) = &prev {
            let moved = p
                .iter()
                .zip(&rich)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0_f64, f64::max);
            if moved < tol {
                return Ok(rich);
            }
        }
        prev = Some(rich);
        x_lo -= 0.5 * sigma0;
        x_hi += 0.25 * (x_hi - x_lo);
        n_points *= 2;
    }
    Err(Error::Convergence { what: "Morse grid refinement" })
}

// Domain wide enough that every requested state has tail amplitude below
// ~1e-17 at both walls, from the e^(-xi/2) xi^(nu/2) profile.
fn initial_domain(params: &ModelParams, k: usize) -> (f64, f64) {
    let sigma0 = params.sigma0();
    if params.gamma() == 0.0 {
        // harmonic: classical turning point of level k plus a wide margin
        let span = sigma0 * (2.0 * k as f64 + 1.0).sqrt() + 12.0 * sigma0;
        return (-span, span);
    }
    let s = params.s();
    let two_s = 2.0 * s;
    let gamma = params.gamma();
    let mut y_lo = -0.5_f64; // gamma * x_gamma units
    let mut y_hi = 1.0_f64;
    for n in 0..k {
        let nu = (2.0 * s - 2.0 * n as f64 - 1.0).max(0.05);
        // left wall: xi = c*nu with c - ln c = 1 + 80/nu
        let target = 1.0 + 80.0 / nu;
        let mut c = target + 1.0;
        for _ in 0..40 {
            c = target + c.ln();
        }
        y_lo = y_lo.min(-(c * nu / two_s).ln().max(0.3));
        // right tail: y >= ln(2s/nu) + 1 + 80/nu
        y_hi = y_hi.max((two_s / nu).ln() + 1.0 + 80.0 / nu);
    }
    (y_lo / gamma, y_hi / gamma)
}

/// Apply the quarter-ordered position-dependent-mass Hamiltonian
/// -(hbar^2/2m0) sqrt(g) d/dx [ g d/dx ( sqrt(g) psi ) ] + V psi,
/// g = 1 + gamma x, to samples of psi on a uniform grid (second-order
/// central differences, one-sided at the ends).  Used by the residual test
/// that the analytic eigenfunctions satisfy the grid Hamiltonian to O(h^2).
pub fn apply_pdm_hamiltonian(
    params: &ModelParams,
    xs: &[f64],
    psi: &[f64],
) -> Result<Vec<f64>> {
    let n = xs.len();
    assert!(n >= 5 && psi.len() == n, "need at least 5 samples");
    let h = xs[1] - xs[0];
    let metric: Result<Vec<f64>> = xs.iter().map(|&x| params.metric(x)).collect();
    let metric = metric?;
    let sq: Vec<f64> = metric.iter().map(|g| g.sqrt()).collect();

    let inner: Vec<f64> = (0..n).map(|i| sq[i] * psi[i]).collect();
    let d1 = diff_central(&inner, h);
    let mid: Vec<f64> = (0..n).map(|i| metric[i] * d1[i]).collect();
    let d2 = diff_central(&mid, h);

    let kin_pref = -params.hbar() * params.hbar() / (2.0 * params.m0());
    (0..n)
        .map(|i| Ok(kin_pref * sq[i] * d2[i] + params.potential(xs[i])? * psi[i]))
        .collect()
}

fn diff_central(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    let mut out = vec![0.0; n];
    for i in 1..n - 1 {
        out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    }
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{bound_state_count, energy_level, Eigenstate};

    #[test]
    fn harmonic_branch() {
        let p = ModelParams::standard(0.0).unwrap();
        let eig = morse_levels_refined(&p, 4, 1e-9).unwrap();
        for (n, e) in eig.iter().enumerate() {
            let want = n as f64 + 0.5;
            assert!((e - want).abs() < 1e-7, "n={n}: {e}");
        }
    }

    #[test]
    fn morse_levels_match_closed_form() {
        let p = ModelParams::standard(0.2).unwrap();
        let eig = morse_levels_refined(&p, 6, 1e-8).unwrap();
        for (n, e) in eig.iter().enumerate() {
            let want = energy_level(&p, n).unwrap();
            assert!(
                (e - want).abs() / want < 1e-7,
                "n={n}: fd {e} vs exact {want}"
            );
        }
    }

    #[test]
    fn spectral_count_below_well_depth() {
        let p = ModelParams::standard(0.3).unwrap();
        let expect = bound_state_count(&p).unwrap();
        let eig = morse_levels_refined(&p, expect + 2, 1e-4).unwrap();
        let below = eig.iter().filter(|&&e| e < p.well_depth()).count();
        assert_eq!(below, expect, "levels {eig:?} vs W = {}", p.well_depth());
    }

    #[test]
    fn quarter_ordering_residual_shrinks_like_h2() {
        let p = ModelParams::standard(0.25).unwrap();
        let st = Eigenstate::new(p, 1).unwrap();
        let en = st.energy();
        let residual = |m: usize| -> f64 {
            let (lo, hi) = (-3.0, 25.0);
            let xs: Vec<f64> =
                (0..m).map(|i| lo + (hi - lo) * i as f64 / (m - 1) as f64).collect();
            let psi: Vec<f64> = xs.iter().map(|&x| st.evaluate(x)).collect();
            let hpsi = apply_pdm_hamiltonian(&p, &xs, &psi).unwrap();
            let num: f64 =
                xs.iter().zip(&hpsi).zip(&psi).map(|((_, h), s)| (h - en * s).powi(2)).sum();
            let den: f64 = psi.iter().map(|s| s * s).sum();
            (num / den).sqrt()
        };
        let r1 = residual(2000);
        let r2 = residual(4000);
        assert!(r1 / r2 > 3.0 && r1 / r2 < 5.0, "O(h^2): r1={r1} r2={r2}");
    }
}
