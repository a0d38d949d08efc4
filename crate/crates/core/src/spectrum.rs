//! Bound states of the deformed oscillator: eigenfunctions in both charts,
//! the anharmonic spectrum, closed-form expectation values with their
//! Gauss-Laguerre quadrature oracle, uncertainty products, and the
//! classical-correspondence comparison.

use crate::classical::{self, OrbitSpec};
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::quadrature::GaussLaguerre;
use crate::special::{assoc_laguerre, assoc_laguerre_deriv, log_gamma_real};

/// Energy of level n: hbar omega0 (n+1/2) - (hbar gamma)^2/(2 m0) (n+1/2)^2.
pub fn energy_level(params: &ModelParams, n: usize) -> Result<f64> {
    if params.gamma() > 0.0 {
        let nu = nu_n(params, n);
        if nu <= 0.0 {
            return Err(Error::Unbound { n, nu });
        }
    }
    let nh = n as f64 + 0.5;
    let g = params.gamma();
    Ok(params.hbar() * params.omega0() * nh
        - params.hbar() * params.hbar() * g * g / (2.0 * params.m0()) * nh * nh)
}

/// Number of bound levels (nu_n > 0); infinite for gamma = 0.
pub fn bound_state_count(params: &ModelParams) -> Result<usize> {
    if params.gamma() == 0.0 {
        return Err(Error::InfiniteStates);
    }
    let bound = params.s() - 0.5; // n < s - 1/2
    if bound <= 0.0 {
        Ok(0)
    } else {
        Ok(bound.ceil() as usize)
    }
}

fn nu_n(params: &ModelParams, n: usize) -> f64 {
    2.0 * params.s() - 2.0 * n as f64 - 1.0
}

/// A normalized bound eigenstate.
#[derive(Debug, Clone, Copy)]
pub struct Eigenstate {
    params: ModelParams,
    n: usize,
}

impl Eigenstate {
    pub fn new(params: ModelParams, n: usize) -> Result<Self> {
        params.require_quantum_bound()?;
        if params.gamma() > 0.0 {
            let nu = nu_n(&params, n);
            if nu <= 0.0 {
                return Err(Error::Unbound { n, nu });
            }
        }
        Ok(Self { params, n })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Laguerre index nu_n = 2s - 2n - 1 (infinite for gamma = 0).
    pub fn nu(&self) -> f64 {
        nu_n(&self.params, self.n)
    }

    pub fn energy(&self) -> f64 {
        energy_level(&self.params, self.n).expect("constructor checked boundness")
    }

    /// Morse-chart normalization N_n, from
    /// N_n^2 = nu_n gamma n! / Gamma(nu_n + n + 1).
    pub fn norm_constant(&self) -> f64 {
        assert!(self.params.gamma() > 0.0, "N_n is defined for gamma > 0");
        (0.5 * self.log_norm_sq()).exp()
    }

    fn log_norm_sq(&self) -> f64 {
        let nu = self.nu();
        let nf = self.n as f64;
        nu.ln() + self.params.gamma().ln() + log_gamma_real(nf + 1.0).unwrap()
            - log_gamma_real(nu + nf + 1.0).unwrap()
    }

    /// Gamma-like argument zeta(x) = 2s/(1+gamma x).
    pub fn zeta(&self, x: f64) -> Result<f64> {
        Ok(2.0 * self.params.s() / self.params.metric(x)?)
    }

    /// Wavefunction psi_n(x) in the physical chart; zero at and beyond the
    /// wall.
    pub fn evaluate(&self, x: f64) -> f64 {
        if self.params.gamma() == 0.0 {
            return hermite_oscillator(&self.params, self.n, x);
        }
        if 1.0 + self.params.gamma() * x <= 0.0 {
            return 0.0;
        }
        let zeta = 2.0 * self.params.s() / (1.0 + self.params.gamma() * x);
        let nu = self.nu();
        // psi = N/sqrt(2s) e^(-zeta/2) zeta^((nu+1)/2) L_n^(nu)(zeta), assembled
        // in log space against tail under/overflow; the sign convention is
        // fixed by the Hermite-Gaussian limit at gamma -> 0, which also makes
        // the ladder and intertwining coefficients positive
        let l = assoc_laguerre(self.n, nu, zeta);
        if l == 0.0 {
            return 0.0;
        }
        let log_mag = -0.5 * zeta + 0.5 * (nu + 1.0) * zeta.ln() + 0.5 * self.log_norm_sq()
            - 0.5 * (2.0 * self.params.s()).ln()
            + l.abs().ln();
        if log_mag < -740.0 {
            return 0.0;
        }
        l.signum() * log_mag.exp()
    }

    /// Morse-chart wavefunction phi_n(x_gamma) with xi = 2s e^(-gamma x_gamma).
    pub fn evaluate_morse(&self, x_gamma: f64) -> f64 {
        if self.params.gamma() == 0.0 {
            return hermite_oscillator(&self.params, self.n, x_gamma);
        }
        let xi = 2.0 * self.params.s() * (-self.params.gamma() * x_gamma).exp();
        let nu = self.nu();
        let l = assoc_laguerre(self.n, nu, xi);
        if l == 0.0 || xi == 0.0 {
            return 0.0;
        }
        let log_mag = -0.5 * xi + 0.5 * nu * xi.ln() + 0.5 * self.log_norm_sq() + l.abs().ln();
        if log_mag < -740.0 {
            return 0.0;
        }
        l.signum() * log_mag.exp()
    }
}

// Standard oscillator eigenfunction for the gamma = 0 branch.
fn hermite_oscillator(params: &ModelParams, n: usize, x: f64) -> f64 {
    let sigma = params.sigma0();
    let y = x / sigma;
    let mut hprev = 0.0;
    let mut h = 1.0;
    for k in 0..n {
        let next = 2.0 * y * h - 2.0 * k as f64 * hprev;
        hprev = h;
        h = next;
    }
    let log_norm = -0.25 * std::f64::consts::PI.ln()
        - 0.5 * (n as f64 * 2.0_f64.ln() + log_gamma_real(n as f64 + 1.0).unwrap() + sigma.ln());
    if h == 0.0 {
        return 0.0;
    }
    h.signum() * (log_norm - 0.5 * y * y + h.abs().ln()).exp()
}

/// Closed-form expectation values on an eigenstate.
#[derive(Debug, Clone, Copy)]
pub struct Expectations {
    pub potential: f64,
    pub kinetic: f64,
    pub mass: f64,
    pub x: f64,
    pub x2: f64,
    pub p: f64,
    pub p2: f64,
    pub pi: f64,
    pub pi2: f64,
    pub phi: f64,
    pub phi2: f64,
    /// <1/(1+gamma x)> = 1 - (gamma sigma0)^2 (n+1/2)
    pub inv_metric: f64,
}

/// All closed-form moments of the eigenstate.  Heavy-tailed states return
/// +inf where the moment integral diverges (<x> for nu <= 1, <x^2> for
/// nu <= 2).
pub fn expectation_suite(state: &Eigenstate) -> Expectations {
    let p = state.params();
    let nh = state.n() as f64 + 0.5;
    let n = state.n() as f64;
    let u = p.gamma_sigma0() * p.gamma_sigma0();
    let hbar = p.hbar();
    let w0 = p.omega0();
    let s0 = p.sigma0();
    let gamma = p.gamma();

    let shrink = 1.0 - u * nh; // <1/(1+gamma x)>
    let potential = 0.5 * hbar * w0 * nh;
    let kinetic = 0.5 * hbar * w0 * nh * shrink;
    let mass = p.m0() * shrink;
    let p2 = hbar * hbar / (s0 * s0) * (nh - 0.5 * u * (n * n + n - 1.0)) * shrink;
    let pi2 = hbar * hbar / (s0 * s0) * nh * shrink;
    let phi = n * gamma * s0 * s0;
    let phi2 = s0 * s0 * ((1.0 - u) * nh + 0.25 * u);

    let (x, x2) = if gamma == 0.0 {
        (0.0, s0 * s0 * nh)
    } else {
        let d1 = shrink * shrink - 0.25 * u * u;
        let x = if d1 > 0.0 { (1.0 / d1 - 1.0) / gamma } else { f64::INFINITY };
        let d2 = shrink * shrink - u * u;
        let x2 = if d1 > 0.0 && d2 > 0.0 {
            ((1.0 + u * nh - 0.5 * u * u * n * (n + 1.0)) / (d1 * d2) - 2.0 / d1 + 1.0)
                / (gamma * gamma)
        } else {
            f64::INFINITY
        };
        (x, x2)
    };

    Expectations {
        potential,
        kinetic,
        mass,
        x,
        x2,
        p: 0.0,
        p2,
        pi: 0.0,
        pi2,
        phi,
        phi2,
        inv_metric: shrink,
    }
}

/// The same moments by generalized Gauss-Laguerre quadrature of the explicit
/// eigenfunction in the zeta variable; the independent oracle for
/// [`expectation_suite`].  Requires gamma > 0.
pub fn expectation_suite_quadrature(state: &Eigenstate) -> Result<Expectations> {
    let p = *state.params();
    if p.gamma() == 0.0 {
        return Err(Error::InvalidParam { name: "gamma", value: 0.0 });
    }
    let n = state.n();
    let nu = state.nu();
    let s = p.s();
    let two_s = 2.0 * s;
    let gamma = p.gamma();
    let hbar = p.hbar();
    let k = n + 8;

    let l = |z: f64| assoc_laguerre(n, nu, z);
    let lp = |z: f64| assoc_laguerre_deriv(n, nu, z);

    // plain multiplication operators: ratio at alpha = nu - 1
    let rule1 = GaussLaguerre::new(k, nu - 1.0)?;
    let norm1 = rule1.integrate_normalized(|z| l(z) * l(z));
    let mom = |f: &dyn Fn(f64) -> f64| -> f64 {
        rule1.integrate_normalized(|z| l(z) * l(z) * f(z)) / norm1
    };

    let w_depth = p.well_depth();
    let potential = mom(&|z| {
        let t = 1.0 - z / two_s;
        w_depth * t * t
    });
    let mass = mom(&|z| p.m0() * z * z / (two_s * two_s));
    let inv_metric = mom(&|z| z / two_s);
    let phi_of = |z: f64| (1.0 - z / two_s) / gamma - 0.5 * gamma * p.sigma0() * p.sigma0();
    let phi = mom(&|z| phi_of(z));
    let phi2 = mom(&|z| phi_of(z) * phi_of(z));

    // <p^2> = hbar^2 (gamma/2s)^2 * <zeta^2 Q^2>/<L^2>,
    // Q = ((nu+1)/2 - zeta/2) L + zeta L'
    let q_fn = |z: f64| (0.5 * (nu + 1.0) - 0.5 * z) * l(z) + z * lp(z);
    let p2 = hbar * hbar * (gamma / two_s) * (gamma / two_s)
        * rule1.integrate_normalized(|z| z * z * q_fn(z) * q_fn(z))
        / norm1;

    // <Pi^2> = hbar^2 gamma^2 <G^2>/<L^2>, G = ((zeta-nu)/2) L - zeta L'
    let g_fn = |z: f64| 0.5 * (z - nu) * l(z) - z * lp(z);
    let pi2 = hbar * hbar * gamma * gamma
        * rule1.integrate_normalized(|z| g_fn(z) * g_fn(z))
        / norm1;

    let kinetic = pi2 / (2.0 * p.m0());

    // <x>: ratio at alpha = nu - 2 (finite only for nu > 1)
    let x = if nu > 1.0 {
        let rule = GaussLaguerre::new(k, nu - 2.0)?;
        let num = rule.integrate_normalized(|z| l(z) * l(z) * (two_s - z) / gamma);
        let den = rule.integrate_normalized(|z| l(z) * l(z) * z);
        num / den
    } else {
        f64::INFINITY
    };

    // <x^2>: ratio at alpha = nu - 3 (finite only for nu > 2)
    let x2 = if nu > 2.0 {
        let rule = GaussLaguerre::new(k, nu - 3.0)?;
        let num = rule.integrate_normalized(|z| {
            let t = (two_s - z) / gamma;
            l(z) * l(z) * t * t
        });
        let den = rule.integrate_normalized(|z| l(z) * l(z) * z * z);
        num / den
    } else {
        f64::INFINITY
    };

    Ok(Expectations {
        potential,
        kinetic,
        mass,
        x,
        x2,
        p: 0.0,
        p2,
        pi: 0.0,
        pi2,
        phi,
        phi2,
        inv_metric,
    })
}

/// L2 overlap <psi_m | psi_n> by quadrature (1 on the diagonal, 0 off it).
pub fn overlap_quadrature(params: &ModelParams, m: usize, n: usize) -> Result<f64> {
    let sm = Eigenstate::new(*params, m)?;
    let sn = Eigenstate::new(*params, n)?;
    let (num, nun) = (sm.nu(), sn.nu());
    let alpha = 0.5 * (num + nun) - 1.0;
    let rule = GaussLaguerre::new(m + n + 8, alpha)?;
    let sum = rule.integrate_normalized(|z| {
        assoc_laguerre(m, num, z) * assoc_laguerre(n, nun, z)
    });
    // prefactor N_m N_n / (2s) * (2s/gamma) * Gamma(alpha+1)
    let log_pref = 0.5 * (sm.log_norm_sq() + sn.log_norm_sq()) - params.gamma().ln()
        + rule.log_moment0();
    Ok(log_pref.exp() * sum)
}

/// Uncertainty products for an eigenstate; infinite entries propagate from
/// divergent moments.
#[derive(Debug, Clone, Copy)]
pub struct UncertaintyReport {
    pub dx: f64,
    pub dp: f64,
    pub dpi: f64,
    pub dphi: f64,
    pub dx_dp: f64,
    pub dx_dpi: f64,
    pub dphi_dpi: f64,
    /// generalized lower bound (hbar/2)(1 + gamma <x>)
    pub gup_bound: f64,
}

pub fn uncertainty_report(state: &Eigenstate) -> UncertaintyReport {
    let e = expectation_suite(state);
    let p = state.params();
    let dx = if e.x2.is_finite() { (e.x2 - e.x * e.x).sqrt() } else { f64::INFINITY };
    let dp = e.p2.sqrt();
    let dpi = e.pi2.sqrt();
    let dphi = (e.phi2 - e.phi * e.phi).sqrt();
    UncertaintyReport {
        dx,
        dp,
        dpi,
        dphi,
        dx_dp: dx * dp,
        dx_dpi: dx * dpi,
        dphi_dpi: dphi * dpi,
        gup_bound: 0.5 * p.hbar() * (1.0 + p.gamma() * e.x),
    }
}

/// Quantum moments of level n against the classical orbit with the same
/// energy (A^2 = 2 sigma0^2 E_n / (hbar omega0)).
#[derive(Debug, Clone, Copy)]
pub struct CorrespondenceReport {
    pub a_n: f64,
    pub quantum_x: f64,
    pub quantum_x2: f64,
    pub quantum_p2: f64,
    pub classical_x: f64,
    pub classical_x2: f64,
    pub classical_p2: f64,
    pub rel_gap_x: f64,
    pub rel_gap_x2: f64,
    pub rel_gap_p2: f64,
}

pub fn correspondence_check(params: &ModelParams, n: usize) -> Result<CorrespondenceReport> {
    let state = Eigenstate::new(*params, n)?;
    let e = expectation_suite(&state);
    let a_n = classical_amplitude(params, n)?;
    let spec = OrbitSpec::new(*params, a_n, 0.0)?;
    let cm = classical::classical_moments(&spec)?;
    let gap = |q: f64, c: f64| (q - c).abs() / c.abs().max(1e-300);
    Ok(CorrespondenceReport {
        a_n,
        quantum_x: e.x,
        quantum_x2: e.x2,
        quantum_p2: e.p2,
        classical_x: cm.x,
        classical_x2: cm.x2,
        classical_p2: cm.p2,
        rel_gap_x: gap(e.x, cm.x),
        rel_gap_x2: gap(e.x2, cm.x2),
        rel_gap_p2: gap(e.p2, cm.p2),
    })
}

/// Orbit amplitude carrying the energy of level n.
pub fn classical_amplitude(params: &ModelParams, n: usize) -> Result<f64> {
    let en = energy_level(params, n)?;
    Ok((2.0 * en / (params.m0() * params.omega0() * params.omega0())).sqrt())
}
