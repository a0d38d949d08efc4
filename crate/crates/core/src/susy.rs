//! Partner Hamiltonians, intertwining, translational shape invariance with
//! its beta-chain, the deformed factorial, and the SU(1,1)-type ladder
//! structure, all at the level of closed-form coefficients.  The grid
//! realizations live in [`crate::operators`].

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::special::{assoc_laguerre, log_gamma_real};
use crate::spectrum::energy_level;

/// Partner potentials (V+, V-) of the factorization at x.
///
/// Both tend to W_gamma - E0 as x grows; V+ has its minimum at 0, V- at
/// gamma sigma0^2/(1 - (gamma sigma0)^2).
pub fn partner_potentials(params: &ModelParams, x: f64) -> Result<(f64, f64)> {
    let g = params.metric(x)?;
    let m0 = params.m0();
    let w0 = params.omega0();
    let e0 = energy_level(params, 0)?;
    let s02 = params.sigma0() * params.sigma0();
    let gamma = params.gamma();
    let u = x / g;
    let vp = 0.5 * m0 * w0 * w0 * u * u - e0;
    let shifted = u - gamma * s02;
    let vm = 0.5 * m0 * w0 * w0 * shifted * shifted - e0 + params.hbar() * w0
        - params.hbar() * params.hbar() * gamma * gamma / (2.0 * m0);
    Ok((vp, vm))
}

/// Normalized partner eigenfunction psi_n^(-), the n-th bound state of H-.
/// Its Laguerre index is nu_{n+1}, so it needs nu_{n+1} > 0.
pub fn psi_minus(params: &ModelParams, n: usize, x: f64) -> Result<f64> {
    params.require_quantum_bound()?;
    let s = params.s();
    let nu = 2.0 * s - 2.0 * (n + 1) as f64 - 1.0; // nu-tilde = nu_{n+1}
    if nu <= 0.0 {
        return Err(Error::Unbound { n: n + 1, nu });
    }
    if 1.0 + params.gamma() * x <= 0.0 {
        return Ok(0.0);
    }
    let zeta = 2.0 * s / (1.0 + params.gamma() * x);
    let l = assoc_laguerre(n, nu, zeta);
    if l == 0.0 {
        return Ok(0.0);
    }
    let log_norm_sq = nu.ln() + params.gamma().ln() + log_gamma_real(n as f64 + 1.0)?
        - log_gamma_real(nu + n as f64 + 1.0)?;
    let log_mag = -0.5 * zeta + 0.5 * (nu + 1.0) * zeta.ln() + 0.5 * log_norm_sq
        - 0.5 * (2.0 * s).ln()
        + l.abs().ln();
    if log_mag < -740.0 {
        return Ok(0.0);
    }
    Ok(l.signum() * log_mag.exp())
}

/// Translational shape-invariance chain beta_j = beta + 2(j-1).
#[derive(Debug, Clone, Copy)]
pub struct ShapeChain {
    params: ModelParams,
    beta: f64,
}

/// Ladder direction selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderDirection {
    Lower,
    Raise,
}

impl ShapeChain {
    pub fn new(params: ModelParams, beta: f64) -> Result<Self> {
        params.require_quantum_bound()?;
        if !beta.is_finite() {
            return Err(Error::InvalidParam { name: "beta", value: beta });
        }
        Ok(Self { params, beta })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Translation step varsigma (fixed to 2 by the shape invariance).
    pub fn varsigma(&self) -> f64 {
        2.0
    }

    /// j-th chain parameter beta_j = beta + 2(j-1), j >= 1.
    pub fn beta_j(&self, j: usize) -> f64 {
        assert!(j >= 1, "chain index starts at 1");
        self.beta + 2.0 * (j as f64 - 1.0)
    }

    /// Remainder R(beta_j) = hbar w0 [1 - (gamma sigma0)^2 (beta_j + 1)/2].
    pub fn remainder(&self, j: usize) -> f64 {
        let u = self.params.gamma_sigma0() * self.params.gamma_sigma0();
        self.params.hbar() * self.params.omega0() * (1.0 - 0.5 * u * (self.beta_j(j) + 1.0))
    }

    /// E_n^(+)(beta) = hbar w0 n [1 - (gamma sigma0)^2 (n + beta)/2].
    pub fn en_plus(&self, n: usize) -> f64 {
        let u = self.params.gamma_sigma0() * self.params.gamma_sigma0();
        let nf = n as f64;
        self.params.hbar() * self.params.omega0() * nf * (1.0 - 0.5 * u * (nf + self.beta))
    }

    /// Same level by brute-force telescoping of the remainders.
    pub fn en_plus_telescoped(&self, n: usize) -> f64 {
        (1..=n).map(|j| self.remainder(j)).sum()
    }

    /// Deformed factorial [n_gamma(beta)]! =
    /// (n!/(2s)^n) Gamma(2s+1-beta-n)/Gamma(2s+1-beta-2n), evaluated as the
    /// equivalent finite product (total, no poles).
    pub fn deformed_factorial(&self, n: usize) -> f64 {
        let two_s = 2.0 * self.params.s();
        (1..=n)
            .map(|j| j as f64 * (two_s - self.beta - 2.0 * n as f64 + j as f64) / two_s)
            .product()
    }

    /// Ladder coefficients: L- brings sqrt(n [1 - u(n+beta)/2]), L+ brings
    /// sqrt((n+1) [1 - u(n+1+beta)/2]).
    pub fn ladder_coefficient(&self, n: usize, dir: LadderDirection) -> Result<f64> {
        let u = self.params.gamma_sigma0() * self.params.gamma_sigma0();
        let (level, arg) = match dir {
            LadderDirection::Lower => (n as f64, n as f64 + self.beta),
            LadderDirection::Raise => (n as f64 + 1.0, n as f64 + 1.0 + self.beta),
        };
        // the target state must stay normalizable
        let target_n = match dir {
            LadderDirection::Lower => n.saturating_sub(1),
            LadderDirection::Raise => n + 1,
        };
        let nu_t = 2.0 * self.params.s() - 2.0 * target_n as f64 - 1.0 + 1.0 - self.beta;
        if level > 0.0 && nu_t <= 0.0 {
            return Err(Error::Unbound { n: target_n, nu: nu_t });
        }
        let val = level * (1.0 - 0.5 * u * arg);
        if val < 0.0 {
            return Err(Error::Unbound { n: target_n, nu: nu_t });
        }
        Ok(val.sqrt())
    }

    /// Normalized beta-generalized eigenfunction psi_{n,beta}(x); reduces to
    /// the plain eigenfunction at beta = 1.  Needs nu_n + 1 - beta > 0.
    pub fn eigenfunction(&self, n: usize, x: f64) -> Result<f64> {
        let s = self.params.s();
        let nu_bar = 2.0 * s - 2.0 * n as f64 - self.beta; // nu_n + 1 - beta
        if nu_bar <= 0.0 {
            return Err(Error::Unbound { n, nu: nu_bar });
        }
        if 1.0 + self.params.gamma() * x <= 0.0 {
            return Ok(0.0);
        }
        let zeta = 2.0 * s / (1.0 + self.params.gamma() * x);
        let l = assoc_laguerre(n, nu_bar, zeta);
        if l == 0.0 {
            return Ok(0.0);
        }
        let log_norm_sq = nu_bar.ln() + self.params.gamma().ln()
            + log_gamma_real(n as f64 + 1.0)?
            - log_gamma_real(nu_bar + n as f64 + 1.0)?;
        let log_mag = -0.5 * zeta + 0.5 * (nu_bar + 1.0) * zeta.ln() + 0.5 * log_norm_sq
            - 0.5 * (2.0 * s).ln()
            + l.abs().ln();
        if log_mag < -740.0 {
            return Ok(0.0);
        }
        Ok(l.signum() * log_mag.exp())
    }
}

/// Coefficient-level SU(1,1) residuals for beta = 1: with M+- = sqrt(2s) L+-
/// and M0 = s [1 - (gamma sigma0)^2 (n+1)], the relations [M-, M+] = 2 M0
/// and [M0, M-+] = +-M-+ hold exactly on the number basis.  (The weight
/// s - n - 1 grows under L-, so L- is the weight-raising generator.)
#[derive(Debug, Clone, Copy)]
pub struct Su11Report {
    pub max_comm_residual: f64,
    pub max_weight_residual: f64,
}

pub fn su11_coefficient_check(params: &ModelParams, n_max: usize) -> Result<Su11Report> {
    let chain = ShapeChain::new(*params, 1.0)?;
    let two_s = 2.0 * params.s();
    let u = params.gamma_sigma0() * params.gamma_sigma0();
    let m0_weight = |n: f64| params.s() * (1.0 - u * (n + 1.0));

    let mut rc = 0.0_f64;
    let mut rw = 0.0_f64;
    for n in 0..=n_max {
        let nf = n as f64;
        // [M-, M+] psi_n = (C+(n)^2 - C-(n)^2) 2s psi_n  vs  2 M0(n)
        let c_plus_sq = chain.ladder_coefficient(n, LadderDirection::Raise)?.powi(2);
        let c_minus_sq = if n == 0 {
            0.0
        } else {
            chain.ladder_coefficient(n, LadderDirection::Lower)?.powi(2)
        };
        let lhs = two_s * (c_plus_sq - c_minus_sq);
        rc = rc.max((lhs - 2.0 * m0_weight(nf)).abs());
        // [M0, M-] psi_n = (M0(n-1) - M0(n)) M- psi_n = +M- psi_n
        rw = rw.max((m0_weight(nf - 1.0) - m0_weight(nf) - 1.0).abs());
        // [M0, M+] psi_n = (M0(n+1) - M0(n)) M+ psi_n = -M+ psi_n
        rw = rw.max((m0_weight(nf + 1.0) - m0_weight(nf) + 1.0).abs());
    }
    Ok(Su11Report { max_comm_residual: rc, max_weight_residual: rw })
}
