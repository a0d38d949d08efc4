//! Glauber coherent states of the deformed oscillator: Gamma-shaped
//! wavefunctions labelled by a complex annihilation eigenvalue, their
//! closed-form moments and dispersions, the exact oscillatory time
//! evolution of the label, and even/odd cat states with their overlap.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::quadrature::GaussLaguerre;
use crate::special::{log_gamma, log_gamma_real};

/// Eigenstate of the annihilation operator with label alpha.
#[derive(Debug, Clone, Copy)]
pub struct CoherentState {
    params: ModelParams,
    alpha: Complex64,
}

/// Closed-form moments of a coherent state.
#[derive(Debug, Clone, Copy)]
pub struct CsMoments {
    pub x: f64,
    pub x2: f64,
    pub p: f64,
    pub p2: f64,
    pub phi: f64,
    pub phi2: f64,
    pub pi: f64,
    pub pi2: f64,
}

/// Dispersions and uncertainty products of a coherent state.
#[derive(Debug, Clone, Copy)]
pub struct CsDispersions {
    pub dx: f64,
    pub dp: f64,
    pub dphi: f64,
    pub dpi: f64,
    pub dx_dp: f64,
    pub dx_dpi: f64,
    pub dphi_dpi: f64,
}

/// Expected values evolved to time t.
#[derive(Debug, Clone, Copy)]
pub struct CsEvolved {
    pub x: f64,
    pub p: f64,
    pub pi: f64,
}

impl CoherentState {
    pub fn new(params: ModelParams, alpha: Complex64) -> Result<Self> {
        if params.gamma() > 0.0 {
            let lambda = lambda_cs(&params, alpha);
            if lambda <= 0.0 {
                return Err(Error::NonNormalizable { lambda });
            }
        }
        Ok(Self { params, alpha })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    /// Real Gamma-shape parameter lambda_cs (depends on Re alpha only).
    pub fn lambda(&self) -> f64 {
        lambda_cs(&self.params, self.alpha)
    }

    /// Oscillation amplitude A_cs = sqrt(2) sigma0 |alpha|.
    pub fn amplitude(&self) -> f64 {
        2.0_f64.sqrt() * self.params.sigma0() * self.alpha.norm()
    }

    /// Wavefunction psi_cs(x); complex for complex alpha.
    pub fn evaluate(&self, x: f64) -> Complex64 {
        let p = &self.params;
        if p.gamma() == 0.0 {
            // displaced Gaussian of the standard oscillator
            let s0 = p.sigma0();
            let y = x / s0 - 2.0_f64.sqrt() * self.alpha.re;
            let phase = 2.0_f64.sqrt() * self.alpha.im * x / s0
                - self.alpha.re * self.alpha.im;
            let mag =
                (-0.5 * y * y).exp() / (std::f64::consts::PI.powf(0.25) * s0.sqrt());
            return mag * Complex64::new(0.0, phase).exp();
        }
        if 1.0 + p.gamma() * x <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let s = p.s();
        let zeta = 2.0 * s / (1.0 + p.gamma() * x);
        // exponent s - sqrt2 alpha/(gamma sigma0); zeta > 0 so the complex
        // power is exp((..) ln zeta) with no branch ambiguity
        let expo = Complex64::new(s, 0.0)
            - 2.0_f64.sqrt() * self.alpha / p.gamma_sigma0();
        let lambda = self.lambda();
        let log_norm =
            0.5 * (p.gamma().ln() - log_gamma_real(lambda).unwrap()) - 0.5 * (2.0 * s).ln();
        let log_val = Complex64::new(log_norm - 0.5 * zeta, 0.0) + expo * zeta.ln();
        if log_val.re < -740.0 {
            return Complex64::new(0.0, 0.0);
        }
        log_val.exp()
    }

    /// |psi_cs(x)|^2, a Gamma density in zeta with shape lambda_cs.
    pub fn density(&self, x: f64) -> f64 {
        self.evaluate(x).norm_sqr()
    }

    /// Coherent label rotated to time t: |alpha| e^(-i Theta(t)), with the
    /// phase referenced so that the label at t = 0 is the original one
    /// (a complex starting label is a time-translated point on the same
    /// orbit).
    pub fn at_time(&self, t: f64) -> Result<Self> {
        let t_ref = if self.alpha.im == 0.0 && self.alpha.re >= 0.0 {
            0.0
        } else {
            self.time_of_phase(-self.alpha.arg())?
        };
        let theta = self.phase(t_ref + t)?;
        let rotated = Complex64::from_polar(self.alpha.norm(), -theta);
        Self::new(self.params, rotated)
    }

    // closed-form inverse of `phase` on the unwrapped branch structure
    fn time_of_phase(&self, theta: f64) -> Result<f64> {
        let omega = self.frequency()?;
        if self.params.gamma() == 0.0 {
            return Ok(theta / self.params.omega0());
        }
        let u = self.params.gamma_sigma0() * self.params.gamma_sigma0();
        let r = 2.0_f64.sqrt() * self.params.gamma_sigma0() * self.alpha.norm();
        let kappa = ((1.0 - r - 0.5 * u) / (1.0 + r - 0.5 * u)).sqrt();
        let k = (theta / (2.0 * std::f64::consts::PI)).round();
        let a = 0.5 * theta - k * std::f64::consts::PI;
        let v = (a.tan() / kappa).atan();
        Ok(2.0 * (k * std::f64::consts::PI + v) / omega)
    }

    /// Oscillation frequency Omega_cs = w0 sqrt((1-u/2)^2 - 2u |alpha|^2),
    /// u = (gamma sigma0)^2; errors outside the oscillatory window.
    pub fn frequency(&self) -> Result<f64> {
        let u = self.params.gamma_sigma0() * self.params.gamma_sigma0();
        let half = 1.0 - 0.5 * u;
        let om_sq = half * half - 2.0 * u * self.alpha.norm_sqr();
        if om_sq <= 0.0 {
            return Err(Error::OpenRegime { omega_sq: om_sq });
        }
        Ok(self.params.omega0() * om_sq.sqrt())
    }

    /// Unwrapped coherent phase Theta(t) with Theta(0) = 0 (time reference
    /// t0 = 0).
    pub fn phase(&self, t: f64) -> Result<f64> {
        let omega = self.frequency()?;
        let u = self.params.gamma_sigma0() * self.params.gamma_sigma0();
        let r = 2.0_f64.sqrt() * self.params.gamma_sigma0() * self.alpha.norm();
        let a = 1.0 - r - 0.5 * u;
        let b = 1.0 + r - 0.5 * u;
        if self.params.gamma() == 0.0 {
            return Ok(self.params.omega0() * t);
        }
        let kappa = (a / b).sqrt();
        let w = 0.5 * omega * t;
        let k = (w / std::f64::consts::PI).round();
        let v = w - k * std::f64::consts::PI;
        Ok(2.0 * (k * std::f64::consts::PI + (kappa * v.tan()).atan()))
    }

    /// dTheta/dt = w0 [1 - sqrt2 gamma sigma0 |alpha| cos Theta - u/2].
    pub fn phase_rate(&self, theta: f64) -> f64 {
        let u = self.params.gamma_sigma0() * self.params.gamma_sigma0();
        let r = 2.0_f64.sqrt() * self.params.gamma_sigma0() * self.alpha.norm();
        self.params.omega0() * (1.0 - r * theta.cos() - 0.5 * u)
    }
}

fn lambda_cs(params: &ModelParams, alpha: Complex64) -> f64 {
    let s = params.s();
    2.0 * s * (1.0 - 2.0_f64.sqrt() * params.gamma_sigma0() * alpha.re) - 1.0
}

/// Complex shape argument of the cat overlap,
/// (2/u)[1 - i sqrt2 gamma sigma0 Im alpha] - 1.
fn lambda_tilde(params: &ModelParams, alpha: Complex64) -> Complex64 {
    let s = params.s();
    Complex64::new(
        2.0 * s - 1.0,
        -2.0 * s * 2.0_f64.sqrt() * params.gamma_sigma0() * alpha.im,
    )
}

/// Closed-form coherent-state moments; errors when a tail moment diverges
/// (lambda <= 1 for <x>, lambda <= 2 for <x^2>).
pub fn cs_moments(cs: &CoherentState) -> Result<CsMoments> {
    let p = cs.params();
    let a = cs.alpha();
    let s0 = p.sigma0();
    let hbar = p.hbar();
    let sum = 2.0 * a.re; // alpha* + alpha
    let dif_sq = -4.0 * a.im * a.im; // (alpha* - alpha)^2
    let u = p.gamma_sigma0() * p.gamma_sigma0();
    let r = p.gamma_sigma0() / 2.0_f64.sqrt() * sum;

    let phi = s0 / 2.0_f64.sqrt() * sum;
    let phi2 = 0.5 * s0 * s0 * (1.0 + sum * sum - r - 0.5 * u);
    let pi = hbar / (2.0_f64.sqrt() * s0) * 2.0 * a.im;
    let pi2 = 0.5 * hbar * hbar / (s0 * s0) * (1.0 - dif_sq - r - 0.5 * u);
    let pm = hbar / (2.0_f64.sqrt() * s0) * 2.0 * a.im * (1.0 - r - 0.5 * u);
    let p2 = 0.5 * hbar * hbar / (s0 * s0)
        * (1.0 - r)
        * (1.0 - r - 0.5 * u)
        * (1.0 - dif_sq - r + u);

    let (x, x2) = if p.gamma() == 0.0 {
        let x = 2.0_f64.sqrt() * s0 * a.re;
        (x, 0.5 * s0 * s0 * (1.0 + sum * sum))
    } else {
        let d1 = 1.0 - r - u;
        if d1 <= 0.0 {
            return Err(Error::MomentDivergence { what: "<x> (lambda_cs <= 1)" });
        }
        let d2 = 1.0 - r - 1.5 * u;
        if d2 <= 0.0 {
            return Err(Error::MomentDivergence { what: "<x^2> (lambda_cs <= 2)" });
        }
        let gamma = p.gamma();
        let x = (1.0 / d1 - 1.0) / gamma;
        let x2 = (1.0 / (d1 * d2) - 2.0 / d1 + 1.0) / (gamma * gamma);
        (x, x2)
    };

    Ok(CsMoments { x, x2, p: pm, p2, phi, phi2, pi, pi2 })
}

/// Moments by Gauss-Laguerre quadrature of the explicit wavefunction (the
/// independent oracle).  Requires gamma > 0.
pub fn cs_moments_quadrature(cs: &CoherentState) -> Result<CsMoments> {
    let p = *cs.params();
    if p.gamma() == 0.0 {
        return Err(Error::InvalidParam { name: "gamma", value: 0.0 });
    }
    let s = p.s();
    let two_s = 2.0 * s;
    let gamma = p.gamma();
    let hbar = p.hbar();
    let lambda = cs.lambda();
    let c_expo = Complex64::new(s, 0.0) - 2.0_f64.sqrt() * cs.alpha() / p.gamma_sigma0();

    // |psi|^2 dx = Gamma-density in zeta with shape lambda; moments of
    // multiplication operators are ratios at alpha_rule = lambda - 1
    let k = 24;
    let rule1 = GaussLaguerre::new(k, lambda - 1.0)?;
    let mom = |f: &dyn Fn(f64) -> f64| rule1.integrate_normalized(f);

    let phi_of = |z: f64| (1.0 - z / two_s) / gamma - 0.5 * gamma * p.sigma0() * p.sigma0();
    let phi = mom(&|z| phi_of(z));
    let phi2 = mom(&|z| phi_of(z) * phi_of(z));

    // dpsi/dx = psi * (gamma zeta / 2s)(zeta/2 - c); p = -i hbar d/dx
    // <p> = -i hbar * <(gamma z/2s)(z/2 - c)>_rho  (with the complex c)
    let pref = gamma / two_s;
    let p_expect = Complex64::new(0.0, -hbar)
        * rule1.integrate_normalized_complex(|z| {
            Complex64::new(pref * z, 0.0) * (Complex64::new(0.5 * z, 0.0) - c_expo)
        });
    // <p^2> = hbar^2 <(gamma z/2s)^2 |z/2 - c|^2>
    let p2 = hbar * hbar
        * mom(&|z| {
            let d = (Complex64::new(0.5 * z, 0.0) - c_expo).norm_sqr();
            pref * pref * z * z * d
        });
    // Pi psi = -i hbar gamma (1/2 - z d/dz applied factor) psi =>
    // Pi psi = -i hbar gamma (psi/2 - z dpsi/dz); dpsi/dz = psi (c/z - 1/2)
    // => Pi psi = -i hbar gamma psi (1/2 + z/2 - c)
    let pi_expect = Complex64::new(0.0, -hbar * gamma)
        * rule1.integrate_normalized_complex(|z| {
            Complex64::new(0.5 + 0.5 * z, 0.0) - c_expo
        });
    let pi2 = hbar * hbar * gamma * gamma
        * mom(&|z| (Complex64::new(0.5 + 0.5 * z, 0.0) - c_expo).norm_sqr());

    let x = if lambda > 1.0 {
        let rule = GaussLaguerre::new(k, lambda - 2.0)?;
        rule.integrate_normalized(|z| (two_s - z) / gamma)
            / rule.integrate_normalized(|z| z)
    } else {
        f64::INFINITY
    };
    let x2 = if lambda > 2.0 {
        let rule = GaussLaguerre::new(k, lambda - 3.0)?;
        rule.integrate_normalized(|z| {
            let t = (two_s - z) / gamma;
            t * t
        }) / rule.integrate_normalized(|z| z * z)
    } else {
        f64::INFINITY
    };

    Ok(CsMoments {
        x,
        x2,
        p: p_expect.re,
        p2,
        phi,
        phi2,
        pi: pi_expect.re,
        pi2,
    })
}

/// Dispersions from the closed-form moments, plus the printed identities
/// for (dx)^2 and (dPi)^2.
pub fn cs_dispersions(cs: &CoherentState) -> Result<CsDispersions> {
    let m = cs_moments(cs)?;
    let dx = (m.x2 - m.x * m.x).sqrt();
    let dp = (m.p2 - m.p * m.p).sqrt();
    let dphi = (m.phi2 - m.phi * m.phi).sqrt();
    let dpi = (m.pi2 - m.pi * m.pi).sqrt();
    Ok(CsDispersions {
        dx,
        dp,
        dphi,
        dpi,
        dx_dp: dx * dp,
        dx_dpi: dx * dpi,
        dphi_dpi: dphi * dpi,
    })
}

/// The minimized product dPhi dPi = (hbar/2)[1 - (gs/sqrt2)(a*+a) - u/2],
/// exact for every coherent label.
pub fn cs_phi_pi_product(cs: &CoherentState) -> f64 {
    let p = cs.params();
    let u = p.gamma_sigma0() * p.gamma_sigma0();
    let r = 2.0_f64.sqrt() * p.gamma_sigma0() * cs.alpha().re;
    0.5 * p.hbar() * (1.0 - r - 0.5 * u)
}

/// Time-evolved expectation values of x, p, Pi.
pub fn cs_evolved_expectations(cs: &CoherentState, t: f64) -> Result<CsEvolved> {
    let rotated = cs.at_time(t)?;
    let m = cs_moments(&rotated)?;
    Ok(CsEvolved { x: m.x, p: m.p, pi: m.pi })
}

/// Series of (t, dx, dp, dx*dp) along a time grid.
pub fn cs_time_uncertainties(
    cs: &CoherentState,
    times: &[f64],
) -> Result<Vec<(f64, f64, f64, f64)>> {
    times
        .iter()
        .map(|&t| {
            let d = cs_dispersions(&cs.at_time(t)?)?;
            Ok((t, d.dx, d.dp, d.dx_dp))
        })
        .collect()
}

/// Inner product <-alpha | alpha>, from the log-Gamma closed form
/// exp(logG(lt(a)) - logG(l(a))/2 - logG(l(-a))/2); complex for complex
/// alpha, real for real alpha, and |overlap| <= 1.
pub fn cat_overlap(params: &ModelParams, alpha: Complex64) -> Result<Complex64> {
    if params.gamma() == 0.0 {
        return Ok(Complex64::new((-2.0 * alpha.norm_sqr()).exp(), 0.0));
    }
    let l_plus = lambda_cs(params, alpha);
    let l_minus = lambda_cs(params, -alpha);
    if l_plus <= 0.0 {
        return Err(Error::NonNormalizable { lambda: l_plus });
    }
    if l_minus <= 0.0 {
        return Err(Error::NonNormalizable { lambda: l_minus });
    }
    let lg = log_gamma(lambda_tilde(params, alpha))?
        - 0.5 * (log_gamma_real(l_plus)? + log_gamma_real(l_minus)?);
    Ok(lg.exp())
}

/// Equivalent Beta-function form of the overlap modulus,
/// sqrt(B(lt(a), lt(-a)) / B(l(a), l(-a))).
pub fn cat_overlap_beta_form(params: &ModelParams, alpha: Complex64) -> Result<f64> {
    if params.gamma() == 0.0 {
        return Ok((-2.0 * alpha.norm_sqr()).exp());
    }
    let lt_p = lambda_tilde(params, alpha);
    let lt_m = lambda_tilde(params, -alpha);
    let l_p = Complex64::new(lambda_cs(params, alpha), 0.0);
    let l_m = Complex64::new(lambda_cs(params, -alpha), 0.0);
    let log_ratio = log_gamma(lt_p)? + log_gamma(lt_m)? - log_gamma(lt_p + lt_m)?
        - (log_gamma(l_p)? + log_gamma(l_m)? - log_gamma(l_p + l_m)?);
    Ok((0.5 * log_ratio).exp().re)
}

/// Cat-state parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatParity {
    Even,
    Odd,
}

/// Normalized even/odd superposition of |alpha> and |-alpha>.
#[derive(Debug, Clone, Copy)]
pub struct CatState {
    params: ModelParams,
    alpha: Complex64,
    parity: CatParity,
}

impl CatState {
    pub fn new(params: ModelParams, alpha: Complex64, parity: CatParity) -> Result<Self> {
        // both branches must be normalizable
        CoherentState::new(params, alpha)?;
        CoherentState::new(params, -alpha)?;
        Ok(Self { params, alpha, parity })
    }

    pub fn parity(&self) -> CatParity {
        self.parity
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    /// Normalization constant 1/sqrt(2[1 +- Re<-a|a>]).
    pub fn normalization(&self) -> Result<f64> {
        let ov = cat_overlap(&self.params, self.alpha)?.re;
        let denom = match self.parity {
            CatParity::Even => 2.0 * (1.0 + ov),
            CatParity::Odd => 2.0 * (1.0 - ov),
        };
        if denom <= 0.0 {
            return Err(Error::NonNormalizable { lambda: denom });
        }
        Ok(1.0 / denom.sqrt())
    }

    /// Wavefunction at position x and time t; the evolution substitutes
    /// alpha -> |alpha| e^(-i Theta(t)) with the phase computed from
    /// |alpha|, identically for both branches.
    pub fn evaluate(&self, x: f64, t: f64) -> Result<Complex64> {
        let plus = CoherentState::new(self.params, self.alpha)?.at_time(t)?;
        let alpha_t = plus.alpha();
        let minus = CoherentState::new(self.params, -alpha_t)?;
        let at = Self { params: self.params, alpha: alpha_t, parity: self.parity };
        let c = at.normalization()?;
        let sign = match self.parity {
            CatParity::Even => 1.0,
            CatParity::Odd => -1.0,
        };
        Ok(c * (plus.evaluate(x) + sign * minus.evaluate(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{support_interval, Chart, GridWavefunction};
    use crate::operators::{apply_operator, OperatorKind};
    use crate::spectrum::Eigenstate;

    fn cs_grid(p: &ModelParams, cs: &CoherentState) -> (f64, f64, usize) {
        let lam = cs.lambda();
        let (lo, hi) = support_interval(p, lam + 1.0, lam + 1.0, -40.0);
        let n = ((hi - lo) / (p.sigma0() / 80.0)).ceil() as usize + 1;
        (lo, hi, n.min(400_000))
    }

    #[test]
    fn zero_label_is_ground_state() {
        let p = ModelParams::standard(0.3).unwrap();
        let cs = CoherentState::new(p, Complex64::new(0.0, 0.0)).unwrap();
        let st = Eigenstate::new(p, 0).unwrap();
        for i in 0..50 {
            let x = -3.0 + 0.3 * i as f64;
            let v = cs.evaluate(x);
            assert!(v.im.abs() < 1e-14);
            assert!((v.re - st.evaluate(x)).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn density_normalizes() {
        for &(gs, re, im) in &[(0.2, 0.5, 0.0), (0.2, 0.4, 0.7), (0.1, -0.8, 1.2)] {
            let p = ModelParams::standard(gs).unwrap();
            let cs = CoherentState::new(p, Complex64::new(re, im)).unwrap();
            let (lo, hi, n) = cs_grid(&p, &cs);
            let g = GridWavefunction::from_fn(Chart::Position, lo, hi, n, |x| cs.evaluate(x));
            assert!((g.norm() - 1.0).abs() < 1e-8, "gs={gs} a={re}+{im}i: {}", g.norm());
        }
    }

    #[test]
    fn annihilation_eigenvector_on_grid() {
        for &(gs, re, im) in &[(0.1, 1.0, -1.0), (0.2, 0.5, 0.5), (0.2, -0.5, 0.0)] {
            let p = ModelParams::standard(gs).unwrap();
            let alpha = Complex64::new(re, im);
            let cs = CoherentState::new(p, alpha).unwrap();
            let (lo, hi, n) = cs_grid(&p, &cs);
            let psi = GridWavefunction::from_fn(Chart::Position, lo, hi, n, |x| cs.evaluate(x));
            let out = apply_operator(&p, OperatorKind::Annihilation, &psi).unwrap();
            let target = psi.map(|_, _, v| v * alpha);
            let res = crate::operators::sub(&out, &target).norm() / psi.norm();
            assert!(res < 1e-5, "gs={gs} alpha={alpha}: residual {res}");
        }
    }

    #[test]
    fn moments_match_quadrature() {
        for &(gs, re, im) in &[(0.2, 0.5, 0.0), (0.2, 0.4, 0.7), (0.35, -0.3, 0.45)] {
            let p = ModelParams::standard(gs).unwrap();
            let cs = CoherentState::new(p, Complex64::new(re, im)).unwrap();
            let cf = cs_moments(&cs).unwrap();
            let q = cs_moments_quadrature(&cs).unwrap();
            for (name, a, b) in [
                ("x", cf.x, q.x),
                ("x2", cf.x2, q.x2),
                ("p", cf.p, q.p),
                ("p2", cf.p2, q.p2),
                ("phi", cf.phi, q.phi),
                ("phi2", cf.phi2, q.phi2),
                ("pi", cf.pi, q.pi),
                ("pi2", cf.pi2, q.pi2),
            ] {
                assert!(
                    (a - b).abs() <= 1e-9 * b.abs().max(1.0),
                    "gs={gs} a=({re},{im}) {name}: closed {a} vs quad {b}"
                );
            }
        }
    }

    #[test]
    fn gamma_zero_moments() {
        let p = ModelParams::standard(0.0).unwrap();
        let a = Complex64::new(0.7, 0.0);
        let cs = CoherentState::new(p, a).unwrap();
        let m = cs_moments(&cs).unwrap();
        assert!((m.x - 2.0_f64.sqrt() * 0.7).abs() < 1e-14);
        assert_eq!(m.p, 0.0);
        let d = cs_dispersions(&cs).unwrap();
        assert!((d.dx - 1.0 / 2.0_f64.sqrt()).abs() < 1e-13);
        assert!((d.dp - 1.0 / 2.0_f64.sqrt()).abs() < 1e-13);
        assert!((d.dx_dp - 0.5).abs() < 1e-13);
    }

    #[test]
    fn dispersion_identities() {
        // printed closed forms for (dx)^2, (dPi)^2 and the minimized
        // dPhi dPi product
        let p = ModelParams::standard(0.25).unwrap();
        for i in 0..100 {
            let a = Complex64::new(-1.0 + 0.02 * i as f64, 0.8 - 0.016 * i as f64);
            let cs = match CoherentState::new(p, a) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let m = match cs_moments(&cs) {
                Ok(m) => m,
                Err(_) => continue,
            };
            let d = cs_dispersions(&cs).unwrap();
            let g_mean = 1.0 + p.gamma() * m.x;
            let u = p.gamma_sigma0() * p.gamma_sigma0();
            let want_dx2 =
                0.5 * p.sigma0().powi(2) * g_mean * g_mean / (1.0 / g_mean - 0.5 * u);
            assert!((d.dx * d.dx - want_dx2).abs() < 1e-12 * want_dx2.abs());
            let want_dpi2 = 0.5 * p.hbar().powi(2) / p.sigma0().powi(2)
                * (1.0 / g_mean + 0.5 * u);
            assert!((d.dpi * d.dpi - want_dpi2).abs() < 1e-12 * want_dpi2);
            let prod = cs_phi_pi_product(&cs);
            assert!((d.dphi_dpi - prod).abs() < 1e-12, "{} vs {prod}", d.dphi_dpi);
            assert!(d.dx_dp >= 0.5 * p.hbar() - 1e-12);
            // symmetric under alpha -> conj(alpha)
            let conj = CoherentState::new(p, a.conj()).unwrap();
            let dc = cs_dispersions(&conj).unwrap();
            assert!((d.dx - dc.dx).abs() < 1e-13);
        }
    }

    #[test]
    fn frequency_and_phase() {
        let p = ModelParams::standard(0.4).unwrap();
        let cs = CoherentState::new(p, Complex64::new(1.0 / 2.0_f64.sqrt(), 0.0)).unwrap();
        let om = cs.frequency().unwrap();
        // (1 - u/2)^2 - 2u|a|^2 with u = 0.16: 0.92^2 - 0.16 = 0.6864
        assert!((om - 0.6864_f64.sqrt()).abs() < 1e-14, "omega {om}");
        // Theta(0)=0; derivative at 0 matches the rate equation
        assert!(cs.phase(0.0).unwrap().abs() < 1e-15);
        let h = 1e-6;
        let rate = (cs.phase(h).unwrap() - cs.phase(-h).unwrap()) / (2.0 * h);
        assert!((rate - cs.phase_rate(0.0)).abs() < 1e-8);
        // unwrapped through a full period
        let tau = 2.0 * std::f64::consts::PI / om;
        assert!((cs.phase(tau).unwrap() - 2.0 * std::f64::consts::PI).abs() < 1e-10);
        // phase solves the rate ODE: RK4 re-integration oracle
        let mut theta = 0.0;
        let steps = 200_000;
        let dt = 3.0 * tau / steps as f64;
        for i in 0..steps {
            let t = i as f64 * dt;
            let _ = t;
            let k1 = cs.phase_rate(theta);
            let k2 = cs.phase_rate(theta + 0.5 * dt * k1);
            let k3 = cs.phase_rate(theta + 0.5 * dt * k2);
            let k4 = cs.phase_rate(theta + dt * k3);
            theta += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        let closed = cs.phase(3.0 * tau).unwrap();
        assert!((theta - closed).abs() < 1e-8, "ODE {theta} vs closed {closed}");
    }

    #[test]
    fn open_window_rejected() {
        let p = ModelParams::standard(0.4).unwrap();
        // need sqrt2 gs |a| >= 1 - u/2: |a| >= 0.92/(sqrt2*0.4) = 1.626
        let cs = CoherentState::new(p, Complex64::new(0.0, 1.7)).unwrap();
        assert!(matches!(cs.frequency(), Err(Error::OpenRegime { .. })));
    }

    #[test]
    fn evolved_expectations_consistent() {
        let p = ModelParams::standard(0.3).unwrap();
        let cs = CoherentState::new(p, Complex64::new(0.6, 0.0)).unwrap();
        // t = 0 closed form
        let e0 = cs_evolved_expectations(&cs, 0.0).unwrap();
        let a_cs = cs.amplitude();
        let u = 0.09;
        let want = (a_cs + 0.3) / (1.0 - 0.3 * a_cs - u);
        assert!((e0.x - want).abs() < 1e-12);
        // pointwise agreement with moments of the rotated label
        for &t in &[0.3, 1.1, 2.9] {
            let ev = cs_evolved_expectations(&cs, t).unwrap();
            let m = cs_moments(&cs.at_time(t).unwrap()).unwrap();
            assert!((ev.x - m.x).abs() < 1e-12);
            assert!((ev.p - m.p).abs() < 1e-12);
            assert!((ev.pi - m.pi).abs() < 1e-12);
        }
        // periodicity of the evolved moments
        let tau = 2.0 * std::f64::consts::PI / cs.frequency().unwrap();
        let a = cs_evolved_expectations(&cs, 0.7).unwrap();
        let b = cs_evolved_expectations(&cs, 0.7 + tau).unwrap();
        assert!((a.x - b.x).abs() < 1e-9);
        assert!((a.p - b.p).abs() < 1e-9);
    }

    #[test]
    fn classical_limit_of_evolution() {
        // |alpha| = 20, gs = 0.005: <x>(t) follows the classical orbit with
        // A0 = A_cs to 1e-3 relative over one period
        let p = ModelParams::standard(0.005).unwrap();
        let cs = CoherentState::new(p, Complex64::new(20.0, 0.0)).unwrap();
        let a_cs = cs.amplitude();
        let spec = crate::classical::OrbitSpec::new(p, a_cs, 0.0).unwrap();
        let tau = 2.0 * std::f64::consts::PI / cs.frequency().unwrap();
        let scale = a_cs;
        for i in 0..200 {
            let t = tau * i as f64 / 199.0;
            let q = cs_evolved_expectations(&cs, t).unwrap().x;
            let c = crate::classical::exact_position(&spec, t);
            assert!(
                (q - c).abs() / scale < 1e-3,
                "t={t}: quantum {q} vs classical {c}"
            );
        }
    }

    #[test]
    fn uncertainty_product_oscillates_above_floor() {
        let p = ModelParams::standard(0.4).unwrap();
        let cs = CoherentState::new(p, Complex64::new(1.0 / 2.0_f64.sqrt(), 0.0)).unwrap();
        let tau = 2.0 * std::f64::consts::PI / cs.frequency().unwrap();
        let times: Vec<f64> = (0..600).map(|i| 3.0 * tau * i as f64 / 599.0).collect();
        let series = cs_time_uncertainties(&cs, &times).unwrap();
        let mut min_prod = f64::INFINITY;
        let mut max_prod: f64 = 0.0;
        for &(_, _, _, prod) in &series {
            min_prod = min_prod.min(prod);
            max_prod = max_prod.max(prod);
        }
        assert!(min_prod >= 0.5 - 1e-12, "floor violated: {min_prod}");
        assert!(max_prod > 0.58, "expected visible oscillation, got {max_prod}");
        // amplitude of the oscillation grows with the deformation
        let mut last_amp = 0.0;
        for &gs in &[0.1, 0.2, 0.3, 0.4] {
            let p = ModelParams::standard(gs).unwrap();
            let cs = CoherentState::new(p, Complex64::new(1.0 / 2.0_f64.sqrt(), 0.0)).unwrap();
            let tau = 2.0 * std::f64::consts::PI / cs.frequency().unwrap();
            let times: Vec<f64> = (0..400).map(|i| tau * i as f64 / 399.0).collect();
            let series = cs_time_uncertainties(&cs, &times).unwrap();
            let (mut lo, mut hi) = (f64::INFINITY, 0.0_f64);
            for &(_, _, _, prod) in &series {
                lo = lo.min(prod);
                hi = hi.max(prod);
            }
            assert!(hi - lo > last_amp, "gs={gs}: amp {} vs {last_amp}", hi - lo);
            last_amp = hi - lo;
        }
    }

    #[test]
    fn evolution_preserves_complex_starting_label() {
        let p = ModelParams::standard(0.25).unwrap();
        let alpha = Complex64::new(0.4, 0.6);
        let cs = CoherentState::new(p, alpha).unwrap();
        let back = cs.at_time(0.0).unwrap();
        assert!((back.alpha() - alpha).norm() < 1e-12, "{}", back.alpha());
        // |alpha| is a constant of the motion
        for &t in &[0.3, 1.7, 4.0] {
            let a = cs.at_time(t).unwrap().alpha();
            assert!((a.norm() - alpha.norm()).abs() < 1e-12);
        }
        // group property: stepping twice equals one combined step
        let one = cs.at_time(0.7).unwrap().at_time(0.9).unwrap().alpha();
        let two = cs.at_time(1.6).unwrap().alpha();
        assert!((one - two).norm() < 1e-9, "{one} vs {two}");
    }

    #[test]
    fn gamma_zero_time_series_is_flat() {
        let p = ModelParams::standard(0.0).unwrap();
        let cs = CoherentState::new(p, Complex64::new(0.9, 0.0)).unwrap();
        let times: Vec<f64> = (0..50).map(|i| 0.3 * i as f64).collect();
        for (_, dx, dp, prod) in cs_time_uncertainties(&cs, &times).unwrap() {
            assert!((dx - 1.0 / 2.0_f64.sqrt()).abs() < 1e-13);
            assert!((dp - 1.0 / 2.0_f64.sqrt()).abs() < 1e-13);
            assert!((prod - 0.5).abs() < 1e-13);
        }
    }

    #[test]
    fn gup_minimization_at_large_label() {
        // (dx)(dPi) -> (hbar/2)(1 + gamma <x>) for |alpha|/(gs) >> 1
        let p = ModelParams::standard(0.01).unwrap();
        let cs = CoherentState::new(p, Complex64::new(50.0, 0.0)).unwrap();
        let d = cs_dispersions(&cs).unwrap();
        let m = cs_moments(&cs).unwrap();
        let bound = 0.5 * (1.0 + p.gamma() * m.x);
        assert!((d.dx_dpi / bound - 1.0).abs() < 0.01, "{} vs {bound}", d.dx_dpi);
    }

    #[test]
    fn cat_overlap_against_quadrature() {
        let p = ModelParams::standard(0.1).unwrap();
        let alpha = Complex64::new(2.0_f64.sqrt(), 0.0);
        let ov = cat_overlap(&p, alpha).unwrap();
        assert!(ov.im.abs() < 1e-14);
        // direct quadrature of psi_{-a}* psi_a on a dense grid
        let plus = CoherentState::new(p, alpha).unwrap();
        let minus = CoherentState::new(p, -alpha).unwrap();
        let lam = plus.lambda().min(minus.lambda());
        let (lo, hi) = support_interval(&p, plus.lambda().max(minus.lambda()) + 1.0, lam + 1.0, -44.0);
        let n = 400_001;
        let gp = GridWavefunction::from_fn(Chart::Position, lo, hi, n, |x| plus.evaluate(x));
        let gm = GridWavefunction::from_fn(Chart::Position, lo, hi, n, |x| minus.evaluate(x));
        let direct = gm.inner(&gp);
        assert!((ov - direct).norm() < 1e-8, "closed {ov} vs quad {direct}");
        // Beta-ratio form agrees for real alpha
        let bform = cat_overlap_beta_form(&p, alpha).unwrap();
        assert!((ov.re - bform).abs() < 1e-12);
    }

    #[test]
    fn cat_overlap_complex_label() {
        // complex alpha: the Gamma form carries a phase; the Beta form is
        // its modulus
        let p = ModelParams::standard(0.2).unwrap();
        let alpha = Complex64::new(0.5, 0.8);
        let ov = cat_overlap(&p, alpha).unwrap();
        let bform = cat_overlap_beta_form(&p, alpha).unwrap();
        assert!((ov.norm() - bform).abs() < 1e-12);
        assert!(ov.norm() <= 1.0);
        // quadrature picks up the same complex value
        let plus = CoherentState::new(p, alpha).unwrap();
        let minus = CoherentState::new(p, -alpha).unwrap();
        let lam = plus.lambda().min(minus.lambda());
        let (lo, hi) = support_interval(&p, plus.lambda().max(minus.lambda()) + 1.0, lam + 1.0, -44.0);
        let gp = GridWavefunction::from_fn(Chart::Position, lo, hi, 300_001, |x| plus.evaluate(x));
        let gm = GridWavefunction::from_fn(Chart::Position, lo, hi, 300_001, |x| minus.evaluate(x));
        assert!((ov - gm.inner(&gp)).norm() < 1e-7, "{ov} vs {}", gm.inner(&gp));
    }

    #[test]
    fn small_gamma_overlap_limit() {
        let p = ModelParams::standard(1e-4).unwrap();
        let ov = cat_overlap(&p, Complex64::new(1.0, 0.0)).unwrap();
        assert!((ov.re - (-2.0_f64).exp()).abs() < 1e-5, "{}", ov.re);
        assert!(ov.im.abs() < 1e-12);
    }

    #[test]
    fn cat_states_normalized_and_parity() {
        let p = ModelParams::standard(0.2).unwrap();
        let alpha = Complex64::new(1.1, 0.0);
        for parity in [CatParity::Even, CatParity::Odd] {
            let cat = CatState::new(p, alpha, parity).unwrap();
            let flipped = CatState::new(p, -alpha, parity).unwrap();
            let plus = CoherentState::new(p, alpha).unwrap();
            let (lo, hi) = support_interval(&p, plus.lambda() + 8.0, plus.lambda() - 8.0, -40.0);
            let n = 200_001;
            let g =
                GridWavefunction::from_fn(Chart::Position, lo, hi, n, |x| {
                    cat.evaluate(x, 0.0).unwrap()
                });
            assert!((g.norm() - 1.0).abs() < 1e-8, "{parity:?}: norm {}", g.norm());
            for &x in &[-0.5, 0.3, 1.7] {
                let a = cat.evaluate(x, 0.0).unwrap();
                let b = flipped.evaluate(x, 0.0).unwrap();
                let sign = if parity == CatParity::Even { 1.0 } else { -1.0 };
                assert!((a - sign * b).norm() < 1e-12, "{parity:?} x={x}");
            }
        }
    }

    #[test]
    fn cat_evolution_stays_normalized() {
        let p = ModelParams::standard(0.2).unwrap();
        let alpha = Complex64::new(2.0_f64.sqrt(), 0.0);
        let cat = CatState::new(p, alpha, CatParity::Even).unwrap();
        let plus = CoherentState::new(p, alpha).unwrap();
        let minus = CoherentState::new(p, -alpha).unwrap();
        let lam = plus.lambda().min(minus.lambda());
        let (lo, hi) = support_interval(&p, plus.lambda().max(minus.lambda()) + 4.0, lam - 4.0, -40.0);
        let tau = 2.0 * std::f64::consts::PI / plus.frequency().unwrap();
        for &t in &[0.25 * tau, 0.5 * tau] {
            let g = GridWavefunction::from_fn(Chart::Position, lo, hi, 200_001, |x| {
                cat.evaluate(x, t).unwrap()
            });
            assert!((g.norm() - 1.0).abs() < 1e-7, "t={t}: {}", g.norm());
        }
    }
}
