use crate::error::{Error, Result};

/// Physical constants of the deformed oscillator and its derived scales.
///
/// The mass profile is m(x) = m0/(1+gamma*x)^2 on x > -1/gamma, with the
/// oscillator potential V(x) = m(x) omega0^2 x^2 / 2.  All other modules
/// read their scales from here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    m0: f64,
    omega0: f64,
    hbar: f64,
    gamma: f64,
}

impl ModelParams {
    pub fn new(m0: f64, omega0: f64, hbar: f64, gamma: f64) -> Result<Self> {
        if !(m0 > 0.0) || !m0.is_finite() {
            return Err(Error::InvalidParam { name: "m0", value: m0 });
        }
        if !(omega0 > 0.0) || !omega0.is_finite() {
            return Err(Error::InvalidParam { name: "omega0", value: omega0 });
        }
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::InvalidParam { name: "hbar", value: hbar });
        }
        if !(gamma >= 0.0) || !gamma.is_finite() {
            return Err(Error::InvalidParam { name: "gamma", value: gamma });
        }
        Ok(Self { m0, omega0, hbar, gamma })
    }

    /// Natural units hbar = m0 = omega0 = 1 with the given dimensionless
    /// deformation gamma*sigma0.
    pub fn standard(gamma_sigma0: f64) -> Result<Self> {
        Self::new(1.0, 1.0, 1.0, gamma_sigma0)
    }

    pub fn m0(&self) -> f64 {
        self.m0
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Characteristic length sigma0 = sqrt(hbar/(m0 omega0)) of the
    /// undeformed oscillator.
    pub fn sigma0(&self) -> f64 {
        (self.hbar / (self.m0 * self.omega0)).sqrt()
    }

    /// Dimensionless deformation gamma*sigma0.
    pub fn gamma_sigma0(&self) -> f64 {
        self.gamma * self.sigma0()
    }

    /// Morse parameter s = 1/(gamma*sigma0)^2; +inf for gamma = 0.
    pub fn s(&self) -> f64 {
        if self.gamma == 0.0 {
            f64::INFINITY
        } else {
            let gs = self.gamma_sigma0();
            1.0 / (gs * gs)
        }
    }

    /// Well depth W_gamma = m0 omega0^2 / (2 gamma^2); +inf for gamma = 0.
    pub fn well_depth(&self) -> f64 {
        if self.gamma == 0.0 {
            f64::INFINITY
        } else {
            self.m0 * self.omega0 * self.omega0 / (2.0 * self.gamma * self.gamma)
        }
    }

    /// Lower edge of the coordinate domain (-1/gamma, or -inf for gamma = 0).
    pub fn domain_min(&self) -> f64 {
        if self.gamma == 0.0 {
            f64::NEG_INFINITY
        } else {
            -1.0 / self.gamma
        }
    }

    pub fn mass_at(&self, x: f64) -> Result<f64> {
        let g = self.metric(x)?;
        Ok(self.m0 / (g * g))
    }

    /// Potential V(x) = m(x) omega0^2 x^2 / 2.
    pub fn potential(&self, x: f64) -> Result<f64> {
        let g = self.metric(x)?;
        let u = x / g;
        Ok(0.5 * self.m0 * self.omega0 * self.omega0 * u * u)
    }

    /// Metric factor 1 + gamma*x, checked against the domain wall.
    pub fn metric(&self, x: f64) -> Result<f64> {
        let g = 1.0 + self.gamma * x;
        if g <= 0.0 {
            return Err(Error::Domain { what: "x", value: x });
        }
        Ok(g)
    }

    /// Bound-state operations need s > 1/2 so that Gamma(2s-1) is finite.
    pub fn require_quantum_bound(&self) -> Result<()> {
        if self.gamma > 0.0 && self.s() <= 0.5 {
            return Err(Error::Unbound { n: 0, nu: 2.0 * self.s() - 1.0 });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_scales() {
        let p = ModelParams::new(2.0, 0.5, 1.0, 0.1).unwrap();
        assert!((p.sigma0() - 1.0).abs() < 1e-15);
        assert!((p.gamma_sigma0() - 0.1).abs() < 1e-15);
        assert!((p.s() - 100.0).abs() < 1e-10);
        assert!((p.well_depth() - 2.0 * 0.25 / 0.02).abs() < 1e-10);
    }

    #[test]
    fn gamma_zero_sentinels() {
        let p = ModelParams::standard(0.0).unwrap();
        assert!(p.s().is_infinite());
        assert!(p.well_depth().is_infinite());
        assert_eq!(p.domain_min(), f64::NEG_INFINITY);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(ModelParams::new(-1.0, 1.0, 1.0, 0.0).is_err());
        assert!(ModelParams::new(1.0, 0.0, 1.0, 0.0).is_err());
        assert!(ModelParams::new(1.0, 1.0, 1.0, -0.1).is_err());
    }

    #[test]
    fn wall_is_enforced() {
        let p = ModelParams::standard(0.5).unwrap();
        assert!(p.metric(-2.0).is_err());
        assert!(p.metric(-1.9999).is_ok());
        assert!(p.potential(5.0).unwrap() < p.well_depth());
    }
}
