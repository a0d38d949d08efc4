//! Catalog of classical Hamiltonians H = p^2/(2 M(x)) + m0 omega0^2 chi(x)^2/2
//! that the canonical transformation (eta(x), sqrt(m0/M(x)) p) turns into the
//! same Morse oscillator, together with a numerical verifier.

use crate::error::{Error, Result};
use crate::params::ModelParams;

/// Identifier of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogId {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl CatalogId {
    pub fn label(&self) -> char {
        match self {
            CatalogId::A => 'a',
            CatalogId::B => 'b',
            CatalogId::C => 'c',
            CatalogId::D => 'd',
            CatalogId::E => 'e',
            CatalogId::F => 'f',
        }
    }
}

/// One family member: shape function chi, mass profile M, potential V,
/// deformed coordinate eta, and the open interval on which they live.
#[derive(Debug, Clone, Copy)]
pub struct MorseMapEntry {
    id: CatalogId,
    params: ModelParams,
    /// +1 when eta = -ln(1 - gamma chi)/gamma, -1 when eta = -ln(1 + gamma chi)/gamma.
    sign: f64,
}

impl MorseMapEntry {
    pub fn id(&self) -> CatalogId {
        self.id
    }

    pub fn sign(&self) -> f64 {
        self.sign
    }

    pub fn domain(&self) -> (f64, f64) {
        let g = self.params.gamma();
        match self.id {
            CatalogId::A => (-1.0 / g, f64::INFINITY),
            CatalogId::B => (f64::NEG_INFINITY, 1.0 / g),
            CatalogId::C | CatalogId::D | CatalogId::E => (f64::NEG_INFINITY, f64::INFINITY),
            CatalogId::F => (
                -std::f64::consts::FRAC_PI_2 / g,
                std::f64::consts::FRAC_PI_2 / g,
            ),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        let (lo, hi) = self.domain();
        x > lo && x < hi
    }

    pub fn chi(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        let g = self.params.gamma();
        let u = g * x;
        Ok(match self.id {
            CatalogId::A => x / (1.0 + u),
            CatalogId::B => x,
            CatalogId::C => ((-u.asinh()).exp() - 1.0) / g,
            CatalogId::D => (1.0 - (-u.atan()).exp()) / g,
            CatalogId::E => (1.0 - (-u.sinh().atan()).exp()) / g,
            CatalogId::F => (1.0 - (-u.tan().asinh()).exp()) / g,
        })
    }

    pub fn mass(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        let m0 = self.params.m0();
        let u = self.params.gamma() * x;
        Ok(match self.id {
            CatalogId::A => m0 / ((1.0 + u) * (1.0 + u)),
            CatalogId::B => m0 / ((1.0 - u) * (1.0 - u)),
            CatalogId::C => m0 / (1.0 + u * u),
            CatalogId::D => m0 / ((1.0 + u * u) * (1.0 + u * u)),
            CatalogId::E => {
                let c = u.cosh();
                m0 / (c * c)
            }
            CatalogId::F => {
                let c = u.cos();
                m0 / (c * c)
            }
        })
    }

    pub fn potential(&self, x: f64) -> Result<f64> {
        let chi = self.chi(x)?;
        let w0 = self.params.omega0();
        Ok(0.5 * self.params.m0() * w0 * w0 * chi * chi)
    }

    pub fn eta(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        let g = self.params.gamma();
        let u = g * x;
        Ok(match self.id {
            CatalogId::A => (1.0 + u).ln() / g,
            CatalogId::B => -(1.0 - u).ln() / g,
            CatalogId::C => u.asinh() / g,
            CatalogId::D => u.atan() / g,
            CatalogId::E => u.sinh().atan() / g,
            CatalogId::F => u.tan().asinh() / g,
        })
    }

    fn check(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Domain { what: "catalog x", value: x })
        }
    }
}

/// All six catalog entries for the given parameters (gamma > 0 required).
pub fn morse_catalog(params: &ModelParams) -> Result<[MorseMapEntry; 6]> {
    if params.gamma() <= 0.0 {
        return Err(Error::InvalidParam { name: "gamma", value: params.gamma() });
    }
    let mk = |id, sign| MorseMapEntry { id, params: *params, sign };
    Ok([
        mk(CatalogId::A, 1.0),
        mk(CatalogId::B, 1.0),
        mk(CatalogId::C, -1.0),
        mk(CatalogId::D, 1.0),
        mk(CatalogId::E, 1.0),
        mk(CatalogId::F, 1.0),
    ])
}

/// Residuals of the map identities on the supplied phase points.
#[derive(Debug, Clone, Copy)]
pub struct CatalogReport {
    /// max |H_chi(x,p) - K_Morse(eta, sqrt(m0/M) p)| over the samples
    pub hamiltonian_residual: f64,
    /// max relative defect of M = m0 [chi'/(1 -+ gamma chi)]^2 (chi' by FD)
    pub mass_residual: f64,
    /// max defect of eta = -+ ln(1 -+ gamma chi)/gamma
    pub eta_residual: f64,
}

/// Check H_chi(x, p) = K_Morse(eta(x), sqrt(m0/M(x)) p) together with the
/// finite-difference structure identities, over the given samples.
pub fn catalog_verify(entry: &MorseMapEntry, samples: &[(f64, f64)]) -> Result<CatalogReport> {
    let params = entry.params;
    let m0 = params.m0();
    let w = params.well_depth();
    let gamma = params.gamma();

    let mut r_h = 0.0_f64;
    let mut r_m = 0.0_f64;
    let mut r_eta = 0.0_f64;
    for &(x, p) in samples {
        let mass = entry.mass(x)?;
        let h = p * p / (2.0 * mass) + entry.potential(x)?;
        let pi = (m0 / mass).sqrt() * p;
        let e = (-gamma * entry.eta(x)?).exp() - 1.0;
        let k = pi * pi / (2.0 * m0) + w * e * e;
        r_h = r_h.max((h - k).abs() / h.abs().max(1.0));

        // structure identities with finite-difference chi'
        let hstep = 1e-6 * (x.abs() + 1.0 / gamma).min(entry_span(entry) * 0.25);
        if entry.contains(x - hstep) && entry.contains(x + hstep) {
            let dchi = (entry.chi(x + hstep)? - entry.chi(x - hstep)?) / (2.0 * hstep);
            let denom = 1.0 - entry.sign * gamma * entry.chi(x)?;
            let m_pred = m0 * (dchi / denom) * (dchi / denom);
            r_m = r_m.max((m_pred - mass).abs() / mass);
            let eta_pred = -denom.ln() / gamma;
            r_eta = r_eta.max((eta_pred - entry.eta(x)?).abs());
        }
    }
    Ok(CatalogReport { hamiltonian_residual: r_h, mass_residual: r_m, eta_residual: r_eta })
}

fn entry_span(entry: &MorseMapEntry) -> f64 {
    let (lo, hi) = entry.domain();
    if lo.is_finite() && hi.is_finite() {
        hi - lo
    } else {
        f64::INFINITY
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn params() -> ModelParams {
        ModelParams::new(1.0, 1.0, 1.0, 0.5).unwrap()
    }

    #[test]
    fn all_entries_fix_the_origin() {
        for entry in morse_catalog(&params()).unwrap() {
            assert!(entry.eta(0.0).unwrap().abs() < 1e-14);
            assert!((entry.mass(0.0).unwrap() - 1.0).abs() < 1e-14);
            assert!(entry.potential(0.0).unwrap().abs() < 1e-14);
        }
    }

    #[test]
    fn entry_c_closed_forms() {
        let entry = morse_catalog(&params()).unwrap()[2];
        let g = 0.5;
        for &x in &[-3.0, -0.4, 0.0, 0.7, 5.0] {
            let want_eta = (g * x as f64).asinh() / g;
            assert!((entry.eta(x).unwrap() - want_eta).abs() < 1e-13);
            let want_m = 1.0 / (1.0 + g * g * x * x);
            assert!((entry.mass(x).unwrap() - want_m).abs() < 1e-13);
        }
    }

    #[test]
    fn entry_f_mass_diverges_at_the_edges() {
        let entry = morse_catalog(&params()).unwrap()[5];
        let (lo, hi) = entry.domain();
        let mut last = 0.0;
        for i in 1..10 {
            let x = hi - (hi - lo) * 1e-2 / i as f64;
            let m = entry.mass(x).unwrap();
            assert!(m > last);
            last = m;
        }
        assert!(last > 1e3);
        assert!(entry.mass(hi).is_err());
    }

    #[test]
    fn map_identity_on_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for entry in morse_catalog(&params()).unwrap() {
            let (lo, hi) = entry.domain();
            let lo = lo.max(-4.0 + 1e-3);
            let hi = hi.min(4.0 - 1e-3);
            let samples: Vec<(f64, f64)> = (0..100)
                .map(|_| {
                    (
                        rng.gen_range(lo..hi),
                        rng.gen_range(-3.0..3.0),
                    )
                })
                .collect();
            let rep = catalog_verify(&entry, &samples).unwrap();
            assert!(rep.hamiltonian_residual < 1e-9, "{:?}: {rep:?}", entry.id());
            assert!(rep.mass_residual < 1e-8, "{:?}: {rep:?}", entry.id());
            assert!(rep.eta_residual < 1e-10, "{:?}: {rep:?}", entry.id());
        }
    }
}
