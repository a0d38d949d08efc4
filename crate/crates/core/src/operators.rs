//! Grid realizations of the factorization operators: annihilation/creation,
//! their displaced (bosonic) and beta-shifted variants, the superpotential,
//! the pseudomomentum, and the shape-invariance ladder operators.
//!
//! Every operator here is first order, c0(x) psi + c1(x) psi', realized
//! with the 4th-order stencils of [`GridWavefunction::derivative`].  The
//! beta translation in the ladder operators acts on the family parameter
//! only, never on the grid.  Concretely, on the state family psi_{n,beta}:
//!
//! * L-(beta): apply the a(beta) differential form to psi_{n,beta}; the
//!   output samples equal C-(n) psi_{n-1,beta+2}, which the translation
//!   relabels as the (n-1, beta) ket.
//! * L+(beta): the translation relabels the input first, so feed the
//!   psi_{n,beta+2} samples to the a-dagger(beta) differential form; the
//!   output samples equal C+(n) psi_{n+1,beta} directly.
//!
//! All operators act in the physical x chart.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Chart, GridWavefunction};
use crate::params::ModelParams;
use crate::spectrum::energy_level;

/// Operator selector; beta-parameterized kinds carry their beta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorKind {
    Annihilation,
    Creation,
    DisplacedAnnihilation,
    DisplacedCreation,
    Superpotential,
    Pseudomomentum,
    BetaAnnihilation(f64),
    BetaCreation(f64),
    LadderLower(f64),
    LadderRaise(f64),
}

/// An operator bound to model parameters, applicable to x-chart grids.
#[derive(Debug, Clone, Copy)]
pub struct OperatorOnGrid {
    pub kind: OperatorKind,
    pub params: ModelParams,
}

impl OperatorOnGrid {
    pub fn new(kind: OperatorKind, params: ModelParams) -> Self {
        Self { kind, params }
    }

    pub fn apply(&self, psi: &GridWavefunction) -> Result<GridWavefunction> {
        apply_operator(&self.params, self.kind, psi)
    }
}

pub fn apply_operator(
    params: &ModelParams,
    kind: OperatorKind,
    psi: &GridWavefunction,
) -> Result<GridWavefunction> {
    if psi.chart() != Chart::Position {
        return Err(Error::Domain { what: "chart (need x chart)", value: f64::NAN });
    }
    let required = params.sigma0() / 50.0;
    if psi.spacing() > required {
        return Err(Error::GridTooCoarse { spacing: psi.spacing(), required });
    }
    params.metric(psi.x(0))?;

    let sigma0 = params.sigma0();
    let gs = params.gamma_sigma0();
    let gamma = params.gamma();
    let pref = 1.0 / (2.0_f64.sqrt() * sigma0);
    // dimensionless displacement (beta-1) gamma sigma0 / (2 sqrt2)
    let shift = |beta: f64| (beta - 1.0) * gs / (2.0 * 2.0_f64.sqrt());
    let half_disp = gs / (2.0 * 2.0_f64.sqrt());

    // (c0(x), c1(x)) with op psi = c0 psi + c1 psi'
    let coef = |x: f64| -> (Complex64, Complex64) {
        let g = 1.0 + gamma * x;
        match kind {
            OperatorKind::Annihilation => (
                Complex64::new(pref * x / g, 0.0),
                Complex64::new(pref * sigma0 * sigma0 * g, 0.0),
            ),
            OperatorKind::Creation => (
                Complex64::new(pref * (x / g - gamma * sigma0 * sigma0), 0.0),
                Complex64::new(-pref * sigma0 * sigma0 * g, 0.0),
            ),
            OperatorKind::DisplacedAnnihilation => (
                Complex64::new(pref * x / g + half_disp, 0.0),
                Complex64::new(pref * sigma0 * sigma0 * g, 0.0),
            ),
            OperatorKind::DisplacedCreation => (
                Complex64::new(pref * (x / g - gamma * sigma0 * sigma0) + half_disp, 0.0),
                Complex64::new(-pref * sigma0 * sigma0 * g, 0.0),
            ),
            OperatorKind::Superpotential => (
                Complex64::new(x / g - 0.5 * gamma * sigma0 * sigma0, 0.0),
                Complex64::new(0.0, 0.0),
            ),
            OperatorKind::Pseudomomentum => (
                Complex64::new(0.0, -params.hbar() * 0.5 * gamma),
                Complex64::new(0.0, -params.hbar() * g),
            ),
            OperatorKind::BetaAnnihilation(beta) | OperatorKind::LadderLower(beta) => (
                Complex64::new(pref * x / g - shift(beta), 0.0),
                Complex64::new(pref * sigma0 * sigma0 * g, 0.0),
            ),
            OperatorKind::BetaCreation(beta) => (
                Complex64::new(pref * (x / g - gamma * sigma0 * sigma0) - shift(beta), 0.0),
                Complex64::new(-pref * sigma0 * sigma0 * g, 0.0),
            ),
            OperatorKind::LadderRaise(beta) => (
                // same differential form as a-dagger(beta); the translation
                // T(beta) is a relabel of the input family parameter, so the
                // caller feeds the beta+2 sample (see module docs)
                Complex64::new(pref * (x / g - gamma * sigma0 * sigma0) - shift(beta), 0.0),
                Complex64::new(-pref * sigma0 * sigma0 * g, 0.0),
            ),
        }
    };

    let d = psi.derivative();
    Ok(psi.map(|i, x, v| {
        let (c0, c1) = coef(x);
        c0 * v + c1 * d.values()[i]
    }))
}

/// Residuals of the operator-algebra identities applied to a test state.
#[derive(Debug, Clone, Copy)]
pub struct CommutatorReport {
    /// ||([a,a+] - 1/(1+gx)) psi|| / ||psi||
    pub aa_dagger: f64,
    /// ||([a,a+a] - (1/(1+gx)) a) psi|| / ||psi||
    pub a_number: f64,
    /// ||([b,b+] - 1 + (g s0/sqrt2)(b+ + b)) psi|| / ||psi||
    pub displaced: f64,
    /// ||([PHI,PI] - i hbar/(1+gx)) psi|| / ||psi||
    pub phi_pi: f64,
    /// Jacobi identity residual with H = hbar w0 a+a + E0
    pub jacobi: f64,
}

pub fn commutator_check(params: &ModelParams, psi: &GridWavefunction) -> Result<CommutatorReport> {
    let a = |f: &GridWavefunction| apply_operator(params, OperatorKind::Annihilation, f);
    let ad = |f: &GridWavefunction| apply_operator(params, OperatorKind::Creation, f);
    let b = |f: &GridWavefunction| apply_operator(params, OperatorKind::DisplacedAnnihilation, f);
    let bd = |f: &GridWavefunction| apply_operator(params, OperatorKind::DisplacedCreation, f);
    let norm = psi.norm();
    let gamma = params.gamma();

    let over_g = |f: &GridWavefunction| f.map(|_, x, v| v / (1.0 + gamma * x));

    // [a, a+]
    let c1 = sub(&a(&ad(psi)?)?, &ad(&a(psi)?)?);
    let aa_dagger = sub(&c1, &over_g(psi)).norm() / norm;

    // [a, a+a]
    let num_op = |f: &GridWavefunction| -> Result<GridWavefunction> { ad(&a(f)?) };
    let c2 = sub(&a(&num_op(psi)?)?, &num_op(&a(psi)?)?);
    let a_number = sub(&c2, &over_g(&a(psi)?)).norm() / norm;

    // [b, b+] = 1 - (gs/sqrt2)(b+ + b)
    let c3 = sub(&b(&bd(psi)?)?, &bd(&b(psi)?)?);
    let rhs = {
        let sum_b = add(&bd(psi)?, &b(psi)?);
        let gs = params.gamma_sigma0();
        psi.map(|i, _, v| v - gs / 2.0_f64.sqrt() * sum_b.values()[i])
    };
    let displaced = sub(&c3, &rhs).norm() / norm;

    // [PHI, PI] = i hbar / (1+gx)
    let phi = |f: &GridWavefunction| apply_operator(params, OperatorKind::Superpotential, f);
    let pi = |f: &GridWavefunction| apply_operator(params, OperatorKind::Pseudomomentum, f);
    let c4 = sub(&phi(&pi(psi)?)?, &pi(&phi(psi)?)?);
    let rhs4 = over_g(psi).map(|_, _, v| Complex64::new(0.0, params.hbar()) * v);
    let phi_pi = sub(&c4, &rhs4).norm() / norm;

    // Jacobi identity of a, a+, H
    let e0 = energy_level(params, 0).unwrap_or(0.0);
    let hw = params.hbar() * params.omega0();
    let h_op = |f: &GridWavefunction| -> Result<GridWavefunction> {
        let n = num_op(f)?;
        Ok(f.map(|i, _, v| hw * n.values()[i] + e0 * v))
    };
    let comm = |f: &dyn Fn(&GridWavefunction) -> Result<GridWavefunction>,
                g: &dyn Fn(&GridWavefunction) -> Result<GridWavefunction>,
                v: &GridWavefunction|
     -> Result<GridWavefunction> { Ok(sub(&f(&g(v)?)?, &g(&f(v)?)?)) };
    let aa = |v: &GridWavefunction| comm(&a, &ad, v);
    let ha = |v: &GridWavefunction| comm(&h_op, &a, v);
    let adh = |v: &GridWavefunction| comm(&ad, &h_op, v);
    let j1 = comm(&|v| aa(v), &h_op, psi)?;
    let j2 = comm(&|v| ha(v), &ad, psi)?;
    let j3 = comm(&|v| adh(v), &a, psi)?;
    let jacobi = add(&add(&j1, &j2), &j3).norm() / norm;

    Ok(CommutatorReport { aa_dagger, a_number, displaced, phi_pi, jacobi })
}

pub(crate) fn sub(a: &GridWavefunction, b: &GridWavefunction) -> GridWavefunction {
    a.map(|i, _, v| v - b.values()[i])
}

pub(crate) fn add(a: &GridWavefunction, b: &GridWavefunction) -> GridWavefunction {
    a.map(|i, _, v| v + b.values()[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::support_interval;
    use crate::spectrum::Eigenstate;

    pub(crate) fn state_grid(params: &ModelParams, n_max: usize) -> (f64, f64, usize) {
        let s = params.s();
        let nu_min = 2.0 * s - 2.0 * n_max as f64 - 1.0;
        let (lo, hi) = support_interval(
            params,
            2.0 * s + 2.0 * n_max as f64,
            nu_min + 1.0,
            -34.0,
        );
        let n = ((hi - lo) / (params.sigma0() / 80.0)).ceil() as usize + 1;
        (lo, hi, n.min(400_000))
    }

    fn sampled(params: &ModelParams, n: usize, n_max: usize) -> GridWavefunction {
        let st = Eigenstate::new(*params, n).unwrap();
        let (lo, hi, m) = state_grid(params, n_max);
        GridWavefunction::from_real_fn(Chart::Position, lo, hi, m, |x| st.evaluate(x))
    }

    #[test]
    fn ground_state_is_annihilated() {
        for &gs in &[0.1, 0.2, 0.3] {
            let p = ModelParams::standard(gs).unwrap();
            let psi0 = sampled(&p, 0, 0);
            let out = apply_operator(&p, OperatorKind::Annihilation, &psi0).unwrap();
            let res = out.norm() / psi0.norm();
            assert!(res < 1e-6, "gs={gs}: ||a psi0|| = {res}");
        }
    }

    #[test]
    fn number_operator_eigenrelation() {
        // hbar w0 a+a psi_n = (E_n - E_0) psi_n
        let p = ModelParams::standard(0.2).unwrap();
        for n in 0..4 {
            let psi = sampled(&p, n, 4);
            let out = apply_operator(
                &p,
                OperatorKind::Creation,
                &apply_operator(&p, OperatorKind::Annihilation, &psi).unwrap(),
            )
            .unwrap();
            let want = energy_level(&p, n).unwrap() - energy_level(&p, 0).unwrap();
            let res = sub(&out, &psi.map(|_, _, v| v * want)).norm() / psi.norm();
            assert!(res < 1e-5, "n={n}: residual {res}");
        }
    }

    #[test]
    fn standard_lowering_at_gamma_zero() {
        let p = ModelParams::standard(0.0).unwrap();
        let st1 = Eigenstate::new(p, 1).unwrap();
        let st0 = Eigenstate::new(p, 0).unwrap();
        let psi1 =
            GridWavefunction::from_real_fn(Chart::Position, -9.0, 9.0, 3001, |x| st1.evaluate(x));
        let psi0 =
            GridWavefunction::from_real_fn(Chart::Position, -9.0, 9.0, 3001, |x| st0.evaluate(x));
        let out = apply_operator(&p, OperatorKind::Annihilation, &psi1).unwrap();
        assert!(out.rel_distance(&psi0) < 1e-6);
    }

    #[test]
    fn commutators_on_gaussian_packet() {
        let p = ModelParams::standard(0.2).unwrap();
        let (lo, hi, m) = state_grid(&p, 2);
        let packet = GridWavefunction::from_real_fn(Chart::Position, lo, hi, m, |x| {
            (-0.5 * (x - 0.7) * (x - 0.7)).exp()
        });
        let rep = commutator_check(&p, &packet).unwrap();
        assert!(rep.aa_dagger < 1e-5, "{rep:?}");
        assert!(rep.a_number < 1e-5, "{rep:?}");
        assert!(rep.displaced < 1e-5, "{rep:?}");
        assert!(rep.phi_pi < 1e-5, "{rep:?}");
        assert!(rep.jacobi < 1e-4, "{rep:?}");
    }

    #[test]
    fn gamma_zero_commutator_is_identity() {
        let p = ModelParams::standard(0.0).unwrap();
        let packet = GridWavefunction::from_real_fn(Chart::Position, -10.0, 10.0, 4001, |x| {
            (-0.5 * x * x).exp()
        });
        let rep = commutator_check(&p, &packet).unwrap();
        assert!(rep.aa_dagger < 1e-6, "{rep:?}");
    }

    #[test]
    fn bosonic_form_reproduces_energy() {
        // (hbar w0/2){b, b+} psi_n = E_n psi_n
        let p = ModelParams::standard(0.2).unwrap();
        for n in 0..3 {
            let psi = sampled(&p, n, 3);
            let b = apply_operator(&p, OperatorKind::DisplacedAnnihilation, &psi).unwrap();
            let bd = apply_operator(&p, OperatorKind::DisplacedCreation, &psi).unwrap();
            let bbd = apply_operator(&p, OperatorKind::DisplacedAnnihilation, &bd).unwrap();
            let bdb = apply_operator(&p, OperatorKind::DisplacedCreation, &b).unwrap();
            let anti = add(&bbd, &bdb).map(|_, _, v| 0.5 * v);
            let want = energy_level(&p, n).unwrap();
            let res = sub(&anti, &psi.map(|_, _, v| v * want)).norm() / psi.norm();
            assert!(res < 1e-5, "n={n}: {res}");
        }
    }

    #[test]
    fn coarse_grid_rejected() {
        let p = ModelParams::standard(0.1).unwrap();
        let coarse =
            GridWavefunction::from_real_fn(Chart::Position, -3.0, 3.0, 20, |x| (-x * x).exp());
        assert!(matches!(
            apply_operator(&p, OperatorKind::Annihilation, &coarse),
            Err(Error::GridTooCoarse { .. })
        ));
    }
}
