//! Exact classical mechanics of the deformed oscillator: conic-orbit
//! classification, closed-form trajectories through the deformed phase,
//! the canonical map to the Morse chart, orbit statistics, and an RK4
//! integrator used as the independent oracle for all of it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::ModelParams;

/// Tolerance window selecting the parabolic branch around gamma*A0 = 1.
const PARABOLIC_TOL: f64 = 1e-12;

/// Orbit family of the phase-space path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitRegime {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// Closed-form orbit description: amplitude scale A0 and phase reference t0.
///
/// The energy is E = m0 omega0^2 A0^2 / 2 and the regime is set by the
/// dimensionless gamma*A0 = sqrt(E/W_gamma).
#[derive(Debug, Clone, Copy)]
pub struct OrbitSpec {
    params: ModelParams,
    a0: f64,
    t0: f64,
}

/// Phase-space sample in the (x, p) chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalState {
    pub t: f64,
    pub x: f64,
    pub p: f64,
}

/// Phase-space sample in the deformed (x_gamma, Pi_gamma) chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformedState {
    pub t: f64,
    pub x_gamma: f64,
    pub pi_gamma: f64,
}

/// Time-averaged orbit statistics over one elliptic period.
#[derive(Debug, Clone, Copy)]
pub struct ClassicalMoments {
    pub x: f64,
    pub x2: f64,
    pub p: f64,
    pub p2: f64,
    pub pi: f64,
    pub pi2: f64,
    pub mass: f64,
    pub kinetic: f64,
    pub potential: f64,
}

impl OrbitSpec {
    pub fn new(params: ModelParams, a0: f64, t0: f64) -> Result<Self> {
        if !(a0 >= 0.0) || !a0.is_finite() {
            return Err(Error::InvalidParam { name: "A0", value: a0 });
        }
        Ok(Self { params, a0, t0 })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn gamma_a0(&self) -> f64 {
        self.params.gamma() * self.a0
    }

    pub fn energy(&self) -> f64 {
        let w = self.params.omega0();
        0.5 * self.params.m0() * w * w * self.a0 * self.a0
    }

    pub fn regime(&self) -> OrbitRegime {
        classify_orbit(self)
    }

    /// Elliptic angular frequency Omega = omega0 sqrt(1 - (gamma A0)^2).
    pub fn omega_gamma(&self) -> f64 {
        let ga = self.gamma_a0();
        self.params.omega0() * (1.0 - ga * ga).sqrt()
    }

    /// Open-regime rate Lambda = omega0 sqrt((gamma A0)^2 - 1).
    pub fn lambda_gamma(&self) -> f64 {
        let ga = self.gamma_a0();
        self.params.omega0() * (ga * ga - 1.0).sqrt()
    }

    /// Conic scale A_gamma = A0/(1 - (gamma A0)^2); negative beyond the
    /// parabolic point.
    pub fn a_gamma(&self) -> f64 {
        let ga = self.gamma_a0();
        self.a0 / (1.0 - ga * ga)
    }

    /// Oscillation period, defined in the elliptic regime only.
    pub fn period(&self) -> Result<f64> {
        match self.regime() {
            OrbitRegime::Elliptic => Ok(2.0 * std::f64::consts::PI / self.omega_gamma()),
            _ => Err(Error::Regime { gamma_a0: self.gamma_a0() }),
        }
    }

    /// Inner turning point -A0/(1 + gamma A0), valid in every regime.
    pub fn x_min(&self) -> f64 {
        -self.a0 / (1.0 + self.gamma_a0())
    }

    /// Outer turning point A0/(1 - gamma A0) (elliptic regime only).
    pub fn x_max(&self) -> Result<f64> {
        match self.regime() {
            OrbitRegime::Elliptic => Ok(self.a0 / (1.0 - self.gamma_a0())),
            _ => Err(Error::Regime { gamma_a0: self.gamma_a0() }),
        }
    }

    /// Equilibrium position gamma A0^2/(1 - (gamma A0)^2) of the closed orbit.
    pub fn x_eq(&self) -> f64 {
        let ga = self.gamma_a0();
        self.params.gamma() * self.a0 * self.a0 / (1.0 - ga * ga)
    }
}

/// Conic classification of the orbit by gamma*A0.
pub fn classify_orbit(spec: &OrbitSpec) -> OrbitRegime {
    let ga = spec.gamma_a0();
    if (ga - 1.0).abs() < PARABOLIC_TOL {
        OrbitRegime::Parabolic
    } else if ga < 1.0 {
        OrbitRegime::Elliptic
    } else {
        OrbitRegime::Hyperbolic
    }
}

/// Deformed phase theta_gamma(t), lifted to a globally continuous function
/// of t (the closed-orbit arctangent is unwrapped per half period so the
/// phase grows monotonically, with theta(t0) = 0).
pub fn deformed_phase(spec: &OrbitSpec, t: f64) -> f64 {
    let tau = t - spec.t0;
    let ga = spec.gamma_a0();
    match spec.regime() {
        OrbitRegime::Elliptic => {
            if ga == 0.0 {
                return spec.params.omega0() * tau;
            }
            let kappa = ((1.0 - ga) / (1.0 + ga)).sqrt();
            let u = 0.5 * spec.omega_gamma() * tau;
            // branch index: u = k*pi + v with v in [-pi/2, pi/2]
            let k = (u / std::f64::consts::PI).round();
            let v = u - k * std::f64::consts::PI;
            2.0 * (k * std::f64::consts::PI + (kappa * v.tan()).atan())
        }
        OrbitRegime::Parabolic => {
            // limit of the open branch as gamma*A0 -> 1
            std::f64::consts::PI - 2.0 * (spec.params.omega0() * tau).atan()
        }
        OrbitRegime::Hyperbolic => {
            let kappa = ((ga + 1.0) / (ga - 1.0)).sqrt();
            let arg = kappa * (0.5 * spec.lambda_gamma() * tau).tanh();
            std::f64::consts::PI - 2.0 * arg.atan()
        }
    }
}

/// Exact position x(t).
pub fn exact_position(spec: &OrbitSpec, t: f64) -> f64 {
    let tau = t - spec.t0;
    let ga = spec.gamma_a0();
    match spec.regime() {
        OrbitRegime::Elliptic => {
            let c = deformed_phase(spec, t).cos();
            spec.a0 * c / (1.0 - ga * c)
        }
        OrbitRegime::Parabolic => {
            let wt = spec.params.omega0() * tau;
            0.5 * spec.a0 * (wt * wt - 1.0)
        }
        OrbitRegime::Hyperbolic => {
            // A_gamma < 0 here, so x grows without bound
            spec.a_gamma() * (ga - (spec.lambda_gamma() * tau).cosh())
        }
    }
}

/// Exact linear momentum p(t) = m(x) dx/dt.
///
/// On the closed orbit this is -m0 omega0 A0 sin(theta)(1 - gamma A0 cos
/// theta); the open-branch phase runs backwards in t, which flips the sign
/// of the same expression there (checked against the m(x) dx/dt oracle).
pub fn exact_momentum(spec: &OrbitSpec, t: f64) -> f64 {
    let m0 = spec.params.m0();
    let w0 = spec.params.omega0();
    let ga = spec.gamma_a0();
    match spec.regime() {
        OrbitRegime::Elliptic => {
            let th = deformed_phase(spec, t);
            -m0 * w0 * spec.a0 * th.sin() * (1.0 - ga * th.cos())
        }
        OrbitRegime::Parabolic | OrbitRegime::Hyperbolic => {
            let th = deformed_phase(spec, t);
            m0 * w0 * spec.a0 * th.sin() * (1.0 - ga * th.cos())
        }
    }
}

/// Exact velocity dx/dt = p/m(x).
pub fn exact_velocity(spec: &OrbitSpec, t: f64) -> f64 {
    let x = exact_position(spec, t);
    let g = 1.0 + spec.params.gamma() * x;
    exact_momentum(spec, t) * g * g / spec.params.m0()
}

/// Full state at time t.
pub fn exact_state(spec: &OrbitSpec, t: f64) -> ClassicalState {
    ClassicalState { t, x: exact_position(spec, t), p: exact_momentum(spec, t) }
}

/// Chart map (x, p) -> (x_gamma, Pi_gamma) with x_gamma = ln(1+gamma x)/gamma
/// and Pi_gamma = (1+gamma x) p.
pub fn to_deformed(params: &ModelParams, state: &ClassicalState) -> Result<DeformedState> {
    let g = params.metric(state.x)?;
    let x_gamma = if params.gamma() == 0.0 { state.x } else { g.ln() / params.gamma() };
    Ok(DeformedState { t: state.t, x_gamma, pi_gamma: g * state.p })
}

/// Inverse chart map.
pub fn from_deformed(params: &ModelParams, state: &DeformedState) -> ClassicalState {
    if params.gamma() == 0.0 {
        return ClassicalState { t: state.t, x: state.x_gamma, p: state.pi_gamma };
    }
    let e = (params.gamma() * state.x_gamma).exp();
    ClassicalState { t: state.t, x: (e - 1.0) / params.gamma(), p: state.pi_gamma / e }
}

/// Hamiltonian H(x, p) = (1+gamma x)^2 p^2/(2 m0) + m0 omega0^2 x^2/(2(1+gamma x)^2).
pub fn hamiltonian(params: &ModelParams, state: &ClassicalState) -> Result<f64> {
    let g = params.metric(state.x)?;
    let kin = g * g * state.p * state.p / (2.0 * params.m0());
    Ok(kin + params.potential(state.x)?)
}

/// Morse-chart Hamiltonian K = Pi^2/(2 m0) + W_gamma (e^(-gamma x_gamma) - 1)^2.
pub fn morse_hamiltonian(params: &ModelParams, state: &DeformedState) -> f64 {
    let kin = state.pi_gamma * state.pi_gamma / (2.0 * params.m0());
    if params.gamma() == 0.0 {
        let w = params.omega0();
        kin + 0.5 * params.m0() * w * w * state.x_gamma * state.x_gamma
    } else {
        let e = (-params.gamma() * state.x_gamma).exp() - 1.0;
        kin + params.well_depth() * e * e
    }
}

/// Complex orbit variable alpha_gamma(x, p) with hbar omega0 |alpha|^2 = H.
pub fn alpha_variable(params: &ModelParams, state: &ClassicalState) -> Result<Complex64> {
    let g = params.metric(state.x)?;
    let pref = (params.m0() * params.omega0() / (2.0 * params.hbar())).sqrt();
    Ok(Complex64::new(
        pref * state.x / g,
        pref * g * state.p / (params.m0() * params.omega0()),
    ))
}

// Hamiltonian flow: dx/dt = (1+gx)^2 p/m0, dp/dt = -g(1+gx)p^2/m0 - m0 w0^2 x/(1+gx)^3.
fn flow(params: &ModelParams, x: f64, p: f64) -> (f64, f64) {
    let g = 1.0 + params.gamma() * x;
    let m0 = params.m0();
    let w0 = params.omega0();
    let dx = g * g * p / m0;
    let dp = -params.gamma() * g * p * p / m0 - m0 * w0 * w0 * x / (g * g * g);
    (dx, dp)
}

/// Fixed-step RK4 on the equations of motion; the integration oracle.
///
/// Returns steps+1 states including the initial one.  Aborts with
/// `WallCollision` if the trajectory comes within 1e-9 (in units of the
/// metric factor) of the domain wall.
pub fn rk4_integrate(
    params: &ModelParams,
    state0: &ClassicalState,
    dt: f64,
    steps: usize,
) -> Result<Vec<ClassicalState>> {
    if !(dt > 0.0) {
        return Err(Error::InvalidParam { name: "dt", value: dt });
    }
    params.metric(state0.x)?;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(*state0);
    let (mut x, mut p) = (state0.x, state0.p);
    let mut t = state0.t;
    for _ in 0..steps {
        let (k1x, k1p) = flow(params, x, p);
        let (k2x, k2p) = flow(params, x + 0.5 * dt * k1x, p + 0.5 * dt * k1p);
        let (k3x, k3p) = flow(params, x + 0.5 * dt * k2x, p + 0.5 * dt * k2p);
        let (k4x, k4p) = flow(params, x + dt * k3x, p + dt * k3p);
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        p += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        t += dt;
        if 1.0 + params.gamma() * x < 1e-9 {
            return Err(Error::WallCollision { t, x });
        }
        out.push(ClassicalState { t, x, p });
    }
    Ok(out)
}

/// Time-of-residence density of the closed orbit between its turning points.
pub fn classical_density(spec: &OrbitSpec, x: f64) -> Result<f64> {
    let ga = spec.gamma_a0();
    if !(ga > 0.0 && ga < 1.0) || spec.regime() != OrbitRegime::Elliptic {
        return Err(Error::Regime { gamma_a0: ga });
    }
    let ag = spec.a_gamma();
    let d = ag * ag - (x - ga * ag) * (x - ga * ag);
    if d <= 0.0 {
        return Err(Error::Domain { what: "x (outside turning points)", value: x });
    }
    Ok(1.0 / (std::f64::consts::PI * d.sqrt()))
}

/// Closed forms for the time averages over one elliptic period.
pub fn classical_moments(spec: &OrbitSpec) -> Result<ClassicalMoments> {
    let ga = spec.gamma_a0();
    if !(ga >= 0.0 && ga < 1.0) || spec.regime() != OrbitRegime::Elliptic {
        return Err(Error::Regime { gamma_a0: ga });
    }
    let m0 = spec.params.m0();
    let w0 = spec.params.omega0();
    let a0 = spec.a0;
    let ga2 = ga * ga;
    let root = (1.0 - ga2).sqrt();
    let gamma = spec.params.gamma();

    let x = gamma * a0 * a0 / (1.0 - ga2);
    let x2 = 0.5 * a0 * a0 * (1.0 + 2.0 * ga2) / ((1.0 - ga2) * (1.0 - ga2));
    let p2 = 0.5 * m0 * m0 * w0 * w0 * a0 * a0 * root;
    let pi2 = if ga == 0.0 {
        0.5 * m0 * m0 * w0 * w0 * a0 * a0
    } else {
        m0 * m0 * w0 * w0 * a0 * a0 * (1.0 - (1.0 - root) / ga2)
    };
    let mass = m0 * root;
    // T-bar + V-bar = E and T-bar = V-bar * mass/m0
    let energy = spec.energy();
    let potential = energy / (1.0 + root);
    let kinetic = energy * root / (1.0 + root);

    Ok(ClassicalMoments { x, x2, p: 0.0, p2, pi: 0.0, pi2, mass, kinetic, potential })
}

/// Numerical Poisson bracket {f, g} = df/dx dg/dp - df/dp dg/dx by central
/// differences (h scaled to the local state and the oscillator scales).
pub fn poisson_bracket<F, G>(params: &ModelParams, f: F, g: G, state: &ClassicalState) -> f64
where
    F: Fn(&ModelParams, f64, f64) -> f64,
    G: Fn(&ModelParams, f64, f64) -> f64,
{
    let (hx, hp) = bracket_steps(params, state);
    let dfx = (f(params, state.x + hx, state.p) - f(params, state.x - hx, state.p)) / (2.0 * hx);
    let dfp = (f(params, state.x, state.p + hp) - f(params, state.x, state.p - hp)) / (2.0 * hp);
    let dgx = (g(params, state.x + hx, state.p) - g(params, state.x - hx, state.p)) / (2.0 * hx);
    let dgp = (g(params, state.x, state.p + hp) - g(params, state.x, state.p - hp)) / (2.0 * hp);
    dfx * dgp - dfp * dgx
}

/// Complex-valued variant of [`poisson_bracket`] for the alpha variables.
pub fn poisson_bracket_complex<F, G>(
    params: &ModelParams,
    f: F,
    g: G,
    state: &ClassicalState,
) -> Complex64
where
    F: Fn(&ModelParams, f64, f64) -> Complex64,
    G: Fn(&ModelParams, f64, f64) -> Complex64,
{
    let (hx, hp) = bracket_steps(params, state);
    let dfx = (f(params, state.x + hx, state.p) - f(params, state.x - hx, state.p)) / (2.0 * hx);
    let dfp = (f(params, state.x, state.p + hp) - f(params, state.x, state.p - hp)) / (2.0 * hp);
    let dgx = (g(params, state.x + hx, state.p) - g(params, state.x - hx, state.p)) / (2.0 * hx);
    let dgp = (g(params, state.x, state.p + hp) - g(params, state.x, state.p - hp)) / (2.0 * hp);
    dfx * dgp - dfp * dgx
}

fn bracket_steps(params: &ModelParams, state: &ClassicalState) -> (f64, f64) {
    let eps = f64::EPSILON.powf(1.0 / 3.0);
    let sigma0 = params.sigma0();
    let pscale = params.hbar() / sigma0;
    let hx = eps * (state.x.abs() + sigma0);
    let hp = eps * (state.p.abs() + pscale);
    (hx, hp)
}
