use std::fmt;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A model parameter violates its validity constraint.
    InvalidParam { name: &'static str, value: f64 },
    /// Coordinate at or beyond the domain wall x = -1/gamma.
    Domain { what: &'static str, value: f64 },
    /// Gamma-function pole at a nonpositive integer argument.
    Pole { re: f64, im: f64 },
    /// Iterative scheme failed to converge.
    Convergence { what: &'static str },
    /// Trajectory integration approached the domain wall.
    WallCollision { t: f64, x: f64 },
    /// Operation requires the closed-orbit (elliptic) regime.
    Regime { gamma_a0: f64 },
    /// Requested state is not bound (nu_n <= 0).
    Unbound { n: usize, nu: f64 },
    /// Bound-state count is infinite (gamma = 0).
    InfiniteStates,
    /// Coherent-state label is not normalizable (lambda_cs <= 0).
    NonNormalizable { lambda: f64 },
    /// A closed-form moment denominator crossed zero; the moment diverges.
    MomentDivergence { what: &'static str },
    /// Coherent-state label lies outside the oscillatory window (Omega^2 <= 0).
    OpenRegime { omega_sq: f64 },
    /// Grid spacing too coarse to resolve the state being operated on.
    GridTooCoarse { spacing: f64, required: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParam { name, value } => {
                write!(f, "invalid parameter {name} = {value}")
            }
            Error::Domain { what, value } => {
                write!(f, "domain error: {what} = {value} at or beyond the wall x = -1/gamma")
            }
            Error::Pole { re, im } => {
                write!(f, "gamma-function pole at {re} + {im}i")
            }
            Error::Convergence { what } => write!(f, "{what} failed to converge"),
            Error::WallCollision { t, x } => {
                write!(f, "trajectory hit the domain wall at t = {t}, x = {x}")
            }
            Error::Regime { gamma_a0 } => {
                write!(f, "requires elliptic regime 0 < gamma*A0 < 1, got gamma*A0 = {gamma_a0}")
            }
            Error::Unbound { n, nu } => {
                write!(f, "state n = {n} is unbound (nu_n = {nu} <= 0)")
            }
            Error::InfiniteStates => write!(f, "bound-state count is infinite for gamma = 0"),
            Error::NonNormalizable { lambda } => {
                write!(f, "coherent state not normalizable (lambda_cs = {lambda} <= 0)")
            }
            Error::MomentDivergence { what } => write!(f, "moment {what} diverges"),
            Error::OpenRegime { omega_sq } => {
                write!(f, "outside the oscillatory window (Omega_cs^2 = {omega_sq} <= 0)")
            }
            Error::GridTooCoarse { spacing, required } => {
                write!(f, "grid spacing {spacing} too coarse, need <= {required}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
