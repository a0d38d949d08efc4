//! Exact classical and quantum treatment of the asymmetric oscillator with
//! position-dependent mass m(x) = m0/(1+gamma x)^2, whose Hamiltonian maps
//! canonically onto a Morse oscillator.  Every closed-form result has an
//! independent numerical oracle (quadrature, finite-difference
//! diagonalization, RK4 integration, grid operator algebra) wired into the
//! verification suite.

pub mod catalog;
pub mod classical;
pub mod coherent;
pub mod error;
pub mod fdsolve;
pub mod grid;
pub mod operators;
pub mod params;
pub mod quadrature;
pub mod special;
pub mod spectrum;
pub mod susy;
pub mod tridiag;
pub mod verify;

pub use error::{Error, Result};
pub use params::ModelParams;

pub type Complex = num_complex::Complex64;
