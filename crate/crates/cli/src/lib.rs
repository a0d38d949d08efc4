//! Library side of the command-line front-end: configuration, experiment
//! runners, the figure manifest, and dataset emission.

pub mod config;
pub mod dataset;
pub mod experiments;
pub mod figures;
