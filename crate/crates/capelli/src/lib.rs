//! Command-line driver, JSON formats and verification sweeps on top of
//! [`capelli_core`].

pub mod cli;
pub mod json;
pub mod sweep;
