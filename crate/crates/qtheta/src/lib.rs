//! Exact local constants for quaternionic unitary dual pairs over a p-adic field.
//!
//! Everything is computed symbolically in ℚ(q^(1/2)), extended by `X = q^(-s)` where a
//! complex parameter is present and by opaque root-number symbols `ε(1/2, χ, ψ)`.
//! Each constant is available along several independent routes so that the routes can be
//! compared for exact equality; [`suites`] runs those comparisons.

pub mod abelian;
pub mod doubling;
pub mod exactring;
pub mod localdata;
pub mod report;
pub mod suites;
pub mod theta;
pub mod volumes;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exactring::ExactError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("pole at s = {0}")]
    Pole(String),
    #[error("appendix assumes odd residue characteristic (e = 0), got e = {0}")]
    EvenResidue(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
