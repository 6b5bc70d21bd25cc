//! Exact arithmetic in ℚ(u) with u² = q, its extension by X = q^(-s), and root-number words.

mod constant;
mod cycloprod;
mod halfint;
mod qvalue;
mod svalue;
mod upoly;

pub use constant::{ConstantValue, FourthRoot, Scalar};
pub use halfint::{HalfInt, SArg};
pub use qvalue::QValue;
pub use svalue::{Atom, SValue, Specialized};
pub use upoly::{cyclotomic, UPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("not a value: zero denominator")]
    NotAValue,
    #[error("irrational evaluation: q0 is not a rational square")]
    Irrational,
    #[error("evaluation base must satisfy q0 > 1, got {0}")]
    BadBase(String),
    #[error("non-integral u-exponent in {0}")]
    NonIntegralExponent(String),
    #[error("missing unit value for eps({0})")]
    MissingUnit(String),
    #[error("unit value for eps({0}) does not square to chi(-1)")]
    InconsistentUnit(String),
    #[error("unit values multiply to a non-real fourth root of unity")]
    NonRationalUnits,
}

/// Constant values whose scalar does not depend on s.
pub type QConst = ConstantValue<QValue>;
/// Constant values whose scalar may depend on s.
pub type SConst = ConstantValue<SValue>;
