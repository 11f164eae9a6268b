//! Effective commutative rings: `Z`, `Z/n`, `Z[1/p]`, polynomial rings over
//! those, and quotients by variable-power relations such as `xi^2 = 0`.
//!
//! Every element is kept in canonical form, so equality is structural.
//! Division is never exposed; use [`RingElement::try_invert`].

mod asr;
mod descriptor;
mod element;
mod eval;
mod ideal;
pub(crate) mod numtheory;
mod parse;
mod units;

pub use asr::{asr_property_holds, asr_transform};
pub use descriptor::{Ring, RingDescriptor};
pub use element::{arith, ArithOp, Monomial, RingElement};
pub use eval::{check_homomorphism, evaluate_hom, map_scalar, Assignment};
pub use ideal::{
    maximal_ideals_containing, unimodular_certificate, BezoutCertificate, IdealDescriptor,
    MaximalIdeals,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty row")]
    EmptyRow,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("2 is not invertible in the target ring")]
    TwoNotInvertible,
    #[error("{0} is not invertible in the target ring")]
    PrimeNotInvertible(u64),
    #[error("relation not preserved: {0}")]
    RelationNotPreserved(String),
}
