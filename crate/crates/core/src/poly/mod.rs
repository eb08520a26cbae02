//! Exact engine for unital pure-difference binomial ideals.

mod binomial;
mod groebner;
mod monomial;
mod order;
mod saturation;

use thiserror::Error;

pub use binomial::{BinomialIdeal, PureBinomial};
pub use groebner::{
    ideal_contains, ideal_equal, ideal_membership, is_reduced_groebner_basis, normal_form,
    reduced_groebner_basis,
};
pub use monomial::{Monomial, VarNames};
pub use order::{MonomialOrder, OrderKind};
pub use saturation::{saturate_all, saturate_variable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("exponent overflow")]
    Overflow,
    #[error("variable count mismatch")]
    LengthMismatch,
    #[error("variable priority is not a permutation")]
    InvalidPriority,
    #[error("binomial with equal terms")]
    ZeroBinomial,
    #[error("saturation requires a homogeneous ideal")]
    NotHomogeneous,
}
