//! Exact scalar and polynomial arithmetic: cyclotomic numbers, sparse
//! homogeneous polynomials, univariate polynomials over the coefficient
//! field, integer/Laurent polynomials in a formal variable `t`, real root
//! isolation, and multivariate gcd reduction.

pub mod algreal;
pub mod cyclotomic;
pub mod gcd;
pub mod homog;
pub mod intpoly;
pub mod ratpoly;
pub mod unipoly;

pub use algreal::{isolate_real_roots, AlgebraicReal};
pub use cyclotomic::CycNum;
pub use gcd::{exact_div, gcd_reduce, multi_gcd, tuple_gcd};
pub use homog::HomogPoly;
pub use intpoly::{cyclotomic_poly, strip_cyclotomic_factors, IntPoly, LaurentPoly};
pub use unipoly::UniPoly;

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order must be at least 1")]
    BadOrder,
    #[error("complex embedding precision limited to 48 bits, got {0}")]
    PrecisionUnsupported(u32),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("variable counts differ: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("exact division failed")]
    NotDivisible,
    #[error("zero polynomial rejected")]
    ZeroPolynomial,
    #[error("zero tuple rejected")]
    ZeroTuple,
}
