//! Level-set fuzzy numbers, Seikkala and generalized Seikkala derivatives, and
//! the Fourier-series solution of the homogeneous fuzzy wave equation.
//!
//! The crate is `no_std` and needs only `alloc`. File formats and the
//! command-line tool live in the `fuzzy-wave` crate.

#![no_std]
// `!(x > 0.0)` is used deliberately so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod calculus;
pub mod error;
pub mod fuzzy;
pub mod sum;
pub mod verify;
pub mod wave;

pub use calculus::{
    gs_derivative, gs_derivative_casewise, gs_partial, gs_second_partial, seikkala_derivative,
    Classification, DerivativeCase, Envelope2, EnvelopeFunction, GsDerivativeResult,
    LevelFunctionFamily, SecondOrder, Variable,
};
pub use error::{Error, Result};
pub use fuzzy::{scalar_mul, validate, AlphaGrid, FuzzyNumber, Interval, Shape, ValidityReport};
pub use verify::{boundary_initial_check, fuzzy_validity_scan, pde_residual};
pub use wave::domain::{validity_rectangle, validity_square, DomainKind, ValidityDomain};
pub use wave::levelwise::{levelwise_decompose, GeneralLevelProblem};
pub use wave::{z_series, WaveProblem};
