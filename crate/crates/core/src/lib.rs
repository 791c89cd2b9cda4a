//! Binary-parametrized Euclidean geometric algebra and a geometric-product
//! formulation of the Deutsch-Jozsa algorithm.
//!
//! Basis blades are bitmasks over generator indices; the geometric product
//! XORs masks and contributes a sign computed from bit transposition parity.
//! Two independent verification backends are provided: a complex-matrix
//! (Cartan/Pauli) representation and a conventional tensor-product state
//! vector simulation.
//!
//! Core arithmetic is generic over the coefficient scalar via [`Scalar`]
//! (any `f32`/`f64`-like float); concrete aliases live at the crate root.

pub mod blade;
pub mod boolean;
pub mod cartan;
pub mod dj;
mod error;
pub mod multivector;
pub mod quantum;
mod scalar;

pub use blade::{Blade, SignedBlade, MAX_GENERATORS};
pub use boolean::BooleanFunction;
pub use cartan::{ComplexMatrix, RepKind};
pub use dj::{Classification, DjResult, PipelineMode};
pub use error::GaError;
pub use multivector::Multivector;
pub use quantum::StateVector;
pub use scalar::Scalar;

/// Multivector with `f64` coefficients (the default working type).
pub type Multivector64 = Multivector<f64>;
/// Multivector with `f32` coefficients.
pub type Multivector32 = Multivector<f32>;
/// Complex matrix over `f64`.
pub type ComplexMatrix64 = ComplexMatrix<f64>;
/// Complex matrix over `f32`.
pub type ComplexMatrix32 = ComplexMatrix<f32>;
/// State vector over `f64`.
pub type StateVector64 = StateVector<f64>;
/// State vector over `f32`.
pub type StateVector32 = StateVector<f32>;
/// Deutsch-Jozsa run result over `f64`.
pub type DjResult64 = DjResult<f64>;
