//! Bicomplex numbers, hyperbolic harmonic functions, and the Poisson
//! integral extension on the bicomplex upper half-plane.
//!
//! The crate stores every bicomplex value in idempotent form and is generic
//! over the underlying real scalar (see [`scalar::Real`]); the `*64`/`*32`
//! aliases below pick concrete precisions.

pub mod algebra;
pub mod defaults;
pub mod error;
pub mod expr;
pub mod function;
pub mod grid;
pub mod harmonic;
pub mod poisson;
pub mod quadrature;
pub mod scalar;

pub use algebra::{Bicomplex, HypOrdering, Hyperbolic, HyperbolicBall};
pub use error::{Error, Result};
pub use function::{BCHoloFn, HyperbolicFnPair, Part, Region};
pub use scalar::Real;

/// Complex scalar re-exported from `num_complex`.
pub type Complex<T> = num_complex::Complex<T>;

pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;
pub type Bicomplex64 = algebra::Bicomplex<f64>;
pub type Bicomplex32 = algebra::Bicomplex<f32>;
pub type Hyperbolic64 = algebra::Hyperbolic<f64>;
pub type Hyperbolic32 = algebra::Hyperbolic<f32>;
