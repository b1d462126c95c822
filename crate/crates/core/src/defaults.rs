//! Default step sizes and tolerances used across the crate. All are
//! overridable at the call sites that consume them.

/// Central five-point stencil step for the componentwise Laplacian.
pub const LAPLACIAN_STEP: f64 = 1e-3;

/// Central-difference step for first partial derivatives.
pub const PARTIAL_STEP: f64 = 1e-4;

/// Imaginary step for complex-step differentiation of holomorphic components.
pub const DERIVATIVE_STEP: f64 = 1e-20;

/// Largest imaginary part tolerated when an expression is evaluated in a
/// real-valued context.
pub const REAL_IMAG_TOL: f64 = 1e-12;

/// Default modulus threshold for `near_noninvertible`.
pub const NEAR_NONINVERTIBLE_EPS: f64 = 1e-12;

/// Default residual tolerance for harmonicity certification.
pub const HARMONIC_TOL: f64 = 1e-4;

/// Poisson quadrature: absolute refinement tolerance.
pub const QUAD_ABS_TOL: f64 = 1e-10;

/// Poisson quadrature: Gauss-Legendre nodes per panel.
pub const QUAD_NODES: usize = 32;

/// Poisson quadrature: panels across the angular interval.
pub const QUAD_PANELS: usize = 64;

/// Allowed deviation between a closed form and its quadrature cross-check.
pub const REPRESENTATION_TOL: f64 = 1e-8;

/// Gauss-Legendre nodes per panel for conjugate line integrals.
pub const CONJUGATE_NODES: usize = 16;

/// Minimum panels per unit length along conjugate integration paths.
pub const CONJUGATE_PANELS_PER_UNIT: f64 = 8.0;
