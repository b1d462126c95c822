//! Poisson kernels on the upper half-plane, componentwise, and the
//! quadrature engine that extends bounded piecewise-continuous boundary data
//! to a hyperbolic harmonic function on the product of two half-planes.
//!
//! The improper integral over the line is handled by the exact substitution
//! `t = x + y tan(theta)`, which absorbs the kernel entirely:
//!
//! ```text
//! integral P(x - t, y) u(t) dt  =  (1/pi) integral_{-pi/2}^{pi/2} u(x + y tan theta) dtheta.
//! ```
//!
//! The remaining integrand is bounded, so no truncation-tail estimate is
//! needed; panels split at the preimages of the data's breakpoints keep every
//! panel smooth.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Bicomplex, Hyperbolic};
use crate::defaults;
use crate::error::{Error, Result};
use crate::expr::PiecewiseSpec;
use crate::function::{HyperbolicFnPair, PlanarFn, Region};
use crate::quadrature::GaussLegendre;
use crate::scalar::Real;

/// A point of the product of two upper half-planes, in the coordinates of the
/// idempotent components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint<T> {
    pub x1: T,
    pub y1: T,
    pub x2: T,
    pub y2: T,
}

impl<T: Real> UpperHalfPoint<T> {
    pub fn new(x1: T, y1: T, x2: T, y2: T) -> Result<Self> {
        if y1 > T::zero() && y2 > T::zero() {
            Ok(Self { x1, y1, x2, y2 })
        } else {
            Err(Error::OutOfHalfPlane {
                y1: y1.to_f64().unwrap_or(f64::NAN),
                y2: y2.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    /// Both components at the same planar point.
    pub fn diagonal(x: T, y: T) -> Result<Self> {
        Self::new(x, y, x, y)
    }

    pub fn to_bicomplex(&self) -> Bicomplex<T> {
        Bicomplex::new(
            num_complex::Complex::new(self.x1, self.y1),
            num_complex::Complex::new(self.x2, self.y2),
        )
    }
}

/// Boundary data: one bounded piecewise-continuous function per component.
#[derive(Debug, Clone)]
pub struct BoundaryData<T> {
    pub b1: PiecewiseSpec<T>,
    pub b2: PiecewiseSpec<T>,
}

impl<T: Real> BoundaryData<T> {
    pub fn new(b1: PiecewiseSpec<T>, b2: PiecewiseSpec<T>) -> Self {
        Self { b1, b2 }
    }

    /// The same data in both components.
    pub fn symmetric(b: PiecewiseSpec<T>) -> Self {
        Self { b1: b.clone(), b2: b }
    }
}

/// Quadrature parameters for the angular integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<T> {
    /// Gauss-Legendre nodes per panel.
    pub nodes_per_panel: usize,
    /// Panels across the angular interval (distributed over smooth segments).
    pub panels: usize,
    /// Refinement target: panel counts double (up to three times) until two
    /// successive results agree to this absolute tolerance.
    pub abs_tol: T,
}

impl<T: Real> Default for QuadratureConfig<T> {
    fn default() -> Self {
        Self {
            nodes_per_panel: defaults::QUAD_NODES,
            panels: defaults::QUAD_PANELS,
            abs_tol: T::of(defaults::QUAD_ABS_TOL),
        }
    }
}

impl<T: Real> QuadratureConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if self.nodes_per_panel == 0 || self.panels == 0 || !(self.abs_tol > T::zero()) {
            return Err(Error::InvalidArgument(
                "quadrature config fields must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// The kernel `P(x, y) = (1/pi) y / (x^2 + y^2)`, strictly positive for
/// `y > 0`.
pub fn complex_poisson_kernel<T: Real>(x: T, y: T) -> Result<T> {
    let den = x * x + y * y;
    if den == T::zero() {
        return Err(Error::DegenerateKernel);
    }
    Ok(y / (T::PI() * den))
}

/// The componentwise kernel `P(x1, y1) e1 + P(x2, y2) e2`.
pub fn bc_poisson_kernel<T: Real>(x1: T, y1: T, x2: T, y2: T) -> Result<Hyperbolic<T>> {
    Ok(Hyperbolic::new(
        complex_poisson_kernel(x1, y1)?,
        complex_poisson_kernel(x2, y2)?,
    ))
}

/// Harmonic extension of a single boundary component to `(x, y)`, `y > 0`.
pub fn complex_poisson_extend<T: Real>(
    data: &PiecewiseSpec<T>,
    x: T,
    y: T,
    config: &QuadratureConfig<T>,
) -> Result<T> {
    if !(y > T::zero()) {
        return Err(Error::OutOfHalfPlane {
            y1: y.to_f64().unwrap_or(f64::NAN),
            y2: y.to_f64().unwrap_or(f64::NAN),
        });
    }
    config.validate()?;
    let rule = GaussLegendre::new(config.nodes_per_panel);
    extend_with_rule(data, x, y, config, &rule)
}

fn extend_with_rule<T: Real>(
    data: &PiecewiseSpec<T>,
    x: T,
    y: T,
    config: &QuadratureConfig<T>,
    rule: &GaussLegendre<T>,
) -> Result<T> {
    // smooth segments of the angular interval: split at breakpoint preimages
    let half_pi = T::FRAC_PI_2();
    let mut cuts: Vec<T> = vec![-half_pi];
    for &s in data.breakpoints() {
        let theta = ((s - x) / y).atan();
        if theta > -half_pi && theta < half_pi {
            cuts.push(theta);
        }
    }
    cuts.push(half_pi);
    cuts.sort_by(|a, b| a.partial_cmp(b).expect("finite cut"));
    cuts.dedup();

    let mut previous: Option<T> = None;
    let mut panels = config.panels;
    for _ in 0..4 {
        let value = angular_pass(data, x, y, &cuts, panels, rule)?;
        if let Some(prev) = previous {
            if (value - prev).abs() <= config.abs_tol {
                return Ok(value);
            }
        }
        previous = Some(value);
        panels *= 2;
    }
    Ok(previous.expect("at least one quadrature pass"))
}

fn angular_pass<T: Real>(
    data: &PiecewiseSpec<T>,
    x: T,
    y: T,
    cuts: &[T],
    total_panels: usize,
    rule: &GaussLegendre<T>,
) -> Result<T> {
    let mut acc = T::zero();
    for window in cuts.windows(2) {
        let (lo, hi) = (window[0], window[1]);
        let fraction = ((hi - lo) / T::PI()).to_f64().unwrap_or(0.0);
        let panels = ((total_panels as f64 * fraction).ceil() as usize).max(1);
        acc = acc
            + rule.integrate_panels(lo, hi, panels, |theta| data.eval(x + y * theta.tan()))?;
    }
    Ok(acc / T::PI())
}

/// Harmonic extension of both components at `p`:
/// `u1(x1, y1) e1 + u2(x2, y2) e2`.
pub fn poisson_extend<T: Real>(
    data: &BoundaryData<T>,
    p: &UpperHalfPoint<T>,
    config: &QuadratureConfig<T>,
) -> Result<Hyperbolic<T>> {
    config.validate()?;
    let rule = GaussLegendre::new(config.nodes_per_panel);
    Ok(Hyperbolic::new(
        extend_with_rule(&data.b1, p.x1, p.y1, config, &rule)?,
        extend_with_rule(&data.b2, p.x2, p.y2, config, &rule)?,
    ))
}

/// View the extension as a hyperbolic function pair on the product of two
/// upper half-planes, e.g. to feed it to the Laplacian.
pub fn extension_fn_pair<T: Real>(
    data: BoundaryData<T>,
    config: QuadratureConfig<T>,
) -> HyperbolicFnPair<T> {
    let b1 = Arc::new(data.b1);
    let b2 = Arc::new(data.b2);
    let mk = |spec: Arc<PiecewiseSpec<T>>| -> PlanarFn<T> {
        Arc::new(move |x: T, y: T| complex_poisson_extend(&spec, x, y, &config))
    };
    HyperbolicFnPair::from_fns(mk(b1), mk(b2), Region::upper_half_space())
}

/// One row of a boundary-trace check.
#[derive(Debug, Clone, Serialize)]
pub struct TraceEntry<T> {
    pub y: T,
    pub value1: T,
    pub value2: T,
    pub error1: T,
    pub error2: T,
}

/// Report of extension values approaching the boundary along `y -> 0`.
#[derive(Debug, Clone, Serialize)]
pub struct TraceReport<T> {
    pub t1: T,
    pub t2: T,
    pub boundary1: T,
    pub boundary2: T,
    pub entries: Vec<TraceEntry<T>>,
    /// Componentwise errors trend monotonically down and end at most `tol`.
    pub verdict: bool,
    pub tol: T,
}

/// Evaluate the extension at `(t1, y) x (t2, y)` for a decreasing sequence of
/// heights and compare against the boundary values. `t1`, `t2` should be
/// continuity points of the data.
pub fn extension_trace_check<T: Real>(
    data: &BoundaryData<T>,
    t1: T,
    t2: T,
    heights: &[T],
    tol: T,
    config: &QuadratureConfig<T>,
) -> Result<TraceReport<T>> {
    if heights.is_empty() {
        return Err(Error::InvalidArgument("empty height sequence".into()));
    }
    if heights.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument(
            "heights must be strictly decreasing".into(),
        ));
    }
    let boundary1 = data.b1.eval(t1)?;
    let boundary2 = data.b2.eval(t2)?;
    let mut entries = Vec::with_capacity(heights.len());
    for &y in heights {
        let value = poisson_extend(data, &UpperHalfPoint::new(t1, y, t2, y)?, config)?;
        entries.push(TraceEntry {
            y,
            value1: value.eta1,
            value2: value.eta2,
            error1: (value.eta1 - boundary1).abs(),
            error2: (value.eta2 - boundary2).abs(),
        });
    }
    let slack = T::of(1e-12);
    let monotone = entries.windows(2).all(|w| {
        w[1].error1 <= w[0].error1 + slack && w[1].error2 <= w[0].error2 + slack
    });
    let last = entries.last().expect("nonempty");
    let verdict = monotone && last.error1 <= tol && last.error2 <= tol;
    Ok(TraceReport {
        t1,
        t2,
        boundary1,
        boundary2,
        entries,
        verdict,
        tol,
    })
}

/// The sign-step boundary data: −1 for `t < 0`, +1 for `t > 0`.
pub fn step_boundary<T: Real>() -> PiecewiseSpec<T> {
    PiecewiseSpec::parse_alternating("-1 | 0 | 1", T::one())
        .expect("step data is a valid piecewise spec")
}

/// Closed-form extension of the sign step in both components,
/// `(2/pi) atan(x1/y1) e1 + (2/pi) atan(x2/y2) e2`, cross-checked against the
/// quadrature route. Disagreement beyond `mismatch_tol` is an error.
pub fn step_extension<T: Real>(
    p: &UpperHalfPoint<T>,
    config: &QuadratureConfig<T>,
    mismatch_tol: T,
) -> Result<Hyperbolic<T>> {
    let two_over_pi = T::of(2.0) / T::PI();
    let closed = Hyperbolic::new(
        two_over_pi * (p.x1 / p.y1).atan(),
        two_over_pi * (p.x2 / p.y2).atan(),
    );
    let data = BoundaryData::symmetric(step_boundary());
    let quad = poisson_extend(&data, p, config)?;
    let deviation = (closed - quad).max_abs();
    if deviation > mismatch_tol {
        return Err(Error::RepresentationMismatch {
            deviation: deviation.to_f64().unwrap_or(f64::NAN),
            tol: mismatch_tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(closed)
}
