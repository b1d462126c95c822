//! The componentwise Laplacian, harmonicity certification, and the
//! constructive machinery around hyperbolic harmonic conjugates: conjugate
//! functions built by line integrals, and recovery of a holomorphic function
//! from its hyperbolic real part.
//!
//! The Laplacian here is two planar Laplacians, one per idempotent component;
//! it is not the flat four-dimensional `f_xx + f_yy + f_ss + f_tt`, which this
//! crate does not provide.

use std::sync::Arc;

use num_complex::Complex;
use serde::Serialize;

use crate::algebra::{Bicomplex, Hyperbolic};
use crate::defaults;
use crate::error::{Error, Result};
use crate::function::{HyperbolicFnPair, PlanarFn, Region};
use crate::grid::GridSpec;
use crate::quadrature::GaussLegendre;
use crate::scalar::Real;

/// Five-point central-difference Laplacian of each component at the
/// coordinates carried by `zeta`, as the hyperbolic value
/// `lap(u1) e1 + lap(u2) e2`. The whole stencil must stay inside the region.
pub fn bc_laplacian<T: Real>(
    f: &HyperbolicFnPair<T>,
    zeta: &Bicomplex<T>,
    h: T,
) -> Result<Hyperbolic<T>> {
    if !(h > T::zero()) {
        return Err(Error::InvalidArgument("stencil step must be positive".into()));
    }
    let r1 = component_laplacian(f.domain().omega1, |x, y| f.eval1(x, y), zeta.zeta1, h)?;
    let r2 = component_laplacian(f.domain().omega2, |x, y| f.eval2(x, y), zeta.zeta2, h)?;
    Ok(Hyperbolic::new(r1, r2))
}

fn component_laplacian<T: Real, F>(
    rect: crate::function::Rect<T>,
    f: F,
    at: Complex<T>,
    h: T,
) -> Result<T>
where
    F: Fn(T, T) -> Result<T>,
{
    let (x, y) = (at.re, at.im);
    if !rect.contains_with_margin(x, y, h) {
        return Err(Error::OutOfDomain(format!(
            "stencil at ({x}, {y}) with h = {h} exits the region"
        )));
    }
    let center = f(x, y)?;
    let sum = f(x + h, y)? + f(x - h, y)? + f(x, y + h)? + f(x, y - h)?;
    Ok((sum - T::of(4.0) * center) / (h * h))
}

/// Pointwise Laplacian record.
#[derive(Debug, Clone, Serialize)]
pub struct LaplacianReport<T> {
    pub point: [T; 4],
    pub residual1: T,
    pub residual2: T,
    pub h: T,
    pub verdict: bool,
}

pub fn laplacian_report<T: Real>(
    f: &HyperbolicFnPair<T>,
    zeta: &Bicomplex<T>,
    h: T,
    tol: T,
) -> Result<LaplacianReport<T>> {
    let value = bc_laplacian(f, zeta, h)?;
    let (r1, r2) = (value.eta1.abs(), value.eta2.abs());
    Ok(LaplacianReport {
        point: [zeta.zeta1.re, zeta.zeta1.im, zeta.zeta2.re, zeta.zeta2.im],
        residual1: r1,
        residual2: r2,
        h,
        verdict: r1 <= tol && r2 <= tol,
    })
}

/// Grid-level harmonicity certification result. The verdict requires the
/// residual to stay below `tol` in BOTH components.
#[derive(Debug, Clone, Serialize)]
pub struct HarmonicityReport<T> {
    pub max_residual1: T,
    pub max_residual2: T,
    pub worst_point1: (T, T),
    pub worst_point2: (T, T),
    pub h: T,
    pub tol: T,
    pub verdict: bool,
}

/// Certify harmonicity by the maximum stencil residual over per-component
/// grids. The grids must sit inside the domain with an `h` margin.
pub fn is_bc_harmonic<T: Real>(
    f: &HyperbolicFnPair<T>,
    grid: &GridSpec<T>,
    h: T,
    tol: T,
) -> Result<HarmonicityReport<T>> {
    let scan = |planar: &crate::grid::PlanarGrid<T>,
                rect: crate::function::Rect<T>,
                eval: &dyn Fn(T, T) -> Result<T>|
     -> Result<(T, (T, T))> {
        let mut worst = T::zero();
        let mut at = (T::nan(), T::nan());
        for (x, y) in planar.points() {
            let r = component_laplacian(rect, eval, Complex::new(x, y), h)?.abs();
            if r > worst || at.0.is_nan() {
                worst = r;
                at = (x, y);
            }
        }
        Ok((worst, at))
    };
    let (max1, worst1) = scan(&grid.g1, f.domain().omega1, &|x, y| f.eval1(x, y))?;
    let (max2, worst2) = scan(&grid.g2, f.domain().omega2, &|x, y| f.eval2(x, y))?;
    Ok(HarmonicityReport {
        max_residual1: max1,
        max_residual2: max2,
        worst_point1: worst1,
        worst_point2: worst2,
        h,
        tol,
        verdict: max1 <= tol && max2 <= tol,
    })
}

/// Empirical order-of-convergence estimate: per component, the ratio
/// `max|L_h - L_{h/2}| / max|L_{h/2} - L_{h/4}|` over the grid. For smooth
/// inputs with nonvanishing fourth derivatives this approaches 4.
pub fn refinement_ratio<T: Real>(
    f: &HyperbolicFnPair<T>,
    grid: &GridSpec<T>,
    h: T,
) -> Result<(T, T)> {
    let half = h * T::of(0.5);
    let quarter = h * T::of(0.25);
    let component = |planar: &crate::grid::PlanarGrid<T>,
                     rect: crate::function::Rect<T>,
                     eval: &dyn Fn(T, T) -> Result<T>|
     -> Result<T> {
        let mut coarse = T::zero();
        let mut fine = T::zero();
        for (x, y) in planar.points() {
            let at = Complex::new(x, y);
            let l0 = component_laplacian(rect, eval, at, h)?;
            let l1 = component_laplacian(rect, eval, at, half)?;
            let l2 = component_laplacian(rect, eval, at, quarter)?;
            coarse = coarse.max((l0 - l1).abs());
            fine = fine.max((l1 - l2).abs());
        }
        Ok(coarse / fine)
    };
    Ok((
        component(&grid.g1, f.domain().omega1, &|x, y| f.eval1(x, y))?,
        component(&grid.g2, f.domain().omega2, &|x, y| f.eval2(x, y))?,
    ))
}

/// A hyperbolic conjugate `u1* e1 + u2* e2` realized by line integrals.
///
/// Per component, `u*(x, y)` is the integral of `-u_y dx + u_x dy` along the
/// axis-aligned path basepoint -> (x0, y) -> (x, y), with partials by central
/// differences and composite Gauss-Legendre panels along each leg. The
/// conjugate vanishes at the basepoint, which pins the additive constant.
#[derive(Clone)]
pub struct ConjugateFn<T> {
    base: HyperbolicFnPair<T>,
    basepoint1: (T, T),
    basepoint2: (T, T),
    fd_step: T,
    rule: Arc<GaussLegendre<T>>,
    panels_per_unit: T,
}

impl<T: Real> ConjugateFn<T> {
    fn panels(&self, len: T) -> usize {
        let want = (len.abs() * self.panels_per_unit).ceil();
        want.to_f64().map(|w| w.max(1.0) as usize).unwrap_or(1)
    }

    pub fn basepoints(&self) -> ((T, T), (T, T)) {
        (self.basepoint1, self.basepoint2)
    }

    pub fn domain(&self) -> &Region<T> {
        self.base.domain()
    }

    /// First conjugate component.
    pub fn eval1(&self, x: T, y: T) -> Result<T> {
        self.component(1, x, y, false)
    }

    /// Second conjugate component.
    pub fn eval2(&self, x: T, y: T) -> Result<T> {
        self.component(2, x, y, false)
    }

    /// Both components at the coordinates carried by `zeta`.
    pub fn eval(&self, zeta: &Bicomplex<T>) -> Result<Hyperbolic<T>> {
        Ok(Hyperbolic::new(
            self.eval1(zeta.zeta1.re, zeta.zeta1.im)?,
            self.eval2(zeta.zeta2.re, zeta.zeta2.im)?,
        ))
    }

    /// Deviation between the two axis-aligned path orders (vertical-first
    /// versus horizontal-first), per component. On a simply connected
    /// rectangle this is pure quadrature noise.
    pub fn path_independence_deviation(&self, zeta: &Bicomplex<T>) -> Result<Hyperbolic<T>> {
        let d1 = self.component(1, zeta.zeta1.re, zeta.zeta1.im, false)?
            - self.component(1, zeta.zeta1.re, zeta.zeta1.im, true)?;
        let d2 = self.component(2, zeta.zeta2.re, zeta.zeta2.im, false)?
            - self.component(2, zeta.zeta2.re, zeta.zeta2.im, true)?;
        Ok(Hyperbolic::new(d1.abs(), d2.abs()))
    }

    fn component(&self, which: usize, x: T, y: T, horizontal_first: bool) -> Result<T> {
        let (x0, y0) = if which == 1 {
            self.basepoint1
        } else {
            self.basepoint2
        };
        let h = self.fd_step;
        let u = |x: T, y: T| -> Result<T> {
            if which == 1 {
                self.base.eval1(x, y)
            } else {
                self.base.eval2(x, y)
            }
        };
        let ux = |x: T, y: T| -> Result<T> { Ok((u(x + h, y)? - u(x - h, y)?) / (h + h)) };
        let uy = |x: T, y: T| -> Result<T> { Ok((u(x, y + h)? - u(x, y - h)?) / (h + h)) };

        // integral of -u_y dx + u_x dy along two axis-aligned legs
        let (vertical_x, horizontal_y) = if horizontal_first {
            (x, y0)
        } else {
            (x0, y)
        };
        let vertical = self.rule.integrate_panels(
            y0,
            y,
            self.panels(y - y0),
            |s| ux(vertical_x, s),
        )?;
        let horizontal = self.rule.integrate_panels(
            x0,
            x,
            self.panels(x - x0),
            |t| Ok(-(uy(t, horizontal_y)?)),
        )?;
        Ok(vertical + horizontal)
    }

    /// View the conjugate as a hyperbolic function pair over the same region.
    pub fn as_fn_pair(&self) -> HyperbolicFnPair<T> {
        let a = self.clone();
        let b = self.clone();
        let u1: PlanarFn<T> = Arc::new(move |x, y| a.component(1, x, y, false));
        let u2: PlanarFn<T> = Arc::new(move |x, y| b.component(2, x, y, false));
        HyperbolicFnPair::from_fns(u1, u2, *self.base.domain())
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for ConjugateFn<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConjugateFn")
            .field("basepoint1", &self.basepoint1)
            .field("basepoint2", &self.basepoint2)
            .field("fd_step", &self.fd_step)
            .finish_non_exhaustive()
    }
}

/// Construct the hyperbolic conjugate of `u` normalized to vanish at the
/// basepoints. The caller vouches for harmonicity; use
/// [`harmonic_conjugate_certified`] to have it checked first.
pub fn harmonic_conjugate<T: Real>(
    u: &HyperbolicFnPair<T>,
    basepoint1: (T, T),
    basepoint2: (T, T),
) -> Result<ConjugateFn<T>> {
    if !u.domain().omega1.contains(basepoint1.0, basepoint1.1) {
        return Err(Error::OutOfDomain("basepoint 1 outside omega1".into()));
    }
    if !u.domain().omega2.contains(basepoint2.0, basepoint2.1) {
        return Err(Error::OutOfDomain("basepoint 2 outside omega2".into()));
    }
    Ok(ConjugateFn {
        base: u.clone(),
        basepoint1,
        basepoint2,
        fd_step: T::of(defaults::PARTIAL_STEP),
        rule: Arc::new(GaussLegendre::new(defaults::CONJUGATE_NODES)),
        panels_per_unit: T::of(defaults::CONJUGATE_PANELS_PER_UNIT),
    })
}

/// As [`harmonic_conjugate`], but first certifies harmonicity of `u` over the
/// given grid and fails with [`Error::NotHarmonic`] when the residual exceeds
/// `tol`.
pub fn harmonic_conjugate_certified<T: Real>(
    u: &HyperbolicFnPair<T>,
    basepoint1: (T, T),
    basepoint2: (T, T),
    grid: &GridSpec<T>,
    h: T,
    tol: T,
) -> Result<ConjugateFn<T>> {
    let report = is_bc_harmonic(u, grid, h, tol)?;
    if !report.verdict {
        return Err(Error::NotHarmonic {
            residual1: report.max_residual1.to_f64().unwrap_or(f64::NAN),
            residual2: report.max_residual2.to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    harmonic_conjugate(u, basepoint1, basepoint2)
}

/// A holomorphic evaluator `F = u + i u*` recovered from a hyperbolic
/// harmonic `u`: the hyperbolic real part of the result reproduces `u` and
/// the imaginary part is the conjugate.
#[derive(Clone)]
pub struct ReconstructedFn<T> {
    u: HyperbolicFnPair<T>,
    conjugate: ConjugateFn<T>,
}

impl<T: Real> ReconstructedFn<T> {
    pub fn eval(&self, zeta: &Bicomplex<T>) -> Result<Bicomplex<T>> {
        let re = self.u.eval(zeta)?;
        let im = self.conjugate.eval(zeta)?;
        Ok(Bicomplex::new(
            Complex::new(re.eta1, im.eta1),
            Complex::new(re.eta2, im.eta2),
        ))
    }

    pub fn h_re(&self) -> &HyperbolicFnPair<T> {
        &self.u
    }

    pub fn h_im(&self) -> &ConjugateFn<T> {
        &self.conjugate
    }
}

/// Recover a holomorphic function from its hyperbolic real part.
pub fn holomorphic_from_hyperbolic<T: Real>(
    u: &HyperbolicFnPair<T>,
    basepoint1: (T, T),
    basepoint2: (T, T),
) -> Result<ReconstructedFn<T>> {
    Ok(ReconstructedFn {
        u: u.clone(),
        conjugate: harmonic_conjugate(u, basepoint1, basepoint2)?,
    })
}

/// Build conjugates of `u` from two basepoint pairs and measure, per
/// component, how far their difference is from a constant over the grid
/// (max deviation from the grid mean). Small values certify uniqueness up to
/// an additive hyperbolic constant.
pub fn conjugate_uniqueness_check<T: Real>(
    u: &HyperbolicFnPair<T>,
    basepoints_a: ((T, T), (T, T)),
    basepoints_b: ((T, T), (T, T)),
    grid: &GridSpec<T>,
) -> Result<Hyperbolic<T>> {
    let conj_a = harmonic_conjugate(u, basepoints_a.0, basepoints_a.1)?;
    let conj_b = harmonic_conjugate(u, basepoints_b.0, basepoints_b.1)?;
    let deviation = |planar: &crate::grid::PlanarGrid<T>,
                     eval: &dyn Fn(T, T) -> Result<(T, T)>|
     -> Result<T> {
        let mut diffs = Vec::with_capacity(planar.len());
        for (x, y) in planar.points() {
            let (a, b) = eval(x, y)?;
            diffs.push(a - b);
        }
        let count = T::of(diffs.len() as f64);
        let mean = diffs.iter().fold(T::zero(), |acc, &d| acc + d) / count;
        Ok(diffs
            .iter()
            .fold(T::zero(), |acc, &d| acc.max((d - mean).abs())))
    };
    let d1 = deviation(&grid.g1, &|x, y| {
        Ok((conj_a.eval1(x, y)?, conj_b.eval1(x, y)?))
    })?;
    let d2 = deviation(&grid.g2, &|x, y| {
        Ok((conj_a.eval2(x, y)?, conj_b.eval2(x, y)?))
    })?;
    Ok(Hyperbolic::new(d1, d2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::{BCHoloFn, Part, Rect};
    use crate::grid::{AxisSpec, PlanarGrid};

    type Bc = Bicomplex<f64>;

    fn whole() -> Region<f64> {
        Region::whole_space()
    }

    fn unit_grid(n: usize) -> GridSpec<f64> {
        let axis = AxisSpec::new(-1.0, 1.0, n).unwrap();
        GridSpec::diagonal(PlanarGrid::new(axis, axis))
    }

    #[test]
    fn laplacian_values() {
        // (x^2 + y^2, x): Laplacians 4 and 0
        let f = HyperbolicFnPair::from_strs("x^2 + y^2", "x", whole()).unwrap();
        let at = Bc::from_coords(0.3, 0.0, -0.2, 0.7);
        let lap = bc_laplacian(&f, &at, 1e-3).unwrap();
        assert!((lap.eta1 - 4.0).abs() < 1e-6);
        assert!(lap.eta2.abs() < 1e-6);

        // real parts of holomorphic components are harmonic
        let holo = BCHoloFn::from_strs("z^2", "z^3", whole()).unwrap();
        let re = holo.as_hyperbolic_fn(Part::Re);
        let lap = bc_laplacian(&re, &at, 1e-3).unwrap();
        assert!(lap.eta1.abs() < 1e-8);
        assert!(lap.eta2.abs() < 1e-8);

        let g = HyperbolicFnPair::from_strs("x^2", "x^2", whole()).unwrap();
        let lap = bc_laplacian(&g, &at, 1e-3).unwrap();
        assert!((lap.eta1 - 2.0).abs() < 1e-6);
        assert!((lap.eta2 - 2.0).abs() < 1e-6);
    }

    #[test]
    fn laplacian_stencil_domain_check() {
        let region = Region::new(
            Rect::from_bounds(-1.0, 1.0, -1.0, 1.0).unwrap(),
            Rect::from_bounds(-1.0, 1.0, -1.0, 1.0).unwrap(),
        );
        let f = HyperbolicFnPair::from_strs("x", "x", region).unwrap();
        // stencil around a point within h of the boundary exits the region
        let at = Bc::from_coords(0.9999999, 0.0, 0.0, 0.0);
        assert!(matches!(
            bc_laplacian(&f, &at, 1e-3),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn harmonicity_verdicts() {
        let holo = BCHoloFn::from_strs("exp(z)", "z^2", whole()).unwrap();
        let re = holo.as_hyperbolic_fn(Part::Re);
        let report = is_bc_harmonic(&re, &unit_grid(8), 1e-3, 1e-4).unwrap();
        assert!(report.verdict, "residuals {report:?}");

        // one failing component fails the whole function
        let bad = HyperbolicFnPair::from_strs("x^2", "x", whole()).unwrap();
        let report = is_bc_harmonic(&bad, &unit_grid(8), 1e-3, 1e-4).unwrap();
        assert!(!report.verdict);
        assert!(report.max_residual1 > 1.0);
        assert!(report.max_residual2 < 1e-4);
    }

    #[test]
    fn harmonicity_of_closed_form_surface() {
        // (2/pi) atan(x/y) on a strip with y > 0.5
        let region = Region::new(
            Rect::from_bounds(-10.0, 10.0, 0.5, 10.0).unwrap(),
            Rect::from_bounds(-10.0, 10.0, 0.5, 10.0).unwrap(),
        );
        let f =
            HyperbolicFnPair::from_strs("2/pi*atan(x/y)", "2/pi*atan(x/y)", region).unwrap();
        let axis_x = AxisSpec::new(-2.0, 2.0, 9).unwrap();
        let axis_y = AxisSpec::new(0.6, 3.0, 9).unwrap();
        let grid = GridSpec::diagonal(PlanarGrid::new(axis_x, axis_y));
        let report = is_bc_harmonic(&f, &grid, 1e-3, 1e-4).unwrap();
        assert!(report.verdict, "residuals {report:?}");
    }

    #[test]
    fn refinement_ratio_is_quadratic() {
        // x^4 has constant fourth derivative, so the stencil error is 2 h^2
        let f = HyperbolicFnPair::from_strs("x^4", "y^4", whole()).unwrap();
        let (r1, r2) = refinement_ratio(&f, &unit_grid(5), 1e-2).unwrap();
        assert!((3.5..=4.5).contains(&r1), "ratio1 {r1}");
        assert!((3.5..=4.5).contains(&r2), "ratio2 {r2}");
    }

    #[test]
    fn conjugate_of_quadratic() {
        let u = HyperbolicFnPair::from_strs("x^2 - y^2", "x", whole()).unwrap();
        let conj = harmonic_conjugate(&u, (0.0, 0.0), (0.0, 0.0)).unwrap();
        // conjugates: 2xy and y
        for &(x, y) in &[(0.5, 0.25), (-1.0, 2.0), (0.0, 0.0), (1.5, -0.5)] {
            assert!((conj.eval1(x, y).unwrap() - 2.0 * x * y).abs() < 1e-8);
            assert!((conj.eval2(x, y).unwrap() - y).abs() < 1e-8);
        }
    }

    #[test]
    fn conjugate_of_constant_is_zero() {
        let u = HyperbolicFnPair::from_strs("3", "-1", whole()).unwrap();
        let conj = harmonic_conjugate(&u, (0.1, 0.2), (0.0, 0.0)).unwrap();
        assert!(conj.eval1(1.0, -2.0).unwrap().abs() < 1e-10);
        assert!(conj.eval2(-0.5, 0.75).unwrap().abs() < 1e-10);
    }

    #[test]
    fn conjugate_vanishes_at_basepoint() {
        let holo = BCHoloFn::from_strs("z^3", "exp(z)", whole()).unwrap();
        let u = holo.as_hyperbolic_fn(Part::Re);
        let conj = harmonic_conjugate(&u, (0.25, -0.5), (1.0, 0.5)).unwrap();
        assert!(conj.eval1(0.25, -0.5).unwrap().abs() < 1e-12);
        assert!(conj.eval2(1.0, 0.5).unwrap().abs() < 1e-12);
    }

    #[test]
    fn conjugate_path_independence() {
        let holo = BCHoloFn::from_strs("z^3", "exp(z)", whole()).unwrap();
        let u = holo.as_hyperbolic_fn(Part::Re);
        let conj = harmonic_conjugate(&u, (0.0, 0.0), (0.0, 0.0)).unwrap();
        for &(x, y) in &[(0.8, 0.6), (-0.9, 0.3), (0.2, -1.0)] {
            let dev = conj
                .path_independence_deviation(&Bc::from_coords(x, y, 0.0, 0.0) )
                .unwrap();
            assert!(dev.eta1 < 2e-6, "component 1 deviation {}", dev.eta1);
            assert!(dev.eta2 < 2e-6, "component 2 deviation {}", dev.eta2);
        }
    }

    #[test]
    fn certified_conjugate_rejects_non_harmonic() {
        let u = HyperbolicFnPair::from_strs("x^2", "x", whole()).unwrap();
        let err = harmonic_conjugate_certified(
            &u,
            (0.0, 0.0),
            (0.0, 0.0),
            &unit_grid(6),
            1e-3,
            1e-4,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotHarmonic { .. }));
    }

    #[test]
    fn reconstruction_examples() {
        // u = (x, x) recovers F ~ (z, z) up to an imaginary constant;
        // basepoints at the origin make the constant zero
        let u = HyperbolicFnPair::from_strs("x", "x", whole()).unwrap();
        let f = holomorphic_from_hyperbolic(&u, (0.0, 0.0), (0.0, 0.0)).unwrap();
        let zeta = Bc::from_coords(1.0, 0.0, 1.0, 0.0);
        let value = f.eval(&zeta).unwrap();
        assert!((value.zeta1 - zeta.zeta1).norm() < 1e-8);
        assert!((value.zeta2 - zeta.zeta2).norm() < 1e-8);

        let u = HyperbolicFnPair::from_strs("x^2 - y^2", "x^2 - y^2", whole()).unwrap();
        let f = holomorphic_from_hyperbolic(&u, (0.0, 0.0), (0.0, 0.0)).unwrap();
        let z = Complex::new(0.75, -0.4);
        let value = f.eval(&Bc::from_complex(z)).unwrap();
        assert!((value.zeta1 - z * z).norm() < 1e-8);

        // the real slot reproduces u exactly by construction
        let re = f.h_re().eval(&Bc::from_complex(z)).unwrap();
        assert!((re.eta1 - (0.75f64.powi(2) - 0.4f64.powi(2))).abs() < 1e-15);
    }

    #[test]
    fn uniqueness_up_to_constant() {
        let u = HyperbolicFnPair::from_strs("x^2 - y^2", "x", whole()).unwrap();
        let dev = conjugate_uniqueness_check(
            &u,
            ((0.0, 0.0), (0.0, 0.0)),
            ((1.0, 1.0), (0.5, -0.5)),
            &unit_grid(6),
        )
        .unwrap();
        assert!(dev.eta1 < 1e-7, "component 1 deviation {}", dev.eta1);
        assert!(dev.eta2 < 1e-7, "component 2 deviation {}", dev.eta2);

        // identical basepoints: identically zero difference
        let dev = conjugate_uniqueness_check(
            &u,
            ((0.25, 0.5), (0.0, 0.0)),
            ((0.25, 0.5), (0.0, 0.0)),
            &unit_grid(4),
        )
        .unwrap();
        assert_eq!(dev.eta1, 0.0);
        assert_eq!(dev.eta2, 0.0);

        // conjugate of 2xy is y^2 - x^2 + c: check against the closed form
        let u = HyperbolicFnPair::from_strs("2*x*y", "2*x*y", whole()).unwrap();
        let conj = harmonic_conjugate(&u, (0.0, 0.0), (0.0, 0.0)).unwrap();
        for &(x, y) in &[(0.5, 0.25), (-0.75, 1.0)] {
            assert!((conj.eval1(x, y).unwrap() - (y * y - x * x)).abs() < 1e-8);
        }
    }

    #[test]
    fn cauchy_riemann_residual() {
        let holo = BCHoloFn::from_strs("z^3", "exp(z)", whole()).unwrap();
        let u = holo.as_hyperbolic_fn(Part::Re);
        let conj = harmonic_conjugate(&u, (0.0, 0.0), (0.0, 0.0)).unwrap();
        let h = 1e-4;
        let mut worst: f64 = 0.0;
        for (x, y) in unit_grid(5).g1.points() {
            let ux = (u.eval1(x + h, y).unwrap() - u.eval1(x - h, y).unwrap()) / (2.0 * h);
            let uy = (u.eval1(x, y + h).unwrap() - u.eval1(x, y - h).unwrap()) / (2.0 * h);
            let vx = (conj.eval1(x + h, y).unwrap() - conj.eval1(x - h, y).unwrap()) / (2.0 * h);
            let vy = (conj.eval1(x, y + h).unwrap() - conj.eval1(x, y - h).unwrap()) / (2.0 * h);
            worst = worst.max((ux - vy).abs()).max((uy + vx).abs());
        }
        assert!(worst < 1e-5, "CR residual {worst}");
    }
}
