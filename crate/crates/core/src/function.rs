//! The function model: holomorphic functions as idempotent pairs of complex
//! functions over product regions, their derivatives, and the split into
//! hyperbolic real and imaginary parts.

use std::sync::Arc;

use num_complex::Complex;

use crate::algebra::{Bicomplex, Hyperbolic};
use crate::error::{Error, Result};
use crate::expr::{eval_complex, eval_derivative, parse, Expr};
use crate::scalar::Real;

/// Open interval; the endpoints may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidArgument(
                "interval requires lo < hi".into(),
            ))
        }
    }

    pub fn whole_line() -> Self {
        Self {
            lo: T::neg_infinity(),
            hi: T::infinity(),
        }
    }

    pub fn contains(&self, v: T) -> bool {
        self.lo < v && v < self.hi
    }
}

/// Open axis-aligned rectangle in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect<T> {
    pub x: Interval<T>,
    pub y: Interval<T>,
}

impl<T: Real> Rect<T> {
    pub fn new(x: Interval<T>, y: Interval<T>) -> Self {
        Self { x, y }
    }

    pub fn from_bounds(x_lo: T, x_hi: T, y_lo: T, y_hi: T) -> Result<Self> {
        Ok(Self {
            x: Interval::new(x_lo, x_hi)?,
            y: Interval::new(y_lo, y_hi)?,
        })
    }

    pub fn whole_plane() -> Self {
        Self {
            x: Interval::whole_line(),
            y: Interval::whole_line(),
        }
    }

    pub fn upper_half_plane() -> Self {
        Self {
            x: Interval::whole_line(),
            y: Interval {
                lo: T::zero(),
                hi: T::infinity(),
            },
        }
    }

    pub fn contains(&self, x: T, y: T) -> bool {
        self.x.contains(x) && self.y.contains(y)
    }

    /// Containment with a margin on every side, for stencil safety.
    pub fn contains_with_margin(&self, x: T, y: T, margin: T) -> bool {
        self.x.contains(x - margin)
            && self.x.contains(x + margin)
            && self.y.contains(y - margin)
            && self.y.contains(y + margin)
    }

    pub fn contains_complex(&self, z: Complex<T>) -> bool {
        self.contains(z.re, z.im)
    }
}

/// Product region `Omega1 e1 (+) Omega2 e2`: one open rectangle per
/// idempotent component. Rectangles are simply connected, which keeps
/// harmonic conjugates single-valued.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region<T> {
    pub omega1: Rect<T>,
    pub omega2: Rect<T>,
}

impl<T: Real> Region<T> {
    pub fn new(omega1: Rect<T>, omega2: Rect<T>) -> Self {
        Self { omega1, omega2 }
    }

    pub fn whole_space() -> Self {
        Self {
            omega1: Rect::whole_plane(),
            omega2: Rect::whole_plane(),
        }
    }

    pub fn upper_half_space() -> Self {
        Self {
            omega1: Rect::upper_half_plane(),
            omega2: Rect::upper_half_plane(),
        }
    }

    pub fn contains(&self, zeta: &Bicomplex<T>) -> bool {
        self.omega1.contains_complex(zeta.zeta1) && self.omega2.contains_complex(zeta.zeta2)
    }
}

/// Which half of the hyperbolic decomposition to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Re,
    Im,
}

/// A holomorphic function `F(zeta) = f1(zeta1) e1 + f2(zeta2) e2` given by two
/// analytic expressions in `z` over a product region.
///
/// Construction rejects the non-analytic nodes (`abs`, `re`, `im`, `step`):
/// holomorphy is a structural promise, checked up front rather than at
/// evaluation time.
#[derive(Debug, Clone, PartialEq)]
pub struct BCHoloFn<T> {
    f1: Expr<T>,
    f2: Expr<T>,
    domain: Region<T>,
}

impl<T: Real> BCHoloFn<T> {
    pub fn new(f1: Expr<T>, f2: Expr<T>, domain: Region<T>) -> Result<Self> {
        for expr in [&f1, &f2] {
            if let Some(func) = expr.find_non_analytic() {
                return Err(Error::NonAnalytic(func.name().to_string()));
            }
            if let Some(bad) = expr.free_vars().iter().find(|v| v.as_str() != "z") {
                return Err(Error::UnknownVariable(bad.clone()));
            }
        }
        Ok(Self { f1, f2, domain })
    }

    /// Parse the two component expressions (variable `z`).
    pub fn from_strs(f1: &str, f2: &str, domain: Region<T>) -> Result<Self> {
        Self::new(parse(f1, &["z"])?, parse(f2, &["z"])?, domain)
    }

    pub fn domain(&self) -> &Region<T> {
        &self.domain
    }

    pub fn components(&self) -> (&Expr<T>, &Expr<T>) {
        (&self.f1, &self.f2)
    }

    fn check_domain(&self, zeta: &Bicomplex<T>) -> Result<()> {
        if self.domain.contains(zeta) {
            Ok(())
        } else {
            Err(Error::OutOfDomain(format!(
                "{} is outside the product region",
                zeta.render_idempotent()
            )))
        }
    }

    /// `F(zeta) = f1(zeta1) e1 + f2(zeta2) e2`.
    pub fn eval(&self, zeta: &Bicomplex<T>) -> Result<Bicomplex<T>> {
        self.check_domain(zeta)?;
        Ok(Bicomplex::new(
            eval_complex(&self.f1, &[("z", zeta.zeta1)])?,
            eval_complex(&self.f2, &[("z", zeta.zeta2)])?,
        ))
    }

    /// `F'(zeta) = f1'(zeta1) e1 + f2'(zeta2) e2`, each component computed by
    /// a complex step in a fresh imaginary direction (no subtractive
    /// cancellation); see [`crate::expr::eval_derivative`].
    pub fn derivative(&self, zeta: &Bicomplex<T>) -> Result<Bicomplex<T>> {
        self.check_domain(zeta)?;
        let (_, d1) = eval_derivative(&self.f1, "z", zeta.zeta1, &[])?;
        let (_, d2) = eval_derivative(&self.f2, "z", zeta.zeta2, &[])?;
        Ok(Bicomplex::new(d1, d2))
    }

    /// Split `F(zeta)` into hyperbolic real and imaginary parts,
    /// `F = hre + i him`.
    pub fn hyperbolic_decompose(
        &self,
        zeta: &Bicomplex<T>,
    ) -> Result<(Hyperbolic<T>, Hyperbolic<T>)> {
        Ok(self.eval(zeta)?.hyperbolic_parts())
    }

    /// The chosen part as a pair of planar evaluators over the same region.
    pub fn as_hyperbolic_fn(&self, part: Part) -> HyperbolicFnPair<T> {
        let mk = |expr: Expr<T>| -> PlanarFn<T> {
            Arc::new(move |x: T, y: T| {
                let w = eval_complex(&expr, &[("z", Complex::new(x, y))])?;
                Ok(match part {
                    Part::Re => w.re,
                    Part::Im => w.im,
                })
            })
        };
        HyperbolicFnPair {
            u1: mk(self.f1.clone()),
            u2: mk(self.f2.clone()),
            domain: self.domain,
        }
    }

    /// Specialize to a complex argument. Requires structurally equal
    /// component expressions, in which case `F(z e1 + z e2)` collapses to the
    /// single complex value `f1(z)`.
    pub fn reduce_to_complex(&self, z: Complex<T>) -> Result<Complex<T>> {
        if self.f1 != self.f2 {
            return Err(Error::ComponentMismatch);
        }
        let zeta = Bicomplex::from_complex(z);
        self.check_domain(&zeta)?;
        let value = self.eval(&zeta)?;
        debug_assert_eq!(value.zeta1, value.zeta2);
        Ok(value.zeta1)
    }
}

/// Planar real-valued evaluator used for the components of hyperbolic
/// functions. Shared behind `Arc` so function pairs clone cheaply.
pub type PlanarFn<T> = Arc<dyn Fn(T, T) -> Result<T> + Send + Sync>;

/// A hyperbolic function `u1(x1, y1) e1 + u2(x2, y2) e2` given by real-valued
/// planar evaluators over a product region.
#[derive(Clone)]
pub struct HyperbolicFnPair<T> {
    u1: PlanarFn<T>,
    u2: PlanarFn<T>,
    domain: Region<T>,
}

impl<T: Real> HyperbolicFnPair<T> {
    pub fn from_fns(u1: PlanarFn<T>, u2: PlanarFn<T>, domain: Region<T>) -> Self {
        Self { u1, u2, domain }
    }

    /// Build from two expressions in the variables `x`, `y`. Evaluation
    /// rejects results with a nonnegligible imaginary part.
    pub fn from_exprs(u1: Expr<T>, u2: Expr<T>, domain: Region<T>) -> Result<Self> {
        for expr in [&u1, &u2] {
            if let Some(bad) = expr
                .free_vars()
                .iter()
                .find(|v| v.as_str() != "x" && v.as_str() != "y")
            {
                return Err(Error::UnknownVariable(bad.clone()));
            }
        }
        let mk = |expr: Expr<T>| -> PlanarFn<T> {
            Arc::new(move |x: T, y: T| crate::expr::eval_real(&expr, &[("x", x), ("y", y)]))
        };
        Ok(Self {
            u1: mk(u1),
            u2: mk(u2),
            domain,
        })
    }

    /// Parse two planar expressions (variables `x`, `y`).
    pub fn from_strs(u1: &str, u2: &str, domain: Region<T>) -> Result<Self> {
        Self::from_exprs(parse(u1, &["x", "y"])?, parse(u2, &["x", "y"])?, domain)
    }

    pub fn domain(&self) -> &Region<T> {
        &self.domain
    }

    /// First component at `(x, y)`; the point must lie in `omega1`.
    pub fn eval1(&self, x: T, y: T) -> Result<T> {
        if !self.domain.omega1.contains(x, y) {
            return Err(Error::OutOfDomain(format!("({x}, {y}) not in omega1")));
        }
        (self.u1)(x, y)
    }

    /// Second component at `(x, y)`; the point must lie in `omega2`.
    pub fn eval2(&self, x: T, y: T) -> Result<T> {
        if !self.domain.omega2.contains(x, y) {
            return Err(Error::OutOfDomain(format!("({x}, {y}) not in omega2")));
        }
        (self.u2)(x, y)
    }

    /// Evaluate both components at the coordinates carried by `zeta`.
    pub fn eval(&self, zeta: &Bicomplex<T>) -> Result<Hyperbolic<T>> {
        Ok(Hyperbolic::new(
            self.eval1(zeta.zeta1.re, zeta.zeta1.im)?,
            self.eval2(zeta.zeta2.re, zeta.zeta2.im)?,
        ))
    }
}

impl<T> std::fmt::Debug for HyperbolicFnPair<T>
where
    T: std::fmt::Debug,
{
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HyperbolicFnPair")
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}
