//! Rectangular evaluation grids, one planar grid per idempotent component.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Evenly spaced closed range `lo ..= hi` with `n >= 2` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec<T> {
    lo: T,
    hi: T,
    n: usize,
}

impl<T: Real> AxisSpec<T> {
    pub fn new(lo: T, hi: T, n: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidArgument(
                "axis range must be finite with lo < hi".into(),
            ));
        }
        if n < 2 {
            return Err(Error::InvalidArgument(
                "axis needs at least two points".into(),
            ));
        }
        Ok(Self { lo, hi, n })
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> T {
        (self.hi - self.lo) / T::of(self.n as f64 - 1.0)
    }

    pub fn point(&self, k: usize) -> T {
        debug_assert!(k < self.n);
        if k + 1 == self.n {
            self.hi
        } else {
            self.lo + self.spacing() * T::of(k as f64)
        }
    }

    pub fn points(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n).map(move |k| self.point(k))
    }
}

/// A planar grid, `x` varying fastest in iteration order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarGrid<T> {
    pub x: AxisSpec<T>,
    pub y: AxisSpec<T>,
}

impl<T: Real> PlanarGrid<T> {
    pub fn new(x: AxisSpec<T>, y: AxisSpec<T>) -> Self {
        Self { x, y }
    }

    pub fn len(&self) -> usize {
        self.x.len() * self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.x.len(), self.y.len())
    }

    pub fn points(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.y
            .points()
            .flat_map(move |y| self.x.points().map(move |x| (x, y)))
    }
}

/// Grids for the two idempotent components. They need not have the same
/// shape; operations that pair points componentwise check that themselves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec<T> {
    pub g1: PlanarGrid<T>,
    pub g2: PlanarGrid<T>,
}

impl<T: Real> GridSpec<T> {
    pub fn new(g1: PlanarGrid<T>, g2: PlanarGrid<T>) -> Self {
        Self { g1, g2 }
    }

    /// Both components over the same planar grid.
    pub fn diagonal(g: PlanarGrid<T>) -> Self {
        Self { g1: g, g2: g }
    }

    pub fn same_shape(&self) -> bool {
        self.g1.shape() == self.g2.shape()
    }
}
