//! Composite Gauss-Legendre quadrature.

use crate::error::Result;
use crate::scalar::Real;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
///
/// Nodes are computed by Newton iteration on the Legendre polynomial from the
/// Chebyshev initial guess, which converges to machine precision in a handful
/// of steps for any practical order.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> GaussLegendre<T> {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "quadrature order must be at least 1");
        let mut nodes = Vec::with_capacity(order);
        let mut weights = Vec::with_capacity(order);
        let n = order;
        for k in 0..n {
            let mut x = (T::PI() * T::of(k as f64 + 0.75) / T::of(n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x = x - dx;
                if dx.abs() <= T::epsilon() * (T::one() + x.abs()) {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            let w = T::of(2.0) / ((T::one() - x * x) * dp * dp);
            nodes.push(x);
            weights.push(w);
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Integrate `f` over `[a, b]` (orientation-sensitive: swapping the
    /// endpoints negates the result).
    pub fn integrate<F>(&self, a: T, b: T, mut f: F) -> Result<T>
    where
        F: FnMut(T) -> Result<T>,
    {
        let half = T::of(0.5);
        let mid = (a + b) * half;
        let scale = (b - a) * half;
        let mut acc = T::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc = acc + w * f(mid + scale * x)?;
        }
        Ok(acc * scale)
    }

    /// Composite rule: `[a, b]` split into `panels` equal panels.
    pub fn integrate_panels<F>(&self, a: T, b: T, panels: usize, mut f: F) -> Result<T>
    where
        F: FnMut(T) -> Result<T>,
    {
        assert!(panels >= 1);
        let width = (b - a) / T::of(panels as f64);
        let mut acc = T::zero();
        for k in 0..panels {
            let lo = a + width * T::of(k as f64);
            let hi = if k + 1 == panels {
                b
            } else {
                a + width * T::of(k as f64 + 1.0)
            };
            acc = acc + self.integrate(lo, hi, &mut f)?;
        }
        Ok(acc)
    }
}

/// Legendre polynomial `P_n` and its derivative at `x`, by the three-term
/// recurrence.
fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p_prev = T::one();
    let mut p = x;
    if n == 0 {
        return (T::one(), T::zero());
    }
    for k in 2..=n {
        let kf = T::of(k as f64);
        let next = ((T::of(2.0 * k as f64 - 1.0) * x * p) - (kf - T::one()) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let dp = T::of(n as f64) * (x * p - p_prev) / (x * x - T::one());
    (p, dp)
}
