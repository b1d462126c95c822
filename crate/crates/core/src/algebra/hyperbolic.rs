//! Hyperbolic numbers, the poset order on them, and hyperbolic balls.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::Bicomplex;

/// A hyperbolic number `eta1 e1 + eta2 e2` with real components.
///
/// Values of the hyperbolic norm additionally lie in the nonnegative cone
/// (see [`Hyperbolic::is_nonneg`]); general hyperbolic values, such as the
/// components of a hyperbolic harmonic function, range over all of the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyperbolic<T> {
    pub eta1: T,
    pub eta2: T,
}

/// Outcome of the strict componentwise comparison of hyperbolic numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypOrdering {
    Equal,
    Less,
    Greater,
    /// The componentwise comparisons do not agree on a strict direction.
    Incomparable,
}

impl<T: Real> Hyperbolic<T> {
    pub fn new(eta1: T, eta2: T) -> Self {
        Self { eta1, eta2 }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    /// Membership in the nonnegative cone.
    pub fn is_nonneg(&self) -> bool {
        self.eta1 >= T::zero() && self.eta2 >= T::zero()
    }

    /// Strict partial-order comparison: `Less` iff both components are
    /// strictly less, `Greater` symmetrically, `Equal` iff componentwise
    /// equal, otherwise `Incomparable`.
    pub fn compare(&self, other: &Self) -> HypOrdering {
        if self.eta1 == other.eta1 && self.eta2 == other.eta2 {
            HypOrdering::Equal
        } else if self.eta1 < other.eta1 && self.eta2 < other.eta2 {
            HypOrdering::Less
        } else if self.eta1 > other.eta1 && self.eta2 > other.eta2 {
            HypOrdering::Greater
        } else {
            HypOrdering::Incomparable
        }
    }

    /// The non-strict partial order: componentwise less-than-or-equal.
    pub fn le(&self, other: &Self) -> bool {
        self.eta1 <= other.eta1 && self.eta2 <= other.eta2
    }

    /// Embed into the bicomplex ring.
    pub fn to_bicomplex(&self) -> Bicomplex<T> {
        Bicomplex::new(
            Complex::new(self.eta1, T::zero()),
            Complex::new(self.eta2, T::zero()),
        )
    }

    /// Larger of the two component magnitudes.
    pub fn max_abs(&self) -> T {
        self.eta1.abs().max(self.eta2.abs())
    }
}

impl<T: Real> Add for Hyperbolic<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.eta1 + rhs.eta1, self.eta2 + rhs.eta2)
    }
}

impl<T: Real> Sub for Hyperbolic<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.eta1 - rhs.eta1, self.eta2 - rhs.eta2)
    }
}

impl<T: Real> Mul for Hyperbolic<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.eta1 * rhs.eta1, self.eta2 * rhs.eta2)
    }
}

impl<T: Real> Neg for Hyperbolic<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.eta1, -self.eta2)
    }
}

impl<T: Real> fmt::Display for Hyperbolic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eta2 < T::zero() {
            write!(f, "{} e1 - {} e2", self.eta1, self.eta2.abs())
        } else {
            write!(f, "{} e1 + {} e2", self.eta1, self.eta2)
        }
    }
}

/// An open ball `{zeta : |zeta - center| < radius}` in the hyperbolic metric
/// topology. The strict inequality is the componentwise one, so membership
/// requires both component distances below the corresponding radius component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicBall<T> {
    center: Bicomplex<T>,
    radius: Hyperbolic<T>,
}

impl<T: Real> HyperbolicBall<T> {
    /// Requires a componentwise strictly positive radius.
    pub fn new(center: Bicomplex<T>, radius: Hyperbolic<T>) -> Result<Self> {
        if radius.eta1 > T::zero() && radius.eta2 > T::zero() {
            Ok(Self { center, radius })
        } else {
            Err(Error::InvalidArgument(
                "hyperbolic ball radius must be componentwise positive".into(),
            ))
        }
    }

    pub fn center(&self) -> &Bicomplex<T> {
        &self.center
    }

    pub fn radius(&self) -> &Hyperbolic<T> {
        &self.radius
    }

    pub fn contains(&self, zeta: &Bicomplex<T>) -> bool {
        (*zeta - self.center).hyp_norm().compare(&self.radius) == HypOrdering::Less
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = Hyperbolic<f64>;
    type Bc = Bicomplex<f64>;

    #[test]
    fn compare_examples() {
        assert_eq!(H::new(1.0, 1.0).compare(&H::new(2.0, 3.0)), HypOrdering::Less);
        assert_eq!(
            H::new(2.0, 1.0).compare(&H::new(1.0, 2.0)),
            HypOrdering::Incomparable
        );
        let a = H::new(0.5, -0.25);
        assert_eq!(a.compare(&a), HypOrdering::Equal);
        assert_eq!(H::new(3.0, 4.0).compare(&H::new(1.0, 2.0)), HypOrdering::Greater);
        // equal in one component, strict in the other: no strict direction
        assert_eq!(
            H::new(1.0, 1.0).compare(&H::new(1.0, 2.0)),
            HypOrdering::Incomparable
        );
        assert!(H::new(1.0, 1.0).le(&H::new(1.0, 2.0)));
    }

    #[test]
    fn ball_examples() {
        let unit = HyperbolicBall::new(Bc::zero(), H::new(1.0, 1.0)).unwrap();
        assert!(unit.contains(&Bc::from_real(0.5)));
        // incomparable distance is not Less
        assert!(!unit.contains(&Bc::new(
            Complex::new(0.5, 0.0),
            Complex::new(2.0, 0.0)
        )));

        let c = Bc::from_coords(0.3, -0.4, 1.0, 2.0);
        let ball = HyperbolicBall::new(c, H::new(0.1, 0.2)).unwrap();
        assert!(ball.contains(&c));
    }

    #[test]
    fn ball_rejects_flat_radius() {
        assert!(HyperbolicBall::new(Bc::zero(), H::new(1.0, 0.0)).is_err());
        assert!(HyperbolicBall::new(Bc::zero(), H::new(-1.0, 1.0)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(H::new(3.0, 4.0).to_string(), "3 e1 + 4 e2");
        assert_eq!(H::new(0.5, -0.5).to_string(), "0.5 e1 - 0.5 e2");
    }
}
