//! Bicomplex arithmetic in idempotent form.
//!
//! A bicomplex number is `z1 + j z2` with complex `z1`, `z2` and commuting
//! imaginary units `i`, `j`, each squaring to −1 (so `(ij)^2 = 1`). The crate
//! stores every value by its idempotent components
//!
//! ```text
//! zeta = zeta1 e1 + zeta2 e2,   zeta1 = z1 - i z2,   zeta2 = z1 + i z2,
//! ```
//!
//! relative to the idempotents `e1 = (1 + ij)/2`, `e2 = (1 - ij)/2`, because
//! multiplication, powers, roots, and inversion all act componentwise in this
//! basis. The standard form `(z1, z2)` is a computed view.

mod hyperbolic;

pub use hyperbolic::{HypOrdering, Hyperbolic, HyperbolicBall};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A bicomplex number stored by its idempotent components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bicomplex<T> {
    /// Coefficient of `e1 = (1 + ij)/2`.
    pub zeta1: Complex<T>,
    /// Coefficient of `e2 = (1 - ij)/2`.
    pub zeta2: Complex<T>,
}

impl<T: Real> Bicomplex<T> {
    /// Build a value directly from idempotent components.
    pub fn new(zeta1: Complex<T>, zeta2: Complex<T>) -> Self {
        Self { zeta1, zeta2 }
    }

    /// Encode a standard-form pair `z1 + j z2`.
    pub fn from_standard(z1: Complex<T>, z2: Complex<T>) -> Self {
        let i = Complex::<T>::i();
        Self {
            zeta1: z1 - i * z2,
            zeta2: z1 + i * z2,
        }
    }

    /// Decode into the standard-form pair `(z1, z2)`.
    pub fn to_standard(&self) -> (Complex<T>, Complex<T>) {
        let half = T::of(0.5);
        let z1 = (self.zeta1 + self.zeta2).scale(half);
        let z2 = (Complex::<T>::i() * (self.zeta1 - self.zeta2)).scale(half);
        (z1, z2)
    }

    /// Build from the four real coefficients of `x1 + y1 i + x2 j + y2 ij`.
    pub fn from_coords(x1: T, y1: T, x2: T, y2: T) -> Self {
        Self::from_standard(Complex::new(x1, y1), Complex::new(x2, y2))
    }

    /// The four real coefficients `[x1, y1, x2, y2]` of the standard form.
    pub fn coords(&self) -> [T; 4] {
        let (z1, z2) = self.to_standard();
        [z1.re, z1.im, z2.re, z2.im]
    }

    /// Embed a complex number (equal idempotent components).
    pub fn from_complex(z: Complex<T>) -> Self {
        Self { zeta1: z, zeta2: z }
    }

    /// Embed a real number.
    pub fn from_real(x: T) -> Self {
        Self::from_complex(Complex::new(x, T::zero()))
    }

    pub fn zero() -> Self {
        Self::from_real(T::zero())
    }

    pub fn one() -> Self {
        Self::from_real(T::one())
    }

    /// The first imaginary unit `i = i e1 + i e2`.
    pub fn i() -> Self {
        Self::from_complex(Complex::i())
    }

    /// The second imaginary unit `j = -i e1 + i e2`.
    pub fn j() -> Self {
        Self::from_standard(Complex::zero(), Complex::one())
    }

    /// The product `ij = e1 - e2`.
    pub fn ij() -> Self {
        Self::i() * Self::j()
    }

    /// The idempotent `e1 = (1 + ij)/2`.
    pub fn e1() -> Self {
        Self::new(Complex::one(), Complex::zero())
    }

    /// The idempotent `e2 = (1 - ij)/2`.
    pub fn e2() -> Self {
        Self::new(Complex::zero(), Complex::one())
    }

    /// A value is complex exactly when its idempotent components coincide.
    pub fn is_complex(&self) -> bool {
        self.zeta1 == self.zeta2
    }

    /// Integer power, componentwise.
    pub fn pow_int(&self, n: u32) -> Self {
        Self {
            zeta1: self.zeta1.powu(n),
            zeta2: self.zeta2.powu(n),
        }
    }

    /// Principal complex `n`-th root applied to each idempotent component.
    ///
    /// For components that are not nonnegative real this is the principal
    /// branch (argument in (−π, π]); `pow_int(nth_root(zeta, n), n)` recovers
    /// `zeta` whenever both components avoid the negative real axis.
    pub fn nth_root(&self, n: u32) -> Self {
        assert!(n >= 1, "root order must be at least 1");
        if n == 1 {
            return *self;
        }
        let exp = T::one() / T::of(n as f64);
        Self {
            zeta1: self.zeta1.powf(exp),
            zeta2: self.zeta2.powf(exp),
        }
    }

    /// Multiplicative inverse.
    ///
    /// Fails with [`Error::NonInvertible`] exactly when an idempotent
    /// component is zero; [`Bicomplex::near_noninvertible`] is the tolerance
    /// knob for numerical pipelines.
    pub fn invert(&self) -> Result<Self> {
        if self.zeta1.is_zero() || self.zeta2.is_zero() {
            return Err(Error::NonInvertible);
        }
        Ok(Self {
            zeta1: self.zeta1.inv(),
            zeta2: self.zeta2.inv(),
        })
    }

    /// True when an idempotent component has modulus at most `eps`.
    pub fn near_noninvertible(&self, eps: T) -> bool {
        self.zeta1.norm() <= eps || self.zeta2.norm() <= eps
    }

    /// The hyperbolic (poset-valued) norm `|zeta1| e1 + |zeta2| e2`.
    pub fn hyp_norm(&self) -> Hyperbolic<T> {
        Hyperbolic::new(self.zeta1.norm(), self.zeta2.norm())
    }

    /// Split into hyperbolic real and imaginary parts:
    /// `zeta = (Re zeta1 e1 + Re zeta2 e2) + i (Im zeta1 e1 + Im zeta2 e2)`.
    pub fn hyperbolic_parts(&self) -> (Hyperbolic<T>, Hyperbolic<T>) {
        (
            Hyperbolic::new(self.zeta1.re, self.zeta2.re),
            Hyperbolic::new(self.zeta1.im, self.zeta2.im),
        )
    }

    /// Render as `x1 + y1 i + x2 j + y2 ij`, omitting zero terms.
    pub fn render_standard(&self) -> String {
        let [x1, y1, x2, y2] = self.coords();
        render_terms(&[(x1, ""), (y1, "i"), (x2, "j"), (y2, "ij")])
    }

    /// Render as `[zeta1 | zeta2]` with complex components in `a+bi` form.
    pub fn render_idempotent(&self) -> String {
        format!(
            "[{} | {}]",
            render_complex(self.zeta1),
            render_complex(self.zeta2)
        )
    }
}

pub(crate) fn render_complex<T: Real>(z: Complex<T>) -> String {
    render_terms(&[(z.re, ""), (z.im, "i")])
}

/// Signed-term renderer shared by the standard and idempotent forms. Uses the
/// shortest round-trip decimal representation of each coefficient.
fn render_terms<T: Real>(terms: &[(T, &str)]) -> String {
    let mut out = String::new();
    for &(coef, unit) in terms {
        if coef == T::zero() {
            continue;
        }
        let negative = coef < T::zero();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = coef.abs();
        if unit.is_empty() {
            out.push_str(&format!("{mag}"));
        } else if mag == T::one() {
            out.push_str(unit);
        } else {
            out.push_str(&format!("{mag}{unit}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<T: Real> Add for Bicomplex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            zeta1: self.zeta1 + rhs.zeta1,
            zeta2: self.zeta2 + rhs.zeta2,
        }
    }
}

impl<T: Real> Sub for Bicomplex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            zeta1: self.zeta1 - rhs.zeta1,
            zeta2: self.zeta2 - rhs.zeta2,
        }
    }
}

impl<T: Real> Mul for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            zeta1: self.zeta1 * rhs.zeta1,
            zeta2: self.zeta2 * rhs.zeta2,
        }
    }
}

impl<T: Real> Neg for Bicomplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            zeta1: -self.zeta1,
            zeta2: -self.zeta2,
        }
    }
}

impl<T: Real> fmt::Display for Bicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_standard())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Bc = Bicomplex<f64>;
    type C = Complex<f64>;

    fn close(a: &Bc, b: &Bc, tol: f64) -> bool {
        (a.zeta1 - b.zeta1).norm() <= tol && (a.zeta2 - b.zeta2).norm() <= tol
    }

    #[test]
    fn from_standard_examples() {
        // 1 + j
        let z = Bc::from_standard(C::new(1.0, 0.0), C::new(1.0, 0.0));
        assert_eq!(z.zeta1, C::new(1.0, -1.0));
        assert_eq!(z.zeta2, C::new(1.0, 1.0));

        // plain complex 1
        let one = Bc::from_standard(C::new(1.0, 0.0), C::new(0.0, 0.0));
        assert_eq!(one.zeta1, one.zeta2);
        assert!(one.is_complex());

        // j alone
        let j = Bc::from_standard(C::new(0.0, 0.0), C::new(1.0, 0.0));
        assert_eq!(j.zeta1, C::new(0.0, -1.0));
        assert_eq!(j.zeta2, C::new(0.0, 1.0));
    }

    #[test]
    fn to_standard_examples() {
        let z = Bc::new(C::new(1.0, -1.0), C::new(1.0, 1.0));
        let (z1, z2) = z.to_standard();
        assert_eq!(z1, C::new(1.0, 0.0));
        assert_eq!(z2, C::new(0.0, 0.0).scale(0.0) + C::new(1.0, 0.0));

        let five = Bc::from_complex(C::new(5.0, 0.0));
        assert_eq!(five.to_standard(), (C::new(5.0, 0.0), C::new(0.0, 0.0)));

        // e1 = 1/2 + (i/2) j
        let (z1, z2) = Bc::e1().to_standard();
        assert_eq!(z1, C::new(0.5, 0.0));
        assert_eq!(z2, C::new(0.0, 0.5));
    }

    #[test]
    fn add_examples() {
        assert_eq!(Bc::e1() + Bc::e2(), Bc::one());
        let z = Bc::from_coords(0.5, -2.0, 3.0, 0.25);
        assert_eq!(z + Bc::zero(), z);
        let a = Bc::new(C::new(1.0, 0.0), C::new(2.0, 0.0));
        let b = Bc::new(C::new(3.0, 0.0), C::new(4.0, 0.0));
        assert_eq!(a + b, Bc::new(C::new(4.0, 0.0), C::new(6.0, 0.0)));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(Bc::e1() * Bc::e2(), Bc::zero());
        assert_eq!(Bc::e2() * Bc::e1(), Bc::zero());

        // (1 + j)(1 - j) = 1 - j^2 = 2, cross-checked against the standard rule.
        let a = Bc::from_coords(1.0, 0.0, 1.0, 0.0);
        let b = Bc::from_coords(1.0, 0.0, -1.0, 0.0);
        assert!(close(&(a * b), &Bc::from_real(2.0), 1e-15));

        let z = Bc::from_coords(0.3, 1.5, -2.0, 0.7);
        assert_eq!(z * Bc::one(), z);
    }

    #[test]
    fn pow_examples() {
        assert!(close(&Bc::ij().pow_int(2), &Bc::one(), 1e-15));
        let z = Bc::from_coords(0.6, -1.2, 2.5, 0.1);
        assert_eq!(z.pow_int(0), Bc::one());
        let d = Bc::new(C::new(2.0, 0.0), C::new(3.0, 0.0));
        assert_eq!(d.pow_int(2), Bc::new(C::new(4.0, 0.0), C::new(9.0, 0.0)));
    }

    #[test]
    fn nth_root_examples() {
        let z = Bc::new(C::new(4.0, 0.0), C::new(9.0, 0.0));
        assert!(close(
            &z.nth_root(2),
            &Bc::new(C::new(2.0, 0.0), C::new(3.0, 0.0)),
            1e-14
        ));
        assert!(close(&Bc::one().nth_root(7), &Bc::one(), 1e-15));

        // principal square root of -1 is i; square back to check the branch
        let r = Bc::from_real(-1.0).nth_root(2);
        assert!(close(&r, &Bc::i(), 1e-15));
        assert!(close(&r.pow_int(2), &Bc::from_real(-1.0), 1e-14));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(Bc::e1().invert(), Err(Error::NonInvertible));
        assert_eq!(Bc::e2().invert(), Err(Error::NonInvertible));
        assert_eq!(Bc::zero().invert(), Err(Error::NonInvertible));

        let two = Bc::from_real(2.0);
        assert!(close(&two.invert().unwrap(), &Bc::from_real(0.5), 1e-15));

        let z = Bc::new(C::new(3.0, 0.0), C::new(2.0, 0.0));
        let w = z.invert().unwrap();
        assert!(close(
            &w,
            &Bc::new(C::new(1.0 / 3.0, 0.0), C::new(0.5, 0.0)),
            1e-15
        ));
        assert!(close(&(z * w), &Bc::one(), 1e-15));
    }

    #[test]
    fn near_noninvertible_tolerance() {
        let z = Bc::new(C::new(1e-13, 0.0), C::new(1.0, 0.0));
        assert!(z.near_noninvertible(1e-12));
        assert!(!z.near_noninvertible(1e-14));
        assert!(z.invert().is_ok());
    }

    #[test]
    fn hyp_norm_examples() {
        let z = Bc::new(C::new(-3.0, 0.0), C::new(4.0, 0.0));
        assert_eq!(z.hyp_norm(), Hyperbolic::new(3.0, 4.0));

        assert_eq!(Bc::i().hyp_norm(), Hyperbolic::new(1.0, 1.0));

        // |1 + j|: components 1 -/+ i have modulus sqrt(2)
        let n = Bc::from_coords(1.0, 0.0, 1.0, 0.0).hyp_norm();
        assert!((n.eta1 - 2f64.sqrt()).abs() < 1e-15);
        assert!((n.eta2 - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn hyperbolic_parts_reconstruct() {
        let z = Bc::new(C::new(0.25, -1.5), C::new(3.0, 0.5));
        let (re, im) = z.hyperbolic_parts();
        assert_eq!(re, Hyperbolic::new(0.25, 3.0));
        assert_eq!(im, Hyperbolic::new(-1.5, 0.5));
        let back = re.to_bicomplex() + Bc::i() * im.to_bicomplex();
        assert!(close(&back, &z, 0.0));
    }

    #[test]
    fn rendering() {
        let z = Bc::from_coords(1.0, -2.0, 0.0, 0.5);
        assert_eq!(z.render_standard(), "1 - 2i + 0.5ij");
        assert_eq!(Bc::zero().render_standard(), "0");
        assert_eq!(Bc::j().render_standard(), "j");
        let two_j = Bc::from_coords(0.0, 0.0, 2.0, 0.0);
        assert_eq!(two_j.render_standard(), "2j");
        assert_eq!(two_j.render_idempotent(), "[-2i | 2i]");
    }

    #[test]
    fn f32_smoke() {
        let z = Bicomplex::<f32>::from_coords(1.0, 2.0, -0.5, 0.25);
        let (z1, z2) = z.to_standard();
        let back = Bicomplex::<f32>::from_standard(z1, z2);
        assert!((back.zeta1 - z.zeta1).norm() < 1e-6);
        assert_eq!(Bicomplex::<f32>::e1() * Bicomplex::<f32>::e2(), Bicomplex::<f32>::zero());
    }
}
