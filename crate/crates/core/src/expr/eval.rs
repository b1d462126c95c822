//! Expression evaluation over complex scalars, plus first-derivative
//! evaluation by a complex step taken in a fresh imaginary direction.

use num_complex::Complex;
use num_traits::Zero;

use crate::defaults;
use crate::error::{Error, Result};
use crate::scalar::Real;

use super::ast::{BinOp, Expr, Func};

/// Evaluate with complex semantics. `log`, `sqrt`, and non-integer powers use
/// the principal branch; `step` is the sign of the real part with
/// `step(0) = 0`.
pub fn eval_complex<T: Real>(
    ast: &Expr<T>,
    bindings: &[(&str, Complex<T>)],
) -> Result<Complex<T>> {
    let value = eval_node(ast, bindings)?;
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::EvalDomain("non-finite result".into()))
    }
}

/// Evaluate in a real context: the bindings are real and the result must have
/// a negligible imaginary part (at most [`defaults::REAL_IMAG_TOL`]).
pub fn eval_real<T: Real>(ast: &Expr<T>, bindings: &[(&str, T)]) -> Result<T> {
    let complex_bindings: Vec<(&str, Complex<T>)> = bindings
        .iter()
        .map(|&(name, v)| (name, Complex::new(v, T::zero())))
        .collect();
    let value = eval_complex(ast, &complex_bindings)?;
    let tol = T::of(defaults::REAL_IMAG_TOL);
    if value.im.abs() > tol {
        return Err(Error::NonReal {
            imag: value.im.abs().to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(value.re)
}

fn lookup<T: Copy>(bindings: &[(&str, T)], name: &str) -> Result<T> {
    bindings
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, v)| v)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

fn eval_node<T: Real>(ast: &Expr<T>, bindings: &[(&str, Complex<T>)]) -> Result<Complex<T>> {
    match ast {
        Expr::Const(c) => Ok(*c),
        Expr::Var(name) => lookup(bindings, name),
        Expr::Neg(inner) => Ok(-eval_node(inner, bindings)?),
        Expr::Bin(op, lhs, rhs) => {
            let a = eval_node(lhs, bindings)?;
            match op {
                BinOp::Add => Ok(a + eval_node(rhs, bindings)?),
                BinOp::Sub => Ok(a - eval_node(rhs, bindings)?),
                BinOp::Mul => Ok(a * eval_node(rhs, bindings)?),
                BinOp::Div => {
                    let b = eval_node(rhs, bindings)?;
                    if b.is_zero() {
                        return Err(Error::EvalDomain("division by zero".into()));
                    }
                    Ok(a / b)
                }
                BinOp::Pow => {
                    let b = eval_node(rhs, bindings)?;
                    pow_value(a, b)
                }
            }
        }
        Expr::Call(func, inner) => {
            let z = eval_node(inner, bindings)?;
            apply(*func, z)
        }
    }
}

/// Integer exponent values go through exact repeated squaring so that `z^2`
/// at `z = 0` works; everything else is `exp(w log z)` on the principal
/// branch.
fn pow_value<T: Real>(base: Complex<T>, exp: Complex<T>) -> Result<Complex<T>> {
    if let Some(n) = int_exponent(exp) {
        if base.is_zero() && n < 0 {
            return Err(Error::EvalDomain("zero raised to a negative power".into()));
        }
        return Ok(base.powi(n));
    }
    if base.is_zero() {
        if exp.re > T::zero() {
            return Ok(Complex::zero());
        }
        return Err(Error::EvalDomain(
            "zero base with non-positive exponent".into(),
        ));
    }
    Ok(base.powc(exp))
}

/// Recognize an exponent whose value is a (not too large) real integer.
fn int_exponent<T: Real>(exp: Complex<T>) -> Option<i32> {
    if exp.im != T::zero() {
        return None;
    }
    let re = exp.re.to_f64()?;
    if re.fract() == 0.0 && re.abs() <= i32::MAX as f64 {
        Some(re as i32)
    } else {
        None
    }
}

fn apply<T: Real>(func: Func, z: Complex<T>) -> Result<Complex<T>> {
    Ok(match func {
        Func::Sin => z.sin(),
        Func::Cos => z.cos(),
        Func::Exp => z.exp(),
        Func::Log => {
            if z.is_zero() {
                return Err(Error::EvalDomain("log of zero".into()));
            }
            z.ln()
        }
        Func::Sqrt => z.sqrt(),
        Func::Atan => {
            if z == Complex::i() || z == -Complex::<T>::i() {
                return Err(Error::EvalDomain("atan at a pole".into()));
            }
            z.atan()
        }
        Func::Abs => Complex::new(z.norm(), T::zero()),
        Func::Re => Complex::new(z.re, T::zero()),
        Func::Im => Complex::new(z.im, T::zero()),
        Func::Step => Complex::new(step(z.re), T::zero()),
    })
}

fn step<T: Real>(x: T) -> T {
    if x > T::zero() {
        T::one()
    } else if x < T::zero() {
        -T::one()
    } else {
        T::zero()
    }
}

/// Value carried through a derivative evaluation: `val + j * jpart`, where `j`
/// is a second imaginary unit with `j^2 = -1`. Seeding `jpart` with a real
/// step `h` and evaluating propagates the perturbation in a direction
/// orthogonal to the argument's own complex plane, so `jpart / h` recovers the
/// derivative without subtractive cancellation.
#[derive(Clone, Copy)]
struct JStep<T> {
    val: Complex<T>,
    jpart: Complex<T>,
}

/// Evaluate `ast` and its complex derivative with respect to `var` at `at`,
/// with the remaining variables bound by `extra`. The step size is
/// [`defaults::DERIVATIVE_STEP`].
pub fn eval_derivative<T: Real>(
    ast: &Expr<T>,
    var: &str,
    at: Complex<T>,
    extra: &[(&str, Complex<T>)],
) -> Result<(Complex<T>, Complex<T>)> {
    let h = T::of(defaults::DERIVATIVE_STEP);
    let seed = JStep {
        val: at,
        jpart: Complex::new(h, T::zero()),
    };
    let out = eval_jstep(ast, var, seed, extra)?;
    if !(out.val.re.is_finite() && out.val.im.is_finite()) {
        return Err(Error::EvalDomain("non-finite result".into()));
    }
    Ok((out.val, out.jpart.unscale(h)))
}

fn eval_jstep<T: Real>(
    ast: &Expr<T>,
    var: &str,
    at: JStep<T>,
    extra: &[(&str, Complex<T>)],
) -> Result<JStep<T>> {
    let constant = |val: Complex<T>| JStep {
        val,
        jpart: Complex::zero(),
    };
    match ast {
        Expr::Const(c) => Ok(constant(*c)),
        Expr::Var(name) => {
            if name == var {
                Ok(at)
            } else {
                Ok(constant(lookup(extra, name)?))
            }
        }
        Expr::Neg(inner) => {
            let a = eval_jstep(inner, var, at, extra)?;
            Ok(JStep {
                val: -a.val,
                jpart: -a.jpart,
            })
        }
        Expr::Bin(op, lhs, rhs) => {
            let a = eval_jstep(lhs, var, at, extra)?;
            match op {
                BinOp::Add => {
                    let b = eval_jstep(rhs, var, at, extra)?;
                    Ok(JStep {
                        val: a.val + b.val,
                        jpart: a.jpart + b.jpart,
                    })
                }
                BinOp::Sub => {
                    let b = eval_jstep(rhs, var, at, extra)?;
                    Ok(JStep {
                        val: a.val - b.val,
                        jpart: a.jpart - b.jpart,
                    })
                }
                BinOp::Mul => {
                    let b = eval_jstep(rhs, var, at, extra)?;
                    Ok(mul_jstep(a, b))
                }
                BinOp::Div => {
                    let b = eval_jstep(rhs, var, at, extra)?;
                    div_jstep(a, b)
                }
                BinOp::Pow => {
                    let b = eval_jstep(rhs, var, at, extra)?;
                    pow_jstep(a, b)
                }
            }
        }
        Expr::Call(func, inner) => {
            let a = eval_jstep(inner, var, at, extra)?;
            apply_jstep(*func, a)
        }
    }
}

/// Product in standard bicomplex form: `(a + jb)(c + jd) = (ac - bd) + j(ad + bc)`.
fn mul_jstep<T: Real>(a: JStep<T>, b: JStep<T>) -> JStep<T> {
    JStep {
        val: a.val * b.val - a.jpart * b.jpart,
        jpart: a.val * b.jpart + a.jpart * b.val,
    }
}

fn div_jstep<T: Real>(a: JStep<T>, b: JStep<T>) -> Result<JStep<T>> {
    // multiply through by the j-conjugate c - jd
    let den = b.val * b.val + b.jpart * b.jpart;
    if b.val.is_zero() {
        return Err(Error::EvalDomain("division by zero".into()));
    }
    Ok(JStep {
        val: (a.val * b.val + a.jpart * b.jpart) / den,
        jpart: (a.jpart * b.val - a.val * b.jpart) / den,
    })
}

fn pow_jstep<T: Real>(base: JStep<T>, exp: JStep<T>) -> Result<JStep<T>> {
    if exp.jpart.is_zero() {
        if let Some(n) = int_exponent(exp.val) {
            if base.val.is_zero() && n < 0 {
                return Err(Error::EvalDomain("zero raised to a negative power".into()));
            }
            let val = base.val.powi(n);
            let n_t = Complex::new(T::of(n as f64), T::zero());
            let dval = if n == 0 {
                Complex::zero()
            } else {
                n_t * base.val.powi(n - 1)
            };
            return Ok(JStep {
                val,
                jpart: dval * base.jpart,
            });
        }
    }
    // general case via exp(w log z); requires a nonzero base
    if base.val.is_zero() {
        return Err(Error::EvalDomain(
            "derivative of a non-integer power at zero".into(),
        ));
    }
    let log_base = base.val.ln();
    let val = (exp.val * log_base).exp();
    let jpart = val * (exp.jpart * log_base + exp.val * base.jpart / base.val);
    Ok(JStep { val, jpart })
}

fn apply_jstep<T: Real>(func: Func, a: JStep<T>) -> Result<JStep<T>> {
    let chain = |val: Complex<T>, deriv: Complex<T>| JStep {
        val,
        jpart: deriv * a.jpart,
    };
    let z = a.val;
    Ok(match func {
        Func::Sin => chain(z.sin(), z.cos()),
        Func::Cos => chain(z.cos(), -z.sin()),
        Func::Exp => {
            let e = z.exp();
            chain(e, e)
        }
        Func::Log => {
            if z.is_zero() {
                return Err(Error::EvalDomain("log of zero".into()));
            }
            chain(z.ln(), z.inv())
        }
        Func::Sqrt => {
            if z.is_zero() {
                return Err(Error::EvalDomain("derivative of sqrt at zero".into()));
            }
            let s = z.sqrt();
            chain(s, (s * T::of(2.0)).inv())
        }
        Func::Atan => {
            let one = Complex::new(T::one(), T::zero());
            let den = one + z * z;
            if den.is_zero() {
                return Err(Error::EvalDomain("atan at a pole".into()));
            }
            chain(z.atan(), den.inv())
        }
        Func::Abs | Func::Re | Func::Im | Func::Step => {
            return Err(Error::NonAnalytic(func.name().to_string()))
        }
    })
}
