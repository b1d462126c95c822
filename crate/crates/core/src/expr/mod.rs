//! A small expression language for defining complex functions `f(z)`, planar
//! real functions `u(x, y)`, and boundary functions `u(t)` from text.

mod ast;
mod eval;
mod lexer;
mod parser;
mod piecewise;
mod value;

pub use ast::{BinOp, Expr, Func};
pub use eval::{eval_complex, eval_derivative, eval_real};
pub use parser::parse;
pub use piecewise::PiecewiseSpec;
pub use value::{parse_bicomplex, parse_complex_value};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use num_complex::Complex;

    type C = Complex<f64>;

    fn eval1(src: &str, var: &str, at: C) -> C {
        let ast = parse::<f64>(src, &[var]).unwrap();
        eval_complex(&ast, &[(var, at)]).unwrap()
    }

    #[test]
    fn parse_and_eval_examples() {
        // i^2 + 1 = 0
        let v = eval1("z^2 + 1", "z", C::i());
        assert!(v.norm() < 1e-15);

        let ast = parse::<f64>("2/pi * atan(x/y)", &["x", "y"]).unwrap();
        let v = eval_real(&ast, &[("x", 1.0), ("y", 1.0)]).unwrap();
        assert!((v - 0.5).abs() < 1e-15);

        assert!(matches!(
            parse::<f64>("x +* y", &["x", "y"]),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn syntax_error_offset() {
        let err = parse::<f64>("x +* y", &["x", "y"]).unwrap_err();
        match err {
            Error::Syntax { offset, .. } => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn eval_builtin_examples() {
        assert_eq!(eval1("exp(z)", "z", C::new(0.0, 0.0)), C::new(1.0, 0.0));

        let step = parse::<f64>("step(t)", &["t"]).unwrap();
        assert_eq!(eval_real(&step, &[("t", -2.0)]).unwrap(), -1.0);
        assert_eq!(eval_real(&step, &[("t", 3.0)]).unwrap(), 1.0);
        assert_eq!(eval_real(&step, &[("t", 0.0)]).unwrap(), 0.0);

        let inv = parse::<f64>("1/z", &["z"]).unwrap();
        assert!(matches!(
            eval_complex(&inv, &[("z", C::new(0.0, 0.0))]),
            Err(Error::EvalDomain(_))
        ));
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(
            parse::<f64>("w + 1", &["z"]),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(
            parse::<f64>("tan(z)", &["z"]),
            Err(Error::UnknownFunction(_))
        ));
    }

    #[test]
    fn precedence_and_associativity() {
        // ^ binds tighter than unary minus
        let v = eval1("-z^2", "z", C::new(2.0, 0.0));
        assert_eq!(v, C::new(-4.0, 0.0));
        // right-associative power
        let v = eval1("z^3^2", "z", C::new(2.0, 0.0));
        assert_eq!(v, C::new(512.0, 0.0));
        // negative exponent
        let v = eval1("z^-2", "z", C::new(2.0, 0.0));
        assert_eq!(v, C::new(0.25, 0.0));
        // left-associative subtraction
        let v = eval1("z - 1 - 2", "z", C::new(0.0, 0.0));
        assert_eq!(v, C::new(-3.0, 0.0));
    }

    #[test]
    fn principal_branches() {
        let v = eval1("sqrt(z)", "z", C::new(-1.0, 0.0));
        assert!((v - C::i()).norm() < 1e-15);
        let v = eval1("log(z)", "z", C::new(-1.0, 0.0));
        assert!((v - C::new(0.0, std::f64::consts::PI)).norm() < 1e-15);
    }

    #[test]
    fn print_parse_fixpoint_spot_checks() {
        for src in [
            "z^2 + 1",
            "-(x*y)",
            "2/pi*atan(x/y)",
            "x - (y - 1)",
            "sin(x)^2 + cos(x)^2",
            "x^-2",
            "1/(1+t^2)",
            "step(t)",
        ] {
            let vars = ["x", "y", "z", "t"];
            let ast = parse::<f64>(src, &vars).unwrap();
            let printed = ast.to_string();
            let reparsed = parse::<f64>(&printed, &vars).unwrap();
            assert_eq!(ast, reparsed, "print/parse fixpoint for `{src}` -> `{printed}`");
        }
    }

    #[test]
    fn derivative_matches_power_rule() {
        let ast = parse::<f64>("z^5", &["z"]).unwrap();
        let at = C::new(0.7, -0.3);
        let (value, deriv) = eval_derivative(&ast, "z", at, &[]).unwrap();
        assert!((value - at.powi(5)).norm() < 1e-15);
        assert!((deriv - at.powi(4) * 5.0).norm() < 1e-14);

        // derivative of a monomial at the origin is exact
        let (v0, d0) = eval_derivative(&ast, "z", C::new(0.0, 0.0), &[]).unwrap();
        assert_eq!(v0, C::new(0.0, 0.0));
        assert_eq!(d0, C::new(0.0, 0.0));
    }

    #[test]
    fn derivative_rejects_non_analytic() {
        let ast = parse::<f64>("abs(z)", &["z"]).unwrap();
        assert!(matches!(
            eval_derivative(&ast, "z", C::new(1.0, 0.0), &[]),
            Err(Error::NonAnalytic(_))
        ));
    }

    #[test]
    fn derivative_of_transcendentals() {
        // d/dz [exp(z) * sin(z)] = exp(z)(sin z + cos z)
        let ast = parse::<f64>("exp(z)*sin(z)", &["z"]).unwrap();
        let at = C::new(0.4, 0.9);
        let (_, deriv) = eval_derivative(&ast, "z", at, &[]).unwrap();
        let expected = at.exp() * (at.sin() + at.cos());
        assert!((deriv - expected).norm() < 1e-13 * expected.norm());
    }
}
