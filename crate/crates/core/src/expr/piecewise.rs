//! Piecewise-defined bounded real functions on the line, the boundary-data
//! building block for the Poisson extension.

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::ast::Expr;
use super::eval::eval_real;
use super::parser::parse;

/// Samples taken per piece when validating the declared bound.
const BOUND_SAMPLES: usize = 33;

/// A piecewise expression in the variable `t` with declared bound `M`.
///
/// `pieces[k]` applies on the open interval between `breakpoints[k-1]` and
/// `breakpoints[k]` (with infinite end intervals). At a breakpoint the value
/// is the average of the two adjacent pieces evaluated there; Poisson
/// integrals never see that value, so any convention on the null set works,
/// and the average matches the symmetric limit.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseSpec<T> {
    breakpoints: Vec<T>,
    pieces: Vec<Expr<T>>,
    bound: T,
}

impl<T: Real> PiecewiseSpec<T> {
    /// Validates monotone breakpoints, arity, and the declared bound by
    /// sampling each piece on its interval (tails are sampled out to very
    /// large arguments through a tangent map).
    pub fn new(breakpoints: Vec<T>, pieces: Vec<Expr<T>>, bound: T) -> Result<Self> {
        if pieces.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} breakpoints require {} pieces, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                pieces.len()
            )));
        }
        if !breakpoints.iter().all(|b| b.is_finite()) {
            return Err(Error::InvalidArgument("breakpoints must be finite".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if !(bound > T::zero()) || !bound.is_finite() {
            return Err(Error::InvalidArgument(
                "declared bound must be positive and finite".into(),
            ));
        }
        for piece in &pieces {
            let vars = piece.free_vars();
            if let Some(bad) = vars.iter().find(|v| v.as_str() != "t") {
                return Err(Error::UnknownVariable(bad.clone()));
            }
        }
        let spec = Self {
            breakpoints,
            pieces,
            bound,
        };
        spec.check_bound()?;
        Ok(spec)
    }

    /// Parse the compact alternating form `piece | break | piece | ... `,
    /// e.g. `"-1 | 0 | 1"` for a sign step at the origin. A single piece
    /// (no `|`) defines the function on the whole line.
    pub fn parse_alternating(source: &str, bound: T) -> Result<Self> {
        let fields: Vec<&str> = source.split('|').map(str::trim).collect();
        if fields.len() % 2 == 0 {
            return Err(Error::InvalidArgument(
                "piecewise spec must alternate piece | breakpoint | piece".into(),
            ));
        }
        let mut pieces = Vec::new();
        let mut breakpoints = Vec::new();
        for (k, field) in fields.iter().enumerate() {
            if k % 2 == 0 {
                pieces.push(parse(field, &["t"])?);
            } else {
                let b: f64 = field.parse().map_err(|_| {
                    Error::InvalidArgument(format!("invalid breakpoint `{field}`"))
                })?;
                breakpoints.push(T::of(b));
            }
        }
        Self::new(breakpoints, pieces, bound)
    }

    pub fn breakpoints(&self) -> &[T] {
        &self.breakpoints
    }

    pub fn bound(&self) -> T {
        self.bound
    }

    /// Evaluate at `t`; at a breakpoint, the average of the adjacent pieces.
    pub fn eval(&self, t: T) -> Result<T> {
        if let Some(k) = self.breakpoints.iter().position(|&b| b == t) {
            let left = self.eval_piece(k, t)?;
            let right = self.eval_piece(k + 1, t)?;
            return Ok((left + right) * T::of(0.5));
        }
        let idx = self.breakpoints.iter().filter(|&&b| b < t).count();
        self.eval_piece(idx, t)
    }

    fn eval_piece(&self, idx: usize, t: T) -> Result<T> {
        eval_real(&self.pieces[idx], &[("t", t)])
    }

    fn check_bound(&self) -> Result<()> {
        let slack = self.bound * T::of(1.0 + 1e-9);
        for (idx, _) in self.pieces.iter().enumerate() {
            let (lo, hi) = self.piece_interval(idx);
            for t in sample_interval(lo, hi) {
                let v = self.eval_piece(idx, t)?;
                if !v.is_finite() || v.abs() > slack {
                    return Err(Error::BoundExceeded {
                        value: v.to_f64().unwrap_or(f64::NAN),
                        bound: self.bound.to_f64().unwrap_or(f64::NAN),
                        at: t.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(())
    }

    fn piece_interval(&self, idx: usize) -> (Option<T>, Option<T>) {
        let lo = idx.checked_sub(1).map(|k| self.breakpoints[k]);
        let hi = self.breakpoints.get(idx).copied();
        (lo, hi)
    }
}

/// Sample points inside an interval; infinite tails are covered by mapping a
/// uniform angular grid through `tan`, which reaches magnitudes near 1e16.
fn sample_interval<T: Real>(lo: Option<T>, hi: Option<T>) -> Vec<T> {
    let n = BOUND_SAMPLES;
    let fractions = (0..n).map(|k| T::of((k as f64 + 0.5) / n as f64));
    match (lo, hi) {
        (Some(a), Some(b)) => fractions.map(|f| a + (b - a) * f).collect(),
        (Some(a), None) => fractions
            .map(|f| a + (f * T::FRAC_PI_2()).tan())
            .collect(),
        (None, Some(b)) => fractions
            .map(|f| b - (f * T::FRAC_PI_2()).tan())
            .collect(),
        (None, None) => fractions
            .map(|f| ((f - T::of(0.5)) * T::PI()).tan())
            .collect(),
    }
}
