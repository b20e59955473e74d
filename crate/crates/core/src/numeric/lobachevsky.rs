//! The Lobachevsky function `L(x) = -int_0^x log|2 sin u| du`.
//!
//! On `[0, pi/2]` the integrand splits as `log(2u) + log(sin u / u)`, and
//! `log(sin u / u) = -sum_{k>=1} zeta(2k) u^{2k} / (k pi^{2k})`, which converges
//! geometrically (ratio at most 1/4) there. Integrating termwise gives
//!
//! ```text
//! L(x) = x - x log(2x) + sum_{k>=1} zeta(2k) x^{2k+1} / (k (2k+1) pi^{2k})
//! ```
//!
//! and `(pi/2, pi]` is folded back with `L(x) = -L(pi - x)`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use crate::error::{domain, Result};

/// Below this the rounding of the closed-form part dominates any truncation bound.
pub const MIN_TOLERANCE: f64 = 1e-15;

const MAX_TERMS: usize = 40;

/// `zeta(2k) / (k (2k+1) pi^{2k})` for `k = 1..=MAX_TERMS`.
fn coefficients() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        (1..=MAX_TERMS)
            .map(|k| {
                let zeta_over_pi = match k {
                    1 => 1.0 / 6.0,
                    2 => 1.0 / 90.0,
                    3 => 1.0 / 945.0,
                    _ => {
                        // tail beyond 1000 is below 1000^{1-2k} / (2k-1) < 1e-21
                        let z: f64 = (1..=1000u32).rev().map(|n| (n as f64).powi(-2 * k as i32)).sum();
                        z / PI.powi(2 * k as i32)
                    }
                };
                zeta_over_pi / (k * (2 * k + 1)) as f64
            })
            .collect()
    })
}

/// Number of series terms whose tail on `[0, pi/2]` stays below `tol / 2`.
fn terms_for(tol: f64) -> usize {
    let zeta2 = PI * PI / 6.0;
    (1..=MAX_TERMS)
        .find(|&k| {
            let k = k as f64;
            let tail = zeta2 * FRAC_PI_2 / ((k + 1.0) * (2.0 * k + 3.0)) * 0.25f64.powf(k + 1.0) * (4.0 / 3.0);
            tail <= 0.5 * tol
        })
        .unwrap_or(MAX_TERMS)
}

/// Evaluator with a fixed absolute error bound.
#[derive(Clone, Copy, Debug)]
pub struct LobachevskyEvaluator {
    tolerance: f64,
    terms: usize,
}

impl LobachevskyEvaluator {
    pub fn new(tolerance: f64) -> Result<Self> {
        if tolerance.is_nan() || tolerance < MIN_TOLERANCE {
            return domain(format!("Lobachevsky tolerance {tolerance} below attainable {MIN_TOLERANCE}"));
        }
        Ok(Self { tolerance, terms: terms_for(tolerance) })
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(0.0..=PI).contains(&x) {
            return domain(format!("Lobachevsky argument {x} outside [0, pi]"));
        }
        Ok(if x > FRAC_PI_2 { -self.eval_half(PI - x) } else { self.eval_half(x) })
    }

    fn eval_half(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        let x2 = x * x;
        let series = coefficients()[..self.terms].iter().rev().fold(0.0, |acc, &c| acc * x2 + c);
        x - x * (2.0 * x).ln() + x * x2 * series
    }
}

/// `L(x)` for `x` in `[0, pi]` with absolute error at most `tol`.
pub fn lobachevsky(x: f64, tol: f64) -> Result<f64> {
    LobachevskyEvaluator::new(tol)?.eval(x)
}
