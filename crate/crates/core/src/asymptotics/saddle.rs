//! Saddle-point data for the clasp sums at `t = e^{2 pi i/N}`.
//!
//! With `s_n = -sum_{j<=n} log(2 sin(pi j/N))` the clasp product splits into a
//! positive magnitude and a phase:
//!
//! ```text
//! log S_{n,i} = -2 s_{n+i} + 2 s_i + s_n,
//! a_n = exp(pi i n(n+1-N) / (2N)),
//! ```
//!
//! and `(N/pi) log S_{n,i}` is approximated by `f(pi n/N, pi i/N)` with
//! `f(x,y) = -2L(x+y) + 2L(y) + L(x)`, maximal at `(pi/2, pi/4)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::numeric::{ExtComplex, LobachevskyEvaluator, RationalAngle, UnitPoint};

/// `s_0, ..., s_{N-1}` for one order `N`.
#[derive(Clone, Debug)]
pub struct SaddleTable {
    order: u64,
    s: Vec<f64>,
}

impl SaddleTable {
    pub fn new(order: u64) -> Result<Self> {
        if order < 2 {
            return domain(format!("saddle table needs N >= 2, got {order}"));
        }
        let mut s = Vec::with_capacity(order as usize);
        // Neumaier-compensated running sum
        let (mut sum, mut carry) = (0.0f64, 0.0f64);
        s.push(0.0);
        for j in 1..order {
            let term = -(2.0 * (PI * j as f64 / order as f64).sin()).ln();
            let t = sum + term;
            if sum.abs() >= term.abs() {
                carry += (sum - t) + term;
            } else {
                carry += (term - t) + sum;
            }
            sum = t;
            s.push(sum + carry);
        }
        Ok(Self { order, s })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn s(&self, n: u64) -> f64 {
        self.s[n as usize]
    }

    pub fn values(&self) -> &[f64] {
        &self.s
    }

    /// `log S_{n,i}` for `0 <= n, i` with `n + i < N`.
    pub fn log_big_s(&self, n: u64, i: u64) -> Result<f64> {
        if n + i >= self.order {
            return domain(format!("S_{{{n},{i}}} needs n + i < N = {}", self.order));
        }
        Ok(-2.0 * self.s(n + i) + 2.0 * self.s(i) + self.s(n))
    }

    /// Location and value of the largest `log S_{n,i}` over the whole triangle.
    pub fn argmax(&self) -> (u64, u64, f64) {
        let mut best = (0, 0, f64::NEG_INFINITY);
        for n in 0..self.order {
            for i in 0..self.order - n {
                let v = -2.0 * self.s[(n + i) as usize] + 2.0 * self.s[i as usize] + self.s[n as usize];
                if v > best.2 {
                    best = (n, i, v);
                }
            }
        }
        best
    }
}

/// `s_0..s_{N-1}`.
pub fn s_sequence(order: u64) -> Result<SaddleTable> {
    SaddleTable::new(order)
}

/// `log S_{n,i}` at order `N`.
pub fn big_s(table: &SaddleTable, n: u64, i: u64) -> Result<f64> {
    table.log_big_s(n, i)
}

/// The phase `a_n = exp(pi i n(n+1-N) / (2N))`.
pub fn phase_a(order: u64, n: u64) -> Result<Complex64> {
    if n >= order {
        return domain(format!("phase index n = {n} outside [0, {order})"));
    }
    let (big_n, n) = (order as i64, n as i64);
    // pi i x / (2N) = 2 pi i (x/4) / N
    Ok(RationalAngle::new(1, order)?.pow_quarter(n * (n + 1 - big_n)))
}

/// `f(x, y) = -2L(x+y) + 2L(y) + L(x)` with absolute error at most `5 tol`.
pub fn saddle_f(x: f64, y: f64, tol: f64) -> Result<f64> {
    // grid points on the edge x + y = pi may overshoot by a rounding error
    let slack = 4.0 * f64::EPSILON * PI;
    if !(x >= 0.0 && y >= 0.0 && x + y <= PI + slack) {
        return domain(format!("saddle function needs 0 <= x, y, x+y <= pi; got ({x}, {y})"));
    }
    let l = LobachevskyEvaluator::new(tol)?;
    Ok(-2.0 * l.eval((x + y).min(PI))? + 2.0 * l.eval(y.min(PI))? + l.eval(x.min(PI))?)
}

/// `max_{0 < n < alpha N} |s_n - (N/pi) L(pi n/N) + (1/2) log n|`, a
/// boundedness probe for the small-`n` estimate of `s_n`.
pub fn sest_residual(order: u64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return domain(format!("alpha = {alpha} outside (0, 1)"));
    }
    let table = SaddleTable::new(order)?;
    let l = LobachevskyEvaluator::new(1e-14)?;
    let nf = order as f64;
    let mut worst = 0.0f64;
    for n in 1..order {
        if n as f64 >= alpha * nf {
            break;
        }
        let r = table.s(n) - nf / PI * l.eval(PI * n as f64 / nf)? + 0.5 * (n as f64).ln();
        worst = worst.max(r.abs());
    }
    Ok(worst)
}

/// `sum_n (2n+1) a_n^{4r-1} sum_i S_{n,i}`: the Whitehead-link sum rebuilt from
/// the magnitude/phase split. Equal to `J_{WL(r),N}` up to the unit factor
/// `-t^{-1/2}`.
pub fn wl_decomposed_sum(order: u64, r: i64) -> Result<ExtComplex> {
    let table = SaddleTable::new(order)?;
    let mut total = ExtComplex::ZERO;
    for n in 0..order {
        let row: ExtComplex =
            (0..order - n).map(|i| ExtComplex::from_log_polar(table.log_big_s(n, i).unwrap(), 0.0)).sum();
        let a = phase_a(order, n)?;
        let phase = a.powi((4 * r - 1) as i32);
        total += row * (phase * (2 * n + 1) as f64);
    }
    Ok(total)
}


#[cfg(test)]
mod against_product_form {
    use super::*;
    use crate::jones::jones_wl_at_root;
    use crate::numeric::{RootContext, UnitPoint};

    #[test]
    fn differs_by_the_unit_prefactor() {
        for n in 2..=40u64 {
            let ctx = RootContext::new(n).unwrap();
            for r in [-1, 0, 1, 2] {
                let j = jones_wl_at_root(&ctx, r).value.to_complex();
                let d = wl_decomposed_sum(n, r).unwrap().to_complex();
                assert!(((j.norm() - d.norm()) / j.norm()).abs() < 1e-9, "N={n} r={r}");
                assert!((j / d + ctx.pow_quarter(-2)).norm() < 1e-9, "N={n} r={r}");
            }
        }
    }
}
