//! The clasp-tangle eigenvalue
//!
//! ```text
//! xi_{N,n} = t^{(N^2-1)/2 + N(N-1)/2} sum_{i=0}^{N-1-n} t^{-N(i+n)}
//!            prod_{j=1}^{n} (1 - t^{N-i-j})(1 - t^{i+j}) / (1 - t^j)
//! ```
//!
//! and the log-derivative weights `b_{n,i}` needed where the Whitehead-double
//! formula is 0/0.

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::numeric::{ExtComplex, RationalAngle, RootContext, UnitPoint};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Quarter exponent of the prefactor `t^{(N^2-1)/2 + N(N-1)/2}`.
pub(crate) fn xi_prefactor_e4(color: i64) -> i64 {
    2 * (color * color - 1) + 2 * color * (color - 1)
}

/// Walks `P_{n,i} = prod_{j=1}^n (1 - t^{N-i-j})(1 - t^{i+j}) / (1 - t^j)` along
/// `i = 0..N-n` at the Kashaev point, updating the product with two factors
/// per step instead of rebuilding it.
pub(crate) struct ClaspRow<'a> {
    ctx: &'a RootContext,
    n: i64,
    i: i64,
    product: ExtComplex,
}

impl<'a> ClaspRow<'a> {
    /// `first` must be `P_{n,0} = prod_{j=1}^n (1 - t^{N-j})`.
    pub(crate) fn new(ctx: &'a RootContext, n: u64, first: ExtComplex) -> Self {
        Self { ctx, n: n as i64, i: 0, product: first }
    }
}

impl Iterator for ClaspRow<'_> {
    type Item = (i64, ExtComplex);

    fn next(&mut self) -> Option<Self::Item> {
        let big_n = self.ctx.order() as i64;
        let (n, i) = (self.n, self.i);
        if n + i >= big_n {
            return None;
        }
        let current = self.product;
        if n > 0 && n + i + 1 < big_n {
            let ctx = self.ctx;
            // indices stay inside (0, N), so no factor in the denominator vanishes
            let num = ctx.one_minus_pow(i + n + 1) * ctx.one_minus_pow(big_n - i - n - 1);
            let den = ctx.one_minus_pow(i + 1) * ctx.one_minus_pow(big_n - i - 1);
            self.product *= num / den;
        }
        self.i += 1;
        Some((i, current))
    }
}

/// `P_{n,0}` for every `n < N`, as prefix products of `1 - t^{N-j}`.
pub(crate) fn clasp_row_starts(ctx: &RootContext) -> Vec<ExtComplex> {
    let big_n = ctx.order() as i64;
    let mut out = Vec::with_capacity(big_n as usize);
    let mut p = ExtComplex::ONE;
    for n in 0..big_n {
        out.push(p);
        p *= ctx.one_minus_pow(big_n - n - 1);
    }
    out
}

/// `xi_{N,n}` at `t = e^{2 pi i/N}` (`N` is the context order), in `O(N)`.
pub fn xi_at_root(ctx: &RootContext, n: u64) -> Result<ExtComplex> {
    let big_n = ctx.order();
    if n >= big_n {
        return domain(format!("clasp index n = {n} outside [0, {big_n})"));
    }
    let first = clasp_row_starts(ctx)[n as usize];
    // t^{-N(i+n)} = 1 at the root
    let sum: ExtComplex = ClaspRow::new(ctx, n, first).map(|(_, p)| p).sum();
    Ok(sum * ctx.pow_quarter(xi_prefactor_e4(big_n as i64)))
}

/// `xi_{N,n}` at an arbitrary rational point `t`, by direct `O(N n)` summation.
pub fn xi_generic(t: &RationalAngle, color: u64, n: u64) -> Result<ExtComplex> {
    if n >= color {
        return domain(format!("clasp index n = {n} outside [0, {color})"));
    }
    let (big_n, n) = (color as i64, n as i64);
    for j in 1..=n {
        if t.quarter_power_is_one(4 * j) {
            return Err(Error::VanishingDenominator(format!("1 - t^{j} vanishes in the clasp product")));
        }
    }
    let mut sum = ExtComplex::ZERO;
    for i in 0..big_n - n {
        let mut prod = ExtComplex::from_complex(t.pow(-big_n * (i + n)));
        for j in 1..=n {
            prod *= (ONE - t.pow(big_n - i - j)) * (ONE - t.pow(i + j)) / (ONE - t.pow(j));
        }
        sum += prod;
    }
    Ok(sum * t.pow_quarter(xi_prefactor_e4(big_n)))
}

fn check_indices(ctx: &RootContext, n: u64, i: u64) -> Result<()> {
    if n + i >= ctx.order() {
        return domain(format!("indices n = {n}, i = {i} need n + i < N = {}", ctx.order()));
    }
    Ok(())
}

/// `a / (1 - t^{-a})`, the log-derivative `t d/dt log(1 - t^a)`.
fn log_derivative(ctx: &RootContext, a: i64) -> Complex64 {
    a as f64 / ctx.one_minus_pow(-a)
}

fn j_sum(ctx: &RootContext, n: i64, i: i64) -> Complex64 {
    let big_n = ctx.order() as i64;
    (1..=n).map(|j| log_derivative(ctx, big_n - i - j) + log_derivative(ctx, i + j) - log_derivative(ctx, j)).sum()
}

/// Weight `b_{n,i}` of `hat J_{2n+1}` in the at-root Whitehead-double sum:
/// the logarithmic `t d/dt` of `t^{rn(n+1)} t^{-N(i+n)} P_{n,i}`,
///
/// ```text
/// b_{n,i} = rn(n+1) - N(i+n)
///         + sum_{j=1}^n [ (N-i-j)/(1 - t^{-(N-i-j)}) + (i+j)/(1 - t^{-(i+j)}) - j/(1 - t^{-j}) ].
/// ```
pub fn b_coeff(ctx: &RootContext, n: u64, i: u64, r: i64) -> Result<Complex64> {
    check_indices(ctx, n, i)?;
    let (big_n, n, i) = (ctx.order() as i64, n as i64, i as i64);
    Ok(Complex64::new((r * n * (n + 1) - big_n * (i + n)) as f64, 0.0) + j_sum(ctx, n, i))
}

/// The same weight with the bracketed sum entering with a minus sign, as the
/// formula is usually quoted. That version does not reproduce the limit of the
/// generic formula; it is kept only for comparison.
pub fn b_coeff_as_printed(ctx: &RootContext, n: u64, i: u64, r: i64) -> Result<Complex64> {
    check_indices(ctx, n, i)?;
    let (big_n, n, i) = (ctx.order() as i64, n as i64, i as i64);
    Ok(Complex64::new((r * n * (n + 1) - big_n * (i + n)) as f64, 0.0) - j_sum(ctx, n, i))
}

/// Sliding-window evaluation of `b_{n,i}` along one row `n`.
pub(crate) struct BRow {
    /// `g[a] = a / (1 - t^{-a})` for `0 < a < N`
    g: std::sync::Arc<Vec<Complex64>>,
    big_n: i64,
    n: i64,
    i: i64,
    fixed: Complex64,
    ascending: Complex64,
    descending: Complex64,
}

pub(crate) fn log_derivative_table(ctx: &RootContext) -> std::sync::Arc<Vec<Complex64>> {
    let big_n = ctx.order() as i64;
    let mut g = vec![Complex64::new(0.0, 0.0); big_n.max(1) as usize];
    for (a, slot) in g.iter_mut().enumerate().skip(1) {
        *slot = log_derivative(ctx, a as i64);
    }
    std::sync::Arc::new(g)
}

impl BRow {
    pub(crate) fn new(g: std::sync::Arc<Vec<Complex64>>, big_n: u64, n: u64, r: i64) -> Self {
        let (big_n, n) = (big_n as i64, n as i64);
        let fixed = Complex64::new((r * n * (n + 1) - big_n * n) as f64, 0.0)
            - (1..=n).map(|j| g[j as usize]).sum::<Complex64>();
        let ascending = (1..=n).map(|j| g[j as usize]).sum();
        let descending = (1..=n).map(|j| g[(big_n - j) as usize]).sum();
        Self { g, big_n, n, i: 0, fixed, ascending, descending }
    }

    /// `b_{n,i}` for the current `i`, then moves to `i + 1`.
    pub(crate) fn advance(&mut self) -> Complex64 {
        let (big_n, n, i) = (self.big_n, self.n, self.i);
        let value = self.fixed - Complex64::new((big_n * i) as f64, 0.0) + self.ascending + self.descending;
        if n > 0 && n + i + 1 < big_n {
            let g = &self.g;
            self.ascending += g[(i + n + 1) as usize] - g[(i + 1) as usize];
            self.descending += g[(big_n - i - n - 1) as usize] - g[(big_n - i - 1) as usize];
        }
        self.i += 1;
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn xi_small_cases() {
        let v = xi_at_root(&RootContext::new(1).unwrap(), 0).unwrap();
        assert!((v.to_complex() - 1.0).norm() < 1e-15);

        // t = -1, t^{1/2} = i: prefactor t^{5/2} = i, two unit terms
        let v = xi_at_root(&RootContext::new(2).unwrap(), 0).unwrap();
        assert!((v.to_complex() - Complex64::new(0.0, 2.0)).norm() < 1e-14);
        let g = xi_generic(&RationalAngle::new(1, 2).unwrap(), 2, 0).unwrap();
        assert!((g.to_complex() - Complex64::new(0.0, 2.0)).norm() < 1e-14);
    }

    #[test]
    fn xi_top_index_uses_cyclotomic_product() {
        // prod_{j<N} (1 - zeta^j) = N
        for big_n in 2..=50u64 {
            let prod: Complex64 =
                (1..big_n).map(|j| 1.0 - Complex64::from_polar(1.0, 2.0 * PI * j as f64 / big_n as f64)).product();
            assert!((prod - big_n as f64).norm() < 1e-9 * big_n as f64);

            let ctx = RootContext::new(big_n).unwrap();
            let v = xi_at_root(&ctx, big_n - 1).unwrap().to_complex();
            let k = big_n as i64;
            let expect = ctx.pow_quarter(2 * (k * k - 1) - 2 * k * (k - 1)) * big_n as f64;
            assert!((v - expect).norm() < 1e-10 * big_n as f64, "N = {big_n}");
        }
    }

    #[test]
    fn xi_root_and_generic_agree() {
        for big_n in [3u64, 7, 12, 20] {
            let ctx = RootContext::new(big_n).unwrap();
            let t = RationalAngle::new(1, big_n).unwrap();
            for n in 0..big_n {
                let a = xi_at_root(&ctx, n).unwrap().to_complex();
                let b = xi_generic(&t, big_n, n).unwrap().to_complex();
                assert!((a - b).norm() <= 1e-10 * b.norm().max(1.0), "N={big_n} n={n}");
            }
        }
        assert!(xi_at_root(&RootContext::new(5).unwrap(), 5).is_err());
    }

    #[test]
    fn b_examples() {
        let ctx = RootContext::new(9).unwrap();
        for i in 0..9 {
            let b = b_coeff(&ctx, 0, i, 3).unwrap();
            assert!((b - Complex64::new(-9.0 * i as f64, 0.0)).norm() < 1e-12);
        }
        for n in 0..9u64 {
            for i in 0..9 - n {
                let d = b_coeff(&ctx, n, i, 1).unwrap() - b_coeff(&ctx, n, i, 0).unwrap();
                assert!((d - Complex64::new((n * (n + 1)) as f64, 0.0)).norm() < 1e-10);
            }
        }
        assert!(b_coeff(&ctx, 4, 5, 0).is_err());
    }

    #[test]
    fn b_at_order_three() {
        let ctx = RootContext::new(3).unwrap();
        let s3 = 3f64.sqrt();
        // as usually printed: -3 - 2/(1 - e^{2 pi i/3}) = -4 - i/sqrt 3
        let printed = b_coeff_as_printed(&ctx, 1, 0, 0).unwrap();
        assert!((printed - Complex64::new(-4.0, -1.0 / s3)).norm() < 1e-12);
        // log-derivative sign: -3 + 2/(1 - e^{2 pi i/3}) = -2 + i/sqrt 3
        let b = b_coeff(&ctx, 1, 0, 0).unwrap();
        assert!((b - Complex64::new(-2.0, 1.0 / s3)).norm() < 1e-12);
    }

    #[test]
    fn sliding_b_matches_direct() {
        for big_n in [2u64, 5, 17, 40] {
            let ctx = RootContext::new(big_n).unwrap();
            let g = log_derivative_table(&ctx);
            for n in 0..big_n {
                let mut row = BRow::new(g.clone(), big_n, n, -2);
                for i in 0..big_n - n {
                    let slid = row.advance();
                    let direct = b_coeff(&ctx, n, i, -2).unwrap();
                    assert!((slid - direct).norm() <= 1e-9 * direct.norm().max(1.0));
                }
            }
        }
    }

    #[test]
    fn clasp_row_matches_direct_products() {
        let big_n = 23u64;
        let ctx = RootContext::new(big_n).unwrap();
        let starts = clasp_row_starts(&ctx);
        let k = big_n as i64;
        for n in 0..big_n {
            for (i, p) in ClaspRow::new(&ctx, n, starts[n as usize]) {
                let direct: Complex64 = (1..=n as i64)
                    .map(|j| ctx.one_minus_pow(k - i - j) * ctx.one_minus_pow(i + j) / ctx.one_minus_pow(j))
                    .product();
                assert!((p.to_complex() - direct).norm() <= 1e-11 * direct.norm().max(1.0));
            }
        }
    }
}
