//! Twisted Whitehead links `WL(r)` and Whitehead doubles `WD(T(p,q), r)`.
//!
//! Gluing the twist, clasp, belt and doubled-companion tangles gives
//!
//! ```text
//! J_{WL(r),N}   = sum_n [2n+1]/[N] t^{rn(n+1)} xi_{N,n} [N(2n+1)]/[2n+1]
//! J_{WD(K,r),N} = sum_n [2n+1]/[N] t^{rn(n+1)} xi_{N,n} J_{K,2n+1}
//! ```
//!
//! with `[m] = t^{m/2} - t^{-m/2}`. At `t = e^{2 pi i/N}` the normalization `[N]`
//! vanishes. For the link, `[N(2n+1)]/[N] -> 2n+1`; for the double, the whole
//! numerator vanishes as well and the value is taken by L'Hospital's rule.

use num_complex::Complex64;

use super::clasp::{clasp_row_starts, log_derivative_table, xi_generic, xi_prefactor_e4, BRow, ClaspRow};
use super::knot::{JonesValue, KnotSpec, TorusKnot};
use super::torus::{hat_and_tderiv, hat_jones_torus, kashaev_torus};
use crate::error::{Error, Result};
use crate::numeric::{ExtComplex, RationalAngle, RootContext, UnitPoint};

fn generic_point(m: u64, j: i64, color: u64) -> Result<RationalAngle> {
    if color == 0 {
        return Err(Error::Domain("color N must be at least 1".into()));
    }
    let t = RationalAngle::new(j, m)?;
    if t.quarter_power_is_one(4 * color as i64) {
        return Err(Error::VanishingDenominator(format!(
            "t^(N/2) - t^(-N/2) vanishes for N = {color} at t = e^(2 pi i {j}/{m}); use the at-root evaluator"
        )));
    }
    Ok(t)
}

fn twist_e4(r: i64, n: i64) -> i64 {
    4 * r * n * (n + 1)
}

/// `J_{WL(r),N}` at `t = e^{2 pi i/N}`:
/// `-t^{-1/2} sum_n (2n+1) t^{rn(n+1)} sum_i prod_j (1-t^{-i-j})(1-t^{i+j})/(1-t^j)`,
/// in `O(N^2)`.
pub fn jones_wl_at_root(ctx: &RootContext, r: i64) -> JonesValue {
    let big_n = ctx.order();
    let starts = clasp_row_starts(ctx);
    let mut total = ExtComplex::ZERO;
    for n in 0..big_n {
        let row: ExtComplex = ClaspRow::new(ctx, n, starts[n as usize]).map(|(_, p)| p).sum();
        let ni = n as i64;
        total += row * (ctx.pow_quarter(twist_e4(r, ni)) * (2 * ni + 1) as f64);
    }
    let value = total * ctx.pow_quarter(xi_prefactor_e4(big_n as i64));
    JonesValue::new(big_n, value)
}

/// `J_{WL(r),N}` at `t = e^{2 pi i j/m}` from the tangle formula. The normalization
/// and belt factors are combined into `[N(2n+1)]/[N]`, which is what their
/// product reduces to even where `[2n+1]` vanishes.
pub fn jones_wl_generic(m: u64, j: i64, r: i64, color: u64) -> Result<ExtComplex> {
    let t = generic_point(m, j, color)?;
    let k = color as i64;
    let normalization = t.pow_quarter(2 * k) - t.pow_quarter(-2 * k);
    let mut total = ExtComplex::ZERO;
    for n in 0..color {
        let ni = n as i64;
        let belt = t.pow_quarter(2 * k * (2 * ni + 1)) - t.pow_quarter(-2 * k * (2 * ni + 1));
        let xi = xi_generic(&t, color, n)?;
        total += xi * (t.pow_quarter(twist_e4(r, ni)) * belt / normalization);
    }
    Ok(total)
}

/// `J_{WD(T(p,q),r),N}` at `t = e^{2 pi i/N}`.
///
/// Differentiating numerator and denominator in `t d/dt` gives
///
/// ```text
/// J = t^{c}/(-N) sum_n t^{rn(n+1)} sum_i P_{n,i} (b_{n,i} hat J_{2n+1} + t d/dt hat J_{2n+1})
/// ```
///
/// where `t^c` is the clasp prefactor, `P_{n,i}` the clasp product and `b_{n,i}`
/// the weight of [`super::b_coeff`]. The companion values are colored by `2n+1`
/// but evaluated at the same `N`-th root.
pub fn jones_wd_at_root(ctx: &RootContext, companion: TorusKnot, r: i64) -> JonesValue {
    let big_n = ctx.order();
    let starts = clasp_row_starts(ctx);
    let g = log_derivative_table(ctx);
    let mut total = ExtComplex::ZERO;
    for n in 0..big_n {
        let (hat, deriv) = hat_and_tderiv(companion, 2 * n + 1, ctx);
        let mut weights = BRow::new(g.clone(), big_n, n, r);
        let mut row = ExtComplex::ZERO;
        for (_, p) in ClaspRow::new(ctx, n, starts[n as usize]) {
            let b = weights.advance();
            row += p * (b * hat + deriv);
        }
        total += row * ctx.pow_quarter(twist_e4(r, n as i64));
    }
    // t d/dt [N] = (N/2)(t^{N/2} + t^{-N/2}) = -N at the root
    let k = big_n as i64;
    let dnorm = (ctx.pow_quarter(2 * k) + ctx.pow_quarter(-2 * k)) * (0.5 * big_n as f64);
    let value = total * (ctx.pow_quarter(xi_prefactor_e4(k)) / dnorm);
    JonesValue::new(big_n, value)
}

/// `J_{WD(T(p,q),r),N}` at `t = e^{2 pi i j/m}` from
/// `sum_n t^{rn(n+1)} xi_{N,n} hat J_{2n+1} / [N]`.
pub fn jones_wd_generic(m: u64, j: i64, companion: TorusKnot, r: i64, color: u64) -> Result<ExtComplex> {
    let t = generic_point(m, j, color)?;
    let k = color as i64;
    let normalization = t.pow_quarter(2 * k) - t.pow_quarter(-2 * k);
    let mut total = ExtComplex::ZERO;
    for n in 0..color {
        let hat = hat_jones_torus(companion, 2 * n + 1, &t)?;
        let xi = xi_generic(&t, color, n)?;
        total += xi * hat * (t.pow_quarter(twist_e4(r, n as i64)) / normalization);
    }
    Ok(total)
}

/// The Kashaev invariant of any supported knot or link.
pub fn kashaev_value(spec: KnotSpec, order: u64) -> Result<JonesValue> {
    let ctx = RootContext::new(order)?;
    Ok(match spec {
        KnotSpec::Torus(k) => kashaev_torus(k, &ctx),
        KnotSpec::WhiteheadLink { r } => jones_wl_at_root(&ctx, r),
        KnotSpec::WhiteheadDouble { companion, r } => jones_wd_at_root(&ctx, companion, r),
    })
}

/// Richardson-extrapolated angular limit of `f(e^{2 pi i (1+eps)/N})` as `eps -> 0`,
/// with `eps = 1/scale` and `2/scale`.
pub fn angular_limit<F>(order: u64, scale: u64, f: F) -> Result<Complex64>
where
    F: Fn(u64, i64) -> Result<ExtComplex>,
{
    let m = order * scale;
    let near = f(m, scale as i64 + 1)?.to_complex();
    let far = f(m, scale as i64 + 2)?.to_complex();
    Ok(near * 2.0 - far)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jones::clasp::b_coeff_as_printed;

    fn trefoil() -> TorusKnot {
        TorusKnot::new(2, 3).unwrap()
    }

    #[test]
    fn wl_small_orders() {
        for r in [-2, 0, 3] {
            let v = jones_wl_at_root(&RootContext::new(1).unwrap(), r);
            assert!((v.value.to_complex() - 1.0).norm() < 1e-15);
        }
        let v = jones_wl_at_root(&RootContext::new(2).unwrap(), 0);
        assert!((v.value.to_complex() - Complex64::new(0.0, 8.0)).norm() < 1e-13);
        assert!((v.log_abs - 8f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn wl_generic_small() {
        let v = jones_wl_generic(7, 2, 1, 1).unwrap().to_complex();
        assert!((v - 1.0).norm() < 1e-13);
        assert!(matches!(jones_wl_generic(6, 1, 0, 6), Err(Error::VanishingDenominator(_))));
    }

    #[test]
    fn wd_small_orders() {
        for (p, q) in [(2, 3), (3, 5)] {
            for r in [-1, 0, 2] {
                let v = jones_wd_at_root(&RootContext::new(1).unwrap(), TorusKnot::new(p, q).unwrap(), r);
                assert!((v.value.to_complex() - 1.0).norm() < 1e-14);
                let g = jones_wd_generic(5, 1, TorusKnot::new(p, q).unwrap(), r, 1).unwrap();
                assert!((g.to_complex() - 1.0).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn wd_twist_sensitivity() {
        let a = jones_wd_generic(29, 3, trefoil(), 0, 12).unwrap().to_complex();
        let b = jones_wd_generic(29, 3, trefoil(), 1, 12).unwrap().to_complex();
        assert!((a - b).norm() > 1e-6 * a.norm());
    }

    #[test]
    fn at_root_matches_angular_limit() {
        for big_n in [2u64, 3, 5, 8, 13] {
            let ctx = RootContext::new(big_n).unwrap();
            for r in [0, 1] {
                let wl = jones_wl_at_root(&ctx, r).value.to_complex();
                let lim = angular_limit(big_n, 1_000_000, |m, j| jones_wl_generic(m, j, r, big_n)).unwrap();
                assert!((wl - lim).norm() <= 1e-6 * wl.norm(), "WL N={big_n}");

                let wd = jones_wd_at_root(&ctx, trefoil(), r).value.to_complex();
                let lim = angular_limit(big_n, 1_000_000, |m, j| jones_wd_generic(m, j, trefoil(), r, big_n)).unwrap();
                assert!((wd - lim).norm() <= 1e-6 * wd.norm(), "WD N={big_n}: {wd} vs {lim}");
            }
        }
    }

    #[test]
    fn printed_weight_sign_misses_the_limit() {
        let big_n = 5u64;
        let ctx = RootContext::new(big_n).unwrap();
        let starts = clasp_row_starts(&ctx);
        let mut total = Complex64::new(0.0, 0.0);
        for n in 0..big_n {
            let (hat, deriv) = hat_and_tderiv(trefoil(), 2 * n + 1, &ctx);
            for (i, p) in ClaspRow::new(&ctx, n, starts[n as usize]) {
                let b = b_coeff_as_printed(&ctx, n, i as u64, 0).unwrap();
                total += p.to_complex() * (b * hat + deriv);
            }
        }
        let printed = total * ctx.pow_quarter(xi_prefactor_e4(5)) / -(big_n as f64);
        let lim = angular_limit(big_n, 1_000_000, |m, j| jones_wd_generic(m, j, trefoil(), 0, big_n)).unwrap();
        assert!((printed - lim).norm() > 0.1 * lim.norm());
        let ours = jones_wd_at_root(&ctx, trefoil(), 0).value.to_complex();
        assert!((ours - lim).norm() < 1e-6 * lim.norm());
    }

    #[test]
    fn conjugate_root_gives_conjugate_values() {
        for big_n in [4u64, 9, 16, 31] {
            let a = RootContext::new(big_n).unwrap();
            let b = RootContext::conjugate(big_n).unwrap();
            let pairs = [
                (jones_wl_at_root(&a, 0).value, jones_wl_at_root(&b, 0).value),
                (jones_wl_at_root(&a, -1).value, jones_wl_at_root(&b, -1).value),
                (jones_wd_at_root(&a, trefoil(), 1).value, jones_wd_at_root(&b, trefoil(), 1).value),
                (kashaev_torus(trefoil(), &a).value, kashaev_torus(trefoil(), &b).value),
            ];
            for (x, y) in pairs {
                let (x, y) = (x.to_complex(), y.to_complex());
                assert!((x.conj() - y).norm() <= 1e-10 * x.norm(), "N={big_n}");
            }
        }
    }

    #[test]
    fn kashaev_dispatch() {
        let v = kashaev_value(KnotSpec::WhiteheadLink { r: 0 }, 2).unwrap();
        assert!((v.log_abs - 8f64.ln()).abs() < 1e-12);
        assert!(kashaev_value(KnotSpec::WhiteheadLink { r: 0 }, 0).is_err());
    }
}
