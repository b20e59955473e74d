//! Morton's formula for the colored Jones polynomial of torus knots,
//!
//! ```text
//! J_{T(p,q),n} = t^{-pq(n^2-1)/4} / (t^{n/2} - t^{-n/2})
//!                * sum_{k=-(n-1)/2}^{(n-1)/2} t^{pk(qk+1)} (t^{qk+1/2} - t^{-qk-1/2}),
//! ```
//!
//! where `k` steps by one and is a half-integer when `n` is even. Writing
//! `k = kappa / 2` every exponent becomes a multiple of 1/4, so the numerator
//! `hat J = (t^{n/2} - t^{-n/2}) J` is a signed sum of `2n` quarter-power monomials.

use num_complex::Complex64;

use super::knot::{JonesValue, TorusKnot};
use crate::error::{domain, Error, Result};
use crate::numeric::{ExtComplex, RootContext, UnitPoint};

/// Monomials `(4 * exponent, coefficient)` of `hat J_{T(p,q),n}`.
pub fn morton_terms(knot: TorusKnot, n: u64) -> impl Iterator<Item = (i64, i64)> {
    let (p, q) = (knot.p() as i64, knot.q() as i64);
    let n = n as i64;
    let base = -p * q * (n * n - 1);
    (0..n).flat_map(move |idx| {
        let kappa = 2 * idx - (n - 1);
        let e0 = base + p * kappa * (q * kappa + 2);
        let shift = 2 * (q * kappa + 1);
        [(e0 + shift, 1), (e0 - shift, -1)]
    })
}

fn check_color(n: u64) -> Result<()> {
    if n == 0 {
        return domain("color must be at least 1");
    }
    Ok(())
}

/// `hat J` and `t d/dt hat J` in one pass.
pub(crate) fn hat_and_tderiv<P: UnitPoint>(knot: TorusKnot, n: u64, t: &P) -> (Complex64, Complex64) {
    let mut hat = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    for (e4, c) in morton_terms(knot, n) {
        let z = t.pow_quarter(e4) * c as f64;
        hat += z;
        deriv += z * (e4 as f64 * 0.25);
    }
    (hat, deriv)
}

/// `hat J_{T(p,q),n}(t) = (t^{n/2} - t^{-n/2}) J_{T(p,q),n}(t)`, summed without
/// any division so it stays finite where `J` itself is 0/0.
pub fn hat_jones_torus<P: UnitPoint>(knot: TorusKnot, n: u64, t: &P) -> Result<ExtComplex> {
    check_color(n)?;
    let s: Complex64 = morton_terms(knot, n).map(|(e4, c)| t.pow_quarter(e4) * c as f64).sum();
    Ok(ExtComplex::from_complex(s))
}

/// `t d/dt hat J_{T(p,q),n}` at `t`: every monomial `t^e` contributes `e t^e`.
pub fn hat_jones_torus_tderiv<P: UnitPoint>(knot: TorusKnot, n: u64, t: &P) -> Result<ExtComplex> {
    check_color(n)?;
    Ok(ExtComplex::from_complex(hat_and_tderiv(knot, n, t).1))
}

/// `J_{T(p,q),n}(t)` by direct summation.
///
/// Fails with [`Error::VanishingDenominator`] when `t^n = 1`; use
/// [`jones_torus_limit`] or the derivative path there.
pub fn jones_torus<P: UnitPoint>(knot: TorusKnot, n: u64, t: &P) -> Result<ExtComplex> {
    check_color(n)?;
    if t.quarter_power_is_one(4 * n as i64) {
        return Err(Error::VanishingDenominator(format!(
            "t^{{{n}/2}} - t^{{-{n}/2}} vanishes at t = e^(2 pi i {}/{})",
            t.angle().num(),
            t.angle().den()
        )));
    }
    let den = t.pow_quarter(2 * n as i64) - t.pow_quarter(-2 * (n as i64));
    let hat = hat_jones_torus(knot, n, t)?;
    Ok(hat * (Complex64::new(1.0, 0.0) / den))
}

/// Laurent polynomial in `t^{1/4}`: `sum_k coeffs[k] t^{(lowest + k)/4}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarterLaurent {
    pub lowest: i64,
    pub coeffs: Vec<i64>,
}

impl QuarterLaurent {
    pub fn eval<P: UnitPoint>(&self, t: &P) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| t.pow_quarter(self.lowest + k as i64) * c as f64)
            .sum()
    }
}

/// `J_{T(p,q),n}` as an explicit Laurent polynomial, obtained by exact
/// division of Morton's numerator by `t^{n/2} - t^{-n/2}`.
pub fn morton_quotient(knot: TorusKnot, n: u64) -> Result<QuarterLaurent> {
    check_color(n)?;
    let terms: Vec<(i64, i64)> = morton_terms(knot, n).collect();
    let lo = terms.iter().map(|t| t.0).min().unwrap();
    let hi = terms.iter().map(|t| t.0).max().unwrap();
    let mut rem = vec![0i64; (hi - lo + 1) as usize];
    for (e4, c) in terms {
        rem[(e4 - lo) as usize] += c;
    }
    // numerator = t^{lo/4} A(x), denominator = x^{-2n} (x^{4n} - 1) with x = t^{1/4}
    let m = 4 * n as usize;
    let top = rem.len() - 1;
    let mut quotient = vec![0i64; top.saturating_sub(m) + 1];
    for k in (m..=top).rev() {
        let c = rem[k];
        if c != 0 {
            quotient[k - m] = c;
            rem[k - m] += c;
            rem[k] = 0;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Err(Error::Domain(format!(
            "Morton numerator of {knot} at color {n} is not divisible by t^(n/2) - t^(-n/2)"
        )));
    }
    while quotient.last() == Some(&0) && quotient.len() > 1 {
        quotient.pop();
    }
    Ok(QuarterLaurent { lowest: lo + 2 * n as i64, coeffs: quotient })
}

/// `J_{T(p,q),n}(t)` valid at every `t`, including the roots where the closed
/// form is 0/0, via [`morton_quotient`].
pub fn jones_torus_limit<P: UnitPoint>(knot: TorusKnot, n: u64, t: &P) -> Result<ExtComplex> {
    Ok(ExtComplex::from_complex(morton_quotient(knot, n)?.eval(t)))
}

/// The Kashaev invariant `J_{T(p,q),N}(e^{2 pi i/N})`.
///
/// Both `hat J` and `t^{N/2} - t^{-N/2}` vanish there, so
/// `J = (t d/dt hat J) / ((N/2)(t^{N/2} + t^{-N/2})) = -(t d/dt hat J) / N`.
pub fn kashaev_torus(knot: TorusKnot, ctx: &RootContext) -> JonesValue {
    let n = ctx.order();
    let (_, deriv) = hat_and_tderiv(knot, n, ctx);
    let den = (ctx.pow_quarter(2 * n as i64) + ctx.pow_quarter(-2 * n as i64)) * (n as f64 * 0.5);
    JonesValue::new(n, ExtComplex::from_complex(deriv / den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::RationalAngle;
    use std::f64::consts::TAU;

    fn trefoil() -> TorusKnot {
        TorusKnot::new(2, 3).unwrap()
    }

    fn at(theta: f64, x: f64) -> Complex64 {
        Complex64::from_polar(1.0, TAU * theta * x)
    }

    /// Morton's sum with floating-point exponents, no quarter bookkeeping.
    fn hat_brute(p: f64, q: f64, n: u32, theta: f64) -> Complex64 {
        let nf = n as f64;
        let pre = at(theta, -p * q * (nf * nf - 1.0) / 4.0);
        let mut s = Complex64::new(0.0, 0.0);
        let mut k = -(nf - 1.0) / 2.0;
        while k <= (nf - 1.0) / 2.0 + 1e-9 {
            s += at(theta, p * k * (q * k + 1.0)) * (at(theta, q * k + 0.5) - at(theta, -q * k - 0.5));
            k += 1.0;
        }
        pre * s
    }

    #[test]
    fn trivial_color_is_one() {
        for (p, q) in [(2, 3), (3, 5), (2, 7)] {
            let k = TorusKnot::new(p, q).unwrap();
            for (num, den) in [(1, 7), (3, 11), (1, 1000)] {
                let t = RationalAngle::new(num, den).unwrap();
                let v = jones_torus(k, 1, &t).unwrap().to_complex();
                assert!((v - 1.0).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn trefoil_color_two_at_minus_one() {
        let t = RootContext::new(2).unwrap();
        assert!(matches!(jones_torus(trefoil(), 2, &t), Err(Error::VanishingDenominator(_))));
        // hand division of Morton's numerator: J_2 = t^-1 + t^-3 - t^-4
        let q = morton_quotient(trefoil(), 2).unwrap();
        assert_eq!(q.lowest, -16);
        let mut expect = vec![0i64; 13];
        expect[0] = -1;
        expect[4] = 1;
        expect[12] = 1;
        assert_eq!(q.coeffs, expect);
        let v = jones_torus_limit(trefoil(), 2, &t).unwrap().to_complex();
        assert!((v - Complex64::new(-3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn torus_symmetry() {
        let t = RationalAngle::new(1, 7).unwrap();
        let a = jones_torus(trefoil(), 5, &t).unwrap().to_complex();
        let b = jones_torus(trefoil().swapped(), 5, &t).unwrap().to_complex();
        assert!((a - b).norm() <= 1e-12 * a.norm());
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (2, 11), (5, 7)] {
            let k = TorusKnot::new(p, q).unwrap();
            for n in 1..=30u64 {
                let t = RationalAngle::new(3, 37).unwrap();
                let a = jones_torus(k, n, &t).unwrap().to_complex();
                let b = jones_torus(k.swapped(), n, &t).unwrap().to_complex();
                assert!((a - b).norm() <= 1e-10 * a.norm().max(1.0), "{k} n={n}");
            }
        }
    }

    #[test]
    fn hat_examples() {
        let t1 = RationalAngle::new(0, 1).unwrap();
        assert!(hat_jones_torus(trefoil(), 1, &t1).unwrap().is_zero());

        let ctx = RootContext::new(25).unwrap();
        let h = hat_jones_torus(trefoil(), 25, &ctx).unwrap().to_complex();
        // every summand is a unit monomial
        assert!(h.norm() <= 1e-9);

        let t = RationalAngle::new(1, 5).unwrap();
        let h = hat_jones_torus(trefoil(), 3, &t).unwrap().to_complex();
        let oracle = hat_brute(2.0, 3.0, 3, 0.2);
        assert!(h.norm() > 0.1);
        assert!((h - oracle).norm() <= 1e-12 * oracle.norm());
    }

    #[test]
    fn tderiv_examples() {
        let t1 = RationalAngle::new(0, 1).unwrap();
        for (p, q) in [(2, 3), (3, 4), (5, 7)] {
            let k = TorusKnot::new(p, q).unwrap();
            let d = hat_jones_torus_tderiv(k, 1, &t1).unwrap().to_complex();
            assert!((d - 1.0).norm() < 1e-15);
            // J_1 = 1, so the derivative is that of t^{1/2} - t^{-1/2} everywhere
            let t = RationalAngle::new(2, 9).unwrap();
            let d = hat_jones_torus_tderiv(k, 1, &t).unwrap().to_complex();
            let expect = (t.pow_quarter(2) + t.pow_quarter(-2)) * 0.5;
            assert!((d - expect).norm() < 1e-14);
        }

        let ctx = RootContext::new(20).unwrap();
        let d = hat_jones_torus_tderiv(trefoil(), 20, &ctx).unwrap().to_complex();
        let j = jones_torus_limit(trefoil(), 20, &ctx).unwrap().to_complex();
        assert!((d + j * 20.0).norm() <= 1e-9 * d.norm());
    }

    #[test]
    fn tderiv_matches_finite_difference() {
        // d/dtheta hat(e^{2 pi i theta}) = 2 pi i (t d/dt hat)
        let k = TorusKnot::new(3, 4).unwrap();
        let (num, den) = (5i64, 17u64);
        let theta = num as f64 / den as f64;
        let h = 1e-6;
        let fd = (hat_brute(3.0, 4.0, 6, theta + h) - hat_brute(3.0, 4.0, 6, theta - h)) / (2.0 * h);
        let d = hat_jones_torus_tderiv(k, 6, &RationalAngle::new(num, den).unwrap()).unwrap().to_complex();
        let expect = fd / Complex64::new(0.0, TAU);
        assert!((d - expect).norm() <= 1e-6 * d.norm());
    }

    #[test]
    fn limit_agrees_with_direct_form_off_the_root() {
        let k = TorusKnot::new(3, 5).unwrap();
        let t = RationalAngle::new(4, 23).unwrap();
        for n in 1..=12u64 {
            let a = jones_torus(k, n, &t).unwrap().to_complex();
            let b = jones_torus_limit(k, n, &t).unwrap().to_complex();
            assert!((a - b).norm() <= 1e-10 * a.norm().max(1.0), "n = {n}");
        }
    }

    #[test]
    fn kashaev_value_small_orders() {
        // trefoil Kashaev invariant at N = 2 is the determinant up to sign
        let v = kashaev_torus(trefoil(), &RootContext::new(2).unwrap());
        assert!((v.value.to_complex() - Complex64::new(-3.0, 0.0)).norm() < 1e-12);
        let v = kashaev_torus(trefoil(), &RootContext::new(1).unwrap());
        assert!((v.value.to_complex() - 1.0).norm() < 1e-15);
        assert!(hat_jones_torus(trefoil(), 0, &RootContext::new(3).unwrap()).is_err());
    }
}
