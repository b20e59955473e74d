//! The exponential sums
//!
//! ```text
//! A^{+-}_{p,q}(N, k) = sum_{j=1}^{pq-1} (+-1)^j e^{-N j^2 pi i/(2pq)} j^{2k} sin(j pi/p) sin(j pi/q)
//! ```
//!
//! and the leading terms they control: the Kashaev invariant of `T(p,q)` and
//! `t d/dt hat J_{T(p,q),n}` near `n = N`.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::jones::TorusKnot;
use crate::numeric::{ExtComplex, RationalAngle, UnitPoint};

/// The `+-` in `A^{+-}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `Plus` for even `e`, `Minus` for odd: the sign of `(-1)^e`.
    pub fn of_power(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `(+-1)^j`.
    pub fn power(self, j: i64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => {
                if j.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// A float-path value of `A^{+-}_{p,q}(N, k)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ASum {
    pub knot: TorusKnot,
    pub n: i64,
    pub k: u32,
    pub sign: Sign,
    pub value: Complex64,
}

impl ASum {
    pub fn compute(knot: TorusKnot, n: i64, k: u32, sign: Sign) -> Result<Self> {
        Ok(Self { knot, n, k, sign, value: a_sum_float(knot, n, k, sign)? })
    }
}

/// `A^{+-}_{p,q}(N, k)` by direct summation of its `pq - 1` terms.
pub fn a_sum_float(knot: TorusKnot, n: i64, k: u32, sign: Sign) -> Result<Complex64> {
    if k > 1 {
        return domain(format!("A-sum exponent k = {k} not in {{0, 1}}"));
    }
    let (p, q) = (knot.p() as i64, knot.q() as i64);
    let pq = p * q;
    // e^{-N j^2 pi i/(2pq)} = zeta_{4pq}^{-N j^2}
    let zeta = RationalAngle::new(1, 4 * pq as u64)?;
    let sum = (1..pq)
        .map(|j| {
            let weight = sign.power(j) as f64
                * (j as f64).powi(2 * k as i32)
                * (j as f64 * PI / p as f64).sin()
                * (j as f64 * PI / q as f64).sin();
            zeta.pow(-n * j * j) * weight
        })
        .sum();
    Ok(sum)
}

/// `exp(-(p/q + q/p) pi i/(2N) + pi i/4)`.
fn small_phase(knot: TorusKnot, order: f64) -> Complex64 {
    let (p, q) = (knot.p() as f64, knot.q() as f64);
    Complex64::from_polar(1.0, -(p / q + q / p) * PI / (2.0 * order) + FRAC_PI_4)
}

/// Leading term of the Kashaev invariant of `T(p,q)`:
///
/// ```text
/// 2 e^{-pq(N^2-1) pi i/(2N)} (N/(2pq))^{3/2} e^{-(p/q+q/p) pi i/(2N) + pi i/4} A^{(-1)^{N-1}}(N, 1)
/// ```
pub fn kt_leading(knot: TorusKnot, order: u64) -> Result<ExtComplex> {
    if order == 0 {
        return domain("order must be positive");
    }
    let big_n = order as i64;
    let pq = knot.pq();
    let a = a_sum_float(knot, big_n, 1, Sign::of_power(big_n - 1))?;
    // e^{-pq(N^2-1) pi i/(2N)} = t^{-pq(N^2-1)/4} at t = e^{2 pi i/N}
    let phase = RationalAngle::new(1, order)?.pow_quarter(-pq * (big_n * big_n - 1));
    let scale = 2.0 * (order as f64 / (2 * pq) as f64).powf(1.5);
    Ok(ExtComplex::from_complex(phase * small_phase(knot, order as f64) * a * scale))
}

/// Leading term of `t d/dt hat J_{T(p,q),n}` at `t = e^{2 pi i/N}`:
///
/// ```text
/// -2 e^{-pq(n^2-1) pi i/(2N)} N^{5/2}/(2pq)^{3/2} e^{-(p/q+q/p) pi i/(2N) + pi i/4} A^{(-1)^{n-1}}(N, 1)
/// ```
///
/// The estimate only holds uniformly for `|n - N| < N/(2pq)`; other colors are
/// rejected.
pub fn deriv_leading(knot: TorusKnot, color: u64, order: u64) -> Result<ExtComplex> {
    if order == 0 || color == 0 {
        return domain("order and color must be positive");
    }
    let pq = knot.pq();
    let (n, big_n) = (color as i64, order as i64);
    if 2 * pq * (n - big_n).abs() >= big_n {
        return domain(format!("color {color} outside the window |n - N| < N/(2pq) for N = {order}, pq = {pq}"));
    }
    let a = a_sum_float(knot, big_n, 1, Sign::of_power(n - 1))?;
    let phase = RationalAngle::new(1, order)?.pow_quarter(-pq * (n * n - 1));
    let scale = -2.0 * (order as f64).powf(2.5) / ((2 * pq) as f64).powf(1.5);
    Ok(ExtComplex::from_complex(phase * small_phase(knot, order as f64) * a * scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jones::{hat_jones_torus_tderiv, kashaev_torus};
    use crate::numeric::RootContext;

    fn k32() -> TorusKnot {
        TorusKnot::new(3, 2).unwrap()
    }

    #[test]
    fn a_sum_hand_value() {
        // j = 1 and j = 5 survive: sqrt3/2 - 25 sqrt3/2
        let v = a_sum_float(k32(), 0, 1, Sign::Plus).unwrap();
        assert!((v - Complex64::new(-12.0 * 3f64.sqrt(), 0.0)).norm() < 1e-12);
        assert!(a_sum_float(k32(), 0, 2, Sign::Plus).is_err());
    }

    #[test]
    fn a_sum_identities() {
        for n in 0..24 {
            for s in [Sign::Plus, Sign::Minus] {
                assert!(a_sum_float(k32(), n, 0, s).unwrap().norm() <= 1e-12);
            }
        }
        for n in 0..=24 {
            for s in [Sign::Plus, Sign::Minus] {
                let a = a_sum_float(k32(), n, 1, s).unwrap();
                let b = a_sum_float(k32(), n + 12, 1, s.flipped()).unwrap();
                let c = a_sum_float(k32(), n + 24, 1, s).unwrap();
                assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0));
                assert!((a - c).norm() <= 1e-12 * a.norm().max(1.0));
            }
        }
    }

    #[test]
    fn sign_helpers() {
        assert_eq!(Sign::of_power(4), Sign::Plus);
        assert_eq!(Sign::of_power(-3), Sign::Minus);
        assert_eq!(Sign::Minus.power(3), -1);
        assert_eq!(Sign::Minus.power(-2), 1);
        assert_eq!(Sign::Plus.power(7), 1);
    }

    #[test]
    fn kt_term_tracks_kashaev_value() {
        let k = TorusKnot::new(2, 3).unwrap();
        for order in [50u64, 100, 200] {
            let ctx = RootContext::new(order).unwrap();
            let exact = kashaev_torus(k, &ctx).value.to_complex();
            let lead = kt_leading(k, order).unwrap().to_complex();
            // remainder stays O(1) while |J| ~ N^{3/2}
            assert!((exact - lead).norm() < 2.0, "N={order}");
        }
    }

    #[test]
    fn deriv_term_ratio() {
        let k = TorusKnot::new(2, 3).unwrap();
        let mut errs = Vec::new();
        for order in [401u64, 1601] {
            let ctx = RootContext::new(order).unwrap();
            let d = hat_jones_torus_tderiv(k, order, &ctx).unwrap();
            let lead = deriv_leading(k, order, order).unwrap();
            let ratio = d.checked_div(&lead).unwrap().to_complex();
            assert!((ratio - 1.0).norm() < 0.2);
            errs.push((ratio - 1.0).norm());
        }
        assert!(errs[1] < errs[0]);
        assert!(deriv_leading(k, 200, 400).is_err());
    }
}
