//! Points on the unit circle at which the invariants are evaluated.
//!
//! Fractional powers follow one global convention: for `t = e^{2 pi i theta}`
//! and rational `x`, `t^x := e^{2 pi i theta x}`. Every formula in the crate has
//! exponents that are multiples of 1/4, so points expose a single primitive,
//! [`UnitPoint::pow_quarter`], returning `t^{e/4}`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{domain, Result};

/// A point `t` on the unit circle that can raise itself to quarter-integer powers.
pub trait UnitPoint {
    /// `t^{e4 / 4}` under the global convention.
    fn pow_quarter(&self, e4: i64) -> Complex64;

    /// `t^e` for an integer exponent.
    fn pow(&self, e: i64) -> Complex64 {
        self.pow_quarter(4 * e)
    }

    /// Whether `t^{e4/4} == 1` holds exactly.
    fn quarter_power_is_one(&self, e4: i64) -> bool;

    /// The rational angle `theta` with `t = e^{2 pi i theta}`.
    fn angle(&self) -> RationalAngle;
}

/// `e^{2 pi i (r / d)}` for `0 <= r < d`, computed from the nearest symmetric angle.
fn unit_from_fraction(r: i128, d: i128) -> Complex64 {
    debug_assert!((0..d).contains(&r));
    // map into (-d/2, d/2] so the argument of sin_cos stays small
    let centred = if 2 * r > d { r - d } else { r };
    let (s, c) = (TAU * (centred as f64 / d as f64)).sin_cos();
    Complex64::new(c, s)
}

/// `t = e^{2 pi i num / den}` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalAngle {
    num: i64,
    den: u64,
}

impl RationalAngle {
    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return domain("rational angle with zero denominator");
        }
        Ok(Self { num, den })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl UnitPoint for RationalAngle {
    fn pow_quarter(&self, e4: i64) -> Complex64 {
        let d = 4 * self.den as i128;
        let r = (e4 as i128 * self.num as i128).rem_euclid(d);
        unit_from_fraction(r, d)
    }

    fn quarter_power_is_one(&self, e4: i64) -> bool {
        (e4 as i128 * self.num as i128).rem_euclid(4 * self.den as i128) == 0
    }

    fn angle(&self) -> RationalAngle {
        *self
    }
}

/// The Kashaev point `t = e^{+-2 pi i / N}` with a table of all quarter powers.
///
/// The table is built from angles, never by repeated multiplication, so
/// `t^N == 1` holds exactly and products of table entries agree with the
/// directly computed power to within an ulp.
#[derive(Clone, Debug)]
pub struct RootContext {
    order: u64,
    sign: i64,
    quarter: Vec<Complex64>,
}

impl RootContext {
    /// `t = e^{2 pi i / order}`.
    pub fn new(order: u64) -> Result<Self> {
        Self::with_sign(order, 1)
    }

    /// `t = e^{-2 pi i / order}`; every at-root value becomes its complex conjugate.
    pub fn conjugate(order: u64) -> Result<Self> {
        Self::with_sign(order, -1)
    }

    fn with_sign(order: u64, sign: i64) -> Result<Self> {
        if order == 0 {
            return domain("root of unity of order 0");
        }
        let d = 4 * order as i128;
        let quarter = (0..d)
            .map(|r| {
                let z = unit_from_fraction(r, d);
                if sign < 0 {
                    z.conj()
                } else {
                    z
                }
            })
            .collect();
        Ok(Self { order, sign, quarter })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_conjugate(&self) -> bool {
        self.sign < 0
    }

    /// `1 - t^e`; zero exactly when `order | e`.
    pub fn one_minus_pow(&self, e: i64) -> Complex64 {
        Complex64::new(1.0, 0.0) - self.pow(e)
    }
}

impl UnitPoint for RootContext {
    #[inline]
    fn pow_quarter(&self, e4: i64) -> Complex64 {
        let d = 4 * self.order as i64;
        self.quarter[e4.rem_euclid(d) as usize]
    }

    fn quarter_power_is_one(&self, e4: i64) -> bool {
        e4.rem_euclid(4 * self.order as i64) == 0
    }

    fn angle(&self) -> RationalAngle {
        RationalAngle { num: self.sign, den: self.order }
    }
}
