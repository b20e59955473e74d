//! Extended-exponent complex scalars.
//!
//! Colored Jones values grow like `e^{0.58 N}` and the intermediate products of
//! the clasp sums shrink like `e^{-0.8 N}`, so plain `f64` leaves its range
//! around `N ~ 1200`. An [`ExtComplex`] keeps a double-precision mantissa with
//! modulus in `[1, 2)` next to a separate power-of-two exponent.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use num_complex::Complex64;

use crate::error::{domain, Result};

/// Mantissa width of `f64`; exponent gaps beyond this swamp the smaller addend.
const MANTISSA_BITS: i64 = 53;

/// `mantissa * 2^exponent`, normalized so that `1 <= |mantissa| < 2`, or the
/// canonical zero (`0 * 2^0`).
#[derive(Clone, Copy, PartialEq)]
pub struct ExtComplex {
    mantissa: Complex64,
    exponent: i64,
}

impl ExtComplex {
    pub const ZERO: ExtComplex = ExtComplex { mantissa: Complex64::new(0.0, 0.0), exponent: 0 };
    pub const ONE: ExtComplex = ExtComplex { mantissa: Complex64::new(1.0, 0.0), exponent: 0 };

    /// Builds `mantissa * 2^exponent` and normalizes it. Non-finite mantissas
    /// are a caller bug.
    pub fn from_parts(mantissa: Complex64, exponent: i64) -> Self {
        debug_assert!(mantissa.re.is_finite() && mantissa.im.is_finite(), "non-finite mantissa {mantissa}");
        if mantissa.re == 0.0 && mantissa.im == 0.0 {
            return Self::ZERO;
        }
        let big = mantissa.re.abs().max(mantissa.im.abs());
        let (_, k) = libm::frexp(big);
        let k = k as i64;
        // after this the larger component lies in [0.5, 1), so |m| in [0.5, sqrt 2)
        let mut m = Complex64::new(libm::scalbn(mantissa.re, -k as i32), libm::scalbn(mantissa.im, -k as i32));
        let mut e = exponent + k;
        if m.norm_sqr() < 1.0 {
            m *= 2.0;
            e -= 1;
        }
        Self { mantissa: m, exponent: e }
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::from_parts(z, 0)
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_parts(Complex64::new(x, 0.0), 0)
    }

    /// Unit-modulus value `e^{i theta}`.
    pub fn from_polar_unit(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::from_parts(Complex64::new(c, s), 0)
    }

    /// `exp(log_abs + i arg)`, for values whose logarithm is known directly.
    pub fn from_log_polar(log_abs: f64, arg: f64) -> Self {
        let l2 = log_abs / std::f64::consts::LN_2;
        let e = l2.floor();
        let frac = l2 - e;
        let r = frac.exp2();
        let (s, c) = arg.sin_cos();
        Self::from_parts(Complex64::new(r * c, r * s), e as i64)
    }

    pub fn mantissa(&self) -> Complex64 {
        self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.re == 0.0 && self.mantissa.im == 0.0
    }

    /// Converts back to standard precision; saturates to infinities or zero
    /// when the value is out of range.
    pub fn to_complex(&self) -> Complex64 {
        let e = self.exponent.clamp(-4000, 4000) as i32;
        Complex64::new(libm::scalbn(self.mantissa.re, e), libm::scalbn(self.mantissa.im, e))
    }

    /// Like [`to_complex`](Self::to_complex) but `None` when either component
    /// would overflow.
    pub fn try_to_complex(&self) -> Option<Complex64> {
        let z = self.to_complex();
        (z.re.is_finite() && z.im.is_finite()).then_some(z)
    }

    /// Natural log of the modulus.
    pub fn log_abs(&self) -> Result<f64> {
        if self.is_zero() {
            return domain("log of zero");
        }
        Ok(0.5 * self.mantissa.norm_sqr().ln() + self.exponent as f64 * std::f64::consts::LN_2)
    }

    pub fn arg(&self) -> f64 {
        self.mantissa.arg()
    }

    pub fn conj(&self) -> Self {
        Self { mantissa: self.mantissa.conj(), exponent: self.exponent }
    }

    pub fn scale(&self, x: f64) -> Self {
        Self::from_parts(self.mantissa * x, self.exponent)
    }

    /// `self / other`, `None` when dividing by zero.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        Some(Self::from_parts(self.mantissa / other.mantissa, self.exponent - other.exponent))
    }

    /// `|self|` as an extended real (imaginary part zero).
    pub fn abs(&self) -> Self {
        Self::from_parts(Complex64::new(self.mantissa.norm(), 0.0), self.exponent)
    }

    /// Compares moduli without leaving the extended range.
    pub fn abs_cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Less,
            (false, true) => std::cmp::Ordering::Greater,
            _ => {
                self.exponent.cmp(&other.exponent).then(self.mantissa.norm_sqr().total_cmp(&other.mantissa.norm_sqr()))
            }
        }
    }
}

impl Default for ExtComplex {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<Complex64> for ExtComplex {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl Mul for ExtComplex {
    type Output = ExtComplex;
    fn mul(self, rhs: ExtComplex) -> ExtComplex {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        Self::from_parts(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Mul<Complex64> for ExtComplex {
    type Output = ExtComplex;
    fn mul(self, rhs: Complex64) -> ExtComplex {
        if self.is_zero() {
            return Self::ZERO;
        }
        Self::from_parts(self.mantissa * rhs, self.exponent)
    }
}

impl Mul<f64> for ExtComplex {
    type Output = ExtComplex;
    fn mul(self, rhs: f64) -> ExtComplex {
        self.scale(rhs)
    }
}

impl MulAssign for ExtComplex {
    fn mul_assign(&mut self, rhs: ExtComplex) {
        *self = *self * rhs;
    }
}

impl MulAssign<Complex64> for ExtComplex {
    fn mul_assign(&mut self, rhs: Complex64) {
        *self = *self * rhs;
    }
}

impl Add for ExtComplex {
    type Output = ExtComplex;
    fn add(self, rhs: ExtComplex) -> ExtComplex {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs;
        }
        let (hi, lo) = if self.exponent >= rhs.exponent { (self, rhs) } else { (rhs, self) };
        let gap = hi.exponent - lo.exponent;
        if gap > MANTISSA_BITS {
            return hi;
        }
        let shifted =
            Complex64::new(libm::scalbn(lo.mantissa.re, -gap as i32), libm::scalbn(lo.mantissa.im, -gap as i32));
        Self::from_parts(hi.mantissa + shifted, hi.exponent)
    }
}

impl AddAssign for ExtComplex {
    fn add_assign(&mut self, rhs: ExtComplex) {
        *self = *self + rhs;
    }
}

impl Neg for ExtComplex {
    type Output = ExtComplex;
    fn neg(self) -> ExtComplex {
        if self.is_zero() {
            return self;
        }
        Self { mantissa: -self.mantissa, exponent: self.exponent }
    }
}

impl Sub for ExtComplex {
    type Output = ExtComplex;
    fn sub(self, rhs: ExtComplex) -> ExtComplex {
        self + (-rhs)
    }
}

impl std::iter::Sum for ExtComplex {
    fn sum<I: Iterator<Item = ExtComplex>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Debug for ExtComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)*2^{}", self.mantissa.re, self.mantissa.im, self.exponent)
    }
}

impl fmt::Display for ExtComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.try_to_complex() {
            Some(z) => write!(f, "{z}"),
            None => fmt::Debug::fmt(self, f),
        }
    }
}
