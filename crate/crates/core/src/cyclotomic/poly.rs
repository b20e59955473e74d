//! Dense integer polynomials and cyclotomic polynomials.

use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first, with no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut c = vec![BigInt::zero(); m + 1];
        c[0] = -BigInt::one();
        c[m] = BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !divisor.is_monic() {
            return domain("division by a non-monic polynomial");
        }
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rem[k]);
            for (l, dl) in divisor.coeffs[..d].iter().enumerate() {
                if !dl.is_zero() {
                    rem[k - d + l] -= &c * dl;
                }
            }
            quot[k - d] = c;
        }
        rem.truncate(d);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `m`-th cyclotomic polynomial, from `Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d`
/// with exact division.
pub fn cyclotomic_poly(m: u64) -> Result<IntPoly> {
    if m == 0 {
        return domain("cyclotomic polynomial of order 0");
    }
    let divs = divisors(m);
    let mut table: Vec<(u64, IntPoly)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut p = IntPoly::x_pow_minus_one(d as usize);
        for (e, phi_e) in &table {
            if d % e == 0 {
                let (q, r) = p.div_rem_monic(phi_e)?;
                debug_assert!(r.is_zero(), "Phi_{e} does not divide x^{d} - 1");
                p = q;
            }
        }
        table.push((d, p));
    }
    Ok(table.pop().expect("m has at least one divisor").1)
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1).unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2).unwrap(), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(4).unwrap(), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(12).unwrap(), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        // first cyclotomic with a coefficient outside {-1, 0, 1}
        let p105 = cyclotomic_poly(105).unwrap();
        assert_eq!(p105.max_abs_coeff(), BigInt::from(2));
        assert!(cyclotomic_poly(0).is_err());
    }

    #[test]
    fn degree_is_totient() {
        for m in 1..=400u64 {
            let p = cyclotomic_poly(m).unwrap();
            assert!(p.is_monic());
            assert_eq!(p.degree().unwrap() as u64, euler_phi(m), "m = {m}");
        }
    }

    #[test]
    fn product_over_divisors() {
        for m in 1..=60u64 {
            let prod = divisors(m).into_iter().fold(IntPoly::one(), |acc, d| &acc * &cyclotomic_poly(d).unwrap());
            assert_eq!(prod, IntPoly::x_pow_minus_one(m as usize), "m = {m}");
        }
    }

    #[test]
    fn vanishes_at_primitive_root() {
        for m in [5u64, 12, 36, 77] {
            let z = Complex64::from_polar(1.0, std::f64::consts::TAU / m as f64);
            assert!(cyclotomic_poly(m).unwrap().eval_complex(z).norm() < 1e-9);
        }
    }

    #[test]
    fn division_round_trip() {
        let a = IntPoly::from_i64(&[3, -1, 4, 1, -5, 9, 2]);
        let b = IntPoly::from_i64(&[2, 0, 1]);
        let (q, r) = a.div_rem_monic(&b).unwrap();
        assert_eq!(&(&q * &b) - &(&a - &r), IntPoly::zero());
        assert!(r.degree().unwrap_or(0) < 2);
        assert!(a.div_rem_monic(&IntPoly::from_i64(&[1, 2])).is_err());
    }

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(392), 168);
    }
}
