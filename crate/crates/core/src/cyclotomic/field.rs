//! The cyclotomic ring `Z[zeta_m] = Z[x] / Phi_m`.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::poly::{cyclotomic_poly, IntPoly};
use crate::error::{Error, Result};

/// `Z[zeta_m]`, represented in the power basis `1, zeta, ..., zeta^{phi(m)-1}`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    m: u64,
    phi: IntPoly,
    degree: usize,
    // nonzero coefficients of Phi_m below the leading term
    tail: Vec<(usize, BigInt)>,
}

impl CycloField {
    pub fn new(m: u64) -> Result<Arc<Self>> {
        let phi = cyclotomic_poly(m)?;
        let degree = phi.degree().expect("cyclotomic polynomials are nonzero");
        let tail = phi.coeffs()[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (l, c.clone()))
            .collect();
        Ok(Arc::new(Self { m, phi, degree, tail }))
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Reduce a coefficient vector (any length, lowest degree first) mod `Phi_m`.
    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree;
        for k in (d..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            for (l, pl) in &self.tail {
                v[k - d + l] -= &c * pl;
            }
        }
        v.resize(d, BigInt::zero());
        v
    }
}

/// An element of `Z[zeta_m]` in canonical (fully reduced) form.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElem {
    field: Arc<CycloField>,
    coeffs: Vec<BigInt>,
}

impl CycloElem {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Self { field: field.clone(), coeffs: vec![BigInt::zero(); field.degree] }
    }

    pub fn from_int(field: &Arc<CycloField>, c: impl Into<BigInt>) -> Self {
        let mut e = Self::zero(field);
        e.coeffs[0] = c.into();
        e
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_int(field, 1)
    }

    /// The element `sum_k v[k] zeta^k`.
    pub fn from_powers(field: &Arc<CycloField>, v: Vec<BigInt>) -> Self {
        Self { field: field.clone(), coeffs: field.reduce(v) }
    }

    /// The element `sum_e c_e zeta^e` for `e` taken mod `m`.
    pub fn from_exponent_counts(field: &Arc<CycloField>, counts: &[i128]) -> Self {
        let m = field.m as usize;
        let mut v = vec![0i128; m];
        for (e, &c) in counts.iter().enumerate() {
            v[e % m] += c;
        }
        Self::from_powers(field, v.into_iter().map(BigInt::from).collect())
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.m == other.field.m {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.field.m, right: other.field.m })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { field: self.field.clone(), coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { field: self.field.clone(), coeffs })
    }

    /// Product reduced mod `Phi_m`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let d = self.field.degree;
        let mut out = vec![BigInt::zero(); (2 * d).saturating_sub(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { field: self.field.clone(), coeffs: self.field.reduce(out) })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Image under `zeta -> e^{2 pi i/m}`.
    pub fn embed(&self) -> Complex64 {
        let z = Complex64::from_polar(1.0, TAU / self.field.m as f64);
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// `zeta_m^e`, with `e` reduced mod `m` first.
pub fn zeta_power(field: &Arc<CycloField>, e: i64) -> CycloElem {
    let k = e.rem_euclid(field.m as i64) as usize;
    let mut v = vec![BigInt::zero(); k + 1];
    v[k] = BigInt::from(1);
    CycloElem::from_powers(field, v)
}

/// Product of two elements of the same field.
pub fn cyclo_mul(a: &CycloElem, b: &CycloElem) -> Result<CycloElem> {
    a.try_mul(b)
}

impl Add for &CycloElem {
    type Output = CycloElem;
    /// Panics on a field mismatch; use [`CycloElem::try_add`] to handle it.
    fn add(self, rhs: &CycloElem) -> CycloElem {
        self.try_add(rhs).expect("cyclotomic field mismatch")
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        self.try_sub(rhs).expect("cyclotomic field mismatch")
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem(m={}, {:?})", self.field.m, self.coeffs)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn zeta_products() {
        let f4 = CycloField::new(4).unwrap();
        let z = zeta_power(&f4, 1);
        assert_eq!(cyclo_mul(&z, &z).unwrap(), CycloElem::from_int(&f4, -1));
        assert_eq!(zeta_power(&f4, 3), -&z);
        assert_eq!(zeta_power(&f4, 0), CycloElem::one(&f4));
        assert!((&cyclo_mul(&z, &z).unwrap() + &CycloElem::one(&f4)).is_zero());

        let f12 = CycloField::new(12).unwrap();
        let z2 = zeta_power(&f12, 2);
        let cube = cyclo_mul(&cyclo_mul(&z2, &z2).unwrap(), &z2).unwrap();
        assert_eq!(cube, CycloElem::from_int(&f12, -1));
        let w = Complex64::from_polar(1.0, 7.0 * std::f64::consts::PI / 6.0);
        assert!((zeta_power(&f12, 7).embed() - w).norm() < 1e-12);
        assert_eq!(zeta_power(&f12, -5), zeta_power(&f12, 7));
    }

    #[test]
    fn multiplicative_identity_and_zero() {
        let f = CycloField::new(36).unwrap();
        let a = &zeta_power(&f, 5) - &zeta_power(&f, 31).scale(&BigInt::from(3));
        assert_eq!(cyclo_mul(&a, &CycloElem::one(&f)).unwrap(), a);
        assert!(CycloElem::zero(&f).is_zero());
        assert!(cyclo_mul(&a, &CycloElem::zero(&f)).unwrap().is_zero());
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = CycloElem::one(&CycloField::new(4).unwrap());
        let b = CycloElem::one(&CycloField::new(12).unwrap());
        assert!(matches!(cyclo_mul(&a, &b), Err(Error::FieldMismatch { left: 4, right: 12 })));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for m in [2u64, 6, 15, 24] {
            let f = CycloField::new(m).unwrap();
            let s = (0..m as i64).fold(CycloElem::zero(&f), |acc, e| &acc + &zeta_power(&f, e));
            assert!(s.is_zero(), "m = {m}");
        }
    }

    fn small_elem(m: u64) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-20i64..=20, m as usize)
    }

    proptest! {
        #[test]
        fn embedding_is_a_homomorphism(a in small_elem(24), b in small_elem(24), m in prop::sample::select(vec![5u64, 8, 12, 24])) {
            let f = CycloField::new(m).unwrap();
            let to_elem = |v: &[i64]| CycloElem::from_powers(&f, v.iter().map(|&c| BigInt::from(c)).collect());
            let (x, y) = (to_elem(&a), to_elem(&b));
            let prod = cyclo_mul(&x, &y).unwrap();
            prop_assert!(close(prod.embed(), x.embed() * y.embed(), 1e-10));
            prop_assert!(close((&x + &y).embed(), x.embed() + y.embed(), 1e-10));
        }
    }
}
