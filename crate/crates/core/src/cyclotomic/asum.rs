//! Exact values of the exponential sums `A^{+-}_{p,q}(N, k)` in `Z[zeta_{4pq}]`.
//!
//! With `sin(x) = (e^{ix} - e^{-ix}) / 2i` the sum times `(2i)^2 = -4` is a
//! cyclotomic integer:
//!
//! ```text
//! tilde A = -4 A = sum_{j=1}^{pq-1} (+-1)^j j^{2k} z^{-N j^2} (z^{2qj} - z^{-2qj}) (z^{2pj} - z^{-2pj}),
//! ```
//!
//! `z = zeta_{4pq}`. So `A = 0` exactly when `tilde A` reduces to zero mod `Phi_{4pq}`.

use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use super::field::{CycloElem, CycloField};
use crate::asymptotics::{a_sum_float, Sign};
use crate::error::{domain, Result};
use crate::jones::TorusKnot;

fn check_k(k: u32) -> Result<()> {
    if k > 1 {
        return domain(format!("k must be 0 or 1, got {k}"));
    }
    Ok(())
}

fn field_for(knot: TorusKnot) -> Result<Arc<CycloField>> {
    CycloField::new(4 * knot.pq() as u64)
}

fn add_term(counts: &mut [i128], e: i128, c: i128) {
    let m = counts.len() as i128;
    counts[e.rem_euclid(m) as usize] += c;
}

/// `-4 A^{sign}_{p,q}(N, k)` in `Z[zeta_{4pq}]`.
pub fn a_sum_exact(knot: TorusKnot, n: i64, k: u32, sign: Sign) -> Result<CycloElem> {
    check_k(k)?;
    a_sum_exact_in(&field_for(knot)?, knot, n, k, sign)
}

fn a_sum_exact_in(field: &Arc<CycloField>, knot: TorusKnot, n: i64, k: u32, sign: Sign) -> Result<CycloElem> {
    let (p, q, pq) = (knot.p() as i128, knot.q() as i128, knot.pq() as i128);
    let mut counts = vec![0i128; field.conductor() as usize];
    for j in 1..pq {
        let w = sign.power(j as i64) as i128 * j.pow(2 * k);
        let base = -(n as i128) * j * j;
        add_term(&mut counts, base + 2 * (q + p) * j, w);
        add_term(&mut counts, base + 2 * (q - p) * j, -w);
        add_term(&mut counts, base - 2 * (q - p) * j, -w);
        add_term(&mut counts, base - 2 * (q + p) * j, w);
    }
    Ok(CycloElem::from_exponent_counts(field, &counts))
}

/// The same quantity from the symmetric form
/// `sum_{-pq<j<pq} (+-1)^j j^{2k} z^{-N j^2 + 2qj} (z^{2pj} - z^{-2pj})`.
pub fn a_sum_exact_symmetric(knot: TorusKnot, n: i64, k: u32, sign: Sign) -> Result<CycloElem> {
    check_k(k)?;
    let field = field_for(knot)?;
    let (p, q, pq) = (knot.p() as i128, knot.q() as i128, knot.pq() as i128);
    let mut counts = vec![0i128; field.conductor() as usize];
    for j in (1 - pq)..pq {
        let w = sign.power(j as i64) as i128 * j.pow(2 * k);
        let base = -(n as i128) * j * j + 2 * q * j;
        add_term(&mut counts, base + 2 * p * j, w);
        add_term(&mut counts, base - 2 * p * j, -w);
    }
    Ok(CycloElem::from_exponent_counts(&field, &counts))
}

/// One row of a [`nonvanish_scan`].
#[derive(Clone, Debug, PartialEq)]
pub struct NonvanishRow {
    pub n: i64,
    pub is_zero: bool,
    /// `|A^+(N, k)|` from the float path; advisory only.
    pub float_abs: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NonvanishReport {
    pub knot: TorusKnot,
    pub k: u32,
    pub rows: Vec<NonvanishRow>,
}

impl NonvanishReport {
    pub fn period(&self) -> usize {
        self.rows.len()
    }

    pub fn zero_count(&self) -> usize {
        self.rows.iter().filter(|r| r.is_zero).count()
    }

    pub fn zeros(&self) -> impl Iterator<Item = i64> + '_ {
        self.rows.iter().filter(|r| r.is_zero).map(|r| r.n)
    }
}

/// Decide `A^+_{p,q}(N, k) = 0` exactly for every `N` in one period `[0, 4pq)`.
pub fn nonvanish_scan(knot: TorusKnot, k: u32) -> Result<NonvanishReport> {
    check_k(k)?;
    let field = field_for(knot)?;
    let period = 4 * knot.pq();
    let rows = (0..period)
        .into_par_iter()
        .map(|n| {
            let exact = a_sum_exact_in(&field, knot, n, k, Sign::Plus)?;
            let float_abs = a_sum_float(knot, n, k, Sign::Plus)?.norm();
            Ok(NonvanishRow { n, is_zero: exact.is_zero(), float_abs })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NonvanishReport { knot, k, rows })
}

/// Float value of `A` recovered from the exact element.
pub fn a_sum_from_exact(elem: &CycloElem) -> Complex64 {
    elem.embed() / -4.0
}
