//! Exact evaluation of `J_{WL(r),N}` at `t = e^{2 pi i/N}` in `Z[zeta_{4N}]`.
//!
//! At the root, `prod_{j=1}^n (1-t^{i+j})/(1-t^j)` is the Gaussian binomial
//! `[n+i, n]_t`, so every clasp term is a polynomial in `t` and the sum can be
//! carried out in `Z[x]/(x^N - 1)`. The global factor `-t^{-1/2}` is then
//! applied as `-zeta_{4N}^{-2}` after substituting `t = zeta_{4N}^4`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::field::{CycloElem, CycloField};
use crate::error::{domain, Error, Result};

/// Largest order accepted by [`jones_wl_exact`]. The Gaussian binomial
/// coefficients grow like `2^N`, and the cost is `O(N^4)` big-integer products.
pub const MAX_EXACT_ORDER: u64 = 32;

type Cyclic = Vec<BigInt>;

fn cyclic_mul(a: &Cyclic, b: &Cyclic) -> Cyclic {
    let n = a.len();
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[(i + j) % n] += x * y;
            }
        }
    }
    out
}

/// `a * x^s` in `Z[x]/(x^n - 1)`.
fn cyclic_shift(a: &Cyclic, s: i64) -> Cyclic {
    let n = a.len();
    let s = s.rem_euclid(n as i64) as usize;
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[(i + s) % n] = x.clone();
    }
    out
}

fn cyclic_add_assign(acc: &mut Cyclic, a: &Cyclic) {
    for (x, y) in acc.iter_mut().zip(a) {
        *x += y;
    }
}

/// Gaussian binomials `[m, k]_x` mod `x^n - 1` for `0 <= k <= m < n`, via
/// `[m, k] = [m-1, k-1] + x^k [m-1, k]`.
fn gaussian_table(n: usize) -> Vec<Vec<Cyclic>> {
    let mut one = vec![BigInt::zero(); n];
    one[0] = BigInt::from(1);
    let mut table: Vec<Vec<Cyclic>> = Vec::with_capacity(n);
    for m in 0..n {
        let mut row = Vec::with_capacity(m + 1);
        for k in 0..=m {
            if k == 0 || k == m {
                row.push(one.clone());
            } else {
                let mut g = cyclic_shift(&table[m - 1][k], k as i64);
                cyclic_add_assign(&mut g, &table[m - 1][k - 1]);
                row.push(g);
            }
        }
        table.push(row);
    }
    table
}

/// Exact `J_{WL(r),N}` at the Kashaev point as an element of `Z[zeta_{4N}]`,
/// for `1 <= N <= 32`. Embedding with `zeta -> e^{2 pi i/(4N)}` gives the same
/// value as [`crate::jones::jones_wl_at_root`].
pub fn jones_wl_exact(order: u64, r: i64) -> Result<CycloElem> {
    if order == 0 {
        return domain("order N must be at least 1");
    }
    if order > MAX_EXACT_ORDER {
        return Err(Error::Refused(format!(
            "exact Whitehead link evaluation is limited to N <= {MAX_EXACT_ORDER}, got {order}"
        )));
    }
    let n_big = order as usize;
    let gauss = gaussian_table(n_big);

    // row_sums[n] = sum_i [n+i, n] prod_{j=1}^n (1 - x^{-(i+j)})
    let mut row_sums = vec![vec![BigInt::zero(); n_big]; n_big];
    for i in 0..n_big {
        let mut e = vec![BigInt::zero(); n_big];
        e[0] = BigInt::from(1);
        for (n, sum) in row_sums.iter_mut().enumerate().take(n_big - i) {
            cyclic_add_assign(sum, &cyclic_mul(&gauss[n + i][n], &e));
            let shifted = cyclic_shift(&e, -((i + n + 1) as i64));
            for (x, y) in e.iter_mut().zip(&shifted) {
                *x -= y;
            }
        }
    }

    let mut total = vec![BigInt::zero(); n_big];
    for (n, sum) in row_sums.iter().enumerate() {
        let ni = n as i64;
        let twisted = cyclic_shift(sum, r * ni * (ni + 1));
        let w = BigInt::from(2 * n + 1);
        for (x, y) in total.iter_mut().zip(&twisted) {
            *x += &w * y;
        }
    }

    // t^k -> -zeta_{4N}^{4k - 2}
    let field: Arc<CycloField> = CycloField::new(4 * order)?;
    let m = 4 * n_big;
    let mut lifted = vec![BigInt::zero(); m];
    for (k, c) in total.into_iter().enumerate() {
        lifted[(4 * k + m - 2) % m] = -c;
    }
    Ok(CycloElem::from_powers(&field, lifted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jones::jones_wl_at_root;
    use crate::numeric::RootContext;
    use num_complex::Complex64;

    #[test]
    fn small_orders() {
        assert_eq!(jones_wl_exact(1, 0).unwrap(), CycloElem::one(&CycloField::new(4).unwrap()));
        let z = jones_wl_exact(2, 0).unwrap().embed();
        assert!((z - Complex64::new(0.0, 8.0)).norm() < 1e-12, "{z}");
    }

    #[test]
    fn matches_float_path() {
        for order in 1..=16 {
            for r in [-1, 0, 1, 2] {
                let exact = jones_wl_exact(order, r).unwrap().embed();
                let float = jones_wl_at_root(&RootContext::new(order).unwrap(), r).value.to_complex();
                assert!((exact - float).norm() <= 1e-10 * exact.norm().max(1.0), "N={order} r={r}: {exact} vs {float}");
            }
        }
    }

    #[test]
    fn refuses_large_orders() {
        assert!(matches!(jones_wl_exact(33, 0), Err(Error::Refused(_))));
        assert!(jones_wl_exact(0, 0).is_err());
        assert!(jones_wl_exact(32, 0).is_ok());
    }
}
