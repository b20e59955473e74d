//! Least-squares fits of `y = a N + b log N + c`.

use nalgebra::{DMatrix, DVector};

use crate::error::{domain, Error, Result};

/// Coefficients of `a N + b log N + c` plus residual statistics.
#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub max_residual: f64,
    pub rms_residual: f64,
    pub n_points: usize,
    /// `(N_min, N_max, step)`; `step` is 0 when the abscissae are not evenly spaced.
    pub window: (f64, f64, f64),
}

impl FitResult {
    pub fn predict(&self, n: f64) -> f64 {
        self.a * n + self.b * n.ln() + self.c
    }

    /// `(max, rms)` of `y - predict(N)` over `points`.
    pub fn residual_stats(&self, points: &[(f64, f64)]) -> (f64, f64) {
        let mut max = 0.0f64;
        let mut sq = 0.0;
        for &(n, y) in points {
            let r = y - self.predict(n);
            max = max.max(r.abs());
            sq += r * r;
        }
        (max, (sq / points.len() as f64).sqrt())
    }
}

const MIN_POINTS: usize = 8;

/// Fits `y = a N + b log N + c` to `(N, y)` pairs.
pub fn fit_asymptotic(points: &[(f64, f64)]) -> Result<FitResult> {
    if points.len() < MIN_POINTS {
        return domain(format!("need at least {MIN_POINTS} points, got {}", points.len()));
    }
    if points.iter().any(|&(n, y)| n.is_nan() || n <= 0.0 || !n.is_finite() || !y.is_finite()) {
        return domain("abscissae must be positive and all values finite");
    }
    let mut ns: Vec<f64> = points.iter().map(|p| p.0).collect();
    ns.sort_by(f64::total_cmp);
    if ns.windows(2).any(|w| w[0] == w[1]) {
        return domain("abscissae must be distinct");
    }

    let rows = points.len();
    let mut design = DMatrix::<f64>::zeros(rows, 3);
    for (r, &(n, _)) in points.iter().enumerate() {
        design[(r, 0)] = n;
        design[(r, 1)] = n.ln();
        design[(r, 2)] = 1.0;
    }
    // equilibrate columns before the SVD so the rank test is scale free
    let scales: Vec<f64> = (0..3).map(|c| design.column(c).norm()).collect();
    for (c, s) in scales.iter().enumerate() {
        design.column_mut(c).unscale_mut(*s);
    }
    let rhs = DVector::from_iterator(rows, points.iter().map(|p| p.1));
    let svd = design.svd(true, true);
    let sv = &svd.singular_values;
    let (smax, smin) = (sv.max(), sv.min());
    if smin.is_nan() || smin <= 1e-10 * smax {
        return Err(Error::RankDeficient);
    }
    let sol = svd.solve(&rhs, 0.0).map_err(|_| Error::RankDeficient)?;
    let mut fit = FitResult {
        a: sol[0] / scales[0],
        b: sol[1] / scales[1],
        c: sol[2] / scales[2],
        max_residual: 0.0,
        rms_residual: 0.0,
        n_points: rows,
        window: (ns[0], ns[rows - 1], common_step(&ns)),
    };
    let (max, rms) = fit.residual_stats(points);
    fit.max_residual = max;
    fit.rms_residual = rms;
    Ok(fit)
}

fn common_step(sorted: &[f64]) -> f64 {
    let step = sorted[1] - sorted[0];
    if sorted.windows(2).all(|w| ((w[1] - w[0]) - step).abs() <= 1e-9 * step.abs().max(1.0)) {
        step
    } else {
        0.0
    }
}
