//! Probe of the suppression `hat J_{2n+1} / (t d/dt hat J_{2n+1}) = o(N^{-2})`
//! for colors `2n+1` with `n` near `N/2`.

use crate::error::{domain, Result};
use crate::jones::{hat_and_tderiv, TorusKnot};
use crate::numeric::RootContext;

/// Points whose derivative is below this fraction of the window maximum are skipped.
pub const DENOMINATOR_FLOOR: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct RatioScan {
    pub order: u64,
    pub delta: f64,
    /// `N^2 max |hat J / (t d/dt hat J)|` over the window.
    pub value: f64,
    /// `n` attaining the maximum.
    pub argmax: u64,
    pub considered: usize,
    pub excluded: usize,
}

/// Scans integer `n` with `|n - N/2| < N^delta` at `t = e^{2 pi i/N}`.
pub fn ratio_conjecture_scan(knot: TorusKnot, order: u64, delta: f64) -> Result<RatioScan> {
    if !(delta > 0.5 && delta < 2.0 / 3.0) {
        return domain(format!("delta = {delta} outside (1/2, 2/3)"));
    }
    let ctx = RootContext::new(order)?;
    let radius = (order as f64).powf(delta);
    let centre = order as f64 / 2.0;
    let window: Vec<u64> = (0..order).filter(|&n| (n as f64 - centre).abs() < radius).collect();
    if window.is_empty() {
        return domain(format!("empty window for N = {order}, delta = {delta}"));
    }
    let pairs: Vec<(u64, f64, f64)> = window
        .iter()
        .map(|&n| {
            let (hat, deriv) = hat_and_tderiv(knot, 2 * n + 1, &ctx);
            (n, hat.norm(), deriv.norm())
        })
        .collect();
    let floor = DENOMINATOR_FLOOR * pairs.iter().map(|p| p.2).fold(0.0, f64::max);
    let mut scan = RatioScan { order, delta, value: 0.0, argmax: window[0], considered: 0, excluded: 0 };
    for (n, hat, deriv) in pairs {
        if deriv <= floor {
            scan.excluded += 1;
            continue;
        }
        scan.considered += 1;
        let v = (order as f64).powi(2) * hat / deriv;
        if v > scan.value {
            scan.value = v;
            scan.argmax = n;
        }
    }
    Ok(scan)
}

/// Whether the scan values strictly decrease along the given orders.
pub fn strictly_decreasing(scans: &[RatioScan]) -> bool {
    scans.windows(2).all(|w| w[1].value < w[0].value)
}
