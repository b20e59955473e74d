//! Exact arithmetic in cyclotomic rings, used to decide vanishing of the torus
//! knot exponential sums and to cross-check the float evaluators at small `N`.

mod asum;
mod field;
mod poly;
mod wl_exact;

pub use asum::{a_sum_exact, a_sum_exact_symmetric, a_sum_from_exact, nonvanish_scan, NonvanishReport, NonvanishRow};
pub use field::{cyclo_mul, zeta_power, CycloElem, CycloField};
pub use poly::{cyclotomic_poly, euler_phi, IntPoly};
pub use wl_exact::{jones_wl_exact, MAX_EXACT_ORDER};
