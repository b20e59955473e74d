//! Saddle-point data, leading-term predictors, asymptotic regression and the
//! ratio-suppression probe.

mod fit;
mod leading;
mod ratio;
mod saddle;

pub use fit::{fit_asymptotic, FitResult};
pub use leading::{a_sum_float, deriv_leading, kt_leading, ASum, Sign};
pub use ratio::{ratio_conjecture_scan, strictly_decreasing, RatioScan, DENOMINATOR_FLOOR};
pub use saddle::{big_s, phase_a, s_sequence, saddle_f, sest_residual, wl_decomposed_sum, SaddleTable};
