//! Bounds for the `O(1)` remainders, fixed from measured runs. The underlying
//! results only assert boundedness, so each constant is the observed value at a
//! moderate order rounded up, and checks at larger orders allow a fixed margin.

/// `sest_residual(100, 0.5)` measured as 0.99989.
pub const SEST_RESIDUAL_BOUND: f64 = 0.9999;

/// `max_{50 <= N <= 100} |J_{T(2,3),N} - kt_leading|` measured as 0.99614.
pub const KT_REMAINDER_BOUND: f64 = 0.9962;

/// Growth allowed between a calibration window and a larger one.
pub const BOUNDEDNESS_MARGIN: f64 = 1.5;

/// Band for `2 pi log|J_{WL(0),1000}| / 1000` (measured 3.7257).
pub const WL_1000_BAND: (f64, f64) = (3.66, 3.80);

/// Band for `2 pi log|J_{WD(T(2,3),0),600}| / 600` (measured 3.7773).
pub const WD_600_BAND: (f64, f64) = (3.60, 3.85);

/// `8 L(pi/4)`, the volume of the Whitehead link complement.
pub const WHITEHEAD_VOLUME: f64 = 3.663_862_376_708_876;
