//! Colored Jones polynomials of torus knots, twisted Whitehead links and
//! Whitehead doubles of torus knots at roots of unity, with the numerical and
//! exact machinery to test their volume-conjecture asymptotics.

pub mod asymptotics;
pub mod calibration;
pub mod cyclotomic;
pub mod error;
pub mod jones;
pub mod numeric;

pub use error::{Error, Result};
