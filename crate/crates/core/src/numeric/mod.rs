//! Numeric substrate: extended-range complex numbers, roots of unity and the
//! Lobachevsky function.

mod ext;
mod lobachevsky;
mod root;

pub use ext::ExtComplex;
pub use lobachevsky::{lobachevsky, LobachevskyEvaluator, MIN_TOLERANCE};
pub use root::{RationalAngle, RootContext, UnitPoint};
