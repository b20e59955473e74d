//! Colored Jones evaluations: Morton's torus-knot formula, the clasp factor
//! `xi_{N,n}`, twisted Whitehead links and Whitehead doubles of torus knots.

mod clasp;
mod knot;
mod torus;
mod whitehead;

pub use clasp::{b_coeff, b_coeff_as_printed, xi_at_root, xi_generic};
pub use knot::{JonesValue, KnotSpec, Pattern, TorusKnot};
pub use torus::{
    hat_jones_torus, hat_jones_torus_tderiv, jones_torus, jones_torus_limit, kashaev_torus, morton_quotient,
    morton_terms, QuarterLaurent,
};
pub use whitehead::{
    angular_limit, jones_wd_at_root, jones_wd_generic, jones_wl_at_root, jones_wl_generic, kashaev_value,
};

pub(crate) use torus::hat_and_tderiv;
