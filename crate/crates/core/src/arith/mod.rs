//! Exact hyperfactorial arithmetic and the closed-form counts built on it.

pub mod asymptotics;
pub mod factored;
pub mod formulas;
pub mod halfint;
pub mod hyper;
pub mod value;

pub use asymptotics::{
    finite_shamrock_ratio, glaisher_ratio, limit_shamrock_ratio, ln_hyperfactorial, omega_finite, omega_single,
};
pub use factored::{hyperfactorial_factored, Factored};
pub use formulas::{
    cored_formula, formula_for, hexagon_formula, macmahon_p, magnet_bar_formula, parity, r_quotient, sc_formula, sc_quotient,
    shamrock_ratio, shamrock_ratio_factored, shamrock_ratio_symmetric, HyperQuotient, Parity,
};
pub use halfint::HalfInt;
pub use hyper::{factorial, gamma, hyperfactorial};
pub use value::SqrtPiScaled;
