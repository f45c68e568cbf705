//! Exact rational scalars and dense matrices over ℚ.

mod matrix;
pub mod modp;
mod rational;

pub use matrix::Matrix;
pub use rational::{
    clear_denominators, is_zero_vector, parse_rational, rational_to_string, serde_rational,
    serde_rational_vec, Rational,
};
