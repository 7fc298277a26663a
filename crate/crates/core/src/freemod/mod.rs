//! Exact coefficients and free modules over forest bases.

mod coefficient;
mod lincomb;

pub use coefficient::{parse_rational, rational, Coefficient, Monomial, Rational};
pub use lincomb::{act_left, act_right, concat_lin, tensor, Basis, LinComb, Pair, Triple};
