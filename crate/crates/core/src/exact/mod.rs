//! Exact arithmetic: rationals, polynomials, ℚ(t) and dense matrices.

pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod ring;

pub use matrix::{det_bareiss, det_ratfunc, Matrix, SymMatrix};
pub use poly::{poly_i, Degree, Poly};
pub use ratfunc::RatFunc;
pub use ring::{format_rational, frac, parse_rational, rat, rpow, Field, Rational, Ring};
