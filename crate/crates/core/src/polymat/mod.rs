//! Exact polynomial and polynomial-matrix algebra over Q[x].

mod hermite;
mod limits;
mod matrix;
mod ops;
mod poly;
mod smith;

pub use hermite::{hermite_form, HermiteForm};
pub use limits::{degree_cap, with_degree_cap, DEFAULT_DEGREE_CAP};
pub use matrix::PolyMatrix;
pub use ops::{
    col_gcd_bezout, column_compress, is_unimodular, solve_left_division, unimodular_completion,
    unimodular_inverse,
};
pub use poly::{format_rational, parse_rational, ParseRationalError, Poly, Rational};
pub use smith::{smith_form, SmithForm};
