//! Brute-force reference for the column search.

use itertools::Itertools;

use crate::error::Result;
use crate::polymat::{solve_left_division, PolyMatrix};

/// Whether some `V` makes every column in `cols` of `C + V·P` zero, i.e.
/// whether `V·P_J = -C_J` is solvable.
pub fn can_nullify(c: &PolyMatrix, p: &PolyMatrix, cols: &[usize]) -> Result<bool> {
    let pj = p.select_columns(cols);
    let cj = -&c.select_columns(cols);
    Ok(solve_left_division(&pj, &cj)?.is_some())
}

/// Largest nullifiable column set, trying every subset by descending size
/// and in lexicographic order within a size.
pub fn oracle_max_nullifiable(c: &PolyMatrix, p: &PolyMatrix) -> Result<(usize, Vec<usize>)> {
    for size in (1..=c.cols()).rev() {
        for cols in (0..c.cols()).combinations(size) {
            if can_nullify(c, p, &cols)? {
                return Ok((size, cols));
            }
        }
    }
    Ok((0, Vec::new()))
}
