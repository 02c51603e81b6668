//! Row Hermite form over Q[x].

use super::limits::check_degree;
use super::{Poly, PolyMatrix};
use crate::error::Result;

/// `h = u · m` with `u` unimodular and `h` in row echelon form:
/// zero rows at the bottom, monic pivots, and every entry above a pivot of
/// strictly smaller degree than that pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: PolyMatrix,
    pub u: PolyMatrix,
    /// Pivot column of each nonzero row of `h`, strictly increasing.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of `h`: a full-row-rank generator set of the row module.
    pub fn basis(&self) -> PolyMatrix {
        self.h.row_range(0..self.rank())
    }
}

/// Row operations applied to a target and mirrored on a transform.
pub(crate) struct RowReducer {
    pub m: PolyMatrix,
    pub u: PolyMatrix,
}

impl RowReducer {
    pub fn new(m: PolyMatrix) -> Self {
        let u = PolyMatrix::identity(m.rows());
        RowReducer { m, u }
    }

    pub fn swap(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    pub fn add_multiple(&mut self, dst: usize, src: usize, f: &Poly) {
        self.m.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
    }

    pub fn make_monic(&mut self, i: usize, j: usize) {
        let lead = self.m[(i, j)].lead();
        if !num_traits::One::is_one(&lead) {
            let inv = lead.recip();
            self.m.scale_row(i, &inv);
            self.u.scale_row(i, &inv);
        }
    }

    /// Euclidean elimination in column `j` over rows `top..`, leaving a
    /// single nonzero entry at `(top, j)`. Returns false if the column is
    /// already zero there.
    pub fn eliminate_below(&mut self, top: usize, j: usize) -> Result<bool> {
        loop {
            let pivot = (top..self.m.rows())
                .filter(|&i| !self.m[(i, j)].is_zero())
                .min_by_key(|&i| (self.m[(i, j)].degree(), i));
            let Some(p) = pivot else {
                return Ok(false);
            };
            self.swap(top, p);
            let mut clean = true;
            for i in top + 1..self.m.rows() {
                if self.m[(i, j)].is_zero() {
                    continue;
                }
                let (q, r) = self.m[(i, j)].div_rem(&self.m[(top, j)]);
                self.add_multiple(i, top, &-q);
                clean &= r.is_zero();
            }
            check_degree(&self.m)?;
            check_degree(&self.u)?;
            if clean {
                return Ok(true);
            }
        }
    }
}

pub fn hermite_form(m: &PolyMatrix) -> Result<HermiteForm> {
    let mut red = RowReducer::new(m.clone());
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        if !red.eliminate_below(r, j)? {
            continue;
        }
        red.make_monic(r, j);
        for i in 0..r {
            if red.m[(i, j)].is_zero() {
                continue;
            }
            let (q, _) = red.m[(i, j)].div_rem(&red.m[(r, j)]);
            red.add_multiple(i, r, &-q);
        }
        check_degree(&red.m)?;
        check_degree(&red.u)?;
        pivots.push(j);
        r += 1;
    }
    Ok(HermiteForm {
        h: red.m,
        u: red.u,
        pivots,
    })
}
