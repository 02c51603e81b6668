//! Smith normal form over Q[x].
//!
//! Row and column Euclidean elimination around a minimum-degree pivot
//! (ties broken by smallest row, then smallest column), followed by a
//! repair step whenever the pivot fails to divide the trailing block.

use super::limits::check_degree;
use super::{Poly, PolyMatrix};
use crate::error::Result;

/// `m = u · d · v` with `u`, `v` unimodular and `d` diagonal-rectangular,
/// monic diagonal entries forming a divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: PolyMatrix,
    pub d: PolyMatrix,
    pub v: PolyMatrix,
    /// `u⁻¹`, so that `u_inv · m · v_inv = d`.
    pub u_inv: PolyMatrix,
    /// `v⁻¹`.
    pub v_inv: PolyMatrix,
}

impl SmithForm {
    /// Nonzero invariant factors in order.
    pub fn invariant_factors(&self) -> Vec<Poly> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|p| !p.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct SmithCalc {
    a: PolyMatrix,
    left: PolyMatrix,
    left_inv: PolyMatrix,
    right: PolyMatrix,
    right_inv: PolyMatrix,
}

impl SmithCalc {
    fn row_add(&mut self, dst: usize, src: usize, f: &Poly) {
        self.a.add_row_multiple(dst, src, f);
        self.left.add_row_multiple(dst, src, f);
        self.left_inv.add_column_multiple(src, dst, &-f);
    }

    fn col_add(&mut self, dst: usize, src: usize, f: &Poly) {
        self.a.add_column_multiple(dst, src, f);
        self.right.add_column_multiple(dst, src, f);
        self.right_inv.add_row_multiple(src, dst, &-f);
    }

    fn row_swap(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        self.left.swap_rows(x, y);
        self.left_inv.swap_columns(x, y);
    }

    fn col_swap(&mut self, x: usize, y: usize) {
        self.a.swap_columns(x, y);
        self.right.swap_columns(x, y);
        self.right_inv.swap_rows(x, y);
    }

    fn check(&self) -> Result<()> {
        check_degree(&self.a)?;
        check_degree(&self.left)?;
        check_degree(&self.left_inv)?;
        check_degree(&self.right)?;
        check_degree(&self.right_inv)
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let (m, n) = self.a.shape();
        (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.a[(i, j)].is_zero())
            .min_by_key(|&(i, j)| (self.a[(i, j)].degree(), i, j))
    }

    /// Returns false once the trailing block from `t` is zero.
    fn diagonalize_at(&mut self, t: usize) -> Result<bool> {
        let (m, n) = self.a.shape();
        loop {
            let Some((pi, pj)) = self.min_pivot(t) else {
                return Ok(false);
            };
            self.row_swap(t, pi);
            self.col_swap(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if self.a[(i, t)].is_zero() {
                    continue;
                }
                let (q, r) = self.a[(i, t)].div_rem(&self.a[(t, t)]);
                self.row_add(i, t, &-q);
                clean &= r.is_zero();
            }
            for j in t + 1..n {
                if self.a[(t, j)].is_zero() {
                    continue;
                }
                let (q, r) = self.a[(t, j)].div_rem(&self.a[(t, t)]);
                self.col_add(j, t, &-q);
                clean &= r.is_zero();
            }
            self.check()?;
            if !clean {
                continue;
            }

            // divisibility repair: pull an offending row into the pivot row
            let pivot = self.a[(t, t)].clone();
            let offending =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !pivot.divides(&self.a[(i, j)])));
            match offending {
                Some(i) => self.row_add(t, i, &Poly::one()),
                None => break,
            }
        }
        let lead = self.a[(t, t)].lead();
        if !num_traits::One::is_one(&lead) {
            let inv = lead.recip();
            self.a.scale_row(t, &inv);
            self.left.scale_row(t, &inv);
            self.left_inv.scale_column(t, &lead);
        }
        Ok(true)
    }
}

pub fn smith_form(m: &PolyMatrix) -> Result<SmithForm> {
    let (rows, cols) = m.shape();
    let mut calc = SmithCalc {
        a: m.clone(),
        left: PolyMatrix::identity(rows),
        left_inv: PolyMatrix::identity(rows),
        right: PolyMatrix::identity(cols),
        right_inv: PolyMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        if !calc.diagonalize_at(t)? {
            break;
        }
    }
    Ok(SmithForm {
        u: calc.left_inv,
        d: calc.a,
        v: calc.right_inv,
        u_inv: calc.left,
        v_inv: calc.right,
    })
}
