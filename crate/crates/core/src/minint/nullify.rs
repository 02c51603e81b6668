//! Zeroing one column of `C + V·P` while keeping the rest of `V` free.

use crate::error::Result;
use crate::polymat::{hermite_form, Poly, PolyMatrix};

/// One successful column reduction.
///
/// With `U·P = [P̃1; P̃2]` and column `i` of `U·P` equal to `[π, 0, …]ᵀ`,
/// every `V` zeroing column `i` of `C + V·P` is `[Ṽ1 V2]·U` for a free
/// `V2`, and then `C + V·P = C̃ + V2·P̃2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullifyStep {
    pub c_tilde: PolyMatrix,
    pub p2_tilde: PolyMatrix,
    /// `-C_{•i} / π` as a column.
    pub v1_tilde: PolyMatrix,
    pub u: PolyMatrix,
    pub pi: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Nullify {
    /// Column `i` of `C` is already zero; nothing was computed.
    Skipped,
    /// `π` does not divide `C_{•i}`.
    Failed {
        pi: Poly,
        u: PolyMatrix,
    },
    Nullified(NullifyStep),
}

impl Nullify {
    pub fn is_fail(&self) -> bool {
        matches!(self, Nullify::Failed { .. })
    }

    pub fn is_skip(&self) -> bool {
        matches!(self, Nullify::Skipped)
    }

    pub fn step(&self) -> Option<&NullifyStep> {
        match self {
            Nullify::Nullified(s) => Some(s),
            _ => None,
        }
    }
}

/// Attempts to zero column `i` (0-based) of `C + V·P`. A column that is
/// already zero in `C` is skipped without constraining `V`.
pub fn nullify(c: &PolyMatrix, p: &PolyMatrix, i: usize) -> Result<Nullify> {
    check_shapes(c, p, i)?;
    if c.is_zero_column(i) {
        return Ok(Nullify::Skipped);
    }
    reduce_column(c, p, i)
}

/// Like [`nullify`], but a zero column of `C` is only skipped when the
/// column of `P` is zero as well. Otherwise the column stays zero only if
/// `V·P_{•i} = 0`, and that restriction on `V` is recorded as a step with
/// `Ṽ1 = 0`.
pub fn nullify_constrained(c: &PolyMatrix, p: &PolyMatrix, i: usize) -> Result<Nullify> {
    check_shapes(c, p, i)?;
    if c.is_zero_column(i) && p.is_zero_column(i) {
        return Ok(Nullify::Skipped);
    }
    reduce_column(c, p, i)
}

fn check_shapes(c: &PolyMatrix, p: &PolyMatrix, i: usize) -> Result<()> {
    if c.cols() != p.cols() || i >= c.cols() {
        return Err(crate::Error::Dimension(format!(
            "nullify column {i} of C ({}x{}) against P ({}x{})",
            c.rows(),
            c.cols(),
            p.rows(),
            p.cols()
        )));
    }
    Ok(())
}

fn reduce_column(c: &PolyMatrix, p: &PolyMatrix, i: usize) -> Result<Nullify> {
    let col = p.select_columns(&[i]);
    let hf = hermite_form(&col)?;
    let u = hf.u;
    let pi = if p.rows() == 0 {
        Poly::zero()
    } else {
        hf.h[(0, 0)].clone()
    };

    let mut v1 = PolyMatrix::zeros(c.rows(), 1);
    for r in 0..c.rows() {
        match c[(r, i)].div_exact(&pi) {
            Some(k) => v1[(r, 0)] = -k,
            None => return Ok(Nullify::Failed { pi, u }),
        }
    }
    let p_tilde = &u * p;
    let p1 = p_tilde.row_range(0..1);
    let p2_tilde = p_tilde.row_range(1..p.rows());
    let c_tilde = c + &(&v1 * &p1);
    debug_assert!(c_tilde.is_zero_column(i));
    Ok(Nullify::Nullified(NullifyStep {
        c_tilde,
        p2_tilde,
        v1_tilde: v1,
        u,
        pi,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymat::is_unimodular;

    fn ex3() -> (PolyMatrix, PolyMatrix) {
        let p = PolyMatrix::from_int_rows(&[&[&[0, 1], &[0, 1], &[1]], &[&[1, 1], &[0, 1], &[]]]);
        let c = PolyMatrix::from_int_rows(&[&[&[0, -1, 1], &[-1, 1], &[-1]]]);
        (c, p)
    }

    #[test]
    fn first_column_of_worked_example() {
        let (c, p) = ex3();
        let Nullify::Nullified(step) = nullify(&c, &p, 0).unwrap() else {
            panic!("expected success");
        };
        assert!(step.pi.is_one());
        assert!(is_unimodular(&step.u));
        assert!(step.c_tilde.is_zero_column(0));
        let p1 = (&step.u * &p).row_range(0..1);
        assert_eq!(step.c_tilde, &c + &(&step.v1_tilde * &p1));
        assert_eq!(step.v1_tilde, PolyMatrix::from_int_rows(&[&[&[0, 1, -1]]]));
        assert_eq!(
            step.c_tilde,
            PolyMatrix::from_int_rows(&[&[&[], &[-1, 1], &[-1, -1, 1]]])
        );
    }

    #[test]
    fn second_column_fails_on_gcd() {
        let c = PolyMatrix::from_int_rows(&[&[&[], &[-1, 1], &[-1, -1, 1]]]);
        let p = PolyMatrix::from_int_rows(&[&[&[], &[0, -1], &[-1, -1]]]);
        match nullify(&c, &p, 1).unwrap() {
            Nullify::Failed { pi, .. } => assert_eq!(pi, Poly::x()),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn zero_column_is_skipped() {
        let c = PolyMatrix::from_int_rows(&[&[&[], &[1]]]);
        let p = PolyMatrix::from_int_rows(&[&[&[1], &[1]]]);
        assert!(nullify(&c, &p, 0).unwrap().is_skip());
        // the constrained variant still pins V·P_{•0} = 0
        let Nullify::Nullified(step) = nullify_constrained(&c, &p, 0).unwrap() else {
            panic!("expected a constraint step");
        };
        assert!(step.v1_tilde.is_zero());
        assert_eq!(step.p2_tilde.rows(), 0);
    }

    #[test]
    fn empty_p_only_admits_zero_columns() {
        let c = PolyMatrix::from_int_rows(&[&[&[1], &[]]]);
        let p = PolyMatrix::zeros(0, 2);
        assert!(nullify(&c, &p, 0).unwrap().is_fail());
        assert!(nullify_constrained(&c, &p, 1).unwrap().is_skip());
        assert!(nullify(&c, &p, 2).is_err());
    }
}
