//! Factorizations and solvers built on the normal forms.

use super::hermite::hermite_form;
use super::smith::smith_form;
use super::{Poly, PolyMatrix};
use crate::error::{Error, Result};

/// Monic gcd `π` of a column together with a Bezout row `v`, `v·col = π`.
/// An all-zero column gives `π = 0` and `v = 0`.
pub fn col_gcd_bezout(col: &[Poly]) -> (Poly, Vec<Poly>) {
    let mut g = Poly::zero();
    let mut v = vec![Poly::zero(); col.len()];
    for (k, c) in col.iter().enumerate() {
        let (g2, s, t) = Poly::gcd_bezout(&g, c);
        for e in v.iter_mut().take(k) {
            *e = &*e * &s;
        }
        v[k] = t;
        g = g2;
    }
    if g.is_zero() {
        v.iter_mut().for_each(|e| *e = Poly::zero());
    }
    (g, v)
}

/// Square with a nonzero constant determinant.
pub fn is_unimodular(m: &PolyMatrix) -> bool {
    m.is_square() && m.determinant().is_unit()
}

/// Inverse of a unimodular matrix; `None` if `m` is not unimodular.
pub fn unimodular_inverse(m: &PolyMatrix) -> Result<Option<PolyMatrix>> {
    if !m.is_square() {
        return Ok(None);
    }
    let hf = hermite_form(m)?;
    Ok(hf.h.is_identity().then_some(hf.u))
}

/// For full-row-rank `r`, finds unimodular `w` with `r·w = [d 0]`,
/// `d` square and nonsingular. Returns `(w, d)`.
pub fn column_compress(r: &PolyMatrix) -> Result<(PolyMatrix, PolyMatrix)> {
    let hf = hermite_form(&r.transpose())?;
    if hf.rank() != r.rows() {
        return Err(Error::NotFullRowRank("column_compress input"));
    }
    let w = hf.u.transpose();
    let d = hf.h.row_range(0..r.rows()).transpose();
    Ok((w, d))
}

/// Solves `x·a = b` over Q[x]. `Ok(None)` when some row of `b` lies
/// outside the row module of `a`.
pub fn solve_left_division(a: &PolyMatrix, b: &PolyMatrix) -> Result<Option<PolyMatrix>> {
    if a.cols() != b.cols() {
        return Err(Error::Dimension(format!(
            "left division needs equal column counts, got {} and {}",
            a.cols(),
            b.cols()
        )));
    }
    let hf = hermite_form(a)?;
    let mut x = PolyMatrix::zeros(b.rows(), a.rows());
    for i in 0..b.rows() {
        let mut rest: Vec<Poly> = b.row(i).to_vec();
        let mut y = vec![Poly::zero(); a.rows()];
        for (k, &pj) in hf.pivots.iter().enumerate() {
            if rest[pj].is_zero() {
                continue;
            }
            let Some(q) = rest[pj].div_exact(&hf.h[(k, pj)]) else {
                return Ok(None);
            };
            for (j, e) in rest.iter_mut().enumerate().skip(pj) {
                *e = &*e - &(&q * &hf.h[(k, j)]);
            }
            y[k] = q;
        }
        if rest.iter().any(|e| !e.is_zero()) {
            return Ok(None);
        }
        for j in 0..a.rows() {
            let mut acc = Poly::zero();
            for (k, yk) in y.iter().enumerate() {
                if !yk.is_zero() {
                    acc = &acc + &(yk * &hf.u[(k, j)]);
                }
            }
            x[(i, j)] = acc;
        }
    }
    Ok(Some(x))
}

/// Completes a left-prime `u1` (Smith form `[I 0]`) to a unimodular
/// `[u1; u2]`. `Ok(None)` when `u1` is not left prime.
pub fn unimodular_completion(u1: &PolyMatrix) -> Result<Option<PolyMatrix>> {
    let (q, n) = u1.shape();
    if q > n {
        return Err(Error::Dimension(format!(
            "completion needs rows <= cols, got {q}x{n}"
        )));
    }
    let sf = smith_form(u1)?;
    let factors = sf.invariant_factors();
    if factors.len() != q || !factors.iter().all(Poly::is_one) {
        return Ok(None);
    }
    // u1 = u·[I 0]·v, so [u1; v_bottom] = diag(u, I)·v
    Ok(Some(sf.v.row_range(q..n)))
}
