//! Controllers in which chosen control variables are inputs.
//!
//! A sensor reading must be an input of the controller: the controller may
//! not constrain it. With `c = (u, y)` and `y` the declared outputs of the
//! plant, a controller `[C1 C2]` with full row rank treats `y` as free
//! exactly when `C1` has full row rank.

use crate::behavior::{Behavior, IoPartition};
use crate::control::{ControlProblem, SynthesisResult};
use crate::error::{Error, Result, SynthesisError, Unsolvable};
use crate::polymat::{hermite_form, smith_form, unimodular_inverse, Poly, PolyMatrix};

/// A controller split into the blocks acting on `u` and on `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedControllerSpec {
    pub c1: PolyMatrix,
    pub c2: PolyMatrix,
}

impl PartitionedControllerSpec {
    /// Splits `c` by the names in `outputs`.
    pub fn split(c: &Behavior, outputs: &[String]) -> Result<Self> {
        let min = c.minimal_rep()?;
        let (u_idx, y_idx) = partition_indices(c.vars(), outputs)?;
        Ok(PartitionedControllerSpec {
            c1: min.rep().select_columns(&u_idx),
            c2: min.rep().select_columns(&y_idx),
        })
    }

    /// `rank C1 = rows`: `y` is left unconstrained.
    pub fn is_input_selectable(&self) -> bool {
        self.c1.rank() == self.c1.rows()
    }
}

fn partition_indices(vars: &[String], outputs: &[String]) -> Result<(Vec<usize>, Vec<usize>)> {
    if let Some(y) = outputs.iter().find(|y| !vars.contains(y)) {
        return Err(Error::Variables(format!("unknown output {y:?}")));
    }
    Ok((0..vars.len()).partition(|&j| !outputs.contains(&vars[j])))
}

/// Whether `c` leaves every name in `declared` free.
pub fn controller_accepts_declared_outputs(c: &Behavior, declared: &[String]) -> Result<bool> {
    Ok(PartitionedControllerSpec::split(c, declared)?.is_input_selectable())
}

/// For `C` and `P` with `rank [P; C] ≥ rows(C)`, finds `V`
/// with `C + V·P` of full row rank. `None` when the rank condition fails.
///
/// With `P = A·D·B` in Smith form and `C' = C·B⁻¹`, a row reduction `L`
/// gives `L·C' = [C11 C12; C21 0; 0 0]`, where the middle block lives on
/// the columns where `D` is nonzero. The zero rows are then filled with
/// unit rows on columns outside a nonsingular minor of `C21`.
pub fn construct_fullrank_v(c: &PolyMatrix, p: &PolyMatrix) -> Result<Option<PolyMatrix>> {
    if c.cols() != p.cols() {
        return Err(Error::Dimension(format!(
            "C has {} columns, P has {}",
            c.cols(),
            p.cols()
        )));
    }
    let rows = c.rows();
    if p.vstack(c).rank() < rows {
        return Ok(None);
    }
    if c.rank() == rows {
        return Ok(Some(PolyMatrix::zeros(rows, p.rows())));
    }

    let sf = smith_form(p)?;
    let pp = sf.rank();
    let q = c.cols();
    let c_prime = c * &sf.v_inv;

    let order: Vec<usize> = (pp..q).chain(0..pp).collect();
    let hf = hermite_form(&c_prime.select_columns(&order))?;
    let split = q - pp;
    let top = hf.pivots.iter().take_while(|&&j| j < split).count();
    let middle = hf.pivots.len() - top;
    let c21 = hf.h.row_range(top..top + middle).column_range(split..q);

    let mut minor: Vec<usize> = Vec::new();
    for j in 0..pp {
        if minor.len() == middle {
            break;
        }
        let mut trial = minor.clone();
        trial.push(j);
        if c21.select_columns(&trial).rank() == trial.len() {
            minor = trial;
        }
    }
    let free: Vec<usize> = (0..pp).filter(|j| !minor.contains(j)).collect();
    let missing = rows - top - middle;
    debug_assert!(free.len() >= missing, "rank condition guarantees room");

    let mut v2 = PolyMatrix::zeros(rows, p.rows());
    for (t, &j) in free.iter().take(missing).enumerate() {
        v2[(top + middle + t, j)] = Poly::one();
    }
    let l_inv = unimodular_inverse(&hf.u)?.expect("Hermite transforms are unimodular");
    let v = &(&l_inv * &v2) * &sf.u_inv;
    debug_assert_eq!((c + &(&v * p)).rank(), rows);
    Ok(Some(v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IoSolution {
    pub result: SynthesisResult,
    pub v: PolyMatrix,
    /// Partition of the controller with the declared outputs as inputs.
    pub partition: Option<IoPartition>,
}

/// Finds a regular controller equivalent to the canonical one that leaves
/// the declared outputs free.
pub fn solve_io_partition(problem: &ControlProblem) -> Result<IoSolution, SynthesisError> {
    if !problem.is_implementable()? {
        return Err(Unsolvable::NotImplementable.into());
    }
    if !problem.is_regularly_implementable()? {
        return Err(Unsolvable::NotRegularlyImplementable.into());
    }
    let c0 = problem.bootstrap_regular_controller()?;
    solve_io_partition_from(problem, &c0)
}

/// Same as [`solve_io_partition`], starting from a given regular
/// controller equivalent to the canonical one.
pub fn solve_io_partition_from(
    problem: &ControlProblem,
    start: &Behavior,
) -> Result<IoSolution, SynthesisError> {
    let c0 = start.minimal_rep()?;
    let pc = problem.control_manifest()?.minimal_rep()?;
    let (u_idx, _) = partition_indices(c0.vars(), problem.declared_outputs())?;
    let c1 = c0.rep().select_columns(&u_idx);
    let p1 = pc.rep().select_columns(&u_idx);

    if p1.vstack(&c1).rank() < c0.rep().rows() {
        return Err(Unsolvable::PartitionConstraint.into());
    }
    let v = construct_fullrank_v(&c1, &p1)?.expect("rank condition checked");
    let controller = Behavior::new(c0.rep() + &(&v * pc.rep()), c0.vars().to_vec())?;
    let certificate = problem.certify(&controller)?;
    let partition = controller.io_partition(problem.declared_outputs())?;
    Ok(IoSolution {
        result: SynthesisResult {
            controller,
            certificate,
        },
        v,
        partition,
    })
}
