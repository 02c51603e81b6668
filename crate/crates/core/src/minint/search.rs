//! Depth-first search for a largest set of columns of `C + V·P` that can be
//! zeroed simultaneously.

use super::nullify::{nullify_constrained, Nullify, NullifyStep};
use super::strings::SearchString;
use crate::error::{Error, Result};
use crate::polymat::PolyMatrix;

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Give up with [`Error::SearchLimit`] after this many nullify calls.
    pub max_nodes: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullificationPlan {
    pub v: PolyMatrix,
    /// 0-based indices of the zero columns of `C + V·P`.
    pub zero_cols: Vec<usize>,
    /// Best node found; symbols are 1-based column indices.
    pub best: SearchString,
    pub nodes_visited: usize,
    /// Upper bound that was used for early stopping.
    pub bound: usize,
}

impl NullificationPlan {
    pub fn count(&self) -> usize {
        self.zero_cols.len()
    }
}

struct Frame {
    node: SearchString,
    step: Option<NullifyStep>,
    c: PolyMatrix,
    p: PolyMatrix,
    next_child: usize,
}

/// Finds `V` maximising the number of zero columns of `C + V·P`.
///
/// Feasible column sets are closed under subsets, so a failed node prunes
/// its whole subtree. A subtree is also skipped when even its longest
/// string cannot beat the best found. Ties go to the string found first in
/// preorder, which is the smallest one.
pub fn compute_v(c: &PolyMatrix, p: &PolyMatrix, opts: SearchOptions) -> Result<NullificationPlan> {
    if c.cols() != p.cols() {
        return Err(Error::Dimension(format!(
            "C has {} columns, P has {}",
            c.cols(),
            p.cols()
        )));
    }
    let ncols = c.cols();
    let bound = upper_bound(c, p);

    if c.zero_columns().len() >= bound {
        return Ok(NullificationPlan {
            v: PolyMatrix::zeros(c.rows(), p.rows()),
            zero_cols: c.zero_columns(),
            best: SearchString::empty(),
            nodes_visited: 0,
            bound,
        });
    }

    let mut stack = vec![Frame {
        node: SearchString::empty(),
        step: None,
        c: c.clone(),
        p: p.clone(),
        next_child: 1,
    }];
    let mut best_len = 0;
    let mut best_v = PolyMatrix::zeros(c.rows(), p.rows());
    let mut best = SearchString::empty();
    let mut visited = 0usize;

    while let Some(top) = stack.last_mut() {
        if best_len >= bound {
            break;
        }
        let sym = top.next_child;
        if sym > ncols {
            stack.pop();
            continue;
        }
        top.next_child += 1;
        let node = top.node.child(sym).expect("increasing child");
        if node.subtree_depth(ncols) <= best_len {
            // siblings further right are shallower still
            top.next_child = ncols + 1;
            continue;
        }

        if let Some(limit) = opts.max_nodes {
            if visited >= limit {
                return Err(Error::SearchLimit(limit));
            }
        }
        visited += 1;

        let (c_next, p_next, step) = match nullify_constrained(&top.c, &top.p, sym - 1)? {
            Nullify::Failed { .. } => continue,
            Nullify::Skipped => (top.c.clone(), top.p.clone(), None),
            Nullify::Nullified(step) => (step.c_tilde.clone(), step.p2_tilde.clone(), Some(step)),
        };
        stack.push(Frame {
            node: node.clone(),
            step,
            c: c_next,
            p: p_next,
            next_child: sym + 1,
        });
        if node.len() > best_len {
            best_len = node.len();
            best_v = compose_v(c.rows(), &stack);
            best = node;
        }
    }

    let zero_cols = (c + &(&best_v * p)).zero_columns();
    debug_assert!(best.symbols().iter().all(|s| zero_cols.contains(&(s - 1))));
    Ok(NullificationPlan {
        v: best_v,
        zero_cols,
        best,
        nodes_visited: visited,
        bound,
    })
}

/// `c − rank C` when `[P; C]` is regular (its rank splits as
/// `rank P + rank C`), otherwise the trivial `c`.
fn upper_bound(c: &PolyMatrix, p: &PolyMatrix) -> usize {
    let rc = c.rank();
    let stacked = p.vstack(c).rank();
    if stacked == p.rank() + rc {
        c.cols() - rc
    } else {
        c.cols()
    }
}

/// Walks the path back to the root, `V ← [Ṽ1 | V]·U` at every step.
fn compose_v(q: usize, path: &[Frame]) -> PolyMatrix {
    let deepest = path.last().expect("non-empty path");
    let mut v = PolyMatrix::zeros(q, deepest.p.rows());
    for frame in path.iter().rev() {
        if let Some(step) = &frame.step {
            v = &step.v1_tilde.hstack(&v) * &step.u;
        }
    }
    v
}
