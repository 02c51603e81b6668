//! Behaviors as kernel representations over named variables.
//!
//! Every comparison is algebraic: `ker R1 ⊆ ker R2` exactly when the rows
//! of `R2` lie in the row module of `R1`, which is exact for smooth
//! trajectories.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polymat::{hermite_form, smith_form, solve_left_division, PolyMatrix};

/// `{ w | rep(d/dt) w = 0 }`, one column per variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BehaviorRepr")]
pub struct Behavior {
    rep: PolyMatrix,
    vars: Vec<String>,
}

#[derive(Deserialize)]
struct BehaviorRepr {
    rep: PolyMatrix,
    vars: Vec<String>,
}

impl TryFrom<BehaviorRepr> for Behavior {
    type Error = Error;
    fn try_from(r: BehaviorRepr) -> Result<Self> {
        let cols = r.vars.len();
        Behavior::new(r.rep.with_cols_if_empty(cols), r.vars)
    }
}

/// Output/input split of a behavior's variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IoPartition {
    pub outputs: Vec<String>,
    pub inputs: Vec<String>,
}

pub(crate) fn check_unique(names: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::Variables(format!("duplicate variable name {n:?}")));
        }
    }
    Ok(())
}

impl Behavior {
    pub fn new(rep: PolyMatrix, vars: Vec<String>) -> Result<Self> {
        if rep.cols() != vars.len() {
            return Err(Error::Dimension(format!(
                "representation has {} columns for {} variables",
                rep.cols(),
                vars.len()
            )));
        }
        check_unique(&vars)?;
        Ok(Behavior { rep, vars })
    }

    /// Convenience constructor from string-like names.
    pub fn with_vars<S: AsRef<str>>(rep: PolyMatrix, vars: &[S]) -> Result<Self> {
        Self::new(rep, vars.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// Every trajectory: the empty representation.
    pub fn full(vars: Vec<String>) -> Self {
        let n = vars.len();
        Behavior {
            rep: PolyMatrix::zeros(0, n),
            vars,
        }
    }

    /// Only the zero trajectory.
    pub fn zero(vars: Vec<String>) -> Self {
        let n = vars.len();
        Behavior {
            rep: PolyMatrix::identity(n),
            vars,
        }
    }

    pub fn rep(&self) -> &PolyMatrix {
        &self.rep
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn into_rep(self) -> PolyMatrix {
        self.rep
    }

    /// Number of outputs, the rank of any kernel representation.
    pub fn outputs(&self) -> usize {
        self.rep.rank()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Variables(format!("unknown variable {name:?}")))
    }

    fn same_vars(&self, other: &Behavior) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::Variables(format!(
                "behaviors over different variables: {:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    /// Full-row-rank representation of the same behavior.
    pub fn minimal_rep(&self) -> Result<Behavior> {
        let hf = hermite_form(&self.rep)?;
        Ok(Behavior {
            rep: hf.basis(),
            vars: self.vars.clone(),
        })
    }

    pub fn is_minimal(&self) -> bool {
        self.rep.is_full_row_rank()
    }

    /// Projection onto the variables not named in `drop`.
    pub fn eliminate<S: AsRef<str>>(&self, drop: &[S]) -> Result<Behavior> {
        let idx = drop
            .iter()
            .map(|d| self.index_of(d.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.eliminate_columns(&idx)
    }

    /// Projection by column indices. Orders the dropped columns first and
    /// takes the Hermite rows whose pivots fall in the kept block: their
    /// kept part is the manifest representation, and the rows above have a
    /// full-row-rank dropped block.
    pub(crate) fn eliminate_columns(&self, drop: &[usize]) -> Result<Behavior> {
        let drop: BTreeSet<usize> = drop.iter().copied().collect();
        let kept: Vec<usize> = (0..self.vars.len()).filter(|j| !drop.contains(j)).collect();
        let order: Vec<usize> = drop.iter().copied().chain(kept.iter().copied()).collect();
        let hf = hermite_form(&self.rep.select_columns(&order))?;
        let first_kept = hf
            .pivots
            .iter()
            .position(|&p| p >= drop.len())
            .unwrap_or(hf.rank());
        let rep =
            hf.h.row_range(first_kept..hf.rank())
                .column_range(drop.len()..order.len());
        Ok(Behavior {
            rep,
            vars: kept.iter().map(|&j| self.vars[j].clone()).collect(),
        })
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Behavior) -> Result<bool> {
        self.same_vars(other)?;
        Ok(solve_left_division(&self.rep, &other.rep)?.is_some())
    }

    /// Mutual inclusion.
    pub fn same_behavior(&self, other: &Behavior) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    pub fn intersection(&self, other: &Behavior) -> Result<Behavior> {
        self.same_vars(other)?;
        Ok(Behavior {
            rep: self.rep.vstack(&other.rep),
            vars: self.vars.clone(),
        })
    }

    /// `{ w1 + w2 | w1 ∈ self, w2 ∈ other }`, from the auxiliary system
    /// `R1 (w - a) = 0, R2 a = 0` with `a` eliminated.
    pub fn sum(&self, other: &Behavior) -> Result<Behavior> {
        self.same_vars(other)?;
        let n = self.vars.len();
        let top = self.rep.hstack(&-&self.rep);
        let bottom = PolyMatrix::zeros(other.rep.rows(), n).hstack(&other.rep);
        let aux = Behavior {
            rep: top.vstack(&bottom),
            vars: (0..2 * n).map(|i| format!("#{i}")).collect(),
        };
        let mut out = aux.eliminate_columns(&(n..2 * n).collect::<Vec<_>>())?;
        out.vars = self.vars.clone();
        Ok(out)
    }

    /// Largest controllable sub-behavior: with a minimal `R = U [Δ 0] V`,
    /// the kernel of the first `rank` rows of `V`.
    pub fn controllable_part(&self) -> Result<Behavior> {
        let min = self.minimal_rep()?;
        let r = min.rep.rows();
        if r == 0 {
            return Ok(min);
        }
        let sf = smith_form(&min.rep)?;
        Ok(Behavior {
            rep: sf.v.row_range(0..r),
            vars: self.vars.clone(),
        })
    }

    /// Variables whose column vanishes in a minimal representation.
    pub fn irrelevant_variables(&self) -> Result<Vec<String>> {
        let min = self.minimal_rep()?;
        Ok(min
            .rep
            .zero_columns()
            .into_iter()
            .map(|j| self.vars[j].clone())
            .collect())
    }

    /// Finds an input-output partition with every name in `desired_inputs`
    /// on the input side: a square nonsingular output block drawn from the
    /// remaining columns, first such subset in column order.
    pub fn io_partition<S: AsRef<str>>(&self, desired_inputs: &[S]) -> Result<Option<IoPartition>> {
        let forced = desired_inputs
            .iter()
            .map(|d| self.index_of(d.as_ref()))
            .collect::<Result<BTreeSet<_>>>()?;
        let min = self.minimal_rep()?;
        let p = min.rep.rows();
        let candidates: Vec<usize> = (0..self.vars.len())
            .filter(|j| !forced.contains(j))
            .collect();
        for combo in candidates.into_iter().combinations(p) {
            if min.rep.select_columns(&combo).determinant().is_zero() {
                continue;
            }
            let names = |pick: &dyn Fn(usize) -> bool| {
                (0..self.vars.len())
                    .filter(|&j| pick(j))
                    .map(|j| self.vars[j].clone())
                    .collect::<Vec<_>>()
            };
            return Ok(Some(IoPartition {
                outputs: names(&|j| combo.contains(&j)),
                inputs: names(&|j| !combo.contains(&j)),
            }));
        }
        Ok(None)
    }

    /// Same behavior with columns reordered to `order` (names).
    pub fn reorder<S: AsRef<str>>(&self, order: &[S]) -> Result<Behavior> {
        if order.len() != self.vars.len() {
            return Err(Error::Variables("reorder must name every variable".into()));
        }
        let idx = order
            .iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Behavior::new(
            self.rep.select_columns(&idx),
            idx.iter().map(|&j| self.vars[j].clone()).collect(),
        )
    }
}
