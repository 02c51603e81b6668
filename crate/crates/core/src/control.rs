//! Plants with control variables: implementability, regularity, the
//! canonical controller and the regular controllers equivalent to it.
//!
//! The full plant is `R(d/dt) w + M(d/dt) c = 0` and the specification is
//! `S(d/dt) w = 0`.

use serde::Serialize;

use crate::behavior::{check_unique, Behavior};
use crate::error::{Error, Result, SynthesisError, Unsolvable};
use crate::iopart;
use crate::polymat::{solve_left_division, unimodular_completion, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlProblem {
    r: PolyMatrix,
    m: PolyMatrix,
    s: PolyMatrix,
    w_vars: Vec<String>,
    c_vars: Vec<String>,
    declared_outputs: Vec<String>,
}

/// Checks re-derived from a controller and its problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub implementable: bool,
    pub regularly_implementable: bool,
    pub regular: bool,
    pub implements_spec: bool,
    pub equivalent_to_canonical: bool,
    /// Declared outputs can sit in the controller's input part. `None`
    /// when the problem declares no outputs.
    pub input_selectable: Option<bool>,
}

impl Certificate {
    /// Regular, implements the specification, equivalent to the canonical
    /// controller, and respects declared outputs when there are any.
    pub fn passed(&self) -> bool {
        self.regular
            && self.implements_spec
            && self.equivalent_to_canonical
            && self.input_selectable.unwrap_or(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisResult {
    pub controller: Behavior,
    pub certificate: Certificate,
}

impl ControlProblem {
    pub fn new(
        r: PolyMatrix,
        m: PolyMatrix,
        s: PolyMatrix,
        w_vars: Vec<String>,
        c_vars: Vec<String>,
        declared_outputs: Vec<String>,
    ) -> Result<Self> {
        let r = r.with_cols_if_empty(w_vars.len());
        let m = m.with_cols_if_empty(c_vars.len());
        let s = s.with_cols_if_empty(w_vars.len());
        let dim = |what: &str, got: usize, want: usize| {
            Error::Dimension(format!("{what} has {got}, expected {want}"))
        };
        if r.cols() != w_vars.len() {
            return Err(dim("R columns", r.cols(), w_vars.len()));
        }
        if m.cols() != c_vars.len() {
            return Err(dim("M columns", m.cols(), c_vars.len()));
        }
        if r.rows() != m.rows() {
            return Err(dim("M rows", m.rows(), r.rows()));
        }
        if s.cols() != w_vars.len() {
            return Err(dim("S columns", s.cols(), w_vars.len()));
        }
        let all: Vec<String> = w_vars.iter().chain(&c_vars).cloned().collect();
        check_unique(&all)?;
        check_unique(&declared_outputs)?;
        if let Some(y) = declared_outputs.iter().find(|y| !c_vars.contains(y)) {
            return Err(Error::Variables(format!(
                "declared output {y:?} is not a control variable"
            )));
        }
        Ok(ControlProblem {
            r,
            m,
            s,
            w_vars,
            c_vars,
            declared_outputs,
        })
    }

    /// Same plant and specification with a different set of declared outputs.
    pub fn with_declared_outputs(&self, declared_outputs: Vec<String>) -> Result<Self> {
        Self::new(
            self.r.clone(),
            self.m.clone(),
            self.s.clone(),
            self.w_vars.clone(),
            self.c_vars.clone(),
            declared_outputs,
        )
    }

    pub fn r(&self) -> &PolyMatrix {
        &self.r
    }

    pub fn m(&self) -> &PolyMatrix {
        &self.m
    }

    pub fn s(&self) -> &PolyMatrix {
        &self.s
    }

    pub fn w_vars(&self) -> &[String] {
        &self.w_vars
    }

    pub fn c_vars(&self) -> &[String] {
        &self.c_vars
    }

    pub fn declared_outputs(&self) -> &[String] {
        &self.declared_outputs
    }

    fn all_vars(&self) -> Vec<String> {
        self.w_vars.iter().chain(&self.c_vars).cloned().collect()
    }

    fn w_indices(&self) -> Vec<usize> {
        (0..self.w_vars.len()).collect()
    }

    fn c_indices(&self) -> Vec<usize> {
        (self.w_vars.len()..self.w_vars.len() + self.c_vars.len()).collect()
    }

    /// `[R M]` over `(w, c)`.
    pub fn full_plant(&self) -> Behavior {
        Behavior::new(self.r.hstack(&self.m), self.all_vars()).expect("validated at construction")
    }

    pub fn specification(&self) -> Behavior {
        Behavior::new(self.s.clone(), self.w_vars.clone()).expect("validated at construction")
    }

    fn check_controller(&self, c: &Behavior) -> Result<()> {
        if c.vars() != self.c_vars.as_slice() {
            return Err(Error::Variables(format!(
                "controller variables {:?} differ from control variables {:?}",
                c.vars(),
                self.c_vars
            )));
        }
        Ok(())
    }

    /// `{ w | (w, 0) ∈ P_full }`.
    pub fn hidden_behavior(&self) -> Behavior {
        Behavior::new(self.r.clone(), self.w_vars.clone()).expect("validated at construction")
    }

    /// Projection of the full plant onto `w`.
    pub fn manifest_behavior(&self) -> Result<Behavior> {
        self.full_plant().eliminate_columns(&self.c_indices())
    }

    /// Projection of the full plant onto `c`.
    pub fn control_manifest(&self) -> Result<Behavior> {
        self.full_plant().eliminate_columns(&self.w_indices())
    }

    /// `w` eliminated from `[R M; S 0]`.
    pub fn canonical_controller(&self) -> Result<Behavior> {
        let lower = self
            .s
            .hstack(&PolyMatrix::zeros(self.s.rows(), self.c_vars.len()));
        let stacked = Behavior::new(self.r.hstack(&self.m).vstack(&lower), self.all_vars())?;
        stacked.eliminate_columns(&self.w_indices())
    }

    fn interconnection_rep(&self, c: &Behavior) -> PolyMatrix {
        let lower = PolyMatrix::zeros(c.rep().rows(), self.w_vars.len()).hstack(c.rep());
        self.r.hstack(&self.m).vstack(&lower)
    }

    /// `c` eliminated from `[R M; 0 C]`.
    pub fn controlled_behavior(&self, c: &Behavior) -> Result<Behavior> {
        self.check_controller(c)?;
        Behavior::new(self.interconnection_rep(c), self.all_vars())?
            .eliminate_columns(&self.c_indices())
    }

    /// `N ⊆ S ⊆ P`.
    pub fn is_implementable(&self) -> Result<bool> {
        let spec = self.specification();
        Ok(self.hidden_behavior().is_subset_of(&spec)?
            && spec.is_subset_of(&self.manifest_behavior()?)?)
    }

    /// `rank [R M; 0 C] = rank [R M] + rank C`.
    pub fn is_regular(&self, c: &Behavior) -> Result<bool> {
        self.check_controller(c)?;
        let stacked = self.interconnection_rep(c).rank();
        Ok(stacked == self.r.hstack(&self.m).rank() + c.rep().rank())
    }

    /// Implementable and `S + P^ctr = P`.
    pub fn is_regularly_implementable(&self) -> Result<bool> {
        if !self.is_implementable()? {
            return Ok(false);
        }
        let p = self.manifest_behavior()?;
        let sum = self.specification().sum(&p.controllable_part()?)?;
        sum.same_behavior(&p)
    }

    /// Constructs one regular controller equivalent to the canonical one.
    ///
    /// With `P` a minimal representation of the control manifest behavior
    /// and `T` one of `P_c ∩ C_can`, write `P = U1·T`. Completing `U1` to a
    /// unimodular `[U1; U2]` gives the controller `ker(U2·T)`; the completion
    /// exists exactly when the specification is regularly implementable.
    pub fn bootstrap_regular_controller(&self) -> Result<Behavior, SynthesisError> {
        if !self.is_implementable()? {
            return Err(Unsolvable::NotImplementable.into());
        }
        let pc = self.control_manifest()?.minimal_rep()?;
        let can = self.canonical_controller()?.minimal_rep()?;
        let t = pc.intersection(&can)?.minimal_rep()?;
        let u1 = solve_left_division(t.rep(), pc.rep())?.expect("P_c ∩ C_can is contained in P_c");
        let Some(u2) = unimodular_completion(&u1)? else {
            return Err(Unsolvable::NotRegularlyImplementable.into());
        };
        Ok(Behavior::new(&u2 * t.rep(), self.c_vars.clone())?)
    }

    /// `C ∩ P_c = C_can ∩ P_c`.
    pub fn is_equivalent_to_canonical(&self, c: &Behavior) -> Result<bool> {
        self.check_controller(c)?;
        let pc = self.control_manifest()?;
        let can = self.canonical_controller()?;
        c.intersection(&pc)?.same_behavior(&can.intersection(&pc)?)
    }

    /// Recomputes every check from scratch.
    pub fn certify(&self, c: &Behavior) -> Result<Certificate> {
        self.check_controller(c)?;
        let implementable = self.is_implementable()?;
        let regularly_implementable = implementable && self.is_regularly_implementable()?;
        let input_selectable = if self.declared_outputs.is_empty() {
            None
        } else {
            Some(iopart::controller_accepts_declared_outputs(
                c,
                &self.declared_outputs,
            )?)
        };
        Ok(Certificate {
            implementable,
            regularly_implementable,
            regular: self.is_regular(c)?,
            implements_spec: self
                .controlled_behavior(c)?
                .same_behavior(&self.specification())?,
            equivalent_to_canonical: self.is_equivalent_to_canonical(c)?,
            input_selectable,
        })
    }

    /// Bootstraps a regular controller and certifies it.
    pub fn synthesize(&self) -> Result<SynthesisResult, SynthesisError> {
        let controller = self.bootstrap_regular_controller()?;
        let certificate = self.certify(&controller)?;
        Ok(SynthesisResult {
            controller,
            certificate,
        })
    }
}

/// `ker(C + V·P_c)` for full-row-rank `C` (`q` rows) and `P_c` (`r` rows)
/// and a `q×r` polynomial matrix `V`.
pub fn parametrize(c0: &Behavior, pc: &Behavior, v: &PolyMatrix) -> Result<Behavior> {
    if c0.vars() != pc.vars() {
        return Err(Error::Variables(
            "controller and P_c use different variables".into(),
        ));
    }
    if !c0.is_minimal() {
        return Err(Error::NotFullRowRank("controller representation"));
    }
    if !pc.is_minimal() {
        return Err(Error::NotFullRowRank("control manifest representation"));
    }
    if v.shape() != (c0.rep().rows(), pc.rep().rows()) {
        return Err(Error::Dimension(format!(
            "V is {}x{}, expected {}x{}",
            v.rows(),
            v.cols(),
            c0.rep().rows(),
            pc.rep().rows()
        )));
    }
    Behavior::new(c0.rep() + &(v * pc.rep()), c0.vars().to_vec())
}
