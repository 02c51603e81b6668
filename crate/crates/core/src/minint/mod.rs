//! Regular controllers that read as few control variables as possible.
//!
//! All controllers equivalent to a bootstrap `C0` are `ker(C0 + V·P_c)`.
//! A variable whose column of `C0 + V·P_c` vanishes is irrelevant to the
//! controller, so the task is picking `V` to zero as many columns as
//! possible.

mod nullify;
mod oracle;
mod search;
mod strings;

pub use nullify::{nullify, nullify_constrained, Nullify, NullifyStep};
pub use oracle::{can_nullify, oracle_max_nullifiable};
pub use search::{compute_v, NullificationPlan, SearchOptions};
pub use strings::{SearchSpace, SearchString};

use crate::behavior::Behavior;
use crate::control::{parametrize, ControlProblem, SynthesisResult};
use crate::error::SynthesisError;
use crate::polymat::PolyMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinInteraction {
    pub result: SynthesisResult,
    /// Minimal representation of the bootstrap controller.
    pub bootstrap: Behavior,
    /// Minimal representation of the control manifest behavior.
    pub control_manifest: Behavior,
    pub v: PolyMatrix,
    pub plan: NullificationPlan,
    pub irrelevant: Vec<String>,
}

/// Bootstraps a regular controller, then searches for the `V` with the
/// most irrelevant control variables.
pub fn minimize_interaction(
    problem: &ControlProblem,
    opts: SearchOptions,
) -> Result<MinInteraction, SynthesisError> {
    let bootstrap = problem.bootstrap_regular_controller()?.minimal_rep()?;
    let pc = problem.control_manifest()?.minimal_rep()?;
    let plan = compute_v(bootstrap.rep(), pc.rep(), opts)?;
    let controller = parametrize(&bootstrap, &pc, &plan.v)?;
    let irrelevant = plan
        .zero_cols
        .iter()
        .map(|&j| controller.vars()[j].clone())
        .collect();
    let certificate = problem.certify(&controller)?;
    Ok(MinInteraction {
        result: SynthesisResult {
            controller,
            certificate,
        },
        bootstrap,
        control_manifest: pc,
        v: plan.v.clone(),
        plan,
        irrelevant,
    })
}
