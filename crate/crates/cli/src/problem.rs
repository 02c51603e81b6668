//! Problem files: JSON documents describing a plant, a specification and
//! optionally a controller to verify.

use bsynth_core::{Behavior, ControlProblem, PolyMatrix};
use serde::{Deserialize, Serialize};

use crate::InputError;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_search_nodes: Option<usize>,
}

impl Options {
    fn is_empty(&self) -> bool {
        self.max_degree.is_none() && self.max_search_nodes.is_none()
    }
}

/// `R w + M c = 0` over `w_vars`, `c_vars`, with specification `S w = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub w_vars: Vec<String>,
    pub c_vars: Vec<String>,
    #[serde(rename = "R")]
    pub r: PolyMatrix,
    #[serde(rename = "M")]
    pub m: PolyMatrix,
    #[serde(rename = "S")]
    pub s: PolyMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_outputs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Options::is_empty")]
    pub options: Options,
    /// Controller over `c_vars`, read by `verify`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub controller: Option<PolyMatrix>,
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile, InputError> {
    let mut file: ProblemFile = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let (nw, nc) = (file.w_vars.len(), file.c_vars.len());
    file.r = file.r.clone().with_cols_if_empty(nw);
    file.m = file.m.clone().with_cols_if_empty(nc);
    file.s = file.s.clone().with_cols_if_empty(nw);
    file.controller = file.controller.map(|c| c.with_cols_if_empty(nc));
    file.to_problem()?;
    if let Some(c) = &file.controller {
        if c.cols() != nc {
            return Err(InputError::Dimension(format!(
                "controller has {} columns, expected {nc}",
                c.cols()
            )));
        }
    }
    Ok(file)
}

impl ProblemFile {
    pub fn to_problem(&self) -> Result<ControlProblem, InputError> {
        ControlProblem::new(
            self.r.clone(),
            self.m.clone(),
            self.s.clone(),
            self.w_vars.clone(),
            self.c_vars.clone(),
            self.declared_outputs.clone().unwrap_or_default(),
        )
        .map_err(InputError::from)
    }

    pub fn controller_behavior(&self) -> Result<Option<Behavior>, InputError> {
        self.controller
            .as_ref()
            .map(|c| Behavior::new(c.clone(), self.c_vars.clone()).map_err(InputError::from))
            .transpose()
    }

    /// Canonical JSON text of the file.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files always serialize")
    }
}
