use bsynth_core::iopart::solve_io_partition;
use bsynth_core::minint::{minimize_interaction, oracle_max_nullifiable, SearchOptions};
use bsynth_core::polymat::{with_degree_cap, DEFAULT_DEGREE_CAP};
use bsynth_core::{Behavior, Certificate, ControlProblem, Error, SynthesisError};

use crate::report::{ControllerOut, OracleOut, Outcome, Report, SearchOut, Status};
use crate::{InputError, ProblemFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    /// Implementability and regular implementability
    Check,
    /// The canonical controller
    Canonical,
    /// A certified regular controller
    Synthesize,
    /// A regular controller reading as few control variables as possible
    MinInteraction,
    /// A regular controller that leaves the declared outputs free
    IoPartition,
    /// Certificate of the controller given in the problem file
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Canonical => "canonical",
            Command::Synthesize => "synthesize",
            Command::MinInteraction => "min-interaction",
            Command::IoPartition => "io-partition",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Overrides the file's degree cap.
    pub max_degree: Option<usize>,
    /// Cross-check min-interaction against exhaustive search.
    pub oracle: bool,
}

/// Runs `command` on a parsed problem file. Mathematical outcomes,
/// including "no solution" and exhausted limits, come back as reports.
pub fn run(command: Command, file: &ProblemFile, opts: &RunOptions) -> Result<Report, InputError> {
    let cap = opts
        .max_degree
        .or(file.options.max_degree)
        .unwrap_or(DEFAULT_DEGREE_CAP);
    let problem = file.to_problem()?;
    let controller = match command {
        Command::Verify => Some(
            file.controller_behavior()?
                .ok_or(InputError::MissingController)?,
        ),
        _ => None,
    };
    let mut report = Report {
        command: command.name().to_string(),
        status: Status::Ok,
        cause: None,
        message: None,
        problem: file.clone(),
        result: None,
        certificate: None,
    };
    match with_degree_cap(cap, || {
        dispatch(
            command,
            &problem,
            controller.as_ref(),
            file,
            opts,
            &mut report,
        )
    }) {
        Ok(()) => Ok(report),
        Err(SynthesisError::Unsolvable(u)) => {
            report.status = Status::Unsolvable;
            report.cause = Some(u);
            report.message = Some(u.to_string());
            Ok(report)
        }
        Err(SynthesisError::Algebra(e @ (Error::DegreeCap { .. } | Error::SearchLimit(_)))) => {
            report.status = Status::LimitExceeded;
            report.message = Some(e.to_string());
            Ok(report)
        }
        Err(SynthesisError::Algebra(e)) => Err(e.into()),
    }
}

fn dispatch(
    command: Command,
    problem: &ControlProblem,
    controller: Option<&Behavior>,
    file: &ProblemFile,
    opts: &RunOptions,
    report: &mut Report,
) -> Result<(), SynthesisError> {
    match command {
        Command::Check => {
            let implementable = problem.is_implementable()?;
            report.result = Some(Outcome::Check {
                implementable,
                regularly_implementable: implementable && problem.is_regularly_implementable()?,
            });
        }
        Command::Canonical => {
            let can = problem.canonical_controller()?.minimal_rep()?;
            report.result = Some(Outcome::Canonical {
                implementable: problem.is_implementable()?,
                controller: ControllerOut::from(&can),
            });
        }
        Command::Synthesize => {
            let res = problem.synthesize()?;
            report.result = Some(Outcome::Controller {
                controller: ControllerOut::from(&res.controller),
            });
            report.certificate = Some(res.certificate);
        }
        Command::MinInteraction => {
            let search = SearchOptions {
                max_nodes: file.options.max_search_nodes,
            };
            let out = minimize_interaction(problem, search)?;
            let name = |j: &usize| out.bootstrap.vars()[*j].clone();
            let oracle = if opts.oracle {
                let (max, cols) =
                    oracle_max_nullifiable(out.bootstrap.rep(), out.control_manifest.rep())?;
                let agrees = max == out.plan.count();
                if !agrees {
                    report.status = Status::OracleDisagreement;
                    report.message = Some(format!(
                        "search nullified {} columns, exhaustive search found {max}",
                        out.plan.count()
                    ));
                }
                Some(OracleOut {
                    max_nullifiable: max,
                    witness: cols.iter().map(name).collect(),
                    agrees,
                })
            } else {
                None
            };
            report.result = Some(Outcome::MinInteraction {
                irrelevant: out.irrelevant.clone(),
                v: out.v.clone(),
                bootstrap: ControllerOut::from(&out.bootstrap),
                control_manifest: out.control_manifest.rep().clone(),
                controller: ControllerOut::from(&out.result.controller),
                search: SearchOut {
                    best: out.plan.best.to_string(),
                    zero_columns: out.plan.zero_cols.iter().map(name).collect(),
                    bound: out.plan.bound,
                    nodes_visited: out.plan.nodes_visited,
                },
                oracle,
            });
            report.certificate = Some(out.result.certificate);
        }
        Command::IoPartition => {
            let sol = solve_io_partition(problem)?;
            report.result = Some(Outcome::IoPartition {
                v: sol.v,
                controller: ControllerOut::from(&sol.result.controller),
                partition: sol.partition,
            });
            report.certificate = Some(sol.result.certificate);
        }
        Command::Verify => {
            let c = controller.expect("verify always carries a controller");
            let cert = problem.certify(c)?;
            if !cert.passed() {
                report.status = Status::Rejected;
                report.message = Some(format!(
                    "failed checks: {}",
                    failed_checks(&cert).join(", ")
                ));
            }
            report.result = Some(Outcome::Controller {
                controller: ControllerOut::from(c),
            });
            report.certificate = Some(cert);
        }
    }
    Ok(())
}

fn failed_checks(c: &Certificate) -> Vec<&'static str> {
    [
        (c.regular, "regular"),
        (c.implements_spec, "implements_spec"),
        (c.equivalent_to_canonical, "equivalent_to_canonical"),
        (c.input_selectable.unwrap_or(true), "input_selectable"),
    ]
    .into_iter()
    .filter(|(ok, _)| !ok)
    .map(|(_, name)| name)
    .collect()
}
