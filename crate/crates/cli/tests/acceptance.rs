//! Acceptance suite. Each criterion runs against its time budget and prints
//! one PASS/FAIL line; the process exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use bsynth::{parse_problem, run, Command as Cmd, RunOptions};
use bsynth_core::behavior::Behavior;
use bsynth_core::control::parametrize;
use bsynth_core::iopart::{construct_fullrank_v, PartitionedControllerSpec};
use bsynth_core::minint::{
    can_nullify, compute_v, nullify, nullify_constrained, oracle_max_nullifiable, Nullify,
    SearchOptions, SearchSpace, SearchString,
};
use bsynth_core::polymat::{hermite_form, is_unimodular, smith_form, unimodular_inverse};
use bsynth_core::{ControlProblem, Poly, PolyMatrix};
use bsynth_testkit::Gen;
use itertools::Itertools;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn pm(rows: &[&[&[i64]]]) -> PolyMatrix {
    PolyMatrix::from_int_rows(rows)
}

fn ex3() -> (PolyMatrix, PolyMatrix) {
    let c = pm(&[&[&[0, -1, 1], &[-1, 1], &[-1]]]);
    let p = pm(&[&[&[0, 1], &[0, 1], &[1]], &[&[1, 1], &[0, 1], &[]]]);
    (c, p)
}

/// Every property a nullify result for column `i` must have.
fn nullify_postconditions(
    c: &PolyMatrix,
    p: &PolyMatrix,
    i: usize,
    u: &PolyMatrix,
    p_tilde: &PolyMatrix,
    v1: &PolyMatrix,
    c_tilde: &PolyMatrix,
) -> Result<(), String> {
    ensure!(is_unimodular(u), "U is not unimodular");
    ensure!(&(u * p) == p_tilde, "U·P differs from P̃");
    let pi = p_tilde[(0, i)].clone();
    ensure!(!pi.is_zero(), "pivot vanishes");
    for r in 1..p_tilde.rows() {
        ensure!(
            p_tilde[(r, i)].is_zero(),
            "column {i} of P̃ not reduced below the pivot"
        );
    }
    let gcd = p
        .column(i)
        .iter()
        .fold(Poly::zero(), |g, e| Poly::gcd(&g, e));
    ensure!(pi.monic() == gcd, "pivot {pi} is not the column gcd {gcd}");
    for r in 0..c.rows() {
        ensure!(
            &v1[(r, 0)] * &pi == -&c[(r, i)],
            "Ṽ1·π differs from -C_i in row {r}"
        );
    }
    let p1 = p_tilde.row_range(0..1);
    let p2 = p_tilde.row_range(1..p_tilde.rows());
    ensure!(&(c + &(v1 * &p1)) == c_tilde, "C̃ differs from C + Ṽ1·P̃1");
    ensure!(c_tilde.is_zero_column(i), "column {i} of C̃ is not zero");
    let mut g = Gen::new(7);
    for _ in 0..5 {
        let v2 = g.matrix(c.rows(), p2.rows(), 2);
        let v = &v1.hstack(&v2) * u;
        ensure!(
            c + &(&v * p) == c_tilde + &(&v2 * &p2),
            "residual identity fails"
        );
    }
    Ok(())
}

fn criterion_1() -> Check {
    let (c, p) = ex3();
    let Nullify::Nullified(step) = nullify(&c, &p, 0).map_err(|e| e.to_string())? else {
        return Err("nullify failed on the first column".into());
    };
    ensure!(step.c_tilde.is_zero_column(0), "first column of C̃ not zero");
    let p_tilde = &step.u * &p;
    nullify_postconditions(&c, &p, 0, &step.u, &p_tilde, &step.v1_tilde, &step.c_tilde)
        .map_err(|e| format!("computed tuple: {e}"))?;

    let u = pm(&[&[&[-1], &[1]], &[&[-1, -1], &[0, 1]]]);
    let pt = pm(&[&[&[1], &[], &[-1]], &[&[], &[0, -1], &[-1, -1]]]);
    let v1 = pm(&[&[&[0, 1, -1]]]);
    let ct = pm(&[&[&[], &[-1, 1], &[-1, -1, 1]]]);
    nullify_postconditions(&c, &p, 0, &u, &pt, &v1, &ct)
        .map_err(|e| format!("reference tuple: {e}"))?;
    ensure!(
        step.v1_tilde == v1,
        "Ṽ1 = {} differs",
        step.v1_tilde.display_with("x")
    );
    ensure!(
        step.c_tilde == ct,
        "C̃ = {} differs",
        step.c_tilde.display_with("x")
    );
    let p2 = pt.row_range(1..2);
    ensure!(
        step.p2_tilde == p2 || step.p2_tilde == -&p2,
        "P̃2 = {} differs beyond sign",
        step.p2_tilde.display_with("x")
    );
    Ok(format!(
        "Ṽ1 = {}, C̃ = {}, computed U = {}",
        v1.display_with("x"),
        ct.display_with("x"),
        step.u.display_with("x").replace('\n', " ")
    ))
}

fn criterion_2() -> Check {
    let (c, p) = ex3();
    let plan = compute_v(&c, &p, SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure!(plan.zero_cols == [0], "zero_cols = {:?}", plan.zero_cols);
    ensure!(plan.best.to_string() == "1", "best = {}", plan.best);
    ensure!(
        (&c + &(&plan.v * &p)).zero_columns() == [0],
        "V does not zero column 1"
    );
    for pair in (0..3).combinations(2) {
        ensure!(
            !can_nullify(&c, &p, &pair).map_err(|e| e.to_string())?,
            "columns {pair:?} are jointly nullifiable"
        );
    }
    let Nullify::Nullified(step) = nullify_constrained(&c, &p, 0).map_err(|e| e.to_string())?
    else {
        return Err("first column did not nullify".into());
    };
    match nullify_constrained(&step.c_tilde, &step.p2_tilde, 1).map_err(|e| e.to_string())? {
        Nullify::Failed { pi, .. } => {
            ensure!(pi == Poly::x(), "π2 = {pi}");
            ensure!(
                !pi.divides(&step.c_tilde[(0, 1)]),
                "π2 divides the residual"
            );
        }
        other => return Err(format!("column 2 after column 1: {other:?}")),
    }
    Ok(format!("best {}, {} nodes", plan.best, plan.nodes_visited))
}

fn criterion_3() -> Check {
    let mut g = Gen::new(0xacc3);
    let mut hist = [0usize; 5];
    for k in 0..200 {
        let (c, p) = g.nullify_instance();
        ensure!(c.cols() <= 4 && c.rows() <= 2, "instance {k} out of range");
        let plan = compute_v(&c, &p, SearchOptions::default()).map_err(|e| e.to_string())?;
        let (best, _) = oracle_max_nullifiable(&c, &p).map_err(|e| e.to_string())?;
        ensure!(
            plan.count() == best,
            "instance {k}: search {} vs oracle {best}",
            plan.count()
        );
        ensure!(
            can_nullify(&c, &p, &plan.zero_cols).map_err(|e| e.to_string())?,
            "instance {k}: witness {:?} rejected",
            plan.zero_cols
        );
        ensure!(
            (&c + &(&plan.v * &p)).zero_columns() == plan.zero_cols,
            "instance {k}: V does not realize the witness"
        );
        hist[best] += 1;
    }
    Ok(format!("200 instances, optimum histogram {hist:?}"))
}

fn criterion_4() -> Check {
    let mut g = Gen::new(0xacc4);
    let (mut pairs, mut problems) = (0, 0);
    while pairs < 100 {
        problems += 1;
        ensure!(problems < 2000, "too few usable problems");
        let prob = g.implementable_problem();
        let Ok(c0) = prob.bootstrap_regular_controller() else {
            continue;
        };
        let c0 = c0.minimal_rep().map_err(|e| e.to_string())?;
        let pc = prob
            .control_manifest()
            .and_then(|b| b.minimal_rep())
            .map_err(|e| e.to_string())?;
        if c0.rep().rows() == 0 || pc.rep().rows() == 0 {
            continue;
        }
        let can = prob.canonical_controller().map_err(|e| e.to_string())?;
        let target = can.intersection(&pc).map_err(|e| e.to_string())?;
        let rm = prob.r().hstack(prob.m());
        for _ in 0..3 {
            let v = g.matrix(c0.rep().rows(), pc.rep().rows(), 2);
            let c1 = parametrize(&c0, &pc, &v).map_err(|e| e.to_string())?;
            let stack =
                rm.vstack(&PolyMatrix::zeros(c1.rep().rows(), prob.r().cols()).hstack(c1.rep()));
            ensure!(
                stack.rank() == rm.rank() + c1.rep().rank(),
                "pair {pairs}: interconnection not regular"
            );
            let got = c1.intersection(&pc).map_err(|e| e.to_string())?;
            ensure!(
                got.is_subset_of(&target).map_err(|e| e.to_string())?
                    && target.is_subset_of(&got).map_err(|e| e.to_string())?,
                "pair {pairs}: not equivalent to the canonical controller"
            );
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs from {problems} problems"))
}

fn criterion_5() -> Check {
    let mut g = Gen::new(0xacc5);
    let (mut yes, mut no) = (0, 0);
    for i in 0..120 {
        let prob = g.problem_mix(i);
        let ri = prob
            .is_regularly_implementable()
            .map_err(|e| e.to_string())?;
        match prob.bootstrap_regular_controller() {
            Ok(c0) => {
                ensure!(
                    ri,
                    "instance {i}: bootstrap succeeded on a non-regular problem"
                );
                let cert = prob.certify(&c0).map_err(|e| e.to_string())?;
                ensure!(
                    cert.passed(),
                    "instance {i}: bootstrap certificate {cert:?}"
                );
                yes += 1;
            }
            Err(e) => {
                ensure!(e.unsolvable().is_some(), "instance {i}: {e}");
                ensure!(
                    !ri,
                    "instance {i}: bootstrap failed on a regularly implementable problem"
                );
                no += 1;
            }
        }
    }
    ensure!(yes > 0 && no > 0, "one-sided sample: {yes} yes, {no} no");
    Ok(format!("{yes} regularly implementable, {no} not"))
}

fn criterion_6() -> Check {
    let stack = pm(&[&[&[1], &[-1], &[-1]], &[&[], &[], &[1]]]);
    ensure!(stack.rank() == 2, "stack rank {}", stack.rank());
    let rm = pm(&[&[&[1], &[-1], &[-1]]]);
    ensure!(rm.rank() == 1, "plant rank");

    let tank = ControlProblem::new(
        pm(&[&[&[1]]]),
        pm(&[&[&[-1], &[-1]]]),
        PolyMatrix::zeros(0, 1),
        vec!["e".into()],
        vec!["u".into(), "d".into()],
        vec![],
    )
    .map_err(|e| e.to_string())?;
    let c = Behavior::with_vars(pm(&[&[&[], &[1]]]), &["u", "d"]).map_err(|e| e.to_string())?;
    ensure!(
        tank.is_regular(&c).map_err(|e| e.to_string())?,
        "ker[0 1] is not regular"
    );
    let hidden = tank.hidden_behavior();
    ensure!(
        hidden
            .same_behavior(&Behavior::zero(vec!["e".into()]))
            .map_err(|e| e.to_string())?,
        "hidden behavior is not zero"
    );
    let ex1 =
        PartitionedControllerSpec::split(&c, &["d".to_string()]).map_err(|e| e.to_string())?;
    ensure!(
        ex1.c1 == pm(&[&[&[]]]),
        "ex1 C1 = {}",
        ex1.c1.display_with("x")
    );
    ensure!(
        !ex1.is_input_selectable(),
        "ex1 labeling is input-selectable"
    );
    let ex2 =
        PartitionedControllerSpec::split(&c, &["u".to_string()]).map_err(|e| e.to_string())?;
    ensure!(
        ex2.c1 == pm(&[&[&[1]]]),
        "ex2 C1 = {}",
        ex2.c1.display_with("x")
    );
    ensure!(
        ex2.is_input_selectable(),
        "ex2 labeling is not input-selectable"
    );
    Ok("rank 2 = 1 + 1, hidden {0}, ex1 false, ex2 true".into())
}

/// Every constant matrix with entries in {-1, 0, 1}.
fn constant_vs(rows: usize, cols: usize) -> impl Iterator<Item = PolyMatrix> {
    (0..rows * cols)
        .map(|_| [-1i64, 0, 1])
        .multi_cartesian_product()
        .map(move |vals| PolyMatrix::from_fn(rows, cols, |i, j| Poly::from_int(vals[i * cols + j])))
        .chain((rows * cols == 0).then(|| PolyMatrix::zeros(rows, cols)))
}

fn criterion_7() -> Check {
    let mut g = Gen::new(0xacc7);
    let mut brute_checked = 0;
    let mut brute = |c: &PolyMatrix, p: &PolyMatrix, built: bool| -> Result<(), String> {
        if p.rows() > 3 || c.rows() * p.rows() > 6 {
            return Ok(());
        }
        let hit = constant_vs(c.rows(), p.rows()).any(|v| (c + &(&v * p)).rank() == c.rows());
        ensure!(
            built || !hit,
            "a constant V succeeds where the constructor gave up"
        );
        brute_checked += 1;
        Ok(())
    };
    for k in 0..100 {
        let (c, p) = g.fullrank_instance(true);
        ensure!(
            p.vstack(&c).rank() >= c.rows(),
            "feasible instance {k} violates the rank test"
        );
        let v = construct_fullrank_v(&c, &p)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("feasible instance {k}: no V"))?;
        ensure!(
            (&c + &(&v * &p)).rank() == c.rows(),
            "instance {k}: C + VP not full row rank"
        );
        brute(&c, &p, true)?;
    }
    for k in 0..60 {
        let (c, p) = g.fullrank_instance(false);
        ensure!(
            p.vstack(&c).rank() < c.rows(),
            "deficient instance {k} passes the rank test"
        );
        ensure!(
            construct_fullrank_v(&c, &p)
                .map_err(|e| e.to_string())?
                .is_none(),
            "deficient instance {k}: V reported"
        );
        brute(&c, &p, false)?;
    }
    Ok(format!(
        "100 feasible, 60 deficient, {brute_checked} brute-forced"
    ))
}

fn criterion_8() -> Check {
    let mut g = Gen::new(0xacc8);
    for k in 0..500 {
        let (r, c) = (g.range(1, 4), g.range(1, 4));
        let m = g.matrix(r, c, 3);
        let hf = hermite_form(&m).map_err(|e| e.to_string())?;
        ensure!(hf.h == &hf.u * &m, "matrix {k}: H ≠ U·M");
        ensure!(is_unimodular(&hf.u), "matrix {k}: Hermite U not unimodular");
        let sf = smith_form(&m).map_err(|e| e.to_string())?;
        ensure!(&(&sf.u * &sf.d) * &sf.v == m, "matrix {k}: U·D·V ≠ M");
        ensure!(
            is_unimodular(&sf.u) && is_unimodular(&sf.v),
            "matrix {k}: Smith factors"
        );
        let f = sf.invariant_factors();
        ensure!(
            f.len() == m.rank(),
            "matrix {k}: {} factors, rank {}",
            f.len(),
            m.rank()
        );
        for w in f.windows(2) {
            ensure!(w[0].divides(&w[1]), "matrix {k}: {} ∤ {}", w[0], w[1]);
        }
        let a = g.unimodular(r, 4, 1);
        let b = g.unimodular(c, 4, 1);
        ensure!(
            unimodular_inverse(&a).map_err(|e| e.to_string())?.is_some(),
            "matrix {k}: random factor not invertible"
        );
        ensure!(
            (&(&a * &m) * &b).rank() == m.rank(),
            "matrix {k}: rank changed"
        );
    }
    Ok("500 matrices".into())
}

fn criterion_9() -> Check {
    let space = SearchSpace::new(3);
    let s: Vec<String> = space.strings().iter().map(|s| s.to_string()).collect();
    ensure!(
        s == ["ε", "1", "12", "123", "13", "2", "23", "3"],
        "S = {s:?}"
    );
    let t: Vec<String> = space.terminals().iter().map(|s| s.to_string()).collect();
    ensure!(t == ["123", "13", "23", "3"], "T = {t:?}");
    let st = |x: &str| SearchString::parse(x).expect("valid string");
    ensure!(space.ket(&st("1"), 1) == st("123"), "|1, 1⟩");
    ensure!(space.ceil(&st("12")) == Some(st("13")), "⌈12⌉");
    ensure!(
        space.down(&st("1"), &st("13")) == Some(st("13")),
        "(1, 13)↓"
    );
    Ok(format!("S = {{{}}}, T = {{{}}}", s.join(","), t.join(",")))
}

fn fixtures() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .expect("fixture directory")
        .map(|e| e.expect("fixture entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    files
}

fn criterion_10() -> Check {
    let files = fixtures();
    ensure!(files.len() >= 5, "only {} fixtures", files.len());
    let mut runs = 0;
    for path in &files {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let file = parse_problem(&text).map_err(|e| format!("{name}: {e}"))?;
        let original: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let written: serde_json::Value =
            serde_json::from_str(&file.to_json()).map_err(|e| e.to_string())?;
        ensure!(
            original == written,
            "{name}: serialize(parse(x)) differs from x"
        );
        ensure!(
            parse_problem(&file.to_json()).map_err(|e| e.to_string())? == file,
            "{name}: parse(serialize(p)) differs from p"
        );
        let cmds = [
            "check",
            "canonical",
            "synthesize",
            "min-interaction",
            "io-partition",
        ];
        let verify = file.controller.is_some().then_some("verify");
        for cmd in cmds.into_iter().chain(verify) {
            let go = || {
                Command::new(env!("CARGO_BIN_EXE_bsynth"))
                    .args([cmd, "--input", path.to_str().unwrap()])
                    .output()
                    .expect("binary runs")
            };
            let (a, b) = (go(), go());
            ensure!(
                matches!(a.status.code(), Some(0 | 1)),
                "{name} {cmd}: exit {:?}: {}",
                a.status.code(),
                String::from_utf8_lossy(&a.stderr)
            );
            ensure!(
                a.stdout == b.stdout && a.status.code() == b.status.code(),
                "{name} {cmd}: runs differ"
            );
            let lib =
                run(parse_cmd(cmd), &file, &RunOptions::default()).map_err(|e| e.to_string())?;
            ensure!(
                lib.to_json().as_bytes() == a.stdout,
                "{name} {cmd}: library and binary differ"
            );
            runs += 2;
        }
    }
    Ok(format!("{} fixtures, {runs} identical runs", files.len()))
}

fn parse_cmd(s: &str) -> Cmd {
    use clap::ValueEnum;
    Cmd::from_str(s, false).expect("known command")
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "worked nullify example",
            Duration::from_secs(1),
            criterion_1,
        ),
        ("search walk-through", Duration::from_secs(1), criterion_2),
        (
            "search matches exhaustive oracle",
            Duration::from_secs(60),
            criterion_3,
        ),
        (
            "parametrization soundness",
            Duration::from_secs(60),
            criterion_4,
        ),
        (
            "regular implementability cross-check",
            Duration::from_secs(120),
            criterion_5,
        ),
        ("water tank", Duration::from_secs(1), criterion_6),
        (
            "full row rank completion",
            Duration::from_secs(60),
            criterion_7,
        ),
        ("normal forms", Duration::from_secs(60), criterion_8),
        ("search strings", Duration::from_secs(1), criterion_9),
        (
            "CLI round trip and determinism",
            Duration::from_secs(5),
            criterion_10,
        ),
    ];
    let mut failed = 0;
    for (n, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panic: {msg}"))
            })
            .and_then(|detail| {
                let took = start.elapsed();
                if took > budget {
                    Err(format!("{detail}; took {took:.2?}, budget {budget:?}"))
                } else {
                    Ok(detail)
                }
            });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name} ({took:.2?}): {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name} ({took:.2?}): {why}", n + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
