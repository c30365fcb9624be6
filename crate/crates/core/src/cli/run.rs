use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use super::config::{CaseConfig, QMode, Task};
use super::report::{Report, Status, TaskReport};
use crate::chverify::{rect_identity, telescope_check, verify_ch, CHOptions, Mode};
use crate::error::{Error, Result};
use crate::heckeunits::{unit_suite, HeckeRep};
use crate::qmalgebra::{schur_suite, QMAlgebra};
use crate::rmatrix::{compatible_check, glmn_type_check, hecke_check, pair_hypotheses, yang_baxter_check, PairHypotheses, RMatrixSpec};
use crate::scalars::{AtQ, Context, Symbolic};

/// Matrix-unit checks stop at this arity; the full multiplication table grows
/// with the square of `k!`.
pub const UNIT_ARITY_CAP: usize = 4;

/// Largest weight of the Schur-function checks.
pub const SCHUR_WEIGHT: usize = 3;

/// `(r, s)` cases of the rectangular power identity.
pub const RECT_CASES: [(usize, usize); 3] = [(0, 0), (1, 0), (0, 1)];

/// Exit status of a finished run.
pub fn exit_code(report: &Report) -> i32 {
    if report.error.is_some() {
        2
    } else if report.verdict {
        0
    } else {
        1
    }
}

/// Runs every requested task in dependency order.
pub fn run(config: CaseConfig) -> Report {
    let mut report = Report::new(config.clone(), String::new());
    let result = match config.q.clone() {
        QMode::Symbolic => run_in(&mut report, Symbolic),
        QMode::Rational(q0) => AtQ::new(q0).and_then(|ctx| run_in(&mut report, ctx)),
    };
    if let Err(e) = result {
        report.error = Some(e.to_string());
    }
    report.finish();
    report
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Axioms {
    yang_baxter: bool,
    hecke: bool,
    f_braid: bool,
    compatible: bool,
    #[serde(flatten)]
    hypotheses: PairHypotheses,
}

impl Axioms {
    fn all(&self) -> bool {
        self.yang_baxter && self.hecke && self.f_braid && self.compatible && self.hypotheses.all()
    }
}

fn axioms<X: Context>(r: &RMatrixSpec, f: &RMatrixSpec, ctx: &X) -> Result<Axioms> {
    let hypotheses = match pair_hypotheses(r, f, ctx) {
        Ok(h) => h,
        Err(Error::NotInvertible) => PairHypotheses { r_strict: false, f_strict: false, rf_skew_invertible: false },
        Err(e) => return Err(e),
    };
    Ok(Axioms {
        yang_baxter: yang_baxter_check(r, ctx)?,
        hecke: hecke_check(r, ctx)?,
        f_braid: yang_baxter_check(f, ctx)?,
        compatible: compatible_check(r, f, ctx)?,
        hypotheses,
    })
}

fn flags(v: &Value) -> String {
    v.as_object()
        .map(|o| o.iter().filter_map(|(k, x)| x.as_bool().map(|b| format!("{k}:{b}"))).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

fn task(name: Task, start: Instant, verdict: bool, summary: String, details: Value) -> TaskReport {
    TaskReport {
        name: name.to_string(),
        status: if verdict { Status::Pass } else { Status::Fail },
        verdict,
        seconds: start.elapsed().as_secs_f64(),
        summary,
        details,
    }
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn run_in<X: Context>(report: &mut Report, ctx: X) -> Result<()> {
    report.environment.context = ctx.label();
    let config = report.config.clone();
    ctx.validate(config.arity_bound)?;
    let (r, f) = config.pair_matrices()?;

    // the axioms gate everything else, requested or not
    let start = Instant::now();
    let ax = axioms(&r, &f, &ctx)?;
    let ok = ax.all();
    let details = to_value(&ax);
    if config.tasks.contains(&Task::Axioms) || !ok {
        report.tasks.push(task(Task::Axioms, start, ok, flags(&details), details));
    }
    let rest: Vec<Task> = config.tasks.iter().copied().filter(|t| *t != Task::Axioms).collect();
    if !ok {
        for t in rest {
            report.tasks.push(TaskReport {
                name: t.to_string(),
                status: Status::Skipped,
                verdict: false,
                seconds: 0.0,
                summary: "skipped: axioms fail".into(),
                details: Value::Null,
            });
        }
        return Ok(());
    }
    if rest.is_empty() {
        return Ok(());
    }

    let (m, n) = (config.m, config.n);
    let bound = config.arity_bound;
    let rep = HeckeRep::new(&r, ctx.clone())?;
    let needs_algebra = rest.iter().any(|t| matches!(t, Task::Schur | Task::Ch | Task::Telescope | Task::Rect));
    let alg = if needs_algebra { Some(QMAlgebra::new(&r, &f, ctx.clone())?) } else { None };

    for t in rest {
        let start = Instant::now();
        let tr = match t {
            Task::Axioms => unreachable!(),
            Task::Units => {
                let mut reps = Vec::new();
                for k in 1..=bound.min(UNIT_ARITY_CAP) {
                    reps.push(unit_suite(&rep, k)?);
                }
                let ok = reps.iter().all(|x| x.passed());
                let summary = format!("arities 1..={}", reps.len());
                task(t, start, ok, summary, json!({ "arities": reps }))
            }
            Task::Glmn => {
                let g = glmn_type_check(&rep, m, n, bound)?;
                let summary = format!("rectangle units vanish at arity {}: {}", g.arity, g.rectangle_units_zero.iter().all(|&b| b));
                task(t, start, g.verdict, summary, to_value(&g))
            }
            Task::Schur => {
                let s = schur_suite(alg.as_ref().unwrap(), m, n, SCHUR_WEIGHT, bound, config.seed)?;
                let details = to_value(&s);
                task(t, start, s.passed, flags(&details), details)
            }
            Task::Ch => {
                let degree = m * n + m + n;
                let opts = CHOptions {
                    mode: Mode::Both,
                    ideal_sample: (degree >= 5).then_some(3),
                    seed: config.seed,
                    degree_bound: bound.max(degree),
                };
                let c = verify_ch(alg.as_ref().unwrap(), m, n, &opts)?;
                let summary = match &c.first_residual {
                    None => format!("degree {}: {} entries vanish", c.degree, c.entries.len()),
                    Some(res) => res.clone(),
                };
                task(t, start, c.verdict, summary, to_value(&c))
            }
            Task::Telescope => {
                let tl = telescope_check(alg.as_ref().unwrap(), m, n, Some(bound))?;
                let summary = format!("{} identities", tl.checks.len());
                task(t, start, tl.verdict, summary, to_value(&tl))
            }
            Task::Rect => {
                let mut reps = Vec::new();
                for (rr, ss) in RECT_CASES {
                    reps.push(rect_identity(alg.as_ref().unwrap(), rr, ss, Some(bound))?);
                }
                let ok = reps.iter().all(|x| x.ensure().is_ok());
                let summary = format!("(r,s) in {RECT_CASES:?}");
                task(t, start, ok, summary, json!({ "cases": reps }))
            }
        };
        report.tasks.push(tr);
    }
    Ok(())
}
