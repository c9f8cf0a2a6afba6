//! Task dispatch and the run report.

use std::time::Instant;

use algmod::{
    check_algebra, check_hom, check_left_module, check_right_module, find_algebra_homs, induce_delta_and_check,
    solve_sep_idempotent, verify_retraction, verify_retraction_ideal, verify_sep_idempotent, AlgebraHom, RetractionAlpha,
    RightModule, SepIdempotent, StructureAlgebra,
};
use coring::{
    check_coalgebra, check_coring, find_invariant_grouplikes, sweedler_coring, verify_grouplike, Coring, CoringError,
    GrouplikeElement, StructureCoalgebra,
};
use entwine::{
    check_entwining, solve_theta, solve_zeta, theta_harness, verify_theta, verify_zeta, zeta_harness, EntwiningStructure,
    ThetaMap, ZetaMap,
};
use exactla::{vector, AffineSpace, LaError, Scalar};
use findim::{Condition, LinMap, Report, Witness};
use precat::{
    check_category, check_ext_certificate, check_functor, check_res_certificate, solve_res_certificate, ExtAlpha,
    LinearCategory, LinearFunctor, ResGamma,
};
use serde::{Deserialize, Serialize};

use crate::build::{input, la, load, lookup, Certificate, Env, Module};
use crate::doc::{Expect, SpecDocument, Task, TaskArgs};
use crate::CliError;

/// Every task op, in the order the help text lists them.
pub const OPS: &[&str] = &[
    "check-algebra",
    "check-coalgebra",
    "check-hom",
    "find-homs",
    "check-module",
    "check-entwining",
    "check-category",
    "check-functor",
    "verify-retraction",
    "verify-retraction-ideal",
    "verify-idempotent",
    "solve-idempotent",
    "verify-grouplike",
    "find-grouplike",
    "sweedler",
    "cross-check-sweedler",
    "verify-theta",
    "solve-theta",
    "verify-zeta",
    "solve-zeta",
    "harness",
    "check-ext",
    "check-res",
    "solve-res",
];

pub const DEFAULT_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Empty,
    Nonempty,
    LimitExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Solver output. Solutions are coordinate vectors in the solver's unknowns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Search {
    pub examined: u64,
    /// Dimension of the affine space that was enumerated: the solutions of
    /// the linear equations, or `None` when those have none.
    pub searched_dim: Option<usize>,
    pub solutions: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskReport {
    pub index: usize,
    pub op: String,
    pub args: TaskArgs,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expect>,
    pub verdict: Verdict,
    pub conditions: Vec<Condition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<Search>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub field: String,
    pub verdict: Verdict,
    pub tasks: Vec<TaskReport>,
}

impl RunReport {
    /// 3 if a search hit its limit, else 1 on any failing verdict, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.tasks.iter().any(|t| t.outcome == Outcome::LimitExceeded) {
            3
        } else if self.verdict == Verdict::Fail {
            1
        } else {
            0
        }
    }
}

/// A task with its references resolved.
enum Job {
    Algebra(StructureAlgebra),
    Coalgebra(StructureCoalgebra),
    Hom(AlgebraHom),
    FindHoms(StructureAlgebra, StructureAlgebra),
    Module(Module),
    Entwining(EntwiningStructure),
    Category(LinearCategory),
    Functor(LinearFunctor),
    Retraction(RetractionAlpha),
    RetractionIdeal(RetractionAlpha),
    Idempotent(SepIdempotent),
    SolveIdempotent(AlgebraHom, AlgebraHom),
    Grouplike(GrouplikeElement),
    FindGrouplike(Result<Coring, String>),
    Sweedler(AlgebraHom),
    CrossCheck(AlgebraHom),
    Theta(ThetaMap),
    SolveTheta(EntwiningStructure),
    Zeta(ZetaMap),
    SolveZeta(EntwiningStructure),
    DeltaHarness(SepIdempotent, Vec<RightModule>),
    ThetaHarness(ThetaMap),
    ZetaHarness(ZetaMap),
    Ext(ExtAlpha),
    Res(ResGamma),
    SolveRes(LinearFunctor, LinearFunctor),
}

impl Job {
    fn is_search(&self) -> bool {
        matches!(
            self,
            Job::FindHoms(..)
                | Job::SolveIdempotent(..)
                | Job::FindGrouplike(_)
                | Job::SolveTheta(_)
                | Job::SolveZeta(_)
                | Job::SolveRes(..)
        )
    }
}

fn arg<'a>(x: &'a Option<String>, what: &str, ctx: &str) -> Result<&'a str, CliError> {
    x.as_deref().ok_or_else(|| input(format!("{ctx}: missing argument {what}")))
}

fn prepare(env: &Env, index: usize, task: &Task) -> Result<Job, CliError> {
    let ctx = format!("task {index} ({})", task.op);
    let a = &task.args;
    let algebra = |k: &Option<String>, what: &str| lookup(&env.algebras, "algebra", arg(k, what, &ctx)?, &ctx).cloned();
    let hom = |k: &Option<String>, what: &str| lookup(&env.homs, "hom", arg(k, what, &ctx)?, &ctx).cloned();
    let ent = || lookup(&env.entwinings, "entwining", arg(&a.entwining, "entwining", &ctx)?, &ctx).cloned();
    let functor = |k: &Option<String>, what: &str| lookup(&env.functors, "functor", arg(k, what, &ctx)?, &ctx).cloned();
    let cert = || lookup(&env.certificates, "certificate", arg(&a.certificate, "certificate", &ctx)?, &ctx);
    let wrong = |c: &Certificate| input(format!("{ctx}: certificate '{}' is of kind {}", a.certificate.as_deref().unwrap_or(""), c.kind()));
    let finite = |job: Job| {
        if env.field.order().is_none() && job.is_search() {
            Err(input(format!("{ctx}: enumeration needs a finite field")))
        } else {
            Ok(job)
        }
    };
    let job = match task.op.as_str() {
        "check-algebra" => Job::Algebra(algebra(&a.algebra, "algebra")?),
        "check-coalgebra" => Job::Coalgebra(lookup(&env.coalgebras, "coalgebra", arg(&a.coalgebra, "coalgebra", &ctx)?, &ctx)?.clone()),
        "check-hom" => Job::Hom(hom(&a.hom, "hom")?),
        "find-homs" => Job::FindHoms(algebra(&a.source, "source")?, algebra(&a.target, "target")?),
        "check-module" => Job::Module(lookup(&env.modules, "module", arg(&a.module, "module", &ctx)?, &ctx)?.clone()),
        "check-entwining" => Job::Entwining(ent()?),
        "check-category" => Job::Category(lookup(&env.categories, "category", arg(&a.category, "category", &ctx)?, &ctx)?.clone()),
        "check-functor" => Job::Functor(functor(&a.functor, "functor")?),
        "verify-retraction" | "verify-retraction-ideal" => match cert()? {
            Certificate::Retraction(r) if task.op == "verify-retraction" => Job::Retraction(r.clone()),
            Certificate::Retraction(r) => Job::RetractionIdeal(r.clone()),
            c => return Err(wrong(c)),
        },
        "verify-idempotent" => match cert()? {
            Certificate::Idempotent(e) => Job::Idempotent(e.clone()),
            c => return Err(wrong(c)),
        },
        "solve-idempotent" => {
            let phi = hom(&a.phi, "phi")?;
            let xi = match &a.xi {
                Some(_) => hom(&a.xi, "xi")?,
                None => AlgebraHom::identity(&phi.target),
            };
            Job::SolveIdempotent(phi, xi)
        }
        "verify-grouplike" => match cert()? {
            Certificate::Grouplike(g) => Job::Grouplike(g.clone()),
            c => return Err(wrong(c)),
        },
        "find-grouplike" => match (&a.hom, &a.coalgebra) {
            (Some(_), None) => Job::FindGrouplike(sweedler_coring(&hom(&a.hom, "hom")?).map_err(|e| e.to_string())),
            (None, Some(c)) => Job::FindGrouplike(Ok(Coring::from_coalgebra(lookup(&env.coalgebras, "coalgebra", c, &ctx)?))),
            _ => return Err(input(format!("{ctx}: give exactly one of hom and coalgebra"))),
        },
        "sweedler" => Job::Sweedler(hom(&a.hom, "hom")?),
        "cross-check-sweedler" => Job::CrossCheck(hom(&a.hom, "hom")?),
        "verify-theta" => match cert()? {
            Certificate::Theta(t) => Job::Theta(t.clone()),
            c => return Err(wrong(c)),
        },
        "solve-theta" => Job::SolveTheta(ent()?),
        "verify-zeta" => match cert()? {
            Certificate::Zeta(z) => Job::Zeta(z.clone()),
            c => return Err(wrong(c)),
        },
        "solve-zeta" => Job::SolveZeta(ent()?),
        "harness" => match cert()? {
            Certificate::Theta(t) => Job::ThetaHarness(t.clone()),
            Certificate::Zeta(z) => Job::ZetaHarness(z.clone()),
            Certificate::Idempotent(e) => {
                let mut family = Vec::new();
                for m in &a.modules {
                    match lookup(&env.modules, "module", m, &ctx)? {
                        Module::Right(r) => family.push(r.clone()),
                        Module::Left(_) => return Err(input(format!("{ctx}: module '{m}' must be a right module"))),
                    }
                }
                if family.is_empty() {
                    family.push(RightModule::regular(&e.base_map.target));
                }
                Job::DeltaHarness(e.clone(), family)
            }
            c => return Err(wrong(c)),
        },
        "check-ext" => match cert()? {
            Certificate::Ext(x) => Job::Ext(x.clone()),
            c => return Err(wrong(c)),
        },
        "check-res" => match cert()? {
            Certificate::Res(g) => Job::Res(g.clone()),
            c => return Err(wrong(c)),
        },
        "solve-res" => {
            let phi = functor(&a.phi, "phi")?;
            let xi = match &a.xi {
                Some(_) => functor(&a.xi, "xi")?,
                None => LinearFunctor::identity(&phi.target),
            };
            Job::SolveRes(phi, xi)
        }
        op => return Err(input(format!("{ctx}: unknown op '{op}'"))),
    };
    let job = finite(job)?;
    match (task.expect, job.is_search()) {
        (Some(Expect::Pass | Expect::Fail), true) => Err(input(format!("{ctx}: a search expects empty or nonempty"))),
        (Some(Expect::Empty | Expect::Nonempty), false) => Err(input(format!("{ctx}: a check expects pass or fail"))),
        _ => Ok(job),
    }
}

/// What a job produced before expectations are applied.
struct Raw {
    report: Report,
    search: Option<Search>,
}

fn check(report: Report) -> Result<Raw, LaError> {
    Ok(Raw { report, search: None })
}

fn strings(v: &[Scalar]) -> Vec<String> {
    vector::to_strings(v)
}

/// Images of the basis vectors, concatenated.
fn columns(m: &LinMap) -> Vec<Scalar> {
    (0..m.domain.dim).flat_map(|j| m.image(j)).collect()
}

/// Re-verifies each solution with the matching checker.
fn solutions_condition<T>(found: &[T], verify: impl Fn(&T) -> Result<Report, LaError>) -> Result<Condition, LaError> {
    let mut c = Condition::new("solutions");
    for (i, x) in found.iter().enumerate() {
        let r = verify(x)?;
        c.record(r.passed(), || Witness::note(vec![i], format!("failing {:?}", r.failing_tags())));
    }
    Ok(c)
}

fn search(examined: u64, linear: Option<&AffineSpace>, solutions: Vec<Vec<Scalar>>, verified: Condition) -> Raw {
    let mut report = Report::new();
    report.push(verified);
    Raw {
        report,
        search: Some(Search {
            examined,
            searched_dim: linear.map(|s| s.kernel_basis.len()),
            solutions: solutions.iter().map(|s| strings(s)).collect(),
        }),
    }
}

fn coring_failure(e: CoringError) -> Result<Raw, LaError> {
    match e {
        CoringError::La(e) => Err(e),
        CoringError::AxiomFailure(tags) => {
            let mut c = Condition::new("coring");
            c.fail(Witness::note(vec![], format!("failing {tags:?}")));
            check(Report { conditions: vec![c] })
        }
    }
}

fn execute(job: &Job, limit: u64) -> Result<Raw, LaError> {
    match job {
        Job::Algebra(a) => check(check_algebra(a)),
        Job::Coalgebra(c) => check(check_coalgebra(c)),
        Job::Hom(h) => check(check_hom(h)),
        Job::FindHoms(s, t) => {
            let found = find_algebra_homs(s, t, limit)?;
            let verified = solutions_condition(&found.homs, |m| Ok(check_hom(&AlgebraHom::new(s.clone(), t.clone(), m.clone())?)))?;
            let mut raw = search(found.examined, None, found.homs.iter().map(columns).collect(), verified);
            raw.search.as_mut().expect("search").searched_dim = Some(s.dim() * t.dim());
            Ok(raw)
        }
        Job::Module(Module::Left(m)) => check(check_left_module(m)),
        Job::Module(Module::Right(m)) => check(check_right_module(m)),
        Job::Entwining(e) => check(check_entwining(e)),
        Job::Category(c) => check(check_category(c)),
        Job::Functor(f) => check(check_functor(f)),
        Job::Retraction(r) => check(verify_retraction(r)),
        Job::RetractionIdeal(r) => check(verify_retraction_ideal(r)),
        Job::Idempotent(e) => check(verify_sep_idempotent(e)?),
        Job::SolveIdempotent(phi, xi) => {
            let found = solve_sep_idempotent(phi, xi, limit)?;
            let verified = solutions_condition(&found.solutions, verify_sep_idempotent)?;
            let sols = found.solutions.iter().map(|e| e.element.clone()).collect();
            Ok(search(found.examined, found.classical.as_ref(), sols, verified))
        }
        Job::Grouplike(g) => check(verify_grouplike(g)?),
        Job::FindGrouplike(Err(msg)) => {
            let mut c = Condition::new("coring");
            c.fail(Witness::note(vec![], msg.clone()));
            Ok(Raw { report: Report { conditions: vec![c] }, search: Some(Search { examined: 0, searched_dim: None, solutions: vec![] }) })
        }
        Job::FindGrouplike(Ok(c)) => {
            let found = find_invariant_grouplikes(c, limit)?;
            let verified = solutions_condition(&found.solutions, |v| verify_grouplike(&GrouplikeElement { coring: c.clone(), vector: v.clone() }))?;
            Ok(search(found.examined, found.linear.as_ref(), found.solutions, verified))
        }
        Job::Sweedler(h) => match sweedler_coring(h) {
            Ok(c) => check(check_coring(&c)?),
            Err(e) => coring_failure(e),
        },
        Job::CrossCheck(h) => {
            let coring = match sweedler_coring(h) {
                Ok(c) => c,
                Err(e) => return coring_failure(e),
            };
            let g = find_invariant_grouplikes(&coring, limit)?;
            let e = solve_sep_idempotent(h, &AlgebraHom::identity(&h.target), limit)?;
            let elements: Vec<Vec<Scalar>> = e.solutions.iter().map(|s| s.element.clone()).collect();
            let mut same = Condition::new("sweedler");
            for (i, v) in g.solutions.iter().enumerate() {
                same.record(elements.contains(v), || Witness::note(vec![0, i], format!("grouplike {:?} is not an idempotent", strings(v))));
            }
            for (i, v) in elements.iter().enumerate() {
                same.record(g.solutions.contains(v), || Witness::note(vec![1, i], format!("idempotent {:?} is not grouplike", strings(v))));
            }
            let mut classical = Condition::new("classical");
            classical.record(g.linear.is_some() == e.classical.is_some(), || {
                Witness::note(vec![], format!("linear parts solvable: grouplike {}, idempotent {}", g.linear.is_some(), e.classical.is_some()))
            });
            let mut report = Report::new();
            report.push(same);
            report.push(classical);
            Ok(Raw { report, search: None })
        }
        Job::Theta(t) => check(verify_theta(t)),
        Job::SolveTheta(e) => {
            let found = solve_theta(e, limit)?;
            let verified = solutions_condition(&found.solutions, |t| Ok(verify_theta(t)))?;
            let sols = found.solutions.iter().map(ThetaMap::unknowns).collect();
            Ok(search(found.examined, found.linear.as_ref(), sols, verified))
        }
        Job::Zeta(z) => check(verify_zeta(z)),
        Job::SolveZeta(e) => {
            let found = solve_zeta(e, limit)?;
            let verified = solutions_condition(&found.solutions, |z| Ok(verify_zeta(z)))?;
            let sols = found.solutions.iter().map(ZetaMap::unknowns).collect();
            Ok(search(found.examined, found.linear.as_ref(), sols, verified))
        }
        Job::DeltaHarness(e, family) => check(induce_delta_and_check(e, family)?),
        Job::ThetaHarness(t) => check(theta_harness(t)?),
        Job::ZetaHarness(z) => check(zeta_harness(z)?),
        Job::Ext(x) => check(check_ext_certificate(x)),
        Job::Res(g) => check(check_res_certificate(g)?),
        Job::SolveRes(phi, xi) => {
            let found = solve_res_certificate(phi, xi, limit)?;
            let verified = solutions_condition(&found.solutions, check_res_certificate)?;
            let sols = found.solutions.iter().map(ResGamma::joint).collect();
            Ok(search(found.examined, found.linear.as_ref(), sols, verified))
        }
    }
}

/// The serialized name of a unit variant.
pub(crate) fn name<T: Serialize>(x: T) -> String {
    serde_json::to_value(x).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

fn outcome(raw: &Raw) -> Outcome {
    match &raw.search {
        Some(s) if s.solutions.is_empty() => Outcome::Empty,
        Some(_) => Outcome::Nonempty,
        None if raw.report.passed() => Outcome::Pass,
        None => Outcome::Fail,
    }
}

fn finish(index: usize, task: &Task, raw: Result<Raw, CliError>, started: Instant) -> Result<TaskReport, CliError> {
    let elapsed_ms = started.elapsed().as_millis() as u64;
    let (outcome, mut conditions, search) = match raw {
        Ok(raw) => (outcome(&raw), raw.report.conditions, raw.search),
        Err(CliError::Limit(msg)) => {
            let mut c = Condition::new("limit");
            c.fail(Witness::note(vec![], msg));
            (Outcome::LimitExceeded, vec![c], None)
        }
        Err(e) => return Err(e),
    };
    let met = match (task.expect, outcome) {
        (_, Outcome::LimitExceeded) => false,
        (None, Outcome::Fail) => false,
        (None, _) => true,
        (Some(e), o) => matches!(
            (e, o),
            (Expect::Pass, Outcome::Pass) | (Expect::Fail, Outcome::Fail) | (Expect::Empty, Outcome::Empty) | (Expect::Nonempty, Outcome::Nonempty)
        ),
    };
    if let (Some(e), false) = (task.expect, met) {
        let mut c = Condition::new("expect");
        c.fail(Witness::note(vec![], format!("expected {}, got {}", name(e), name(outcome))));
        conditions.push(c);
    }
    Ok(TaskReport {
        index,
        op: task.op.clone(),
        args: task.args.clone(),
        outcome,
        expect: task.expect,
        verdict: if met { Verdict::Pass } else { Verdict::Fail },
        conditions,
        search,
        elapsed_ms,
    })
}

/// Resolves every definition, certificate and task reference.
pub fn validate(doc: &SpecDocument) -> Result<(), CliError> {
    let env = load(doc)?;
    for (i, task) in doc.tasks.iter().enumerate() {
        prepare(&env, i, task)?;
    }
    Ok(())
}

/// Runs the tasks whose op is `only` (all of them for `None`). Every task is
/// resolved before any runs, so input errors surface first.
pub fn run_tasks(doc: &SpecDocument, only: Option<&str>, limit: u64) -> Result<RunReport, CliError> {
    let env = load(doc)?;
    let mut jobs = Vec::new();
    for (i, task) in doc.tasks.iter().enumerate() {
        let job = prepare(&env, i, task)?;
        if only.is_none_or(|op| op == task.op) {
            jobs.push((i, task, job));
        }
    }
    if let (Some(op), true) = (only, jobs.is_empty()) {
        return Err(input(format!("no task with op '{op}'")));
    }
    let mut tasks = Vec::with_capacity(jobs.len());
    for (i, task, job) in jobs {
        let started = Instant::now();
        let task_limit = task.args.limit.unwrap_or(limit);
        let raw = execute(&job, task_limit).map_err(la(&format!("task {i} ({})", task.op)));
        tasks.push(finish(i, task, raw, started)?);
    }
    let verdict = if tasks.iter().all(|t| t.verdict == Verdict::Pass) { Verdict::Pass } else { Verdict::Fail };
    Ok(RunReport { field: env.field.to_string(), verdict, tasks })
}
