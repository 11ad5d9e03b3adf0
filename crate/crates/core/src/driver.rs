//! Shared front-end logic: building catalog modules from flag values and
//! running the closed or generic extension by module kind. The CLI and the
//! C interface both call into this.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extend::*;
use crate::json::{action_json, report_json};
use crate::report::Report;
use crate::scalar::{Field, Matrix, QuadScalar as Q};
use crate::weightmod::*;

/// Parameters for one catalog entry, all optional until the kind asks.
#[derive(Clone, Debug, Default)]
pub struct ModuleSpec {
    pub kind: String,
    pub anchor: Option<Q>,
    pub tau: Option<Q>,
    pub lambda: Option<Q>,
    pub a: Option<Q>,
    pub b: Option<Q>,
    pub n: Option<u32>,
    pub nil: Option<Matrix<Q>>,
    pub k_min: Option<i64>,
    pub k_max: Option<i64>,
    pub depth: Option<i64>,
    pub printed: bool,
}

fn need<T: Clone>(x: &Option<T>, what: &str) -> Result<T> {
    x.clone().ok_or_else(|| Error::Parse(format!("missing --{what}")))
}

/// Parses "a,b;c,d" into a matrix.
pub fn parse_matrix(s: &str) -> Result<Matrix<Q>> {
    let rows = s
        .split(';')
        .map(|r| r.split(',').map(Q::parse).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let c = rows.first().map_or(0, Vec::len);
    if c == 0 || rows.iter().any(|r| r.len() != c) {
        return Err(Error::ShapeMismatch(format!("ragged matrix {s}")));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn build_module(s: &ModuleSpec) -> Result<WeightModule<Q>> {
    let window = || Ok::<_, Error>((need(&s.k_min, "kmin")?, need(&s.k_max, "kmax")?));
    match s.kind.as_str() {
        "dense" => {
            let (lo, hi) = window()?;
            make_dense(&need(&s.anchor, "anchor")?, &need(&s.tau, "tau")?, lo, hi)
        }
        "verma" => make_verma(&need(&s.lambda, "lambda")?, s.depth.unwrap_or(22)),
        "lowest" => make_lowest(&need(&s.lambda, "lambda")?, s.depth.unwrap_or(22)),
        "finite" => make_finite(need(&s.n, "n")?),
        "generalized" => {
            let (lo, hi) = window()?;
            make_generalized_dense(&need(&s.anchor, "anchor")?, &need(&s.tau, "tau")?, &need(&s.nil, "nil")?, lo, hi)
        }
        "counterexample" => {
            let (lo, hi) = window()?;
            let lam = need(&s.lambda, "lambda")?;
            if s.printed {
                make_counterexample_printed(&lam, lo, hi)
            } else {
                make_counterexample(&lam, lo, hi)
            }
        }
        "intermediate" => {
            let (lo, hi) = window()?;
            Ok(make_intermediate(&need(&s.a, "a")?, &need(&s.b, "b")?, lo, hi, 1)?.module)
        }
        k => Err(Error::Parse(format!("unknown module kind {k}"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Generic,
}

impl Method {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "generic" => Ok(Method::Generic),
            _ => Err(Error::Parse(format!("unknown method {s}"))),
        }
    }
}

/// Exit code of each outcome status.
pub fn exit_code(status: &str) -> i32 {
    match status {
        "Extended" | "Verified" | "Glued" | "Pass" => 0,
        "Infeasible" | "Failed" | "GlueFailure" => 3,
        _ => 4,
    }
}

/// Result of an extension run: status, surviving actions, merged report and
/// an infeasibility certificate when there is one.
pub struct RunResult {
    pub status: &'static str,
    pub actions: Vec<(Branch, WittAction<Q>)>,
    pub report: Report,
    pub certificate: Option<InfeasibilityCertificate<Q>>,
}

impl RunResult {
    pub fn to_json(&self) -> Value {
        let mut v = report_json(self.status, &self.report, self.certificate.as_ref());
        v["branches"] = json!(self.actions.iter().map(|(b, _)| b.symbol()).collect::<Vec<_>>());
        if let Some(k) = self.actions.first().and_then(|(_, a)| a.central.as_ref()) {
            v["central_zero"] = json!(k.is_zero());
        }
        v
    }

    pub fn first_action_json(&self) -> Option<Value> {
        self.actions.first().map(|(_, a)| action_json(a))
    }
}

fn side_closed(m: &WeightModule<Q>, side: Side, b: Branch, depth: i64) -> Result<WittAction<Q>> {
    let alg = side.algebra();
    match &m.kind {
        Kind::Dense { .. } => closed_form_dense(m, alg, b, depth),
        Kind::Verma { .. } => closed_form_verma(m, alg, b, depth),
        Kind::Lowest { .. } => closed_form_lowest(m, alg, b, depth),
        Kind::Generalized { tau, .. } if side == Side::Gt => {
            let r = tau.root().ok_or_else(|| Error::RootNotInField(tau.to_string()))?;
            let mut a = functor_image(m, &r.times(&b.sign()), depth)?;
            a.branch = b;
            Ok(a)
        }
        Kind::Intermediate { a, b: bb } => {
            let mut act = make_intermediate(a, bb, m.k_min, m.k_max, depth)?;
            let (lo, hi) = alg.range(depth);
            act.ops.retain(|i, _| (lo..=hi).contains(i));
            act.algebra = alg;
            Ok(act)
        }
        k => Err(Error::BranchUnavailable(format!("no closed form for {} on side {}", k.name(), alg.name()))),
    }
}

fn auto_branches(m: &WeightModule<Q>, side: Side) -> Vec<Branch> {
    match (&m.kind, side) {
        (Kind::Verma { .. }, Side::Gt) => vec![Branch::Minus],
        (Kind::Lowest { .. }, Side::Lt) | (Kind::Intermediate { .. }, _) => vec![Branch::NotApplicable],
        _ => vec![Branch::Plus, Branch::Minus],
    }
}

fn closed_sides(m: &WeightModule<Q>, side: Side, branch: Option<Branch>, depth: i64, report: &mut Report) -> Vec<(Branch, WittAction<Q>)> {
    let bs = branch.map_or_else(|| auto_branches(m, side), |b| vec![b]);
    let mut out = Vec::new();
    for b in bs {
        match side_closed(m, side, b, depth) {
            Ok(a) => {
                let r = a.verify_bracket(depth);
                if r.pass {
                    report.merge(r);
                    out.push((a.branch, a));
                } else {
                    report.note(format!("{} branch {b} fails: {:?}", side.algebra().name(), r.first_failure()));
                    report.merge(r);
                }
            }
            Err(e) => report.note(format!("{} branch {b}: {e}", side.algebra().name())),
        }
    }
    out
}

fn extend_closed(m: &WeightModule<Q>, alg: Algebra, branch: Option<Branch>, depth: i64) -> RunResult {
    let mut report = Report::new();
    let actions = match alg {
        Algebra::Gt => closed_sides(m, Side::Gt, branch, depth, &mut report),
        Algebra::Lt => closed_sides(m, Side::Lt, branch, depth, &mut report),
        Algebra::Full | Algebra::Vir => {
            if let Kind::Intermediate { a, b } = &m.kind {
                match make_intermediate(a, b, m.k_min, m.k_max, depth) {
                    Ok(act) => {
                        let r = act.verify_bracket(depth);
                        let ok = r.pass;
                        report.merge(r);
                        if ok { vec![(Branch::NotApplicable, act)] } else { vec![] }
                    }
                    Err(e) => {
                        report.note(e.to_string());
                        vec![]
                    }
                }
            } else {
                let lts = closed_sides(m, Side::Lt, branch, depth, &mut report);
                let gts = closed_sides(m, Side::Gt, branch, depth, &mut report);
                let mut kept = Vec::new();
                for (bl, l) in &lts {
                    for (bg, g) in &gts {
                        if branch.is_none() && matches!(m.kind, Kind::Dense { .. }) && bl != bg {
                            continue;
                        }
                        let res = if alg == Algebra::Vir { glue_vir(l, g) } else { glue_witt(l, g) };
                        match res {
                            Ok(x) if x.report.pass => {
                                report.merge(x.report);
                                kept.push((x.action.branch, x.action));
                            }
                            Ok(x) => {
                                report.note(format!("pair ({bl},{bg}) glues but fails {:?}", x.report.first_failure()));
                                report.merge(x.report);
                            }
                            Err(e) => {
                                report.note(format!("pair ({bl},{bg}): {e}"));
                                report.pass = false;
                            }
                        }
                    }
                }
                kept
            }
        }
    };
    if actions.is_empty() {
        report.pass = false;
    }
    let status = if actions.is_empty() { "Undecided" } else { "Extended" };
    RunResult { status, actions, report, certificate: None }
}

fn certify(m: &WeightModule<Q>, lambda: &Q, printed: bool, depth: i64) -> Result<RunResult> {
    let c = counterexample_certify(lambda, m.k_min, m.k_max, printed, depth)?;
    let mut report = c.sl2.clone();
    report.note(format!("deep family dimension {}", c.family_dim));
    for f in &c.symbolic {
        let g = f.gcd.as_ref().map_or("none (seam solvable)".into(), |g| g.to_string());
        report.note(format!("branch {}: boundary gcd {g}", f.branch));
    }
    Ok(match c.outcome {
        CertifyOutcome::Infeasible(cert) => RunResult { status: "Infeasible", actions: vec![], report, certificate: Some(cert) },
        CertifyOutcome::Extendable { branch, action, report: r } => {
            report.merge(r);
            RunResult { status: "Extended", actions: vec![(branch, *action)], report, certificate: None }
        }
        CertifyOutcome::Undecided(s) => {
            report.note(s);
            RunResult { status: "Undecided", actions: vec![], report, certificate: None }
        }
    })
}

fn from_outcome(o: ExtensionOutcome<Q>) -> RunResult {
    let mut report = o.report;
    match o.status {
        Status::Extended(a) => RunResult { status: "Extended", actions: a, report, certificate: None },
        Status::Infeasible(c) => {
            report.pass = false;
            RunResult { status: "Infeasible", actions: vec![], report, certificate: Some(c) }
        }
        Status::Undecided(s) => {
            report.pass = false;
            report.note(s);
            RunResult { status: "Undecided", actions: vec![], report, certificate: None }
        }
    }
}

/// Runs `extend` on a module. The counterexample kind always goes through
/// its certification pipeline.
pub fn run_extend(m: &WeightModule<Q>, alg: Algebra, branch: Option<Branch>, depth: i64, method: Method) -> Result<RunResult> {
    if let Kind::Counterexample { lambda, printed } = &m.kind {
        if alg == Algebra::Gt {
            return certify(m, lambda, *printed, depth);
        }
    }
    Ok(match method {
        Method::Closed => extend_closed(m, alg, branch, depth),
        Method::Generic => {
            let mut r = from_outcome(extend_generic(m, alg, depth)?);
            if let Some(b) = branch {
                r.actions.retain(|(x, _)| *x == b);
                if r.actions.is_empty() && r.status == "Extended" {
                    r.status = "Undecided";
                    r.report.note(format!("no solution labelled {b}"));
                }
            }
            r
        }
    })
}
