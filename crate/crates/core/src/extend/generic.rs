use crate::report::Report;
use crate::scalar::Field;
use crate::weightmod::{Kind, WeightModule};

use super::action::{extend_action, Algebra, Branch, Side, WittAction};
use super::cert::InfeasibilityCertificate;
use super::closed::{closed_form_dense, closed_form_lowest, closed_form_verma};
use super::glue::{glue_vir, glue_witt};
use super::lift::{lift_linear, Lift};
use super::pin::{pin_quadratic, PinOutcome};

#[derive(Clone, Debug, PartialEq)]
pub enum Status<F> {
    Extended(Vec<(Branch, WittAction<F>)>),
    Infeasible(InfeasibilityCertificate<F>),
    Undecided(String),
}

impl<F> Status<F> {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Extended(_) => "Extended",
            Status::Infeasible(_) => "Infeasible",
            Status::Undecided(_) => "Undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionOutcome<F> {
    pub status: Status<F>,
    pub depth: i64,
    pub report: Report,
}

/// Names a generic solution after the closed form it coincides with.
fn label<F: Field>(m: &WeightModule<F>, side: Side, t: &WittAction<F>, depth: i64) -> Branch {
    let d = side.degree();
    for b in [Branch::Plus, Branch::Minus] {
        let closed = match &m.kind {
            Kind::Dense { .. } => closed_form_dense(m, side.algebra(), b, depth),
            Kind::Verma { .. } => closed_form_verma(m, side.algebra(), b, depth),
            Kind::Lowest { .. } if side == Side::Gt => closed_form_lowest(m, side.algebra(), b, depth),
            _ => continue,
        };
        if let (Ok(c), Some(u)) = (closed, t.op(d)) {
            if c.op(d) == Some(u) {
                return b;
            }
        }
    }
    t.branch
}

/// lift_linear → pin_quadratic → extend_action → verify_bracket on one side.
pub fn extend_side<F: Field>(m: &WeightModule<F>, side: Side, depth: i64) -> crate::Result<ExtensionOutcome<F>> {
    let mut report = Report::new();
    let fam = match lift_linear(m, side)? {
        Lift::Family(f) => f,
        Lift::Inconsistent(c) => return Ok(ExtensionOutcome { status: Status::Infeasible(c), depth, report }),
    };
    report.note(format!("lift family dimension {}", fam.dim()));
    let (sols, exhaustive) = match pin_quadratic(m, &fam) {
        PinOutcome::Pinned { solutions, exhaustive, strategy } => {
            report.note(format!("pinned by {strategy}, {} solution(s)", solutions.len()));
            (solutions, exhaustive)
        }
        PinOutcome::Infeasible(c) => return Ok(ExtensionOutcome { status: Status::Infeasible(c), depth, report }),
        PinOutcome::Undecided(s) => return Ok(ExtensionOutcome { status: Status::Undecided(s), depth, report }),
    };
    let mut kept = Vec::new();
    for (b, t) in sols {
        let mut a = extend_action(m, &t, side, depth)?;
        a.branch = b;
        let r = a.verify_bracket(depth);
        if r.pass {
            let b = label(m, side, &a, depth);
            a.branch = b;
            report.merge(r);
            kept.push((b, a));
        } else {
            report.note(format!("a pinned candidate fails at {:?}", r.first_failure()));
        }
    }
    let status = if kept.is_empty() {
        let why = if exhaustive { "every solution of the (0,1) bracket" } else { "the pinned candidates" };
        Status::Undecided(format!("{why} fails a higher bracket at depth {depth}"))
    } else {
        Status::Extended(kept)
    };
    Ok(ExtensionOutcome { status, depth, report })
}

/// Generic extension for any tag; full and vir glue every pair of sides.
pub fn extend_generic<F: Field>(m: &WeightModule<F>, algebra: Algebra, depth: i64) -> crate::Result<ExtensionOutcome<F>> {
    match algebra {
        Algebra::Gt => extend_side(m, Side::Gt, depth),
        Algebra::Lt => extend_side(m, Side::Lt, depth),
        Algebra::Full | Algebra::Vir => {
            let gt = extend_side(m, Side::Gt, depth)?;
            let lt = extend_side(m, Side::Lt, depth)?;
            let (Status::Extended(gs), Status::Extended(ls)) = (&gt.status, &lt.status) else {
                let status = match (gt.status, lt.status) {
                    (Status::Infeasible(c), _) | (_, Status::Infeasible(c)) => Status::Infeasible(c),
                    (Status::Undecided(s), _) | (_, Status::Undecided(s)) => Status::Undecided(s),
                    _ => unreachable!(),
                };
                return Ok(ExtensionOutcome { status, depth, report: Report::new() });
            };
            let mut report = Report::new();
            let mut kept = Vec::new();
            for (bl, l) in ls {
                for (bg, g) in gs {
                    let glued = if algebra == Algebra::Vir { glue_vir(l, g) } else { glue_witt(l, g) };
                    match glued {
                        Ok(x) if x.report.pass => {
                            report.merge(x.report);
                            kept.push((if bl == bg { *bl } else { Branch::NotApplicable }, x.action));
                        }
                        Ok(x) => report.note(format!("pair ({bl},{bg}) glues but fails {:?}", x.report.first_failure())),
                        Err(e) => report.note(format!("pair ({bl},{bg}): {e}")),
                    }
                }
            }
            let status = if kept.is_empty() {
                Status::Undecided("no pair of sides glues".into())
            } else {
                Status::Extended(kept)
            };
            Ok(ExtensionOutcome { status, depth, report })
        }
    }
}
