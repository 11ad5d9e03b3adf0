//! The module that is two dimensional below λ and one dimensional above,
//! run through the full pipeline: lift and pin on the deep region, then the
//! boundary equation at the seam, then (if a family survives) the whole
//! window.

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{solve_linear, Field, LinearSolution, Matrix, Poly, QuadScalar, RatFunc};
use crate::weightmod::{counterexample_module, GradedMap, WeightModule};

use super::action::{extend_action, Branch, Side, WittAction};
use super::cert::{BoundaryFamily, InfeasibilityCertificate, Stage, Witness};
use super::lift::{lift_linear, lift_linear_fixed, Lift};
use super::pin::{pin_quadratic, pin_quadratic_with, PinOutcome};

/// Outcome of the boundary equation [f,T] = 3e at the seam index −1.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundaryResult<F> {
    Consistent { branch: Branch, t: GradedMap<F> },
    Inconsistent(BoundaryFamily<F>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeepAnalysis<F> {
    pub family_dim: usize,
    pub candidates: Vec<(Branch, GradedMap<F>)>,
    pub boundary: Vec<BoundaryResult<F>>,
}

/// Lift and pin on indices ≤ 0 (where the module is generalized dense),
/// then test each pinned family against the boundary equation at −1.
pub fn deep_analysis<F: Field>(m: &WeightModule<F>, sqrt_tau: &F) -> Result<DeepAnalysis<F>> {
    let deep = m.restrict(m.k_min, 0)?;
    let fam = lift_linear(&deep, Side::Gt)?
        .family()
        .ok_or_else(|| Error::WrongKind("lift on the deep region is inconsistent".into()))?;
    let candidates = match pin_quadratic_with(&deep, &fam, Some(sqrt_tau)) {
        PinOutcome::Pinned { solutions, strategy: "commutant", .. } => solutions,
        _ => return Err(Error::WrongKind("deep region is not in first-case shape".into())),
    };
    let boundary = candidates.iter().map(|(b, t)| boundary_equation(m, *b, t)).collect();
    Ok(DeepAnalysis { family_dim: fam.dim(), candidates, boundary })
}

/// f_1 X − T_{−2} f_{−1} = 3e_{−1} in the unknown block X = T_{−1}.
fn boundary_equation<F: Field>(m: &WeightModule<F>, branch: Branch, t: &GradedMap<F>) -> BoundaryResult<F> {
    let k = -1;
    let f_hi = m.f_block(k + 2).unwrap();
    let f_lo = m.f_block(k).unwrap();
    let e = m.e_block(k).unwrap();
    let known = t.block(k - 1).unwrap().mul(f_lo);
    let (rows, cols) = (m.dim(k + 1), m.dim(k));
    let xr = m.dim(k + 2);
    let mut a = Matrix::zeros(rows * cols, xr * cols);
    let mut rhs = Vec::new();
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let eq = r * cols + c;
            for s in 0..xr {
                a.set(eq, s * cols + c, f_hi.get(r, s).clone());
            }
            let three_e = e.get(r, c).times(&F::from_int(3));
            rhs.push(three_e.plus(known.get(r, c)));
            if (0..xr).all(|s| f_hi.get(r, s).is_zero()) {
                pairs.push((known.get(r, c).negate(), three_e));
            }
        }
    }
    match solve_linear(&a, &rhs) {
        LinearSolution::Solved(sol) => {
            let mut full = t.clone();
            full.insert(k, Matrix::from_vec(xr, cols, sol.particular));
            BoundaryResult::Consistent { branch, t: full }
        }
        LinearSolution::Inconsistent(w) => BoundaryResult::Inconsistent(BoundaryFamily {
            branch,
            k,
            matrix: a,
            rhs,
            combination: w.combination,
            value: w.value,
            pairs,
        }),
    }
}

/// Per-family boundary polynomials over ℚ(λ).
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicFamily {
    pub branch: Branch,
    /// lhs = rhs pairs, as rational functions of λ.
    pub pairs: Vec<(RatFunc, RatFunc)>,
    /// Primitive numerators of lhs − rhs.
    pub polys: Vec<Poly>,
    /// Monic gcd of `polys`; None when the seam equation is solvable.
    pub gcd: Option<Poly>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertifyOutcome {
    Infeasible(InfeasibilityCertificate<QuadScalar>),
    /// A surviving family extends; the action passes verify_bracket.
    Extendable { branch: Branch, action: Box<WittAction<QuadScalar>>, report: Report },
    Undecided(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certification {
    pub lambda: QuadScalar,
    pub window: (i64, i64),
    pub printed: bool,
    pub sl2: Report,
    pub family_dim: usize,
    pub boundary: Vec<(Branch, bool)>,
    pub outcome: CertifyOutcome,
    pub symbolic: Vec<SymbolicFamily>,
}

impl Certification {
    pub fn is_infeasible(&self) -> bool {
        matches!(self.outcome, CertifyOutcome::Infeasible(_))
    }

    /// True iff every family fails the seam for all λ: each family's
    /// boundary polynomials have gcd 1.
    pub fn gcd_is_one(&self) -> bool {
        !self.symbolic.is_empty()
            && self.symbolic.iter().all(|s| s.gcd.as_ref().is_some_and(|g| g.degree() == Some(0)))
    }
}

/// Runs the counterexample pipeline at a given λ, and symbolically in λ.
pub fn counterexample_certify(lambda: &QuadScalar, k_min: i64, k_max: i64, printed: bool, depth: i64) -> Result<Certification> {
    if lambda.is_integer() {
        return Err(Error::IntegerLambda(lambda.to_string()));
    }
    if k_min > -6 || k_max < 2 {
        return Err(Error::WindowTooSmall("need at least 6 weights below lambda and 2 above".into()));
    }
    let m = counterexample_module(lambda, k_min, k_max, printed)?;
    let sqrt_tau = lambda.plus(&QuadScalar::one());
    let deep = deep_analysis(&m, &sqrt_tau)?;
    let boundary =
        deep.boundary.iter().map(|b| match b {
            BoundaryResult::Consistent { branch, .. } => (*branch, true),
            BoundaryResult::Inconsistent(f) => (f.branch, false),
        })
        .collect();
    let outcome = decide(&m, &deep, depth);
    let symbolic = symbolic_boundary(k_min, printed)?;
    Ok(Certification {
        lambda: lambda.clone(),
        window: (k_min, k_max),
        printed,
        sl2: m.verify_sl2(),
        family_dim: deep.family_dim,
        boundary,
        outcome,
        symbolic,
    })
}

fn decide(m: &WeightModule<QuadScalar>, deep: &DeepAnalysis<QuadScalar>, depth: i64) -> CertifyOutcome {
    let failed: Vec<BoundaryFamily<QuadScalar>> = deep
        .boundary
        .iter()
        .filter_map(|b| match b {
            BoundaryResult::Inconsistent(f) => Some(f.clone()),
            _ => None,
        })
        .collect();
    if failed.len() == deep.boundary.len() && !failed.is_empty() {
        return CertifyOutcome::Infeasible(InfeasibilityCertificate {
            stage: Stage::Boundary,
            witness: Witness::Boundary { families: failed },
            note: "every deep-region family fails [f,T] = 3e at the seam".into(),
        });
    }
    let mut notes = Vec::new();
    for b in &deep.boundary {
        let BoundaryResult::Consistent { branch, t } = b else { continue };
        let fixed = t.restrict(|k| k <= -2);
        let fam = match lift_linear_fixed(m, Side::Gt, &fixed) {
            Ok(Lift::Family(f)) => f,
            Ok(Lift::Inconsistent(_)) => {
                notes.push(format!("branch {branch}: lift over the whole window is inconsistent"));
                continue;
            }
            Err(e) => {
                notes.push(format!("branch {branch}: {e}"));
                continue;
            }
        };
        let sols = match pin_quadratic(m, &fam) {
            PinOutcome::Pinned { solutions, .. } => solutions,
            PinOutcome::Infeasible(_) => {
                notes.push(format!("branch {branch}: (0,1) bracket has no solution over the window"));
                continue;
            }
            PinOutcome::Undecided(s) => {
                notes.push(format!("branch {branch}: {s}"));
                continue;
            }
        };
        for (_, t) in sols {
            let Ok(mut a) = extend_action(m, &t, Side::Gt, depth) else { continue };
            let report = a.verify_bracket(depth);
            if report.pass {
                a.branch = *branch;
                return CertifyOutcome::Extendable { branch: *branch, action: Box::new(a), report };
            }
            notes.push(format!("branch {branch}: candidate fails the bracket check at depth {depth}"));
        }
    }
    CertifyOutcome::Undecided(notes.join("; "))
}

/// The deep-region pipeline over ℚ(λ); the window above λ plays no role in
/// the seam equation, so two indices above suffice.
pub fn symbolic_boundary(k_min: i64, printed: bool) -> Result<Vec<SymbolicFamily>> {
    let lambda = RatFunc::var();
    let m = counterexample_module(&lambda, k_min, 2, printed)?;
    let sqrt_tau = lambda.plus(&RatFunc::one());
    let deep = deep_analysis(&m, &sqrt_tau)?;
    Ok(deep
        .boundary
        .into_iter()
        .map(|b| match b {
            BoundaryResult::Consistent { branch, .. } => SymbolicFamily { branch, pairs: vec![], polys: vec![], gcd: None },
            BoundaryResult::Inconsistent(f) => {
                let polys: Vec<Poly> = f
                    .pairs
                    .iter()
                    .map(|(l, r)| l.minus(r))
                    .filter(|d| !d.is_zero())
                    .map(|d| d.numer().primitive())
                    .collect();
                let gcd = polys.iter().skip(1).fold(polys.first().cloned(), |g, p| g.map(|g| g.gcd(p)));
                let gcd = gcd.map(|g| g.monic());
                SymbolicFamily { branch: f.branch, pairs: f.pairs, polys, gcd }
            }
        })
        .collect())
}
