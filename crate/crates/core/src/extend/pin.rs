use crate::scalar::{nilpotent_sqrt, rat, Field, Matrix};
use crate::weightmod::{dense_e, GradedMap, WeightModule};

use super::action::{Branch, Side};
use super::cert::{InfeasibilityCertificate, QPoly, Stage, Witness};
use super::lift::{linear_residual, LiftFamily};

#[derive(Clone, Debug, PartialEq)]
pub enum PinOutcome<F> {
    /// Solutions of the (0,1) bracket inside the family. `exhaustive` is true
    /// when the list is provably every solution.
    Pinned { solutions: Vec<(Branch, GradedMap<F>)>, exhaustive: bool, strategy: &'static str },
    Infeasible(InfeasibilityCertificate<F>),
    Undecided(String),
}

fn ad_raise<F: Field>(m: &WeightModule<F>, side: Side) -> GradedMap<F> {
    match side {
        Side::Gt => m.e_map(),
        Side::Lt => m.f_map(),
    }
}

/// [U, ad(e)V] (gt) or [U, ad(f)V] (lt).
pub fn bilinear<F: Field>(m: &WeightModule<F>, side: Side, u: &GradedMap<F>, v: &GradedMap<F>) -> GradedMap<F> {
    u.commutator(&ad_raise(m, side).commutator(v))
}

/// (1/6)ad(e)³U (gt) or −(1/6)ad(f)³U (lt).
pub fn cubic_term<F: Field>(m: &WeightModule<F>, side: Side, u: &GradedMap<F>) -> GradedMap<F> {
    let y = ad_raise(m, side);
    let a3 = y.commutator(&y.commutator(&y.commutator(u)));
    let c = match side {
        Side::Gt => rat(1, 6),
        Side::Lt => rat(-1, 6),
    };
    a3.scale(&F::from_rational(c))
}

/// The (0,1) bracket residual: [T, ad(e)T] + (1/6)ad(e)³T for gt and
/// [S, ad(f)S] − (1/6)ad(f)³S for lt. It vanishes iff ρ(L_2) and ρ(L_3)
/// (resp. ρ(L_−2), ρ(L_−3)) bracket correctly.
pub fn quadratic_residual<F: Field>(m: &WeightModule<F>, side: Side, u: &GradedMap<F>) -> GradedMap<F> {
    bilinear(m, side, u, u).add(&cubic_term(m, side, u))
}

fn flatten<F: Field>(g: &GradedMap<F>) -> Vec<F> {
    g.blocks.values().flat_map(|b| b.entries().to_vec()).collect()
}

/// The residual as quadratic polynomials in the coordinates along `dirs`.
pub fn residual_system<F: Field>(m: &WeightModule<F>, side: Side, p: &GradedMap<F>, dirs: &[GradedMap<F>]) -> Vec<QPoly<F>> {
    let n = dirs.len();
    let c = flatten(&quadratic_residual(m, side, p));
    let mut eqs: Vec<QPoly<F>> = c
        .into_iter()
        .map(|v| {
            let mut q = QPoly::zero(n);
            q.constant = v;
            q
        })
        .collect();
    for i in 0..n {
        let lin = bilinear(m, side, p, &dirs[i]).add(&bilinear(m, side, &dirs[i], p)).add(&cubic_term(m, side, &dirs[i]));
        for (e, v) in eqs.iter_mut().zip(flatten(&lin)) {
            e.linear[i] = v;
        }
        for j in i..n {
            let q = if i == j {
                bilinear(m, side, &dirs[i], &dirs[i])
            } else {
                bilinear(m, side, &dirs[i], &dirs[j]).add(&bilinear(m, side, &dirs[j], &dirs[i]))
            };
            for (e, v) in eqs.iter_mut().zip(flatten(&q)) {
                e.quad[i][j] = v;
            }
        }
    }
    eqs
}

/// Data of a module in first-case shape: constant weight-space dimension l,
/// f = Id, and e = ¼(τ − (μ+1)²)Id + N for one nilpotent N.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstCase<F> {
    pub tau: F,
    pub nil: Matrix<F>,
    pub casimir: Matrix<F>,
}

pub fn first_case_shape<F: Field>(m: &WeightModule<F>) -> Option<FirstCase<F>> {
    let l = m.dim(m.k_min);
    if l == 0 || m.dims().iter().any(|&d| d != l) || m.k_max - m.k_min < 2 {
        return None;
    }
    let id = Matrix::identity(l);
    if (m.k_min + 1..=m.k_max).any(|k| m.f_block(k) != Some(&id)) {
        return None;
    }
    let cas = m.casimir();
    let c = cas.blocks.values().next()?.clone();
    if cas.blocks.values().any(|b| *b != c) {
        return None;
    }
    let trace = (0..l).fold(F::zero(), |s, i| s.plus(c.get(i, i)));
    let tau = trace.over(&F::from_int(l as i64))?;
    let nil = c.add_scalar(&tau.negate()).scale(&F::from_rational(rat(1, 4)));
    if !nil.pow(l as u32).is_zero() {
        return None;
    }
    let ok = (m.k_min..m.k_max).all(|k| *m.e_block(k).unwrap() == nil.add_scalar(&dense_e(&tau, &m.weight(k))));
    ok.then_some(FirstCase { tau, nil, casimir: c })
}

/// T_μ = A − (1/8)μ(11+6μ+μ²−3τ)Id + (3/2)μN with A = ¼(c−1)(3+s), s a
/// square root of the Casimir; defined on every index T can occupy.
pub fn commutant_candidate<F: Field>(m: &WeightModule<F>, fc: &FirstCase<F>, sqrt_c: &Matrix<F>) -> GradedMap<F> {
    let l = fc.casimir.rows();
    let a = fc
        .casimir
        .add_scalar(&F::one().negate())
        .mul(&sqrt_c.add_scalar(&F::from_int(3)))
        .scale(&F::from_rational(rat(1, 4)));
    let mut t = GradedMap::new(2);
    for k in m.k_min..=m.k_max - 2 {
        let mu = m.weight(k);
        let p = mu
            .times(&F::from_int(11).plus(&mu.times(&F::from_int(6))).plus(&mu.times(&mu)).minus(&fc.tau.times(&F::from_int(3))))
            .times(&F::from_rational(rat(1, 8)));
        let blk = a.sub(&Matrix::scalar(l, p)).add(&fc.nil.scale(&mu.times(&F::from_rational(rat(3, 2)))));
        t.insert(k, blk);
    }
    t
}

/// Both commutant roots that satisfy the lift and the (0,1) bracket.
pub fn commutant_solutions<F: Field>(m: &WeightModule<F>, sqrt_tau: &F) -> Option<Vec<(Branch, GradedMap<F>)>> {
    let fc = first_case_shape(m)?;
    if fc.tau.is_zero() {
        return None;
    }
    let mut out: Vec<(Branch, GradedMap<F>)> = Vec::new();
    for b in [Branch::Plus, Branch::Minus] {
        let s = nilpotent_sqrt(&fc.casimir, &fc.tau, &sqrt_tau.times(&b.sign())).ok()?;
        let t = commutant_candidate(m, &fc, &s);
        if !linear_residual(m, Side::Gt, &t).is_zero() || !quadratic_residual(m, Side::Gt, &t).is_zero() {
            continue;
        }
        if !out.iter().any(|(_, u)| *u == t) {
            out.push((b, t));
        }
    }
    Some(out)
}

pub fn pin_quadratic<F: Field>(m: &WeightModule<F>, fam: &LiftFamily<F>) -> PinOutcome<F> {
    pin_quadratic_with(m, fam, None)
}

/// Imposes the (0,1) bracket on the lift family. A first-case module on
/// side gt is solved through the commutant of the Casimir; otherwise up
/// to two parameters are eliminated exactly.
pub fn pin_quadratic_with<F: Field>(m: &WeightModule<F>, fam: &LiftFamily<F>, sqrt_tau: Option<&F>) -> PinOutcome<F> {
    if fam.side == Side::Gt {
        if let Some(fc) = first_case_shape(m) {
            let root = sqrt_tau.cloned().or_else(|| fc.tau.root());
            if let Some(sols) = root.and_then(|r| commutant_solutions(m, &r)) {
                if !sols.is_empty() {
                    let exhaustive = fc.casimir.rows() == 1;
                    return PinOutcome::Pinned { solutions: sols, exhaustive, strategy: "commutant" };
                }
            }
        }
    }
    pin_eliminate(m, fam.side, fam.particular(), fam.directions())
}

/// Exact elimination: linear consequences are solved and substituted until
/// none remain; then zero or one parameter is finished off directly.
pub fn pin_eliminate<F: Field>(m: &WeightModule<F>, side: Side, mut p: GradedMap<F>, mut dirs: Vec<GradedMap<F>>) -> PinOutcome<F> {
    loop {
        let n = dirs.len();
        if n > 6 {
            return PinOutcome::Undecided(format!("{n} free parameters; no general quadratic solver"));
        }
        let eqs = residual_system(m, side, &p, &dirs);
        let nq = n * (n + 1) / 2;
        let main = nq + n + 1;
        let rows = eqs.len();
        let mut mat = Matrix::zeros(rows, main + rows);
        for (r, e) in eqs.iter().enumerate() {
            let mut c = 0;
            for i in 0..n {
                for j in i..n {
                    mat.set(r, c, e.quad[i][j].clone());
                    c += 1;
                }
            }
            for i in 0..n {
                mat.set(r, nq + i, e.linear[i].clone());
            }
            mat.set(r, nq + n, e.constant.clone());
            mat.set(r, main + r, F::one());
        }
        let (red, pivots) = mat.rref();
        let mut linear_rows = Vec::new();
        let mut quad_rows = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            if pc >= main {
                break;
            }
            if pc == nq + n {
                let combination = (0..rows).map(|i| red.get(r, main + i).clone()).collect();
                return PinOutcome::Infeasible(InfeasibilityCertificate {
                    stage: Stage::QuadraticPin,
                    witness: Witness::Polynomial { equations: eqs, combination, value: F::one() },
                    note: "the (0,1) bracket has no solution in the lift family".into(),
                });
            }
            if pc >= nq {
                linear_rows.push((r, pc - nq));
            } else {
                quad_rows.push(r);
            }
        }
        if linear_rows.is_empty() {
            return finish(m, side, p, dirs, &red, &quad_rows, nq);
        }
        // t_piv = −(Σ_free coeff·t_free + const)
        let piv: Vec<usize> = linear_rows.iter().map(|&(_, v)| v).collect();
        let free: Vec<usize> = (0..n).filter(|v| !piv.contains(v)).collect();
        let mut shift = p.clone();
        for &(r, v) in &linear_rows {
            let c0 = red.get(r, nq + n).negate();
            shift = shift.add(&dirs[v].scale(&c0));
        }
        let new_dirs = free
            .iter()
            .map(|&fv| {
                let mut d = dirs[fv].clone();
                for &(r, v) in &linear_rows {
                    d = d.add(&dirs[v].scale(&red.get(r, nq + fv).negate()));
                }
                d
            })
            .collect();
        p = shift;
        dirs = new_dirs;
    }
}

fn finish<F: Field>(
    m: &WeightModule<F>,
    side: Side,
    p: GradedMap<F>,
    dirs: Vec<GradedMap<F>>,
    red: &Matrix<F>,
    quad_rows: &[usize],
    nq: usize,
) -> PinOutcome<F> {
    let n = dirs.len();
    let pinned = |solutions| PinOutcome::Pinned { solutions, exhaustive: true, strategy: "elimination" };
    match n {
        0 => pinned(vec![(Branch::NotApplicable, p)]),
        1 => {
            let Some(&r) = quad_rows.first() else {
                return PinOutcome::Undecided("a one-parameter family solves the (0,1) bracket".into());
            };
            // t² + b t + c = 0
            let b = red.get(r, nq).clone();
            let c = red.get(r, nq + 1).clone();
            let disc = b.times(&b).minus(&c.times(&F::from_int(4)));
            let Some(s) = disc.root() else {
                return PinOutcome::Undecided(format!("square root of {disc} is not in the working field"));
            };
            let half = F::from_rational(rat(1, 2));
            let mut sols: Vec<(Branch, GradedMap<F>)> = Vec::new();
            for sg in [F::one(), F::one().negate()] {
                let t = b.negate().plus(&sg.times(&s)).times(&half);
                let u = p.add(&dirs[0].scale(&t));
                if quadratic_residual(m, side, &u).is_zero() && !sols.iter().any(|(_, v)| *v == u) {
                    sols.push((Branch::NotApplicable, u));
                }
            }
            pinned(sols)
        }
        _ => PinOutcome::Undecided(format!("{n} parameters remain in a purely quadratic system")),
    }
}
