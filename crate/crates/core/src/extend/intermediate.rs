use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{pochhammer, Field, Matrix};
use crate::weightmod::{make_dense, GradedMap, Kind, WeightModule};

use super::action::{Algebra, Branch, WittAction};
use super::closed::{closed_form_dense, intertwines};

/// V_{a,b}: ρ(L_i)w_n = (ai + b − n)w_{n+i}, with w_n at index n. The sl(2)
/// part gives weight 2(n − b), so the anchor is −2b.
pub fn make_intermediate<F: Field>(a: &F, b: &F, k_min: i64, k_max: i64, depth: i64) -> Result<WittAction<F>> {
    let coeff = |i: i64, n: i64| a.times(&F::from_int(i)).plus(b).minus(&F::from_int(n));
    let one = |x: F| Matrix::from_vec(1, 1, vec![x]);
    let m = WeightModule::from_fn(
        b.times(&F::from_int(-2)),
        k_min,
        k_max,
        |_| 1,
        |n| one(coeff(1, n).negate()),
        |n| one(coeff(-1, n)),
        Kind::Intermediate { a: a.clone(), b: b.clone() },
    )?;
    let mut act = WittAction::new(m, Algebra::Full, Branch::NotApplicable);
    for i in -depth..=depth {
        let mut g = GradedMap::new(i);
        for n in k_min..=k_max {
            if (k_min..=k_max).contains(&(n + i)) {
                g.insert(n, one(coeff(i, n)));
            }
        }
        if g.blocks.is_empty() {
            return Err(Error::DepthExceedsWindow(depth));
        }
        act.ops.insert(i, g);
    }
    Ok(act)
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsoResult<F> {
    pub map: GradedMap<F>,
    pub target: WeightModule<F>,
    /// The map is an sl(2)-isomorphism on the window.
    pub verdict: bool,
    /// The dense branch whose gt action the map intertwines.
    pub matched: Option<Branch>,
    /// a = ½(−1 ± √τ) for the matched sign.
    pub a_matches: bool,
    pub report: Report,
}

/// w_n ↦ P(−a+b−n, n) v_n into the dense module with anchor −2b and
/// τ = (1+2a)², checked as an sl(2) isomorphism, plus the branch of the
/// dense gt action it carries the intermediate action onto.
pub fn intermediate_iso<F: Field>(a: &F, b: &F, k_min: i64, k_max: i64, depth: i64) -> Result<IsoResult<F>> {
    if a.plus(b).is_integer() {
        return Err(Error::ParameterDegenerate(format!("2a = {} lies in -2b + 2Z", a.times(&F::from_int(2)))));
    }
    let src = make_intermediate(a, b, k_min, k_max, depth)?;
    let two_a1 = a.times(&F::from_int(2)).plus(&F::one());
    let tau = two_a1.times(&two_a1);
    let target = make_dense(&src.module.anchor, &tau, k_min, k_max)?;
    let mut map = GradedMap::new(0);
    let base = b.minus(a);
    for n in k_min..=k_max {
        let p = pochhammer(&base.minus(&F::from_int(n)), n)?;
        if p.is_zero() {
            return Err(Error::PochhammerPole { z: base.minus(&F::from_int(n)).to_string(), n });
        }
        map.insert(n, Matrix::from_vec(1, 1, vec![p]));
    }
    let mut report = Report::new();
    let morphism = src.module.verify_morphism(&target, &map)?;
    report.check("sl2 morphism", Some((k_min, k_max)));
    if !morphism {
        report.fail("sl2 morphism", 0, "map does not commute with e, f");
    }
    let mut gt = src.clone();
    gt.algebra = Algebra::Gt;
    gt.ops.retain(|i, _| *i >= -1);
    let mut matched = None;
    let mut a_matches = false;
    if let Some(root) = tau.root() {
        for br in [Branch::Plus, Branch::Minus] {
            let Ok(dense) = closed_form_dense(&target, Algebra::Gt, br, depth) else { continue };
            let mut dense = dense;
            dense.ops.retain(|i, _| gt.ops.contains_key(i));
            if intertwines(&map, &gt, &dense) {
                matched = Some(br);
                let s = root.times(&br.sign());
                a_matches = *a == s.minus(&F::one()).times(&F::from_rational(crate::scalar::rat(1, 2)));
                break;
            }
        }
    }
    report.check("dense branch match", Some((-1, depth)));
    if matched.is_none() {
        report.fail("dense branch match", 0, "no dense branch intertwined");
    }
    Ok(IsoResult { map, target, verdict: morphism, matched, a_matches, report })
}
