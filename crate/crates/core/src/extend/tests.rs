use super::*;
use crate::scalar::{Field, QuadScalar as Q};

use crate::weightmod::{make_dense, make_lowest, make_verma};

fn q(n: i64, d: i64) -> Q {
    Q::frac(n, d)
}

#[test]
fn dense_coefficients_match_oracle() {
    assert_eq!(dense_coeff(&q(1, 2), 1, &Q::int(3)).unwrap(), q(-27, 16));
    assert_eq!(dense_coeff(&q(1, 2), 2, &Q::int(3)).unwrap(), q(819, 64));
}

#[test]
fn dense_closed_forms_satisfy_bracket() {
    let m = make_dense(&q(1, 2), &Q::int(9), -8, 8).unwrap();
    for b in [Branch::Plus, Branch::Minus] {
        let a = closed_form_dense(&m, Algebra::Gt, b, 4).unwrap();
        assert!(a.verify_bracket(4).pass, "{b}");
        assert!(a.restriction_check().pass);
    }
}

#[test]
fn generic_dense_finds_both_branches() {
    let m = make_dense(&q(1, 2), &Q::int(9), -8, 8).unwrap();
    let out = extend_generic(&m, Algebra::Gt, 4).unwrap();
    let Status::Extended(sols) = out.status else { panic!("{:?}", out.status.name()) };
    let mut bs: Vec<_> = sols.iter().map(|(b, _)| b.symbol()).collect();
    bs.sort();
    assert_eq!(bs, ["+", "-"]);
}

#[test]
fn dense_witt_glue_same_branch() {
    let m = make_dense(&q(1, 3), &Q::int(9), -8, 8).unwrap();
    for b in [Branch::Plus, Branch::Minus] {
        let lt = closed_form_dense(&m, Algebra::Lt, b, 4).unwrap();
        let gt = closed_form_dense(&m, Algebra::Gt, b, 4).unwrap();
        let g = glue_witt(&lt, &gt).unwrap();
        assert!(g.report.pass);
        let v = glue_vir(&lt, &gt).unwrap();
        assert!(v.action.central.as_ref().unwrap().is_zero());
    }
}

#[test]
fn verma_minus_oracle() {
    assert_eq!(verma_minus_coeff_pub(), q(3, 2));
    let m = make_verma(&q(1, 2), 8).unwrap();
    let a = closed_form_verma(&m, Algebra::Gt, Branch::Minus, 4).unwrap();
    assert!(a.verify_bracket(4).pass);
    assert!(closed_form_verma(&m, Algebra::Gt, Branch::Plus, 4).is_err());
}

fn verma_minus_coeff_pub() -> Q {
    closed::verma_minus_coeff(&q(1, 2), 2, 3).unwrap()
}

#[test]
fn lowest_defects() {
    // anchor 9/2, so the formulas see λ = 5/2
    let m = make_lowest(&q(9, 2), 8).unwrap();
    let p = closed_form_lowest(&m, Algebra::Gt, Branch::Plus, 4).unwrap();
    assert!(!p.verify_bracket(4).pass);
    let lt = closed_form_lowest(&m, Algebra::Lt, Branch::Plus, 4).unwrap();
    assert!(lt.verify_bracket(4).pass);
    let err = glue_vir(&lt, &p).unwrap_err();
    let GlueError::CentralityFailure { k, .. } = &err else { panic!("{}", err.kind()) };
    let diag: Vec<Q> = (0..3).map(|j| k.block(j).unwrap().get(0, 0).clone()).collect();
    assert_eq!(diag, vec![q(171, 8), q(115, 8), Q::zero()]);
}

#[test]
fn lowest_minus_on_gt() {
    let m = make_lowest(&q(5, 2), 8).unwrap();
    let a = closed_form_lowest(&m, Algebra::Gt, Branch::Minus, 4).unwrap();
    assert!(a.verify_bracket(4).pass);
}

#[test]
fn intermediate_series_is_dense() {
    let act = make_intermediate(&q(1, 3), &q(1, 5), -6, 6, 3).unwrap();
    assert!(act.verify_bracket(3).pass);
    let iso = intermediate_iso(&q(1, 1), &q(1, 5), -6, 6, 3).unwrap();
    assert!(iso.verdict);
    assert!(iso.matched.is_some());
    assert!(iso.a_matches);
    assert!(intermediate_iso(&q(1, 2), &q(1, 2), -6, 6, 3).is_err());
}

#[test]
fn counterexample_repaired_layout_extends() {
    let c = counterexample_certify(&q(1, 2), -8, 3, false, 3).unwrap();
    assert!(c.sl2.pass);
    assert_eq!(c.boundary, vec![(Branch::Plus, false), (Branch::Minus, true)]);
    let CertifyOutcome::Extendable { branch, report, .. } = &c.outcome else { panic!() };
    assert_eq!(*branch, Branch::Minus);
    assert!(report.pass);
    assert!(!c.gcd_is_one());
}

#[test]
fn counterexample_printed_layout_is_infeasible() {
    let c = counterexample_certify(&q(1, 2), -8, 3, true, 3).unwrap();
    let CertifyOutcome::Infeasible(cert) = &c.outcome else { panic!() };
    assert!(cert.replay());
    let g: Vec<_> = c.symbolic.iter().map(|s| s.gcd.clone().unwrap()).collect();
    assert_eq!(g[0].degree(), Some(0));
    // 3λ + 2 up to scaling
    assert_eq!(g[1], crate::scalar::Poly::new(vec![crate::scalar::rat(2, 3), crate::scalar::rat(1, 1)]));
}

#[test]
fn verma_lt_minus_fails_at_top() {
    let m = make_verma(&q(1, 2), 8).unwrap();
    let a = closed_form_verma(&m, Algebra::Lt, Branch::Minus, 4).unwrap();
    assert!(!a.verify_bracket(4).pass);
    let p = closed_form_verma(&m, Algebra::Lt, Branch::Plus, 4).unwrap();
    assert!(p.verify_bracket(4).pass);
}

#[test]
fn verma_vir_glue_not_central() {
    let m = make_verma(&q(1, 2), 8).unwrap();
    let lt = closed_form_verma(&m, Algebra::Lt, Branch::Minus, 4).unwrap();
    let gt = closed_form_verma(&m, Algebra::Gt, Branch::Minus, 4).unwrap();
    let err = glue_vir(&lt, &gt).unwrap_err();
    let GlueError::CentralityFailure { k, .. } = &err else { panic!("{}", err.kind()) };
    assert_eq!(k.block(0).unwrap().get(0, 0), &q(-11, 8));
}

#[test]
fn zero_width_lift_is_rejected() {
    let m = make_dense(&q(1, 2), &Q::int(9), 0, 1).unwrap();
    assert!(lift_linear(&m, Side::Gt).is_err());
}
