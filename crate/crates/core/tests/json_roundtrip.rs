use wittext::extend::{closed_form_dense, Algebra, Branch};
use wittext::json::{action_from_json, action_json, module_from_json, module_json, scalar_from_json, scalar_json};
use wittext::scalar::{Matrix, QuadScalar as Q};
use wittext::weightmod::*;

fn q(n: i64, d: i64) -> Q {
    Q::frac(n, d)
}

#[test]
fn scalars_are_exact_strings() {
    let x = Q::parse("1/2-3/4*sqrt(5)").unwrap();
    let v = scalar_json(&x);
    assert_eq!(v["a"], "1/2");
    assert_eq!(v["b"], "-3/4");
    assert_eq!(v["d"], "5");
    assert_eq!(scalar_from_json(&v).unwrap(), x);
}

#[test]
fn every_kind_round_trips() {
    let mut nil = Matrix::zeros(2, 2);
    nil.set(0, 1, q(1, 4));
    let modules = vec![
        make_dense(&q(1, 2), &Q::int(9), -6, 6).unwrap(),
        make_dense(&Q::int(0), &Q::int(2), -3, 3).unwrap(),
        make_verma(&q(1, 2), 6).unwrap(),
        make_lowest(&q(9, 2), 6).unwrap(),
        make_finite(4).unwrap(),
        make_generalized_dense(&q(1, 2), &Q::int(9), &nil, -4, 4).unwrap(),
        make_counterexample(&q(1, 2), -8, 3).unwrap(),
        make_counterexample_printed(&q(7, 2), -8, 3).unwrap(),
        wittext::extend::make_intermediate(&Q::int(1), &q(1, 4), -4, 4, 2).unwrap().module,
    ];
    for m in modules {
        let v = module_json(&m);
        let text = serde_json::to_string(&v).unwrap();
        let back = module_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, m, "{}", m.kind.name());
    }
}

#[test]
fn action_round_trips() {
    let m = make_dense(&q(1, 2), &Q::int(9), -8, 8).unwrap();
    let a = closed_form_dense(&m, Algebra::Vir, Branch::Minus, 3).unwrap();
    let back = action_from_json(&action_json(&a)).unwrap();
    assert_eq!(back, a);
}
