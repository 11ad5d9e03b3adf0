use proptest::prelude::*;

use wittext::extend::{closed_form_dense, coefficient_identity, make_intermediate, Algebra, Branch};
use wittext::freelie::{lyndon_words, FreeLie, LieElement};
use wittext::scalar::{pochhammer, rat, Field, Matrix, QuadScalar as Q};
use wittext::weightmod::make_dense;

fn small_rational() -> impl Strategy<Value = Q> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| Q::frac(n, d))
}

fn quad(d: i64) -> impl Strategy<Value = Q> {
    (-20i64..20, 1i64..8, -20i64..20, 1i64..8).prop_map(move |(a, b, c, e)| Q::new(rat(a, b), rat(c, e), d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in quad(5), y in quad(5), z in quad(5)) {
        prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
        prop_assert_eq!(x.times(&y), y.times(&x));
        if !y.is_zero() {
            prop_assert_eq!(x.over(&y).unwrap().times(&y), x);
        }
    }

    #[test]
    fn pochhammer_splits(z in small_rational(), m in -4i64..5, n in -4i64..5) {
        if let (Ok(a), Ok(b), Ok(c)) = (pochhammer(&z, m), pochhammer(&z.plus(&Q::int(m)), n), pochhammer(&z, m + n)) {
            prop_assert_eq!(a.times(&b), c);
        }
    }

    #[test]
    fn matrix_inverse(v in proptest::collection::vec(-9i64..9, 9)) {
        let m = Matrix::from_vec(3, 3, v.into_iter().map(Q::int).collect());
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
        } else {
            prop_assert!(m.rank() < 3);
        }
    }

    #[test]
    fn dense_identity_random(anchor in small_rational(), s in 1i64..7, plus in any::<bool>()) {
        let tau = Q::int(s * s);
        let m = make_dense(&anchor, &tau, -6, 6).unwrap();
        let b = if plus { Branch::Plus } else { Branch::Minus };
        let a = closed_form_dense(&m, Algebra::Gt, b, 4).unwrap();
        prop_assert!(a.verify_bracket(4).pass);
        let (n, bad) = coefficient_identity(&a, 4);
        prop_assert!(n > 0 && bad.is_empty());
    }

    #[test]
    fn intermediate_brackets(a in small_rational(), b in small_rational()) {
        let act = make_intermediate(&a, &b, -5, 5, 3).unwrap();
        prop_assert!(act.verify_bracket(3).pass);
    }

    #[test]
    fn lie_jacobi(i in 0usize..4, j in 0usize..4, k in 0usize..3) {
        let fl = FreeLie::new();
        let pick = |d: usize, n: usize| {
            let ws = lyndon_words(d);
            LieElement::basis(ws[n % ws.len()].clone())
        };
        let (x, y, z) = (pick(1 + i, j), pick(2 + j, i), pick(1 + k, i + j));
        let jac = fl.bracket(&x, &fl.bracket(&y, &z))
            .plus(&fl.bracket(&y, &fl.bracket(&z, &x)))
            .plus(&fl.bracket(&z, &fl.bracket(&x, &y)));
        prop_assert!(jac.is_zero());
        prop_assert_eq!(fl.bracket(&x, &y), fl.bracket(&y, &x).scale(&rat(-1, 1)));
    }
}
