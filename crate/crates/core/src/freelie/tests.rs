use std::collections::BTreeMap;

use num::Zero;

use super::*;
use crate::scalar::{rat, Rational};

type Tensor = BTreeMap<Vec<u8>, Rational>;

fn tmul(a: &Tensor, b: &Tensor, sign: i64, out: &mut Tensor) {
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend(v);
            *out.entry(w).or_insert_with(Rational::zero) += x * y * rat(sign, 1);
        }
    }
}

fn expand_word(w: &Word) -> Tensor {
    match w.standard_factorization() {
        None => BTreeMap::from([(w.0.clone(), rat(1, 1))]),
        Some((u, v)) => {
            let (a, b) = (expand_word(&u), expand_word(&v));
            let mut out = Tensor::new();
            tmul(&a, &b, 1, &mut out);
            tmul(&b, &a, -1, &mut out);
            out.retain(|_, c| !c.is_zero());
            out
        }
    }
}

fn expand(e: &LieElement) -> Tensor {
    let mut out = Tensor::new();
    for (w, c) in e.terms() {
        for (k, x) in expand_word(w) {
            *out.entry(k).or_insert_with(Rational::zero) += x * c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn lyndon_counts_match_formula() {
    for d in 1..=14 {
        assert_eq!(lyndon_words(d).len(), witt_dimension(d), "degree {d}");
    }
    assert_eq!(witt_dimension(12), 25);
    assert_eq!(witt_dimension(13), 40);
    assert_eq!(lyndon_basis(3).brackets, vec!["[x1,x2]"]);
    assert_eq!(lyndon_basis(2).brackets, vec!["x2"]);
}

#[test]
fn bracket_matches_tensor_commutator() {
    let fl = FreeLie::new();
    for d1 in 1..=5 {
        for d2 in 1..=5 {
            for u in lyndon_words(d1) {
                for v in lyndon_words(d2) {
                    let br = fl.bracket_words(&u, &v);
                    let mut want = Tensor::new();
                    let (a, b) = (expand_word(&u), expand_word(&v));
                    tmul(&a, &b, 1, &mut want);
                    tmul(&b, &a, -1, &mut want);
                    want.retain(|_, c| !c.is_zero());
                    assert_eq!(expand(&br), want, "[{u},{v}]");
                }
            }
        }
    }
}

#[test]
fn generators_and_relations() {
    let fl = FreeLie::new();
    assert_eq!(gen_x(&fl, 0), LieElement::x(2));
    let x12 = fl.bracket(&LieElement::x(1), &LieElement::x(2));
    assert_eq!(gen_x(&fl, 1), x12.scale(&rat(-1, 1)));
    let x112 = fl.bracket(&LieElement::x(1), &x12);
    assert_eq!(gen_x(&fl, 2), x112.scale(&rat(1, 2)));
    let r23 = standard_relation(&fl, 0, 1);
    let want = fl.bracket(&gen_x(&fl, 0), &gen_x(&fl, 1)).plus(&gen_x(&fl, 3));
    assert_eq!(r23, want);
    assert!(standard_relation(&fl, 2, 2).is_zero());
    assert_eq!(reduced_relation(&fl, 2).degree(), Some(7));
}

#[test]
fn ef_commutator_is_h() {
    let fl = FreeLie::new();
    for d in 2..=9 {
        for w in lyndon_words(d) {
            let u = LieElement::basis(w);
            let ef = fl.e(&fl.f(&u).unwrap());
            let fe = fl.f(&fl.e(&u)).unwrap();
            assert_eq!(ef.minus(&fe), fl.h(&u));
        }
    }
    assert!(fl.f(&LieElement::x(1)).is_err());
}

#[test]
fn f_is_a_derivation() {
    let fl = FreeLie::new();
    for d1 in 2..=4 {
        for d2 in 2..=4 {
            for u in lyndon_words(d1) {
                for v in lyndon_words(d2) {
                    let (a, b) = (LieElement::basis(u.clone()), LieElement::basis(v));
                    let lhs = fl.f(&fl.bracket(&a, &b)).unwrap();
                    let rhs = fl.bracket(&fl.f(&a).unwrap(), &b).plus(&fl.bracket(&a, &fl.f(&b).unwrap()));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn relation_space_dimensions() {
    let fl = FreeLie::new();
    for n in 5..=13 {
        assert_eq!(relation_space(&fl, n).dim(), (n - 1) / 2 - 1, "n = {n}");
    }
}

#[test]
fn sl2_on_relations() {
    let fl = FreeLie::new();
    let r1 = reduced_relation(&fl, 1);
    assert_eq!(fl.e(&r1), standard_relation(&fl, 0, 2).scale(&rat(2, 1)));
    let r2 = reduced_relation(&fl, 2);
    assert_eq!(fl.f(&r2).unwrap(), r_n(&fl, 6, 0).scale(&rat(-6, 1)));
    assert_eq!(fl.f(&fl.f(&r2).unwrap()).unwrap(), r1.scale(&rat(30, 1)));
}

#[test]
fn sl2_matrices_match_coefficients() {
    let fl = FreeLie::new();
    for n in 5..=12 {
        assert_eq!(sl2_matrix(&fl, n, true).unwrap().unwrap(), predicted_matrix(n, true), "e at {n}");
        if n > 5 {
            assert_eq!(sl2_matrix(&fl, n, false).unwrap().unwrap(), predicted_matrix(n, false), "f at {n}");
        }
    }
}

#[test]
fn ideal_memberships() {
    let fl = FreeLie::new();
    let r = |k| reduced_relation(&fl, k);
    let i5 = ideal_component(&fl, &[r(1)], 5, 9).unwrap();
    assert_eq!(i5.sub.dim(), 1);
    let i6 = ideal_component(&fl, &[r(1)], 6, 9).unwrap();
    assert!(membership(&standard_relation(&fl, 0, 2), &i6.sub).unwrap());
    let i7 = ideal_component(&fl, &[r(1)], 7, 9).unwrap();
    assert!(i7.stable);
    assert!(!membership(&r(2), &i7.sub).unwrap());
    // ⟨r_1, r_2⟩ already fills the degree-9 kernel (codimension 1), so r_3 is in it
    let i9 = ideal_component(&fl, &[r(1), r(2)], 9, 11).unwrap();
    assert_eq!(i9.sub.dim() + 1, lyndon_words(9).len());
    assert!(membership(&r(3), &i9.sub).unwrap());
    let j5 = ideal_component(&fl, &[r(2)], 5, 9).unwrap();
    assert!(membership(&r(1), &j5.sub).unwrap());
    let j5b = ideal_component(&fl, &[r(2), r(3)], 5, 9).unwrap();
    assert!(membership(&r(1), &j5b.sub).unwrap());
    assert!(membership(&r(2), &i5.sub).is_err());
}

#[test]
fn parse_names() {
    let fl = FreeLie::new();
    assert_eq!(parse_relation(&fl, "r2"), Some(reduced_relation(&fl, 2)));
    assert_eq!(parse_relation(&fl, "r_{2,5}"), Some(reduced_relation(&fl, 2)));
    assert_eq!(parse_relation(&fl, "q"), None);
}
