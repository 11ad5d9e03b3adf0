use num::BigInt;

use crate::report::Report;
use crate::scalar::{Field, Rational};
use crate::weightmod::{GradedMap, WeightModule};

use super::action::Side;
use super::lift::linear_residual;
use super::pin::quadratic_residual;

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn record<F: Field>(r: &mut Report, label: &str, g: &GradedMap<F>) {
    r.check(label, g.span());
    for (&k, b) in &g.blocks {
        if !b.is_zero() {
            r.fail(label, k, b);
        }
    }
}

/// The four conditions on T of the Casimir criterion plus the level-k
/// reduced relations [T, ad(e)^{2k−1}T/(2k−1)!] = −(2k−1)/(2k+1)!·ad(e)^{2k+1}T
/// for k = 1..=n_level, each reported separately. Passing says nothing
/// about levels beyond n_level.
pub fn criterion_check<F: Field>(m: &WeightModule<F>, t: &GradedMap<F>, n_level: u32) -> Report {
    let mut r = Report::new();
    record(&mut r, "ad(f)T=3e", &linear_residual(m, Side::Gt, t));
    let h = m.h_map();
    record(&mut r, "ad(h)T=4T", &h.commutator(t).sub(&t.scale(&F::from_int(4))));
    record(&mut r, "ad(c)T=0", &m.casimir().commutator(t));
    record(&mut r, "[T,ad(e)T]=-ad(e)^3T/6", &quadratic_residual(m, Side::Gt, t));
    let e = m.e_map();
    let mut powers = vec![t.clone()];
    for level in 1..=n_level as i64 {
        while powers.len() < (2 * level + 2) as usize {
            let next = e.commutator(powers.last().unwrap());
            powers.push(next);
        }
        let a = 2 * level - 1;
        let lhs = t.commutator(&powers[a as usize].scale(&F::from_rational(Rational::new(1.into(), factorial(a)))));
        let c = Rational::new(BigInt::from(a), factorial(a + 2));
        let rhs = powers[(a + 2) as usize].scale(&F::from_rational(-c));
        record(&mut r, &format!("level {level}"), &lhs.sub(&rhs));
    }
    r
}
