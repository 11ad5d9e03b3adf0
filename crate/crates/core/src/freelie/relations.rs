use num::Zero;

use super::lie::{FreeLie, LieElement};
use super::subspace::{solve_in, Subspace};
use crate::error::Result;
use crate::scalar::{rat, Rational};

/// x_{2+i} = (1/i!)·e^i(x2).
pub fn gen_x(fl: &FreeLie, i: usize) -> LieElement {
    let mut u = LieElement::x(2);
    for k in 1..=i {
        u = fl.e(&u).scale(&rat(1, k as i64));
    }
    u
}

/// r_{2+i,2+j} = [x_{2+i}, x_{2+j}] − (i−j)·x_{i+j+4}.
pub fn standard_relation(fl: &FreeLie, i: usize, j: usize) -> LieElement {
    let br = fl.bracket(&gen_x(fl, i), &gen_x(fl, j));
    br.minus(&gen_x(fl, i + j + 2).scale(&rat(i as i64 - j as i64, 1)))
}

/// r_k = r_{2,2k+1}, of degree 2k+3.
pub fn reduced_relation(fl: &FreeLie, k: usize) -> LieElement {
    standard_relation(fl, 0, 2 * k - 1)
}

/// r_i^(n) = r_{2+i, n−2−i}; zero when i is outside 0..=n−4.
pub fn r_n(fl: &FreeLie, n: usize, i: i64) -> LieElement {
    if i < 0 || n < 4 || i > n as i64 - 4 {
        return LieElement::zero();
    }
    let i = i as usize;
    standard_relation(fl, i, n - 4 - i)
}

/// Indices i with r_i^(n) in the canonical basis of R_n: 0 ≤ i < n−4−i.
pub fn basis_indices(n: usize) -> Vec<i64> {
    (0..).take_while(|&i| 2 * i + 4 < n as i64).collect()
}

pub fn relation_space(fl: &FreeLie, n: usize) -> Subspace {
    let rs: Vec<LieElement> = (0..=n as i64 - 4).map(|i| r_n(fl, n, i)).collect();
    Subspace::span(n, &rs)
}

/// The predicted coordinates of Σ c_i r_i^(n) in the canonical basis, using
/// r_i^(n) = −r_{n−4−i}^(n).
fn fold(n: usize, terms: &[(i64, Rational)]) -> Vec<Rational> {
    let idx = basis_indices(n);
    let mut out = vec![Rational::zero(); idx.len()];
    for (i, c) in terms {
        if *i < 0 || *i > n as i64 - 4 {
            continue;
        }
        let j = n as i64 - 4 - i;
        if let Some(p) = idx.iter().position(|x| x == i) {
            out[p] += c;
        } else if let Some(p) = idx.iter().position(|x| *x == j) {
            out[p] -= c;
        }
    }
    out
}

/// e·r_i^(n) = (n−i−3)·r_i^(n+1) + (i+1)·r_{i+1}^(n+1), as a column.
pub fn predicted_e(n: usize, i: i64) -> Vec<Rational> {
    let n_ = n as i64;
    fold(n + 1, &[(i, rat(n_ - i - 3, 1)), (i + 1, rat(i + 1, 1))])
}

/// f·r_i^(n) = −(n−i−1)·r_i^(n−1) − (i+3)·r_{i−1}^(n−1), as a column.
pub fn predicted_f(n: usize, i: i64) -> Vec<Rational> {
    let n_ = n as i64;
    fold(n - 1, &[(i, rat(-(n_ - i - 1), 1)), (i - 1, rat(-(i + 3), 1))])
}

/// Matrix of g ∈ {e, f} from R_n to R_{n±1} in the canonical bases, as
/// columns; None when an image leaves the target span.
pub fn sl2_matrix(fl: &FreeLie, n: usize, raise: bool) -> Result<Option<Vec<Vec<Rational>>>> {
    let m = if raise { n + 1 } else { n - 1 };
    let target: Vec<LieElement> = basis_indices(m).into_iter().map(|i| r_n(fl, m, i)).collect();
    let mut cols = Vec::new();
    for i in basis_indices(n) {
        let r = r_n(fl, n, i);
        let img = if raise { fl.e(&r) } else { fl.f(&r)? };
        if target.is_empty() {
            if !img.is_zero() {
                return Ok(None);
            }
            cols.push(Vec::new());
            continue;
        }
        match solve_in(&target, m, &img) {
            Some(c) => cols.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(cols))
}

pub fn predicted_matrix(n: usize, raise: bool) -> Vec<Vec<Rational>> {
    basis_indices(n).into_iter().map(|i| if raise { predicted_e(n, i) } else { predicted_f(n, i) }).collect()
}

/// Looks up names like "r1", "r_2", "r2,5" / "r_{2,5}".
pub fn parse_relation(fl: &FreeLie, s: &str) -> Option<LieElement> {
    let t: String = s.chars().filter(|c| !"_{} ".contains(*c)).collect();
    let body = t.strip_prefix('r')?;
    match body.split_once(',') {
        Some((a, b)) => {
            let (a, b): (usize, usize) = (a.parse().ok()?, b.parse().ok()?);
            (a >= 2 && b >= 2).then(|| standard_relation(fl, a - 2, b - 2))
        }
        None => {
            let k: usize = body.parse().ok()?;
            (k >= 1).then(|| reduced_relation(fl, k))
        }
    }
}

