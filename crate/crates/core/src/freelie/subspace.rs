use crate::error::{Error, Result};
use crate::scalar::{Matrix, QuadScalar, Rational};

use super::lie::LieElement;
use super::words::lyndon_words;

fn to_q(r: &Rational) -> QuadScalar {
    QuadScalar::rational(r.clone())
}

fn from_q(x: &QuadScalar) -> Rational {
    x.as_rational().cloned().expect("rational entries")
}

/// A subspace of the degree-d part, as a reduced row-echelon basis over the
/// Lyndon words of degree d.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    pub degree: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(degree: usize) -> Self {
        Subspace { degree, basis: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        lyndon_words(self.degree).len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Span of the degree-d components of `elems`.
    pub fn span<'a>(degree: usize, elems: impl IntoIterator<Item = &'a LieElement>) -> Self {
        let rows: Vec<Vec<Rational>> = elems.into_iter().map(|e| e.coords(degree)).collect();
        Self::from_rows(degree, rows)
    }

    fn from_rows(degree: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = lyndon_words(degree).len();
        if rows.is_empty() || n == 0 {
            return Subspace::zero(degree);
        }
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(to_q).collect()).collect());
        let (r, piv) = m.rref();
        let basis = (0..piv.len()).map(|i| r.row(i).iter().map(from_q).collect()).collect();
        Subspace { degree, basis }
    }

    pub fn elements(&self) -> Vec<LieElement> {
        self.basis.iter().map(|r| LieElement::from_coords(self.degree, r)).collect()
    }

    pub fn join(&self, more: &[LieElement]) -> Self {
        let mut rows = self.basis.clone();
        rows.extend(more.iter().map(|e| e.coords(self.degree)));
        Self::from_rows(self.degree, rows)
    }

    pub fn contains(&self, e: &LieElement) -> bool {
        self.join(std::slice::from_ref(e)).dim() == self.dim()
    }

    pub fn includes(&self, o: &Subspace) -> bool {
        o.elements().iter().all(|e| self.contains(e))
    }
}

/// Exact rank test; `elem` must be homogeneous of the subspace's degree
/// (zero is accepted).
pub fn membership(elem: &LieElement, sub: &Subspace) -> Result<bool> {
    match elem.degree() {
        Some(d) if d != sub.degree => Err(Error::DegreeMismatch { expected: sub.degree as u32, got: d as u32 }),
        None if !elem.is_zero() => Err(Error::DegreeMismatch { expected: sub.degree as u32, got: 0 }),
        _ => Ok(sub.contains(elem)),
    }
}

/// Rank of a list of homogeneous elements.
pub fn rank(degree: usize, elems: &[LieElement]) -> usize {
    Subspace::span(degree, elems).dim()
}

pub(crate) fn solve_in(basis: &[LieElement], degree: usize, target: &LieElement) -> Option<Vec<Rational>> {
    use crate::scalar::{solve_linear, LinearSolution};
    let n = lyndon_words(degree).len();
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| b.coords(degree)).collect();
    let a = Matrix::from_vec(
        n,
        basis.len(),
        (0..n).flat_map(|r| cols.iter().map(move |c| to_q(&c[r]))).collect(),
    );
    let rhs: Vec<QuadScalar> = target.coords(degree).iter().map(to_q).collect();
    match solve_linear(&a, &rhs) {
        LinearSolution::Solved(s) if s.basis.is_empty() => Some(s.particular.iter().map(from_q).collect()),
        _ => None,
    }
}

