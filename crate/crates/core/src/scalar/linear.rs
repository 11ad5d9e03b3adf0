use super::field::Field;
use super::matrix::Matrix;

/// particular + span(basis): the full solution set of A x = rhs.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolutionSet<F> {
    pub particular: Vec<F>,
    pub basis: Vec<Vec<F>>,
}

impl<F: Field> AffineSolutionSet<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn point(&self, params: &[F]) -> Vec<F> {
        assert_eq!(params.len(), self.basis.len());
        let mut x = self.particular.clone();
        for (t, v) in params.iter().zip(&self.basis) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi = xi.plus(&t.times(vi));
            }
        }
        x
    }
}

/// Left multiplier y with yᵀA = 0 and yᵀrhs ≠ 0.
#[derive(Clone, Debug, PartialEq)]
pub struct InconsistencyWitness<F> {
    pub combination: Vec<F>,
    pub value: F,
}

impl<F: Field> InconsistencyWitness<F> {
    /// Replays the witness: returns true iff it still proves inconsistency.
    pub fn replay(&self, a: &Matrix<F>, rhs: &[F]) -> bool {
        let y = &self.combination;
        let kills_a = (0..a.cols()).all(|c| {
            (0..a.rows()).fold(F::zero(), |acc, r| acc.plus(&y[r].times(a.get(r, c)))).is_zero()
        });
        let v = y.iter().zip(rhs).fold(F::zero(), |acc, (a, b)| acc.plus(&a.times(b)));
        kills_a && !v.is_zero() && v == self.value
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution<F> {
    Solved(AffineSolutionSet<F>),
    Inconsistent(InconsistencyWitness<F>),
}

impl<F: Field> LinearSolution<F> {
    pub fn solved(self) -> Option<AffineSolutionSet<F>> {
        match self {
            LinearSolution::Solved(s) => Some(s),
            LinearSolution::Inconsistent(_) => None,
        }
    }
}

/// Exact Gaussian elimination on [A | rhs | I]; the identity block records
/// the row combinations so an inconsistency comes with a replayable witness.
pub fn solve_linear<F: Field>(a: &Matrix<F>, rhs: &[F]) -> LinearSolution<F> {
    let (m, n) = a.shape();
    assert_eq!(rhs.len(), m, "rhs length must match rows");
    let width = n + 1 + m;
    let mut aug = Matrix::zeros(m, width);
    for (r, v) in rhs.iter().enumerate() {
        for c in 0..n {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, n, v.clone());
        aug.set(r, n + 1 + r, F::one());
    }
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(p) = (row..m).find(|&r| !aug.get(r, col).is_zero()) else {
            continue;
        };
        aug.swap_rows(row, p);
        let inv = aug.get(row, col).recip().expect("pivot is nonzero");
        aug.scale_row(row, &inv);
        for r in 0..m {
            if r != row && !aug.get(r, col).is_zero() {
                let factor = aug.get(r, col).clone();
                aug.axpy_row(r, row, &factor);
            }
        }
        pivots.push(col);
        row += 1;
    }
    for r in row..m {
        if !aug.get(r, n).is_zero() {
            let combination = (0..m).map(|c| aug.get(r, n + 1 + c).clone()).collect();
            return LinearSolution::Inconsistent(InconsistencyWitness {
                combination,
                value: aug.get(r, n).clone(),
            });
        }
    }
    let mut particular = vec![F::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug.get(r, n).clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); n];
            v[fc] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = aug.get(r, fc).negate();
            }
            v
        })
        .collect();
    LinearSolution::Solved(AffineSolutionSet { particular, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QuadScalar;

    fn q(s: &str) -> QuadScalar {
        QuadScalar::parse(s).unwrap()
    }

    #[test]
    fn identity_system() {
        let a = Matrix::<QuadScalar>::identity(2);
        let s = solve_linear(&a, &[q("1"), q("sqrt(2)")]).solved().unwrap();
        assert_eq!(s.particular, vec![q("1"), q("sqrt(2)")]);
        assert!(s.basis.is_empty());
    }

    #[test]
    fn one_free_direction() {
        let a = Matrix::from_rows(vec![vec![q("1"), q("1")]]);
        let s = solve_linear(&a, &[q("0")]).solved().unwrap();
        assert_eq!(s.particular, vec![q("0"), q("0")]);
        assert_eq!(s.basis, vec![vec![q("-1"), q("1")]]);
    }

    #[test]
    fn inconsistent_with_witness() {
        let a = Matrix::from_rows(vec![vec![q("1")], vec![q("1")]]);
        let rhs = [q("0"), q("1")];
        match solve_linear(&a, &rhs) {
            LinearSolution::Inconsistent(w) => assert!(w.replay(&a, &rhs)),
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }
}
