use crate::scalar::{Field, Matrix};

use super::action::Branch;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    LinearLift,
    QuadraticPin,
    Boundary,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::LinearLift => "LinearLift",
            Stage::QuadraticPin => "QuadraticPin",
            Stage::Boundary => "Boundary",
        }
    }
}

/// A quadratic polynomial in n parameters:
/// c + Σ lin_i t_i + Σ_{i≤j} quad[i][j] t_i t_j.
#[derive(Clone, Debug, PartialEq)]
pub struct QPoly<F> {
    pub constant: F,
    pub linear: Vec<F>,
    pub quad: Vec<Vec<F>>,
}

impl<F: Field> QPoly<F> {
    pub fn zero(n: usize) -> Self {
        QPoly { constant: F::zero(), linear: vec![F::zero(); n], quad: vec![vec![F::zero(); n]; n] }
    }

    pub fn nvars(&self) -> usize {
        self.linear.len()
    }

    pub fn eval(&self, t: &[F]) -> F {
        let n = self.nvars();
        let mut acc = self.constant.clone();
        for i in 0..n {
            acc = acc.plus(&self.linear[i].times(&t[i]));
            for j in i..n {
                acc = acc.plus(&self.quad[i][j].times(&t[i]).times(&t[j]));
            }
        }
        acc
    }

    pub fn add_scaled(&self, o: &Self, s: &F) -> Self {
        let n = self.nvars();
        let mut out = self.clone();
        out.constant = out.constant.plus(&o.constant.times(s));
        for i in 0..n {
            out.linear[i] = out.linear[i].plus(&o.linear[i].times(s));
            for j in 0..n {
                out.quad[i][j] = out.quad[i][j].plus(&o.quad[i][j].times(s));
            }
        }
        out
    }

    pub fn is_constant(&self) -> bool {
        self.linear.iter().all(F::is_zero) && self.quad.iter().flatten().all(F::is_zero)
    }
}

/// One candidate family that failed the boundary equation.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryFamily<F> {
    pub branch: Branch,
    /// Index of the boundary equation.
    pub k: i64,
    /// Coefficient matrix and right-hand side of the boundary system in the
    /// unknown block, with the witness combination.
    pub matrix: Matrix<F>,
    pub rhs: Vec<F>,
    pub combination: Vec<F>,
    pub value: F,
    /// Equations with no unknowns left, as (lhs, rhs) pairs that would have
    /// to agree.
    pub pairs: Vec<(F, F)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness<F> {
    Linear { matrix: Matrix<F>, rhs: Vec<F>, combination: Vec<F>, value: F },
    Polynomial { equations: Vec<QPoly<F>>, combination: Vec<F>, value: F },
    Boundary { families: Vec<BoundaryFamily<F>> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfeasibilityCertificate<F> {
    pub stage: Stage,
    pub witness: Witness<F>,
    pub note: String,
}

fn replay_linear<F: Field>(a: &Matrix<F>, rhs: &[F], y: &[F], value: &F) -> bool {
    if y.len() != a.rows() || rhs.len() != a.rows() {
        return false;
    }
    let kills = (0..a.cols()).all(|c| (0..a.rows()).fold(F::zero(), |s, r| s.plus(&y[r].times(a.get(r, c)))).is_zero());
    let v = y.iter().zip(rhs).fold(F::zero(), |s, (p, q)| s.plus(&p.times(q)));
    kills && !v.is_zero() && v == *value
}

impl<F: Field> InfeasibilityCertificate<F> {
    /// Re-derives the contradiction from the stored equations.
    pub fn replay(&self) -> bool {
        match &self.witness {
            Witness::Linear { matrix, rhs, combination, value } => replay_linear(matrix, rhs, combination, value),
            Witness::Polynomial { equations, combination, value } => {
                let Some(first) = equations.first() else { return false };
                let mut acc = QPoly::zero(first.nvars());
                for (e, y) in equations.iter().zip(combination) {
                    acc = acc.add_scaled(e, y);
                }
                acc.is_constant() && !acc.constant.is_zero() && acc.constant == *value
            }
            Witness::Boundary { families } => {
                !families.is_empty()
                    && families.iter().all(|f| replay_linear(&f.matrix, &f.rhs, &f.combination, &f.value))
            }
        }
    }
}
