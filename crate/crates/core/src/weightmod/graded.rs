use std::collections::BTreeMap;

use crate::scalar::{Field, Matrix};

/// Homogeneous operator family {B_k : M_k → M_{k+degree}}.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMap<F> {
    pub degree: i64,
    pub blocks: BTreeMap<i64, Matrix<F>>,
}

impl<F: Field> GradedMap<F> {
    pub fn new(degree: i64) -> Self {
        GradedMap { degree, blocks: BTreeMap::new() }
    }

    pub fn with_blocks(degree: i64, blocks: BTreeMap<i64, Matrix<F>>) -> Self {
        GradedMap { degree, blocks }
    }

    pub fn block(&self, k: i64) -> Option<&Matrix<F>> {
        self.blocks.get(&k)
    }

    pub fn insert(&mut self, k: i64, m: Matrix<F>) {
        self.blocks.insert(k, m);
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> + '_ {
        self.blocks.keys().copied()
    }

    /// self ∘ other, on indices where both blocks are present.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::new(self.degree + other.degree);
        for (&k, b) in &other.blocks {
            if let Some(a) = self.block(k + other.degree) {
                out.insert(k, a.mul(b));
            }
        }
        out
    }

    /// [self, other] on indices where all four factors are present.
    pub fn commutator(&self, other: &Self) -> Self {
        let mut out = Self::new(self.degree + other.degree);
        for &k in other.blocks.keys() {
            let (Some(y), Some(x2)) = (other.block(k), self.block(k + other.degree)) else {
                continue;
            };
            let (Some(x), Some(y2)) = (self.block(k), other.block(k + self.degree)) else {
                continue;
            };
            out.insert(k, x2.mul(y).sub(&y2.mul(x)));
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(&Matrix<F>, &Matrix<F>) -> Matrix<F>) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = Self::new(self.degree);
        for (&k, a) in &self.blocks {
            if let Some(b) = other.block(k) {
                out.insert(k, f(a, b));
            }
        }
        out
    }

    /// Sum on common indices.
    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, Matrix::add)
    }

    /// Difference on common indices.
    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, Matrix::sub)
    }

    pub fn scale(&self, s: &F) -> Self {
        GradedMap {
            degree: self.degree,
            blocks: self.blocks.iter().map(|(&k, m)| (k, m.scale(s))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().negate())
    }

    pub fn restrict(&self, keep: impl Fn(i64) -> bool) -> Self {
        GradedMap {
            degree: self.degree,
            blocks: self.blocks.iter().filter(|(&k, _)| keep(k)).map(|(&k, m)| (k, m.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(Matrix::is_zero)
    }

    /// Indices carrying a nonzero block.
    pub fn nonzero_indices(&self) -> Vec<i64> {
        self.blocks.iter().filter(|(_, m)| !m.is_zero()).map(|(&k, _)| k).collect()
    }

    /// True iff the two maps agree on every index both define.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.blocks.iter().all(|(k, a)| other.block(*k).is_none_or(|b| a == b))
    }

    pub fn span(&self) -> Option<(i64, i64)> {
        Some((*self.blocks.keys().next()?, *self.blocks.keys().next_back()?))
    }
}
