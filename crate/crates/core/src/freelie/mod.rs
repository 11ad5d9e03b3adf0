//! The free Lie algebra on x1 (degree 1) and x2 (degree 2): Lyndon bases,
//! the sl(2) action, standard relations and ideal membership.

pub mod ideal;
pub mod lie;
pub mod relations;
pub mod subspace;
pub mod words;

pub use ideal::{ideal_component, IdealComponent};
pub use lie::{FreeLie, LieElement};
pub use relations::{
    basis_indices, gen_x, parse_relation, predicted_matrix, r_n, reduced_relation, relation_space, sl2_matrix,
    standard_relation,
};
pub use subspace::{membership, rank, Subspace};
pub use words::{lyndon_words, witt_dimension, Word};

/// Lyndon basis of one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct LyndonBasis {
    pub degree: usize,
    pub words: Vec<Word>,
    pub brackets: Vec<String>,
}

pub fn lyndon_basis(degree: usize) -> LyndonBasis {
    let words = lyndon_words(degree);
    let brackets = words.iter().map(Word::bracketed).collect();
    LyndonBasis { degree, words, brackets }
}

#[cfg(test)]
mod tests;
