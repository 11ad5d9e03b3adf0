//! Truncated weight sl(2)-modules and homogeneous operator families.

pub mod catalog;
pub mod graded;
pub mod module;

pub use catalog::{
    counterexample_module, dense_e, make_counterexample, make_counterexample_printed, make_dense,
    make_finite, make_generalized_dense, make_lowest, make_verma,
};
pub use graded::GradedMap;
pub use module::{Kind, WeightModule};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Field, Matrix, QuadScalar};

    fn q(n: i64, d: i64) -> QuadScalar {
        QuadScalar::frac(n, d)
    }

    fn scalar_block(m: &Matrix<QuadScalar>) -> QuadScalar {
        assert_eq!(m.shape(), (1, 1));
        m.get(0, 0).clone()
    }

    #[test]
    fn dense_blocks() {
        let m = make_dense(&q(1, 2), &q(9, 1), -12, 12).unwrap();
        assert_eq!(scalar_block(m.e_block(0).unwrap()), q(27, 16));
        assert!((-11..=12).all(|k| scalar_block(m.f_block(k).unwrap()) == q(1, 1)));
        let m = make_dense(&q(2, 1), &q(9, 1), -3, 3).unwrap();
        assert!(m.e_block(0).unwrap().is_zero());
        assert!(m.verify_sl2().pass);
    }

    #[test]
    fn verma_blocks() {
        let m = make_verma(&q(1, 2), 6).unwrap();
        assert_eq!(scalar_block(m.e_block(-1).unwrap()), q(1, 2));
        assert_eq!(m.e_block(0).unwrap().shape(), (0, 1));
        assert_eq!(m.weight(-2), q(-7, 2));
        assert!(m.verify_sl2().pass);
    }

    #[test]
    fn lowest_blocks() {
        let m = make_lowest(&q(5, 2), 6).unwrap();
        assert_eq!(m.f_block(0).unwrap().shape(), (0, 1));
        assert_eq!(scalar_block(m.f_block(1).unwrap()), q(-5, 2));
        assert_eq!(m.weight(1), q(9, 2));
        assert!(m.verify_sl2().pass);
    }

    #[test]
    fn finite_blocks() {
        let triv = make_finite::<QuadScalar>(1).unwrap();
        assert!(triv.e_map().is_zero() && triv.f_map().is_zero());
        assert_eq!(triv.weight(0), q(0, 1));
        let v2 = make_finite::<QuadScalar>(2).unwrap();
        assert_eq!(scalar_block(v2.e_block(-1).unwrap()), q(1, 1));
        let v4 = make_finite::<QuadScalar>(4).unwrap();
        assert_eq!(v4.weight(0), q(3, 1));
        for m in [triv, v2, v4] {
            assert!(m.verify_sl2().pass);
        }
    }

    #[test]
    fn casimir_scalars() {
        let dense = make_dense(&q(1, 2), &q(9, 1), -12, 12).unwrap();
        assert!(dense.casimir().blocks.values().all(|b| *b == Matrix::scalar(1, q(9, 1))));
        let verma = make_verma(&q(1, 2), 6).unwrap();
        assert!(verma.casimir().blocks.iter().all(|(k, b)| *k > 0 || *b == Matrix::scalar(1, q(9, 4))));
        let v4 = make_finite::<QuadScalar>(4).unwrap();
        let c = v4.casimir();
        assert!((-3..=0).all(|k| *c.block(k).unwrap() == Matrix::scalar(1, q(16, 1))));
    }

    #[test]
    fn generalized_dense() {
        let n = Matrix::from_rows(vec![vec![q(0, 1), q(1, 4)], vec![q(0, 1), q(0, 1)]]);
        let m = make_generalized_dense(&q(1, 2), &q(9, 1), &n, -6, 6).unwrap();
        let want = Matrix::from_rows(vec![vec![q(9, 1), q(1, 1)], vec![q(0, 1), q(9, 1)]]);
        assert!(m.casimir().blocks.values().all(|b| *b == want));
        assert!(m.verify_sl2().pass);
        let lower = n.transpose();
        assert!(make_generalized_dense(&q(1, 2), &q(9, 1), &lower, -6, 6).is_err());
        let zero = Matrix::zeros(1, 1);
        let g = make_generalized_dense(&q(1, 2), &q(9, 1), &zero, -6, 6).unwrap();
        let d = make_dense(&q(1, 2), &q(9, 1), -6, 6).unwrap();
        assert_eq!((g.e_map(), g.f_map()), (d.e_map(), d.f_map()));
    }

    #[test]
    fn counterexample_layouts() {
        let m = make_counterexample(&q(1, 2), -10, 6).unwrap();
        assert_eq!(*m.e_block(0).unwrap(), Matrix::from_vec(1, 2, vec![q(1, 2), q(0, 1)]));
        assert!(m.verify_sl2().pass);
        // f injective on every weight space
        assert!((m.k_min + 1..=m.k_max).all(|k| m.f_block(k).unwrap().rank() == m.dim(k)));
        let printed = make_counterexample_printed(&q(1, 2), -10, 6).unwrap();
        let r = printed.verify_sl2();
        assert!(!r.pass);
        assert_eq!(r.first_failure(), Some(("[e,f]-h", 0)));
        assert_eq!(r.residuals.len(), 1);
        assert!(make_counterexample(&q(2, 1), -10, 6).is_err());
    }

    #[test]
    fn dual_of_lowest_is_dense_shaped() {
        // λ = 1/2 in the lowest-weight convention, module M̄(λ+2)
        let lam = q(1, 2);
        let m = make_lowest(&lam.plus(&q(2, 1)), 8).unwrap();
        let d = m.chevalley_dual();
        assert!(d.verify_sl2().pass);
        assert_eq!(d.weight(0), -(lam.clone() + q(2, 1)));
        // f̂ = −e is −1 on every nonzero block, e.g. a dense-type f up to sign
        for k in d.k_min + 1..=0 {
            assert_eq!(scalar_block(d.f_block(k).unwrap()), q(-1, 1));
        }
        // the Casimir value is preserved under the dual
        let c = d.casimir();
        let lam1 = lam.plus(&q(1, 1));
        assert!(c.blocks.iter().filter(|(k, _)| **k < 1 && **k > -8).all(|(_, b)| *b == Matrix::scalar(1, lam1.times(&lam1))));
        let dd = d.chevalley_dual();
        assert_eq!((dd.e_map(), dd.f_map(), dd.anchor.clone()), (m.e_map(), m.f_map(), m.anchor.clone()));
        let t = make_finite::<QuadScalar>(1).unwrap();
        let td = t.chevalley_dual();
        assert!(td.e_map().is_zero() && td.f_map().is_zero() && td.total_dim() == 1);
    }

    #[test]
    fn morphisms() {
        let n = Matrix::from_rows(vec![vec![q(0, 1), q(1, 4)], vec![q(0, 1), q(0, 1)]]);
        let m = make_generalized_dense(&q(1, 2), &q(9, 1), &n, -6, 6).unwrap();
        assert!(m.verify_morphism(&m, &m.identity_map()).unwrap());
        let c = m.casimir();
        assert!(m.verify_morphism(&m, &c).unwrap());
        let mut bad = m.identity_map();
        bad.insert(0, Matrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![q(1, 1), q(1, 1)]]));
        assert!(!m.verify_morphism(&m, &bad).unwrap());
        assert!(m.verify_morphism(&m, &m.e_map()).is_err());
    }

    #[test]
    fn widen_keeps_relations() {
        let t = make_finite::<QuadScalar>(1).unwrap().widen(-4, 4);
        assert_eq!(t.total_dim(), 1);
        assert!(t.verify_sl2().pass);
        let _ = rat(1, 1);
    }

    #[test]
    fn corrupted_module_fails() {
        let mut m = make_dense(&q(1, 2), &q(9, 1), -4, 4).unwrap();
        m.set_e_block(1, Matrix::from_vec(1, 1, vec![q(1, 1)]));
        let r = m.verify_sl2();
        assert!(!r.pass);
        assert_eq!(r.residuals.iter().map(|x| x.k).collect::<Vec<_>>(), vec![1, 2]);
    }
}
