//! The catalog of sl(2)-modules: dense, Verma, lowest weight, finite,
//! generalized dense and the two-dimensional counterexample.

use super::module::{Kind, WeightModule};
use crate::error::{Error, Result};
use crate::scalar::{rat, Field, Matrix, QuadScalar};

fn one<F: Field>(x: F) -> Matrix<F> {
    Matrix::from_vec(1, 1, vec![x])
}

fn quarter<F: Field>() -> F {
    F::from_rational(rat(1, 4))
}

/// ¼(τ − (μ+1)²)
pub fn dense_e<F: Field>(tau: &F, mu: &F) -> F {
    let m1 = mu.plus(&F::one());
    tau.minus(&m1.times(&m1)).times(&quarter())
}

/// V(ξ, τ) on indices [k_min, k_max]: f = 1, e = ¼(τ−(μ+1)²).
pub fn make_dense<F: Field>(mu0: &F, tau: &F, k_min: i64, k_max: i64) -> Result<WeightModule<F>> {
    let w = |k: i64| mu0.plus(&F::from_int(2 * k));
    WeightModule::from_fn(
        mu0.clone(),
        k_min,
        k_max,
        |_| 1,
        |k| one(dense_e(tau, &w(k))),
        |_| one(F::one()),
        Kind::Dense { tau: tau.clone() },
    )
}

/// M(λ) with basis w_0..w_depth at indices 0..−depth, padded by a
/// zero-dimensional space at index 1 so that e(w_0) = 0 is part of the data.
pub fn make_verma<F: Field>(lambda: &F, depth: i64) -> Result<WeightModule<F>> {
    if depth < 1 {
        return Err(Error::WindowTooSmall("Verma depth must be at least 1".into()));
    }
    WeightModule::from_fn(
        lambda.clone(),
        -depth,
        1,
        |k| usize::from(k <= 0),
        |k| {
            if k == 0 {
                return Matrix::zeros(0, 1);
            }
            let i = F::from_int(-k);
            one(i.times(&lambda.minus(&i).plus(&F::one())))
        },
        |k| if k == 1 { Matrix::zeros(1, 0) } else { one(F::one()) },
        Kind::Verma { lambda: lambda.clone() },
    )
}

/// M̄(λ) with basis w_0..w_depth at indices 0..depth, padded at index −1.
pub fn make_lowest<F: Field>(lambda: &F, depth: i64) -> Result<WeightModule<F>> {
    if depth < 1 {
        return Err(Error::WindowTooSmall("lowest-weight depth must be at least 1".into()));
    }
    WeightModule::from_fn(
        lambda.clone(),
        -1,
        depth,
        |k| usize::from(k >= 0),
        |k| if k == -1 { Matrix::zeros(1, 0) } else { one(F::one()) },
        |k| {
            if k == 0 {
                return Matrix::zeros(0, 1);
            }
            let i = F::from_int(k);
            one(i.times(&lambda.plus(&i).minus(&F::one())).negate())
        },
        Kind::Lowest { lambda: lambda.clone() },
    )
}

/// V^(n): v_i at index −i with weight n−1−2i, padded on both sides.
pub fn make_finite<F: Field>(n: u32) -> Result<WeightModule<F>> {
    if n == 0 {
        return Err(Error::WindowTooSmall("finite module needs n >= 1".into()));
    }
    let n = n as i64;
    let inside = |k: i64| (-(n - 1)..=0).contains(&k);
    let dim = move |k: i64| usize::from(inside(k));
    WeightModule::from_fn(
        F::from_int(n - 1),
        -n,
        1,
        dim,
        |k| {
            if inside(k) && inside(k + 1) {
                let i = -k;
                one(F::from_int(i * (n - i)))
            } else {
                Matrix::zeros(dim(k + 1), dim(k))
            }
        },
        |k| {
            if inside(k) && inside(k - 1) {
                one(F::one())
            } else {
                Matrix::zeros(dim(k - 1), dim(k))
            }
        },
        Kind::Finite { n: n as u32 },
    )
}

/// Dense-shaped module with l-dimensional weight spaces, f = Id and
/// e = ¼(τ−(μ+1)²)Id + N for a fixed strictly upper triangular N.
pub fn make_generalized_dense<F: Field>(
    mu0: &F,
    tau: &F,
    n: &Matrix<F>,
    k_min: i64,
    k_max: i64,
) -> Result<WeightModule<F>> {
    if !n.is_square() || !n.is_strictly_upper() {
        return Err(Error::NotStrictlyUpper);
    }
    let l = n.rows();
    let w = |k: i64| mu0.plus(&F::from_int(2 * k));
    WeightModule::from_fn(
        mu0.clone(),
        k_min,
        k_max,
        |_| l,
        |k| n.add_scalar(&dense_e(tau, &w(k))),
        |_| Matrix::identity(l),
        Kind::Generalized { tau: tau.clone(), n: n.clone() },
    )
}

/// The two-dimensional-below-λ module built from a dense module and M(λ).
/// Index 0 carries weight λ; indices ≤ 0 are two dimensional, indices > 0
/// one dimensional. With `printed = true` the nilpotent part sits in the
/// upper corner, as typeset; that layout fails [e,f] = h at index 0. The
/// default layout puts it in the lower corner, which is the unique repair
/// keeping the displayed f_{λ+2} and e_λ.
pub fn counterexample_module<F: Field>(lambda: &F, k_min: i64, k_max: i64, printed: bool) -> Result<WeightModule<F>> {
    if k_min > -1 || k_max < 1 {
        return Err(Error::WindowTooSmall("window must straddle lambda".into()));
    }
    let tau = lambda.plus(&F::one()).times(&lambda.plus(&F::one()));
    let w = |k: i64| lambda.plus(&F::from_int(2 * k));
    let q = quarter::<F>();
    let mut nil = Matrix::zeros(2, 2);
    if printed {
        nil.set(0, 1, q.clone());
    } else {
        nil.set(1, 0, q.clone());
    }
    let half = F::from_rational(rat(1, 2));
    WeightModule::from_fn(
        lambda.clone(),
        k_min,
        k_max,
        |k| if k <= 0 { 2 } else { 1 },
        |k| match k {
            k if k < 0 => nil.add_scalar(&dense_e(&tau, &w(k))),
            0 => Matrix::from_vec(1, 2, vec![half.clone(), F::zero()]),
            _ => one(dense_e(&tau, &w(k))),
        },
        |k| match k {
            k if k <= 0 => Matrix::identity(2),
            1 => Matrix::from_vec(2, 1, vec![F::zero(), half.clone()]),
            _ => one(F::one()),
        },
        Kind::Counterexample { lambda: lambda.clone(), printed },
    )
}

/// Counterexample module over the quadratic scalars; rejects integer λ.
pub fn make_counterexample(lambda: &QuadScalar, k_min: i64, k_max: i64) -> Result<WeightModule<QuadScalar>> {
    check_non_integer(lambda)?;
    counterexample_module(lambda, k_min, k_max, false)
}

/// The layout exactly as typeset; it is not an sl(2)-module.
pub fn make_counterexample_printed(lambda: &QuadScalar, k_min: i64, k_max: i64) -> Result<WeightModule<QuadScalar>> {
    check_non_integer(lambda)?;
    counterexample_module(lambda, k_min, k_max, true)
}

fn check_non_integer(lambda: &QuadScalar) -> Result<()> {
    match lambda.as_rational() {
        Some(r) if r.is_integer() => Err(Error::IntegerLambda(lambda.to_string())),
        _ => Ok(()),
    }
}
