//! The explicit actions: dense, Verma, lowest weight, and the matrix
//! version on first-case modules.

use crate::error::{Error, Result};
use crate::scalar::{matrix_pochhammer, nilpotent_sqrt, pochhammer, rat, Field, Matrix, QuadScalar};
use crate::weightmod::{GradedMap, Kind, WeightModule};

use super::action::{Algebra, Branch, WittAction};
use super::pin::first_case_shape;

fn neg_pow<F: Field>(i: i64) -> F {
    if i.rem_euclid(2) == 0 {
        F::one()
    } else {
        F::one().negate()
    }
}

/// a^i_μ = ((−1)^i/2)(i(s−1) − μ)·P(½(1+μ+s), i) with s = ±√τ. At i = −1
/// the singularity is removable and the value is 1.
pub fn dense_coeff<F: Field>(mu: &F, i: i64, s: &F) -> Result<F> {
    if i == -1 {
        return Ok(F::one());
    }
    let half = F::from_rational(rat(1, 2));
    let lin = F::from_int(i).times(&s.minus(&F::one())).minus(mu);
    let z = F::one().plus(mu).plus(s).times(&half);
    Ok(neg_pow::<F>(i).times(&half).times(&lin).times(&pochhammer(&z, i)?))
}

/// Builds an action with 1×1 blocks from `coeff(i, k)`, the scalar of
/// ρ(L_i) on index k. Blocks touching a zero space are empty.
fn scalar_action<F: Field>(
    m: &WeightModule<F>,
    algebra: Algebra,
    branch: Branch,
    depth: i64,
    coeff: impl Fn(i64, i64) -> Result<F>,
) -> Result<WittAction<F>> {
    let (lo, hi) = algebra.range(depth);
    let mut a = WittAction::new(m.clone(), algebra, branch);
    for i in lo..=hi {
        let mut g = GradedMap::new(i);
        for k in m.k_min..=m.k_max {
            if !m.contains(k + i) {
                continue;
            }
            let (r, c) = (m.dim(k + i), m.dim(k));
            let blk = if r == 0 || c == 0 { Matrix::zeros(r, c) } else { Matrix::from_vec(1, 1, vec![coeff(i, k)?]) };
            g.insert(k, blk);
        }
        if g.blocks.is_empty() {
            return Err(Error::DepthExceedsWindow(depth));
        }
        a.ops.insert(i, g);
    }
    if algebra == Algebra::Vir {
        a.central = Some(m.zero_map(0));
    }
    Ok(a)
}

fn pick_sqrt<F: Field>(tau: &F, branch: Branch) -> Result<F> {
    let r = tau.root().ok_or_else(|| Error::RootNotInField(tau.to_string()))?;
    Ok(r.times(&branch.sign()))
}

/// True iff branch s has a Pochhammer pole somewhere on the coset of μ₀,
/// i.e. (1 − s − μ₀)/2 is an integer.
pub fn dense_pole<F: Field>(mu0: &F, s: &F) -> bool {
    F::one().minus(s).minus(mu0).times(&F::from_rational(rat(1, 2))).is_integer()
}

/// The dense closed form on V(ξ, τ).
pub fn closed_form_dense<F: Field>(m: &WeightModule<F>, algebra: Algebra, branch: Branch, depth: i64) -> Result<WittAction<F>> {
    let Kind::Dense { tau } = &m.kind else {
        return Err(Error::WrongKind(format!("expected dense, got {}", m.kind.name())));
    };
    let branch = if branch == Branch::NotApplicable { Branch::Plus } else { branch };
    let s = pick_sqrt(tau, branch)?;
    if algebra != Algebra::Gt && dense_pole(&m.anchor, &s) {
        return Err(Error::PochhammerPole { z: format!("(1+mu{}{})/2", if branch == Branch::Plus { "+" } else { "-" }, s), n: -2 });
    }
    scalar_action(m, algebra, branch, depth, |i, k| dense_coeff(&m.weight(k), i, &s))
}

/// The Verma pattern with the factor P(j−i+1, i); zero when j−i < 0.
pub fn verma_minus_coeff<F: Field>(lambda: &F, i: i64, j: i64) -> Result<F> {
    if j - i < 0 {
        return Ok(F::zero());
    }
    let lin = F::from_int(2 * (i - j)).plus(&F::from_int(i + 1).times(lambda));
    let p = pochhammer(&F::from_int(j - i + 1), i)?;
    Ok(F::from_rational(rat(-1, 2)).times(&lin).times(&p))
}

/// The Verma pattern with the factor P(1−j+λ, i). At i = −1 it is f.
pub fn verma_plus_coeff<F: Field>(lambda: &F, i: i64, j: i64) -> Result<F> {
    if i == -1 {
        return Ok(F::one());
    }
    let lin = F::from_int(2 * j).plus(&F::from_int(i - 1).times(lambda));
    let p = pochhammer(&F::one().minus(&F::from_int(j)).plus(lambda), i)?;
    Ok(neg_pow::<F>(i).times(&F::from_rational(rat(1, 2))).times(&lin).times(&p))
}

/// Closed forms on M(λ), with w_j at index −j.
pub fn closed_form_verma<F: Field>(m: &WeightModule<F>, algebra: Algebra, branch: Branch, depth: i64) -> Result<WittAction<F>> {
    let Kind::Verma { lambda } = &m.kind else {
        return Err(Error::WrongKind(format!("expected verma, got {}", m.kind.name())));
    };
    let minus_one = *lambda == F::one().negate();
    let branch = match (algebra, branch) {
        (_, Branch::NotApplicable) => Branch::Minus,
        (Algebra::Lt, b) => b,
        (_, Branch::Plus) if !minus_one => {
            return Err(Error::BranchUnavailable("the gt side of M(lambda) has only the - structure".into()))
        }
        (_, b) => b,
    };
    let use_plus = algebra == Algebra::Lt && branch == Branch::Plus;
    if use_plus && lambda.is_integer() && lambda.to_rational().is_some_and(|r| r >= rat(1, 1)) {
        return Err(Error::PochhammerPole { z: format!("1-j+lambda at lambda = {lambda}"), n: -2 });
    }
    scalar_action(m, algebra, branch, depth, |i, k| {
        if use_plus {
            verma_plus_coeff(lambda, i, -k)
        } else {
            verma_minus_coeff(lambda, i, -k)
        }
    })
}

/// First (i, j) in the window where the "+" pattern, continued to i ≥ 2,
/// sends w_j below w_0 with a nonzero coefficient.
pub fn verma_plus_leak<F: Field>(lambda: &F, depth: i64) -> Option<(i64, i64)> {
    for i in 2..=depth {
        for j in 0..i {
            if let Ok(c) = verma_plus_coeff(lambda, i, j) {
                if !c.is_zero() {
                    return Some((i, j));
                }
            }
        }
    }
    None
}

/// −½((1−i)λ + 2(j+1))·P(j+i+1, −i), the "+" structure and also the lt one.
pub fn lowest_plus_coeff<F: Field>(lambda: &F, i: i64, j: i64) -> Result<F> {
    if j + i < 0 {
        return Ok(F::zero());
    }
    let lin = F::from_int(1 - i).times(lambda).plus(&F::from_int(2 * (j + 1)));
    let p = pochhammer(&F::from_int(j + i + 1), -i)?;
    Ok(F::from_rational(rat(-1, 2)).times(&lin).times(&p))
}

/// −½((1+i)λ + 2(j+1+i))·P(λ+2+j+i, −i), the "−" structure.
pub fn lowest_minus_coeff<F: Field>(lambda: &F, i: i64, j: i64) -> Result<F> {
    if j + i < 0 {
        return Ok(F::zero());
    }
    let lin = F::from_int(1 + i).times(lambda).plus(&F::from_int(2 * (j + 1 + i)));
    let p = pochhammer(&lambda.plus(&F::from_int(2 + j + i)), -i)?;
    Ok(F::from_rational(rat(-1, 2)).times(&lin).times(&p))
}

/// Closed forms on M̄(λ+2). The module carries its own anchor λ+2; the
/// formulas use λ = anchor − 2. Index j carries w_j.
pub fn closed_form_lowest<F: Field>(m: &WeightModule<F>, algebra: Algebra, branch: Branch, depth: i64) -> Result<WittAction<F>> {
    let Kind::Lowest { lambda: anchor } = &m.kind else {
        return Err(Error::WrongKind(format!("expected lowest, got {}", m.kind.name())));
    };
    let lambda = anchor.minus(&F::from_int(2));
    let branch = match (algebra, branch) {
        (Algebra::Lt, _) => Branch::NotApplicable,
        (_, Branch::NotApplicable) => Branch::Minus,
        (_, b) => b,
    };
    if branch == Branch::Minus && lambda.is_integer() && lambda.to_rational().is_some_and(|r| r <= rat(-3, 1)) {
        return Err(Error::PochhammerPole { z: format!("lambda+2+j+i at lambda = {lambda}"), n: -1 });
    }
    scalar_action(m, algebra, branch, depth, |i, k| {
        if i <= 1 || branch != Branch::Minus {
            lowest_plus_coeff(&lambda, i, k)
        } else {
            lowest_minus_coeff(&lambda, i, k)
        }
    })
}

/// A^i_μ = ((−1)^i/2)(i(1+√c) − (μ+2i))·P(½((1+√c)+μ), i), blockwise, on a
/// first-case module with f = Id. A^{−1} is the identity.
pub fn matrix_closed_form<F: Field>(m: &WeightModule<F>, sqrt_c: &Matrix<F>, depth: i64) -> Result<WittAction<F>> {
    let fc = first_case_shape(m).ok_or_else(|| Error::WrongKind("module is not in first-case shape".into()))?;
    if sqrt_c.mul(sqrt_c) != fc.casimir {
        return Err(Error::NotASquareRoot);
    }
    let l = sqrt_c.rows();
    let half = F::from_rational(rat(1, 2));
    let one_s = sqrt_c.add_scalar(&F::one());
    let (lo, hi) = Algebra::Gt.range(depth);
    let mut a = WittAction::new(m.clone(), Algebra::Gt, Branch::NotApplicable);
    for i in lo..=hi {
        let mut g = GradedMap::new(i);
        for k in m.k_min..=m.k_max {
            if !m.contains(k + i) {
                continue;
            }
            if i == -1 {
                g.insert(k, Matrix::identity(l));
                continue;
            }
            let mu = m.weight(k);
            let lin = one_s.scale(&F::from_int(i)).add_scalar(&mu.plus(&F::from_int(2 * i)).negate());
            let z = one_s.add_scalar(&mu).scale(&half);
            let p = matrix_pochhammer(&z, i).ok_or(Error::SingularPochhammerBlock { i, k })?;
            g.insert(k, lin.mul(&p).scale(&neg_pow::<F>(i).times(&half)));
        }
        if g.blocks.is_empty() {
            return Err(Error::DepthExceedsWindow(depth));
        }
        a.ops.insert(i, g);
    }
    Ok(a)
}

/// Transports a first-case-category module (f invertible, c − τ nilpotent)
/// to the basis where f = Id, applies the matrix closed form with
/// s(c) from the nilpotent series, and transports the action back.
pub fn functor_image<F: Field>(m: &WeightModule<F>, sqrt_tau: &F, depth: i64) -> Result<WittAction<F>> {
    let tau = sqrt_tau.times(sqrt_tau);
    if tau.is_zero() {
        return Err(Error::TauZero);
    }
    // φ_k: M_k → M'_k with φ_{k−1} f_k φ_k⁻¹ = Id
    let mut phi = std::collections::BTreeMap::new();
    phi.insert(m.k_max, Matrix::identity(m.dim(m.k_max)));
    for k in (m.k_min + 1..=m.k_max).rev() {
        let f = m.f_block(k).unwrap();
        let finv = if f.is_square() { f.inverse() } else { None }
            .ok_or_else(|| Error::WrongKind(format!("f is not invertible at index {k}")))?;
        let next = phi[&k].mul(&finv);
        phi.insert(k - 1, next);
    }
    let inv: std::collections::BTreeMap<i64, Matrix<F>> =
        phi.iter().map(|(&k, p)| (k, p.inverse().expect("product of invertibles"))).collect();
    let transported = WeightModule::from_fn(
        m.anchor.clone(),
        m.k_min,
        m.k_max,
        |k| m.dim(k),
        |k| phi[&(k + 1)].mul(m.e_block(k).unwrap()).mul(&inv[&k]),
        |k| phi[&(k - 1)].mul(m.f_block(k).unwrap()).mul(&inv[&k]),
        Kind::Custom,
    )?;
    let c = transported.casimir();
    let c0 = c.blocks.values().next().ok_or(Error::EmptyInterior)?;
    if c.blocks.values().any(|b| b != c0) {
        return Err(Error::NotNilpotent);
    }
    let s = nilpotent_sqrt(c0, &tau, sqrt_tau)?;
    let a = matrix_closed_form(&transported, &s, depth)?;
    let mut out = WittAction::new(m.clone(), Algebra::Gt, Branch::NotApplicable);
    for (i, g) in a.ops {
        let mut back = GradedMap::new(i);
        for (k, b) in g.blocks {
            back.insert(k, inv[&(k + i)].mul(&b).mul(&phi[&k]));
        }
        out.ops.insert(i, back);
    }
    Ok(out)
}

/// Whether a degree-0 map intertwines every operator of two actions.
pub fn intertwines<F: Field>(phi: &GradedMap<F>, a: &WittAction<F>, b: &WittAction<F>) -> bool {
    a.ops.iter().all(|(i, ga)| {
        let Some(gb) = b.op(*i) else { return false };
        let lhs = phi.compose(ga);
        let rhs = gb.compose(phi);
        lhs.blocks.iter().all(|(k, x)| rhs.block(*k).is_none_or(|y| x == y))
    })
}

/// Coefficient lookup on a scalar action: ρ(L_i) on index k.
pub fn scalar_coeff<F: Field>(a: &WittAction<F>, i: i64, k: i64) -> Option<F> {
    let b = a.op(i)?.block(k)?;
    (b.shape() == (1, 1)).then(|| b.get(0, 0).clone())
}

/// a^i_{μ+2j}a^j_μ − a^j_{μ+2i}a^i_μ − (i−j)a^{i+j}_μ over every stored
/// triple of a scalar action; returns the number of identities checked and
/// the failures.
pub fn coefficient_identity<F: Field>(a: &WittAction<F>, depth: i64) -> (usize, Vec<(i64, i64, i64)>) {
    let mut n = 0;
    let mut bad = Vec::new();
    for i in -depth..=depth {
        for j in -depth..=depth {
            if (i + j).abs() > depth {
                continue;
            }
            for k in a.module.k_min..=a.module.k_max {
                let vals = (
                    scalar_coeff(a, i, k + j),
                    scalar_coeff(a, j, k),
                    scalar_coeff(a, j, k + i),
                    scalar_coeff(a, i, k),
                    scalar_coeff(a, i + j, k),
                );
                let (Some(p), Some(q), Some(r), Some(s), Some(t)) = vals else { continue };
                n += 1;
                let lhs = p.times(&q).minus(&r.times(&s));
                if lhs != F::from_int(i - j).times(&t) {
                    bad.push((i, j, k));
                }
            }
        }
    }
    (n, bad)
}

/// Shorthand for the quadratic-scalar pipeline.
pub type QAction = WittAction<QuadScalar>;
