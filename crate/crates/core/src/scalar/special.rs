use num::{BigInt, BigRational, One};

use super::field::{Field, Rational};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// P(z, n): z(z+1)⋯(z+n−1) for n ≥ 0, and 1/((z+n)(z+n+1)⋯(z−1)) for n < 0.
pub fn pochhammer<F: Field>(z: &F, n: i64) -> Result<F> {
    if n >= 0 {
        let mut acc = F::one();
        for k in 0..n {
            acc = acc.times(&z.plus(&F::from_int(k)));
        }
        return Ok(acc);
    }
    let mut den = F::one();
    for k in n..0 {
        den = den.times(&z.plus(&F::from_int(k)));
    }
    den.recip().ok_or_else(|| Error::PochhammerPole { z: z.to_string(), n })
}

/// Matrix Pochhammer for a square Z whose factors all commute (Z is a
/// polynomial in one matrix). `None` signals a singular factor for n < 0.
pub fn matrix_pochhammer<F: Field>(z: &Matrix<F>, n: i64) -> Option<Matrix<F>> {
    let l = z.rows();
    if n >= 0 {
        let mut acc = Matrix::identity(l);
        for k in 0..n {
            acc = acc.mul(&z.add_scalar(&F::from_int(k)));
        }
        return Some(acc);
    }
    let mut den = Matrix::identity(l);
    for k in n..0 {
        den = den.mul(&z.add_scalar(&F::from_int(k)));
    }
    den.inverse()
}

/// (2n−3)!! with (−3)!! = −1 and (−1)!! = 1.
pub fn odd_double_factorial(n: u32) -> Rational {
    match n {
        0 => -Rational::one(),
        1 => Rational::one(),
        _ => {
            let mut acc = BigInt::one();
            let mut k = 2 * n as i64 - 3;
            while k > 1 {
                acc *= k;
                k -= 2;
            }
            BigRational::from_integer(acc)
        }
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Coefficient of (x−τ)ⁿ/τⁿ in the expansion of √x/√τ around τ.
pub fn sqrt_series_coeff(n: u32) -> Rational {
    let sign = if n % 2 == 1 { 1 } else { -1 }; // (−1)^(n−1)
    let den = BigInt::from(2).pow(n) * factorial(n);
    odd_double_factorial(n) * BigRational::new(BigInt::from(sign), den)
}

/// √c for c = τ·Id + nilpotent, picking the branch fixed by `sqrt_tau`.
pub fn nilpotent_sqrt<F: Field>(c: &Matrix<F>, tau: &F, sqrt_tau: &F) -> Result<Matrix<F>> {
    if !c.is_square() {
        return Err(Error::ShapeMismatch("Casimir block must be square".into()));
    }
    if tau.is_zero() {
        return Err(Error::TauZero);
    }
    if sqrt_tau.times(sqrt_tau) != *tau {
        return Err(Error::RootNotInField(format!("{sqrt_tau} does not square to {tau}")));
    }
    let l = c.rows();
    let x = c.add_scalar(&tau.negate());
    if !x.pow(l as u32).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let tau_inv = tau.recip().expect("tau nonzero");
    let xs = x.scale(&tau_inv);
    let mut term = Matrix::identity(l);
    let mut sum = Matrix::zeros(l, l);
    for n in 0..l.max(1) as u32 {
        sum = sum.add(&term.scale(&F::from_rational(sqrt_series_coeff(n))));
        term = term.mul(&xs);
    }
    Ok(sum.scale(sqrt_tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{field::rat, QuadScalar};

    fn q(n: i64, d: i64) -> QuadScalar {
        QuadScalar::frac(n, d)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(3, 1), 4).unwrap(), q(360, 1));
        assert_eq!(pochhammer(&q(9, 4), 0).unwrap(), q(1, 1));
        assert_eq!(pochhammer(&q(9, 4), -1).unwrap(), q(4, 5));
        assert_eq!(pochhammer(&q(-1, 1), 3).unwrap(), q(0, 1));
        assert!(matches!(pochhammer(&q(2, 1), -2), Err(Error::PochhammerPole { .. })));
    }

    #[test]
    fn double_factorial_conventions() {
        assert_eq!(odd_double_factorial(0), rat(-1, 1));
        assert_eq!(odd_double_factorial(1), rat(1, 1));
        assert_eq!(odd_double_factorial(3), rat(3, 1));
        assert_eq!(odd_double_factorial(5), rat(105, 1));
    }

    #[test]
    fn series_matches_binomial() {
        // √(1+x) = 1 + x/2 − x²/8 + x³/16 − 5x⁴/128
        let want = [rat(1, 1), rat(1, 2), rat(-1, 8), rat(1, 16), rat(-5, 128)];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(&sqrt_series_coeff(n as u32), w);
        }
    }

    #[test]
    fn nilpotent_sqrt_examples() {
        let c = Matrix::from_rows(vec![vec![q(9, 1), q(4, 1)], vec![q(0, 1), q(9, 1)]]);
        let s = nilpotent_sqrt(&c, &q(9, 1), &q(3, 1)).unwrap();
        assert_eq!(s, Matrix::from_rows(vec![vec![q(3, 1), q(2, 3)], vec![q(0, 1), q(3, 1)]]));
        assert_eq!(s.mul(&s), c);
        let s = nilpotent_sqrt(&c, &q(9, 1), &q(-3, 1)).unwrap();
        assert_eq!(s, Matrix::from_rows(vec![vec![q(-3, 1), q(-2, 3)], vec![q(0, 1), q(-3, 1)]]));
        let d = Matrix::scalar(2, q(9, 1));
        assert_eq!(nilpotent_sqrt(&d, &q(9, 1), &q(3, 1)).unwrap(), Matrix::scalar(2, q(3, 1)));
        assert_eq!(nilpotent_sqrt(&d, &q(0, 1), &q(0, 1)), Err(Error::TauZero));
        let bad = Matrix::from_rows(vec![vec![q(9, 1), q(1, 1)], vec![q(1, 1), q(9, 1)]]);
        assert_eq!(nilpotent_sqrt(&bad, &q(9, 1), &q(3, 1)), Err(Error::NotNilpotent));
    }
}
