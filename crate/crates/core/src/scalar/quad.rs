use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use super::field::{fmt_rational, parse_rational, rational_sqrt, Field, Rational};
use crate::error::{Error, Result};

/// Exact element a + b·√d of ℚ(√d). `d` is square-free and nonzero, and
/// `d == 1` exactly when `b == 0`, so equality is componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    d: i64,
}

/// Split n = s²·d with d square-free. Returns (s, d) with the sign kept on d.
pub fn square_free_part(n: &BigInt) -> (BigInt, BigInt) {
    let neg = n.is_negative();
    let mut rest = n.abs();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let pp = &p * &p;
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            s *= &p;
        }
        p += 1u32;
    }
    (s, if neg { -rest } else { rest })
}

impl QuadScalar {
    /// Builds a + b√d. `d` need not be square-free; it is reduced here.
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::Parse("radicand 0".into()));
        }
        let (s, sf) = square_free_part(&BigInt::from(d));
        let sf = sf.to_i64().expect("square-free part fits");
        Ok(Self::canonical(a, b * BigRational::from_integer(s), sf))
    }

    fn canonical(a: Rational, b: Rational, d: i64) -> Self {
        if d == 1 {
            QuadScalar { a: a + b, b: Rational::zero(), d: 1 }
        } else if b.is_zero() {
            QuadScalar { a, b, d: 1 }
        } else {
            QuadScalar { a, b, d }
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadScalar { a, b: Rational::zero(), d: 1 }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(n.into(), d.into()))
    }

    /// √r for rational r, written as (1/q)√(pq) and then square-free reduced.
    pub fn sqrt_of_rational(r: &Rational) -> Self {
        if r.is_zero() {
            return Self::int(0);
        }
        let pq = r.numer() * r.denom();
        let (s, sf) = square_free_part(&pq);
        let coeff = BigRational::new(s, r.denom().clone());
        let d = sf.to_i64().expect("radicand fits in i64");
        Self::canonical(Rational::zero(), coeff, d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        Self::canonical(self.a.clone(), -self.b.clone(), self.d)
    }

    /// a² − d·b², the field norm.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - BigRational::from_integer(self.d.into()) * &self.b * &self.b
    }

    fn join(&self, o: &Self) -> Result<i64> {
        match (self.d, o.d) {
            (1, d) | (d, 1) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(Error::RadicandMismatch(x, y)),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let d = self.join(o)?;
        Ok(Self::canonical(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let d = self.join(o)?;
        let dr = BigRational::from_integer(d.into());
        let a = &self.a * &o.a + dr * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::canonical(a, b, d))
    }

    pub fn try_inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(Self::canonical(&c.a / &n, &c.b / &n, self.d))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.try_inv()?)
    }

    /// A square root inside ℚ(√d) (or a new quadratic field when self is
    /// rational). The returned root has nonnegative rational part, or
    /// nonnegative √d-coefficient when that part is zero.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_rational() {
            return Ok(Self::sqrt_of_rational(&self.a));
        }
        // (p + q√d)² = p² + d q² + 2pq√d
        let n = rational_sqrt(&self.norm())
            .ok_or_else(|| Error::RootNotInField(self.to_string()))?;
        let two = BigRational::from_integer(2.into());
        for cand in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if let Some(p) = rational_sqrt(&cand) {
                if p.is_zero() {
                    continue;
                }
                let q = &self.b / (&two * &p);
                let r = Self::canonical(p, q, self.d);
                if &(&r * &r) == self {
                    return Ok(r);
                }
            }
        }
        Err(Error::RootNotInField(self.to_string()))
    }

    /// Parses "3", "-1/2", "sqrt(2)", "1/2+3/4*sqrt(5)", "1-sqrt(3)".
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("not a quadratic scalar: {s}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(pos) = t.find("sqrt(") else {
            return parse_rational(&t).map(Self::rational).ok_or_else(err);
        };
        let close = t[pos..].find(')').ok_or_else(err)? + pos;
        let d: i64 = t[pos + 5..close].parse().map_err(|_| err())?;
        if close + 1 != t.len() {
            return Err(err());
        }
        let head = &t[..pos];
        let head = head.strip_suffix('*').unwrap_or(head);
        // split head into "a" and signed coefficient of the surd
        let split = head
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (a_str, b_str) = match split {
            Some(i) if !head[..i].ends_with('/') => (&head[..i], &head[i..]),
            _ => ("", head),
        };
        let a = if a_str.is_empty() { Rational::zero() } else { parse_rational(a_str).ok_or_else(err)? };
        let b = match b_str {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            x => parse_rational(x.strip_prefix('+').unwrap_or(x)).ok_or_else(err)?,
        };
        Self::new(a, b, d)
    }
}

impl Field for QuadScalar {
    fn zero() -> Self {
        Self::int(0)
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn from_rational(r: Rational) -> Self {
        Self::rational(r)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self.try_add(o).expect("radicands agree")
    }
    fn minus(&self, o: &Self) -> Self {
        self.try_sub(o).expect("radicands agree")
    }
    fn times(&self, o: &Self) -> Self {
        self.try_mul(o).expect("radicands agree")
    }
    fn negate(&self) -> Self {
        Self::canonical(-self.a.clone(), -self.b.clone(), self.d)
    }
    fn recip(&self) -> Option<Self> {
        self.try_inv().ok()
    }
    fn root(&self) -> Option<Self> {
        self.sqrt().ok()
    }
    fn to_rational(&self) -> Option<Rational> {
        self.as_rational().cloned()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a> $tr<&'a QuadScalar> for &'a QuadScalar {
            type Output = QuadScalar;
            fn $m(self, o: &'a QuadScalar) -> QuadScalar {
                self.$f(o).expect("quadratic scalar arithmetic")
            }
        }
        impl $tr for QuadScalar {
            type Output = QuadScalar;
            fn $m(self, o: QuadScalar) -> QuadScalar {
                (&self).$f(&o).expect("quadratic scalar arithmetic")
            }
        }
    };
}
forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        self.negate()
    }
}
impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        self.negate()
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<Rational> for QuadScalar {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let surd = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if self.b == -Rational::one() {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", fmt_rational(&self.b), self.d)
        };
        if self.a.is_zero() {
            write!(f, "{surd}")
        } else if surd.starts_with('-') {
            write!(f, "{}{}", fmt_rational(&self.a), surd)
        } else {
            write!(f, "{}+{}", fmt_rational(&self.a), surd)
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::field::rat;

    fn q(s: &str) -> QuadScalar {
        QuadScalar::parse(s).unwrap()
    }

    #[test]
    fn conjugate_product() {
        assert_eq!(q("1+sqrt(2)") * q("1-sqrt(2)"), QuadScalar::int(-1));
    }

    #[test]
    fn rational_sum() {
        assert_eq!(QuadScalar::int(3) + QuadScalar::frac(1, 2), QuadScalar::frac(7, 2));
    }

    #[test]
    fn inverse_via_conjugate() {
        let x = q("1+sqrt(5)");
        let inv = QuadScalar::one() / x.clone();
        assert_eq!(inv, QuadScalar::new(rat(-1, 4), rat(1, 4), 5).unwrap());
        assert_eq!(inv * x, QuadScalar::one());
    }

    #[test]
    fn mismatch_and_zero_division() {
        assert_eq!(q("sqrt(2)").try_add(&q("sqrt(3)")), Err(Error::RadicandMismatch(2, 3)));
        assert_eq!(QuadScalar::one().try_div(&QuadScalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn radicand_reduction() {
        // √(8/3) = (1/3)√24 = (2/3)√6
        let r = QuadScalar::sqrt_of_rational(&rat(8, 3));
        assert_eq!((r.b().clone(), r.d()), (rat(2, 3), 6));
        assert_eq!(&r * &r, QuadScalar::frac(8, 3));
        assert_eq!(QuadScalar::sqrt_of_rational(&rat(9, 4)), QuadScalar::frac(3, 2));
        assert_eq!(QuadScalar::new(rat(1, 1), rat(2, 1), 4).unwrap(), QuadScalar::int(5));
        assert_eq!(QuadScalar::new(rat(1, 1), rat(0, 1), 7).unwrap().d(), 1);
    }

    #[test]
    fn sqrt_inside_field() {
        // (1+√2)² = 3+2√2
        let r = q("3+2*sqrt(2)").sqrt().unwrap();
        assert_eq!(r, q("1+sqrt(2)"));
        assert!(q("1+sqrt(2)").sqrt().is_err());
        assert_eq!(q("-4").sqrt().unwrap(), q("2*sqrt(-1)"));
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["3", "-1/2", "sqrt(2)", "-sqrt(3)", "1/2+3/4*sqrt(5)", "1-2*sqrt(7)", "-1/3-sqrt(2)"] {
            let x = q(s);
            assert_eq!(q(&x.to_string()), x, "{s}");
        }
        assert_eq!(q("1/2+3/4*sqrt(5)").to_string(), "1/2+3/4*sqrt(5)");
    }
}
