use std::fmt::{Debug, Display};

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

/// The arithmetic the generic linear algebra needs. Method names avoid the
/// `std::ops` names so both can be in scope on the same type.
pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn recip(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }
    fn over(&self, o: &Self) -> Option<Self> {
        o.recip().map(|r| self.times(&r))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn scale(&self, r: &Rational) -> Self {
        self.times(&Self::from_rational(r.clone()))
    }
    /// A square root inside the field, when one exists.
    fn root(&self) -> Option<Self> {
        None
    }
    /// The value as a rational number, when it is one.
    fn to_rational(&self) -> Option<Rational> {
        None
    }
    fn is_integer(&self) -> bool {
        self.to_rational().is_some_and(|r| is_integer(&r))
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Parse "p", "p/q" or a decimal-free signed fraction.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}
