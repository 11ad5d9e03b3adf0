use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Zero};

use super::words::{lyndon_words, Word};
use crate::error::{Error, Result};
use crate::scalar::field::fmt_rational;
use crate::scalar::{rat, Rational};

/// A Lie polynomial as coordinates over Lyndon words of any degree.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<Word, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: Word) -> Self {
        debug_assert!(w.is_lyndon());
        let mut terms = BTreeMap::new();
        terms.insert(w, Rational::one());
        LieElement { terms }
    }

    pub fn x(a: u8) -> Self {
        Self::basis(Word::letter(a))
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &Rational) {
        for (w, x) in &o.terms {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &Rational::one());
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// The single degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<usize> {
        let mut ds = self.terms.keys().map(Word::degree);
        let d = ds.next()?;
        ds.all(|e| e == d).then_some(d)
    }

    pub fn component(&self, d: usize) -> Self {
        LieElement { terms: self.terms.iter().filter(|(w, _)| w.degree() == d).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    /// Coordinates over the Lyndon basis of degree d.
    pub fn coords(&self, d: usize) -> Vec<Rational> {
        lyndon_words(d).iter().map(|w| self.coeff(w)).collect()
    }

    pub fn from_coords(d: usize, c: &[Rational]) -> Self {
        let mut out = Self::zero();
        for (w, x) in lyndon_words(d).into_iter().zip(c) {
            out.add_term(w, x);
        }
        out
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{}*{}", fmt_rational(c), w)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Bracket on the Lyndon basis by standard-factorization rewriting, with a
/// memo of basis brackets.
#[derive(Default)]
pub struct FreeLie {
    memo: RefCell<HashMap<(Word, Word), LieElement>>,
}

impl FreeLie {
    pub fn new() -> Self {
        Self::default()
    }

    /// [P_u, P_v] for Lyndon words u, v.
    pub fn bracket_words(&self, u: &Word, v: &Word) -> LieElement {
        if u == v {
            return LieElement::zero();
        }
        if u > v {
            return self.bracket_words(v, u).scale(&-Rational::one());
        }
        if let Some(r) = self.memo.borrow().get(&(u.clone(), v.clone())) {
            return r.clone();
        }
        let out = match u.standard_factorization() {
            Some((u1, u2)) if u2 < *v => {
                // [[u1,u2],v] = [u1,[u2,v]] − [u2,[u1,v]]
                let a = self.bracket(&LieElement::basis(u1.clone()), &self.bracket_words(&u2, v));
                let b = self.bracket(&LieElement::basis(u2), &self.bracket_words(&u1, v));
                a.minus(&b)
            }
            _ => LieElement::basis(u.concat(v)),
        };
        self.memo.borrow_mut().insert((u.clone(), v.clone()), out.clone());
        out
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                out.add_scaled(&self.bracket_words(u, v), &(x * y));
            }
        }
        out
    }

    /// e = ad(−x1).
    pub fn e(&self, u: &LieElement) -> LieElement {
        self.bracket(&LieElement::x(1).scale(&-Rational::one()), u)
    }

    /// h = 2·degree on homogeneous parts.
    pub fn h(&self, u: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (w, c) in u.terms() {
            out.add_term(w.clone(), &(c * rat(2 * w.degree() as i64, 1)));
        }
        out
    }

    /// The derivation f = ad(x_−1): f(x2) = −3x1, and f(x1) = −2x0 acts on
    /// the other factor of a bracket as w ↦ 2·deg(w)·w. Defined on terms of
    /// degree at least 2.
    pub fn f(&self, u: &LieElement) -> Result<LieElement> {
        let mut out = LieElement::zero();
        for (w, c) in u.terms() {
            out.add_scaled(&self.f_word(w)?, c);
        }
        Ok(out)
    }

    fn f_word(&self, w: &Word) -> Result<LieElement> {
        match w.standard_factorization() {
            None if w.0[0] == 2 => Ok(LieElement::x(1).scale(&rat(-3, 1))),
            None => Err(Error::DegreeTooLow),
            Some((u, v)) => {
                let pu = LieElement::basis(u.clone());
                let pv = LieElement::basis(v.clone());
                let left = if u.len() == 1 && u.0[0] == 1 {
                    pv.scale(&rat(2 * v.degree() as i64, 1))
                } else {
                    self.bracket(&self.f_word(&u)?, &pv)
                };
                let right = if v.len() == 1 && v.0[0] == 1 {
                    pu.scale(&rat(-2 * u.degree() as i64, 1))
                } else {
                    self.bracket(&pu, &self.f_word(&v)?)
                };
                Ok(left.plus(&right))
            }
        }
    }
}
