//! Lyndon words over the weighted alphabet {1 < 2}, letter i of degree i.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn letter(a: u8) -> Self {
        Word(vec![a])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Strictly smaller than each of its proper suffixes.
    pub fn is_lyndon(&self) -> bool {
        !self.0.is_empty() && (1..self.0.len()).all(|i| self.0[..] < self.0[i..])
    }

    /// w = uv with v the longest proper Lyndon suffix.
    pub fn standard_factorization(&self) -> Option<(Word, Word)> {
        if self.0.len() < 2 {
            return None;
        }
        (1..self.0.len())
            .map(|i| (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec())))
            .find(|(_, v)| v.is_lyndon())
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// The bracketing given by the standard factorization, e.g. [x1,[x1,x2]].
    pub fn bracketed(&self) -> String {
        match self.standard_factorization() {
            None => format!("x{}", self.0[0]),
            Some((u, v)) => format!("[{},{}]", u.bracketed(), v.bracketed()),
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bracketed())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bracketed())
    }
}

/// All words of weighted degree d, in lexicographic order.
pub fn words_of_degree(d: usize) -> Vec<Word> {
    fn go(rest: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if rest == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for a in [1u8, 2] {
            if a as usize <= rest {
                cur.push(a);
                go(rest - a as usize, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, &mut Vec::new(), &mut out);
    out
}

pub fn lyndon_words(d: usize) -> Vec<Word> {
    words_of_degree(d).into_iter().filter(Word::is_lyndon).collect()
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut p, mut mu) = (n, 2, 1);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        -mu
    } else {
        mu
    }
}

fn lucas(n: usize) -> i64 {
    let (mut a, mut b) = (2i64, 1i64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// Dimension of the degree-d part of the free Lie algebra on generators of
/// degrees 1 and 2: (1/d)·Σ_{k|d} μ(k)·L_{d/k}, with L the Lucas numbers.
pub fn witt_dimension(d: usize) -> usize {
    let s: i64 = (1..=d).filter(|k| d.is_multiple_of(*k)).map(|k| mobius(k) * lucas(d / k)).sum();
    (s / d as i64) as usize
}
