use std::collections::BTreeMap;

use super::lie::{FreeLie, LieElement};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Lowest degree of the free part that the ideal can meet.
pub const MIN_DEGREE: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct IdealComponent {
    pub sub: Subspace,
    /// The verification sweep left every component in the window unchanged.
    pub stable: bool,
}

/// The degree-`degree` part of the ideal generated by `gens` and closed
/// under ad x1, ad x2 and f, on the window [5, max_degree].
///
/// The seed is the sl(2)-module spanned by e^a f^c g, so f-closure holds by
/// construction; a closing sweep re-applies every rule and checks that
/// nothing new appears.
pub fn ideal_component(fl: &FreeLie, gens: &[LieElement], degree: usize, max_degree: usize) -> Result<IdealComponent> {
    if degree > max_degree || degree < MIN_DEGREE {
        return Err(Error::WindowTooSmall(format!("degree {degree} outside [{MIN_DEGREE}, {max_degree}]")));
    }
    for g in gens {
        match g.degree() {
            Some(d) if d >= MIN_DEGREE => {}
            Some(d) => return Err(Error::DegreeMismatch { expected: MIN_DEGREE as u32, got: d as u32 }),
            None => return Err(Error::DegreeMismatch { expected: MIN_DEGREE as u32, got: 0 }),
        }
    }
    let mut seed: BTreeMap<usize, Vec<LieElement>> = BTreeMap::new();
    for g in gens {
        let mut down = vec![g.clone()];
        while down.last().unwrap().degree().is_some_and(|d| d > MIN_DEGREE) {
            let next = fl.f(down.last().unwrap())?;
            if next.is_zero() {
                break;
            }
            down.push(next);
        }
        for u in down {
            let mut v = u;
            while let Some(d) = v.degree().filter(|d| *d <= max_degree) {
                seed.entry(d).or_default().push(v.clone());
                v = fl.e(&v);
            }
        }
    }
    let x1 = LieElement::x(1);
    let x2 = LieElement::x(2);
    let mut ideal: BTreeMap<usize, Subspace> = BTreeMap::new();
    for d in MIN_DEGREE..=max_degree {
        let mut more: Vec<LieElement> = seed.get(&d).cloned().unwrap_or_default();
        for (step, gen) in [(1, &x1), (2, &x2)] {
            if let Some(prev) = d.checked_sub(step).and_then(|p| ideal.get(&p)) {
                more.extend(prev.elements().iter().map(|s| fl.bracket(gen, s)));
            }
        }
        ideal.insert(d, Subspace::span(d, &more));
    }
    let mut stable = true;
    for d in MIN_DEGREE..=max_degree {
        let cur = &ideal[&d];
        let mut imgs = Vec::new();
        for s in cur.elements() {
            for (step, gen) in [(1, &x1), (2, &x2)] {
                if d + step <= max_degree {
                    imgs.push((d + step, fl.bracket(gen, &s)));
                }
            }
            if d > MIN_DEGREE {
                imgs.push((d - 1, fl.f(&s)?));
            }
        }
        stable &= imgs.iter().all(|(t, x)| ideal[t].contains(x));
    }
    if !stable {
        return Err(Error::WindowTooSmall(format!("closure not stable at max degree {max_degree}; try {}", max_degree + 2)));
    }
    Ok(IdealComponent { sub: ideal.remove(&degree).unwrap(), stable })
}
