use std::collections::BTreeMap;

use super::graded::GradedMap;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{Field, Matrix};

/// Which catalog entry produced a module, with the parameters the closed
/// forms need.
#[derive(Clone, Debug, PartialEq)]
pub enum Kind<F> {
    Dense { tau: F },
    Verma { lambda: F },
    Lowest { lambda: F },
    Finite { n: u32 },
    Generalized { tau: F, n: Matrix<F> },
    Counterexample { lambda: F, printed: bool },
    Intermediate { a: F, b: F },
    Custom,
}

impl<F> Kind<F> {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Dense { .. } => "dense",
            Kind::Verma { .. } => "verma",
            Kind::Lowest { .. } => "lowest",
            Kind::Finite { .. } => "finite",
            Kind::Generalized { .. } => "generalized",
            Kind::Counterexample { .. } => "counterexample",
            Kind::Intermediate { .. } => "intermediate",
            Kind::Custom => "custom",
        }
    }
}

/// Truncated weight module. Index k carries weight anchor + 2k; e raises the
/// index by one and f lowers it. h is implicit. Weight spaces may be zero
/// dimensional, which lets a module state its true boundary inside the window.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightModule<F> {
    pub anchor: F,
    pub k_min: i64,
    pub k_max: i64,
    dims: Vec<usize>,
    e: BTreeMap<i64, Matrix<F>>,
    f: BTreeMap<i64, Matrix<F>>,
    pub kind: Kind<F>,
}

impl<F: Field> WeightModule<F> {
    /// Builds a module from per-index dimensions and block closures; `e(k)`
    /// is the block M_k → M_{k+1}, `f(k)` the block M_k → M_{k−1}.
    pub fn from_fn(
        anchor: F,
        k_min: i64,
        k_max: i64,
        dim: impl Fn(i64) -> usize,
        e: impl Fn(i64) -> Matrix<F>,
        f: impl Fn(i64) -> Matrix<F>,
        kind: Kind<F>,
    ) -> Result<Self> {
        if k_min > k_max {
            return Err(Error::WindowMismatch(format!("empty window [{k_min}, {k_max}]")));
        }
        let dims: Vec<usize> = (k_min..=k_max).map(&dim).collect();
        let mut em = BTreeMap::new();
        let mut fm = BTreeMap::new();
        for k in k_min..k_max {
            em.insert(k, e(k));
            fm.insert(k + 1, f(k + 1));
        }
        Self::from_parts(anchor, k_min, dims, em, fm, kind)
    }

    pub fn from_parts(
        anchor: F,
        k_min: i64,
        dims: Vec<usize>,
        e: BTreeMap<i64, Matrix<F>>,
        f: BTreeMap<i64, Matrix<F>>,
        kind: Kind<F>,
    ) -> Result<Self> {
        let k_max = k_min + dims.len() as i64 - 1;
        let m = WeightModule { anchor, k_min, k_max, dims, e, f, kind };
        for k in k_min..k_max {
            let want = (m.dim(k + 1), m.dim(k));
            match m.e.get(&k) {
                Some(b) if b.shape() == want => {}
                _ => return Err(Error::ShapeMismatch(format!("e block at {k} must be {want:?}"))),
            }
            let want = (m.dim(k), m.dim(k + 1));
            match m.f.get(&(k + 1)) {
                Some(b) if b.shape() == want => {}
                _ => return Err(Error::ShapeMismatch(format!("f block at {} must be {want:?}", k + 1))),
            }
        }
        if m.e.len() != (k_max - k_min) as usize || m.f.len() != (k_max - k_min) as usize {
            return Err(Error::ShapeMismatch("blocks outside the window".into()));
        }
        Ok(m)
    }

    pub fn contains(&self, k: i64) -> bool {
        (self.k_min..=self.k_max).contains(&k)
    }

    pub fn dim(&self, k: i64) -> usize {
        if self.contains(k) {
            self.dims[(k - self.k_min) as usize]
        } else {
            0
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn weight(&self, k: i64) -> F {
        self.anchor.plus(&F::from_int(2 * k))
    }

    pub fn e_block(&self, k: i64) -> Option<&Matrix<F>> {
        self.e.get(&k)
    }

    pub fn f_block(&self, k: i64) -> Option<&Matrix<F>> {
        self.f.get(&k)
    }

    pub fn set_e_block(&mut self, k: i64, m: Matrix<F>) {
        assert_eq!(m.shape(), (self.dim(k + 1), self.dim(k)));
        self.e.insert(k, m);
    }

    pub fn set_f_block(&mut self, k: i64, m: Matrix<F>) {
        assert_eq!(m.shape(), (self.dim(k - 1), self.dim(k)));
        self.f.insert(k, m);
    }

    pub fn e_map(&self) -> GradedMap<F> {
        GradedMap::with_blocks(1, self.e.clone())
    }

    pub fn f_map(&self) -> GradedMap<F> {
        GradedMap::with_blocks(-1, self.f.clone())
    }

    pub fn h_map(&self) -> GradedMap<F> {
        self.diagonal(|k| self.weight(k))
    }

    /// Degree-0 map acting by the scalar `s(k)` on M_k.
    pub fn diagonal(&self, s: impl Fn(i64) -> F) -> GradedMap<F> {
        let mut g = GradedMap::new(0);
        for k in self.k_min..=self.k_max {
            g.insert(k, Matrix::scalar(self.dim(k), s(k)));
        }
        g
    }

    pub fn identity_map(&self) -> GradedMap<F> {
        self.diagonal(|_| F::one())
    }

    /// Zero map of the given degree on every index pair inside the window.
    pub fn zero_map(&self, degree: i64) -> GradedMap<F> {
        let mut g = GradedMap::new(degree);
        for k in self.k_min..=self.k_max {
            if self.contains(k + degree) {
                g.insert(k, Matrix::zeros(self.dim(k + degree), self.dim(k)));
            }
        }
        g
    }

    /// True when k lies past a zero-dimensional edge of the window, so the
    /// module is known to vanish there rather than merely be truncated.
    pub fn vanishes(&self, k: i64) -> bool {
        (k > self.k_max && self.dim(self.k_max) == 0) || (k < self.k_min && self.dim(self.k_min) == 0)
    }

    /// Adds the zero blocks that `g` must have at indices within `reach` of
    /// the window where its source or target vanishes.
    pub fn pad(&self, g: &GradedMap<F>, reach: i64) -> GradedMap<F> {
        let known = |k: i64| self.contains(k) || self.vanishes(k);
        let mut out = g.clone();
        for k in self.k_min - reach..=self.k_max + reach {
            let t = k + g.degree;
            if out.block(k).is_none() && known(k) && known(t) && (self.vanishes(k) || self.vanishes(t)) {
                out.insert(k, Matrix::zeros(self.dim(t), self.dim(k)));
            }
        }
        out
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Pads the window with zero-dimensional weight spaces.
    pub fn widen(&self, lo: i64, hi: i64) -> Self {
        let k_min = lo.min(self.k_min);
        let k_max = hi.max(self.k_max);
        let dims: Vec<usize> = (k_min..=k_max).map(|k| self.dim(k)).collect();
        let mut e = self.e.clone();
        let mut f = self.f.clone();
        for k in k_min..k_max {
            e.entry(k).or_insert_with(|| Matrix::zeros(self.dim(k + 1), self.dim(k)));
            f.entry(k + 1).or_insert_with(|| Matrix::zeros(self.dim(k), self.dim(k + 1)));
        }
        WeightModule { anchor: self.anchor.clone(), k_min, k_max, dims, e, f, kind: self.kind.clone() }
    }

    /// Restriction to a sub-window; the result is a plain (custom) module.
    pub fn restrict(&self, lo: i64, hi: i64) -> Result<Self> {
        if lo < self.k_min || hi > self.k_max || lo > hi {
            return Err(Error::WindowMismatch(format!("[{lo}, {hi}] not inside [{}, {}]", self.k_min, self.k_max)));
        }
        Self::from_fn(
            self.anchor.clone(),
            lo,
            hi,
            |k| self.dim(k),
            |k| self.e[&k].clone(),
            |k| self.f[&k].clone(),
            Kind::Custom,
        )
    }

    /// Casimir c = (h+1)² + 4fe on indices where e then f stay in the window.
    pub fn casimir(&self) -> GradedMap<F> {
        let mut g = GradedMap::new(0);
        for k in self.k_min..self.k_max {
            let w1 = self.weight(k).plus(&F::one());
            let fe = self.f[&(k + 1)].mul(&self.e[&k]);
            g.insert(k, fe.scale(&F::from_int(4)).add_scalar(&w1.times(&w1)));
        }
        g
    }

    /// Module with f̂ = −e, ê = −f, ĥ = −h; index k becomes −k.
    pub fn chevalley_dual(&self) -> Self {
        let k_min = -self.k_max;
        let dims: Vec<usize> = self.dims.iter().rev().copied().collect();
        let e = self.f.iter().map(|(&k, m)| (-k, m.neg())).collect();
        let f = self.e.iter().map(|(&k, m)| (-k, m.neg())).collect();
        WeightModule { anchor: self.anchor.negate(), k_min, k_max: -self.k_min, dims, e, f, kind: Kind::Custom }
    }

    /// [e,f] = h on every index where both composites stay in the window.
    pub fn verify_sl2(&self) -> Report {
        let mut r = Report::new();
        if self.k_max - self.k_min >= 2 {
            r.check("[e,f]=h", Some((self.k_min + 1, self.k_max - 1)));
        }
        for k in self.k_min + 1..self.k_max {
            let ef = self.e[&(k - 1)].mul(&self.f[&k]);
            let fe = self.f[&(k + 1)].mul(&self.e[&k]);
            let res = ef.sub(&fe).add_scalar(&self.weight(k).negate());
            if !res.is_zero() {
                r.fail("[e,f]-h", k, res);
            }
        }
        r
    }

    /// True iff phi commutes with e and f wherever both sides are defined.
    pub fn verify_morphism(&self, target: &Self, phi: &GradedMap<F>) -> Result<bool> {
        if phi.degree != 0 {
            return Err(Error::WindowMismatch("morphism must have degree 0".into()));
        }
        if self.anchor != target.anchor {
            return Err(Error::WindowMismatch("modules have different anchors".into()));
        }
        for (&k, p) in &phi.blocks {
            if p.shape() != (target.dim(k), self.dim(k)) {
                return Err(Error::WindowMismatch(format!("block {k} has the wrong shape")));
            }
        }
        let ok = |src: &GradedMap<F>, dst: &GradedMap<F>| {
            let lhs = phi.compose(src);
            let rhs = dst.compose(phi);
            lhs.blocks.iter().all(|(k, a)| rhs.block(*k).is_none_or(|b| a == b))
        };
        Ok(ok(&self.e_map(), &target.e_map()) && ok(&self.f_map(), &target.f_map()))
    }
}
