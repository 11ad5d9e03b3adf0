use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{rat, Field};
use crate::weightmod::{GradedMap, WeightModule};

/// Which subalgebra an action represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Gt,
    Lt,
    Full,
    Vir,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::Gt => "gt",
            Algebra::Lt => "lt",
            Algebra::Full => "full",
            Algebra::Vir => "vir",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "gt" => Ok(Algebra::Gt),
            "lt" => Ok(Algebra::Lt),
            "full" => Ok(Algebra::Full),
            "vir" => Ok(Algebra::Vir),
            _ => Err(Error::Parse(format!("unknown algebra {s}"))),
        }
    }

    /// Generator indices covered at the given depth.
    pub fn range(self, depth: i64) -> (i64, i64) {
        match self {
            Algebra::Gt => (-1, depth.max(1)),
            Algebra::Lt => (-depth.max(1), 1),
            Algebra::Full | Algebra::Vir => (-depth.max(1), depth.max(1)),
        }
    }
}

/// Half of a Witt extension problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Gt,
    Lt,
}

impl Side {
    /// Degree of the unknown operator, T = ρ(L_2) or S = ρ(L_−2).
    pub fn degree(self) -> i64 {
        match self {
            Side::Gt => 2,
            Side::Lt => -2,
        }
    }

    pub fn algebra(self) -> Algebra {
        match self {
            Side::Gt => Algebra::Gt,
            Side::Lt => Algebra::Lt,
        }
    }
}

/// "+" is always the +√τ (or +√c) root of the displayed formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
    NotApplicable,
}

impl Branch {
    pub fn sign<F: Field>(self) -> F {
        match self {
            Branch::Minus => F::one().negate(),
            _ => F::one(),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
            Branch::NotApplicable => "n/a",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Branch::Plus),
            "-" | "minus" => Ok(Branch::Minus),
            "n/a" => Ok(Branch::NotApplicable),
            _ => Err(Error::Parse(format!("unknown branch {s}"))),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// ρ(L_i) for i in a range, stored as graded maps of index shift i.
#[derive(Clone, Debug, PartialEq)]
pub struct WittAction<F> {
    pub module: WeightModule<F>,
    pub algebra: Algebra,
    pub branch: Branch,
    pub ops: BTreeMap<i64, GradedMap<F>>,
    pub central: Option<GradedMap<F>>,
}

/// The three operators every action must restrict to: L_−1, L_0, L_1.
pub fn sl2_ops<F: Field>(m: &WeightModule<F>) -> [(i64, GradedMap<F>); 3] {
    let half = F::from_rational(rat(-1, 2));
    [(-1, m.f_map()), (0, m.h_map().scale(&half)), (1, m.e_map().neg())]
}

impl<F: Field> WittAction<F> {
    pub fn new(module: WeightModule<F>, algebra: Algebra, branch: Branch) -> Self {
        WittAction { module, algebra, branch, ops: BTreeMap::new(), central: None }
    }

    pub fn range(&self) -> (i64, i64) {
        let lo = self.ops.keys().next().copied().unwrap_or(0);
        let hi = self.ops.keys().next_back().copied().unwrap_or(0);
        (lo, hi)
    }

    pub fn op(&self, i: i64) -> Option<&GradedMap<F>> {
        self.ops.get(&i)
    }

    /// Depth implied by the stored range.
    pub fn depth(&self) -> i64 {
        let (lo, hi) = self.range();
        lo.abs().max(hi)
    }

    /// ρ(L_−1) = f, ρ(L_0) = −½h, ρ(L_1) = −e blockwise.
    pub fn restriction_check(&self) -> Report {
        let mut r = Report::new();
        for (i, want) in sl2_ops(&self.module) {
            let label = format!("L_{i}=sl2");
            let Some(have) = self.op(i) else {
                r.fail(label, 0, "missing");
                continue;
            };
            r.check(label.clone(), have.span());
            for (&k, b) in &want.blocks {
                match have.block(k) {
                    Some(a) if a == b => {}
                    Some(a) => r.fail(label.clone(), k, a.sub(b)),
                    None => r.fail(label.clone(), k, "missing block"),
                }
            }
        }
        r
    }

    /// Exact check of [ρ(L_i), ρ(L_j)] = (i−j)ρ(L_{i+j}) (plus the
    /// Virasoro cocycle when a central operator is stored) on every index
    /// where all factors are defined, for |i|, |j|, |i+j| ≤ depth.
    pub fn verify_bracket(&self, depth: i64) -> Report {
        let mut r = self.restriction_check();
        let idx: Vec<i64> = self.ops.keys().copied().filter(|i| i.abs() <= depth).collect();
        let reach = 2 * depth;
        let ops: BTreeMap<i64, GradedMap<F>> = idx.iter().map(|&i| (i, self.module.pad(&self.ops[&i], reach))).collect();
        let central = self.central.as_ref().map(|k| self.module.pad(k, reach));
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                let s = i + j;
                if s.abs() > depth {
                    continue;
                }
                let Some(target) = ops.get(&s) else { continue };
                let comm = ops[&i].commutator(&ops[&j]);
                let mut rhs = target.scale(&F::from_int(i - j));
                if let (Some(k), 0) = (&central, s) {
                    let c = F::from_rational(rat(i * i * i - i, 12));
                    rhs = rhs.add(&k.scale(&c));
                }
                let keys: Vec<i64> = comm.indices().filter(|k| rhs.block(*k).is_some()).collect();
                let (Some(&lo), Some(&hi)) = (keys.first(), keys.last()) else { continue };
                let label = format!("({i},{j})");
                r.check(label.clone(), Some((lo, hi)));
                for k in keys {
                    let res = comm.blocks[&k].sub(&rhs.blocks[&k]);
                    if !res.is_zero() {
                        r.fail(label.clone(), k, res);
                    }
                }
            }
        }
        if let Some(k) = &central {
            for &i in &idx {
                let comm = k.commutator(&ops[&i]);
                let label = format!("[K,L_{i}]");
                if let Some(span) = comm.span() {
                    r.check(label.clone(), Some(span));
                }
                for (kk, b) in &comm.blocks {
                    if !b.is_zero() {
                        r.fail(label.clone(), *kk, b);
                    }
                }
            }
        }
        r
    }
}

/// Builds ρ(L_i) for |i| ≤ depth from T = ρ(L_2) (side gt) or
/// S = ρ(L_−2) (side lt) by the recursions
/// ρ(L_i) = (1/(i−2))[e, ρ(L_{i−1})] and ρ(L_i) = −(1/(i+2))[f, ρ(L_{i+1})].
pub fn extend_action<F: Field>(m: &WeightModule<F>, u: &GradedMap<F>, side: Side, depth: i64) -> Result<WittAction<F>> {
    if u.degree != side.degree() {
        return Err(Error::ShapeMismatch(format!("operator must have degree {}", side.degree())));
    }
    let mut a = WittAction::new(m.clone(), side.algebra(), Branch::NotApplicable);
    for (i, op) in sl2_ops(m) {
        a.ops.insert(i, op);
    }
    if depth < 2 {
        return Ok(a);
    }
    a.ops.insert(side.degree(), u.clone());
    let (raise, sign) = match side {
        Side::Gt => (m.e_map(), 1),
        Side::Lt => (m.f_map(), -1),
    };
    let mut prev = u.clone();
    for n in 3..=depth {
        let i = sign * n;
        // both recursions reduce to the factor 1/(n−2) at i = ±n
        let c = F::from_rational(rat(1, n - 2));
        let next = raise.commutator(&prev).scale(&c);
        if next.blocks.is_empty() {
            return Err(Error::DepthExceedsWindow(depth));
        }
        a.ops.insert(i, next.clone());
        prev = next;
    }
    Ok(a)
}
