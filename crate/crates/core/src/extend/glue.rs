use std::fmt;

use crate::report::Report;
use crate::scalar::Field;
use crate::weightmod::GradedMap;

use super::action::{Algebra, Branch, WittAction};

#[derive(Clone, Debug, PartialEq)]
pub enum GlueError<F> {
    ModuleMismatch,
    /// The two halves have the wrong tags or lack L_±2.
    WrongAlgebra(String),
    OverlapDisagreement { i: i64, k: i64 },
    /// [S,T] − 2σ(h), nonzero somewhere.
    Residual(GradedMap<F>),
    /// K = 4σ(h) − 2[S,T] together with [K,S] and [K,T].
    CentralityFailure { k: GradedMap<F>, ks: GradedMap<F>, kt: GradedMap<F> },
}

impl<F: Field> fmt::Display for GlueError<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlueError::ModuleMismatch => write!(f, "actions live on different modules"),
            GlueError::WrongAlgebra(s) => write!(f, "{s}"),
            GlueError::OverlapDisagreement { i, k } => write!(f, "actions disagree on L_{i} at index {k}"),
            GlueError::Residual(r) => write!(f, "[S,T] - 2h is nonzero at indices {:?}", r.nonzero_indices()),
            GlueError::CentralityFailure { ks, kt, .. } => write!(
                f,
                "K is not central: [K,S] nonzero at {:?}, [K,T] nonzero at {:?}",
                ks.nonzero_indices(),
                kt.nonzero_indices()
            ),
        }
    }
}

impl<F> GlueError<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            GlueError::ModuleMismatch => "ModuleMismatch",
            GlueError::WrongAlgebra(_) => "WrongAlgebra",
            GlueError::OverlapDisagreement { .. } => "OverlapDisagreement",
            GlueError::Residual(_) => "GlueResidual",
            GlueError::CentralityFailure { .. } => "CentralityFailure",
        }
    }
}

/// A successful gluing, with the bracket check of the combined action.
#[derive(Clone, Debug, PartialEq)]
pub struct Glued<F> {
    pub action: WittAction<F>,
    pub report: Report,
}

fn halves<'a, F: Field>(
    lt: &'a WittAction<F>,
    gt: &'a WittAction<F>,
) -> Result<(&'a GradedMap<F>, &'a GradedMap<F>), GlueError<F>> {
    if lt.module != gt.module {
        return Err(GlueError::ModuleMismatch);
    }
    if lt.algebra != Algebra::Lt || gt.algebra != Algebra::Gt {
        return Err(GlueError::WrongAlgebra("glue expects an lt action and a gt action".into()));
    }
    for i in -1..=1 {
        let (Some(a), Some(b)) = (lt.op(i), gt.op(i)) else {
            return Err(GlueError::WrongAlgebra(format!("L_{i} missing")));
        };
        for (&k, x) in &a.blocks {
            if b.block(k).is_some_and(|y| y != x) {
                return Err(GlueError::OverlapDisagreement { i, k });
            }
        }
    }
    let s = lt.op(-2).ok_or_else(|| GlueError::WrongAlgebra("lt action lacks L_-2".into()))?;
    let t = gt.op(2).ok_or_else(|| GlueError::WrongAlgebra("gt action lacks L_2".into()))?;
    Ok((s, t))
}

fn union<F: Field>(lt: &WittAction<F>, gt: &WittAction<F>, algebra: Algebra) -> WittAction<F> {
    let branch = if lt.branch == gt.branch { lt.branch } else { Branch::NotApplicable };
    let mut a = WittAction::new(gt.module.clone(), algebra, branch);
    for (&i, g) in &lt.ops {
        a.ops.insert(i, g.clone());
    }
    for (&i, g) in &gt.ops {
        a.ops.entry(i).or_insert_with(|| g.clone());
    }
    a
}

/// Witt gluing: succeeds iff [S,T] = 2σ(h) wherever it is defined.
pub fn glue_witt<F: Field>(lt: &WittAction<F>, gt: &WittAction<F>) -> Result<Glued<F>, GlueError<F>> {
    let (s, t) = halves(lt, gt)?;
    let m = &gt.module;
    let (s, t, h) = (m.pad(s, 4), m.pad(t, 4), m.pad(&m.h_map(), 4));
    let res = s.commutator(&t).sub(&h.scale(&F::from_int(2))).restrict(|k| m.contains(k));
    if !res.is_zero() {
        return Err(GlueError::Residual(res));
    }
    let action = union(lt, gt, Algebra::Full);
    let report = action.verify_bracket(action.depth());
    Ok(Glued { action, report })
}

/// Virasoro gluing: K = 4σ(h) − 2[S,T] must commute with S and T; then K
/// is stored as the central operator and the full centrally extended
/// bracket is verified.
pub fn glue_vir<F: Field>(lt: &WittAction<F>, gt: &WittAction<F>) -> Result<Glued<F>, GlueError<F>> {
    let (s, t) = halves(lt, gt)?;
    let m = &gt.module;
    let (s, t, h) = (m.pad(s, 4), m.pad(t, 4), m.pad(&m.h_map(), 4));
    let inside = |g: GradedMap<F>| g.restrict(|k| m.contains(k));
    let k = h.scale(&F::from_int(4)).sub(&s.commutator(&t).scale(&F::from_int(2)));
    let ks = inside(k.commutator(&s));
    let kt = inside(k.commutator(&t));
    let k = inside(k);
    if !ks.is_zero() || !kt.is_zero() {
        return Err(GlueError::CentralityFailure { k, ks, kt });
    }
    let mut action = union(lt, gt, Algebra::Vir);
    action.central = Some(k);
    let report = action.verify_bracket(action.depth());
    Ok(Glued { action, report })
}
