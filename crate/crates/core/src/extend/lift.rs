use crate::error::{Error, Result};
use crate::scalar::{solve_linear, AffineSolutionSet, Field, LinearSolution, Matrix};
use crate::weightmod::{GradedMap, WeightModule};

use super::action::Side;
use super::cert::{InfeasibilityCertificate, Stage, Witness};

#[derive(Clone, Debug, PartialEq)]
struct Slot {
    k: i64,
    rows: usize,
    cols: usize,
    offset: usize,
}

/// The affine family of degree ±2 maps solving the linear lift equation.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftFamily<F> {
    pub side: Side,
    slots: Vec<Slot>,
    pub solution: AffineSolutionSet<F>,
}

pub enum Lift<F> {
    Family(LiftFamily<F>),
    Inconsistent(InfeasibilityCertificate<F>),
}

impl<F: Field> Lift<F> {
    pub fn family(self) -> Option<LiftFamily<F>> {
        match self {
            Lift::Family(f) => Some(f),
            Lift::Inconsistent(_) => None,
        }
    }
}

impl<F: Field> LiftFamily<F> {
    pub fn dim(&self) -> usize {
        self.solution.dim()
    }

    pub fn unknowns(&self) -> usize {
        self.solution.particular.len()
    }

    fn assemble(&self, x: &[F]) -> GradedMap<F> {
        let mut g = GradedMap::new(self.side.degree());
        for s in &self.slots {
            let data = x[s.offset..s.offset + s.rows * s.cols].to_vec();
            g.insert(s.k, Matrix::from_vec(s.rows, s.cols, data));
        }
        g
    }

    pub fn particular(&self) -> GradedMap<F> {
        self.assemble(&self.solution.particular)
    }

    /// Homogeneous direction number i.
    pub fn direction(&self, i: usize) -> GradedMap<F> {
        self.assemble(&self.solution.basis[i])
    }

    pub fn directions(&self) -> Vec<GradedMap<F>> {
        (0..self.dim()).map(|i| self.direction(i)).collect()
    }

    pub fn member(&self, params: &[F]) -> GradedMap<F> {
        self.assemble(&self.solution.point(params))
    }
}

/// The operator Y and right-hand side of the lift equation [Y, U] = rhs:
/// [f, T] = 3e for side gt and [e, S] = −3f for side lt.
pub fn lift_data<F: Field>(m: &WeightModule<F>, side: Side) -> (GradedMap<F>, GradedMap<F>) {
    match side {
        Side::Gt => (m.f_map(), m.e_map().scale(&F::from_int(3))),
        Side::Lt => (m.e_map(), m.f_map().scale(&F::from_int(-3))),
    }
}

/// [Y, U] − rhs on every index where it is defined.
pub fn linear_residual<F: Field>(m: &WeightModule<F>, side: Side, u: &GradedMap<F>) -> GradedMap<F> {
    let (y, rhs) = lift_data(m, side);
    y.commutator(u).sub(&rhs)
}

/// Solves [f, T] = 3e (gt) or [e, S] = −3f (lt) as one global linear
/// system over all blocks of the window.
pub fn lift_linear<F: Field>(m: &WeightModule<F>, side: Side) -> Result<Lift<F>> {
    lift_linear_fixed(m, side, &GradedMap::new(side.degree()))
}

/// As [`lift_linear`], with the blocks of `fixed` imposed as extra equations.
pub fn lift_linear_fixed<F: Field>(m: &WeightModule<F>, side: Side, fixed: &GradedMap<F>) -> Result<Lift<F>> {
    let d = side.degree();
    let (y, rhs) = lift_data(m, side);
    let a = y.degree;
    let mut slots = Vec::new();
    let mut n = 0;
    for k in m.k_min..=m.k_max {
        if m.contains(k + d) {
            let (rows, cols) = (m.dim(k + d), m.dim(k));
            slots.push(Slot { k, rows, cols, offset: n });
            n += rows * cols;
        }
    }
    let slot = |k: i64| slots.iter().find(|s| s.k == k);
    let mut eqs: Vec<(Vec<(usize, F)>, F)> = Vec::new();
    let mut constrained = 0;
    for k in m.k_min..=m.k_max {
        let (Some(y_hi), Some(y_lo), Some(u_k), Some(u_a)) = (y.block(k + d), y.block(k), slot(k), slot(k + a)) else {
            continue;
        };
        constrained += 1;
        let r_blk = rhs.block(k).expect("rhs defined wherever y is");
        // (Y_{k+d} U_k − U_{k+a} Y_k)[r, c] = rhs_k[r, c]
        for r in 0..y_hi.rows() {
            for c in 0..u_k.cols {
                let mut row = Vec::new();
                for s in 0..u_k.rows {
                    let v = y_hi.get(r, s);
                    if !v.is_zero() {
                        row.push((u_k.offset + s * u_k.cols + c, v.clone()));
                    }
                }
                for s in 0..u_a.cols {
                    let v = y_lo.get(s, c);
                    if !v.is_zero() {
                        row.push((u_a.offset + r * u_a.cols + s, v.negate()));
                    }
                }
                eqs.push((row, r_blk.get(r, c).clone()));
            }
        }
    }
    if constrained == 0 {
        return Err(Error::EmptyInterior);
    }
    for (&k, b) in &fixed.blocks {
        let s = slot(k).ok_or_else(|| Error::WindowMismatch(format!("no slot at index {k}")))?;
        if b.shape() != (s.rows, s.cols) {
            return Err(Error::ShapeMismatch(format!("fixed block at {k}")));
        }
        for r in 0..s.rows {
            for c in 0..s.cols {
                eqs.push((vec![(s.offset + r * s.cols + c, F::one())], b.get(r, c).clone()));
            }
        }
    }
    let mut mat: Matrix<F> = Matrix::zeros(eqs.len(), n);
    let mut vec = Vec::with_capacity(eqs.len());
    for (i, (row, v)) in eqs.into_iter().enumerate() {
        for (c, x) in row {
            let cur = mat.get(i, c).plus(&x);
            mat.set(i, c, cur);
        }
        vec.push(v);
    }
    Ok(match solve_linear(&mat, &vec) {
        LinearSolution::Solved(solution) => Lift::Family(LiftFamily { side, slots, solution }),
        LinearSolution::Inconsistent(w) => Lift::Inconsistent(InfeasibilityCertificate {
            stage: Stage::LinearLift,
            witness: Witness::Linear { matrix: mat, rhs: vec, combination: w.combination, value: w.value },
            note: format!("{} lift equation has no solution on the window", side_name(side)),
        }),
    })
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Gt => "gt",
        Side::Lt => "lt",
    }
}
