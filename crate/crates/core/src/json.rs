//! Exact JSON for scalars, matrices, modules, actions and reports. Every
//! field element is written as strings; indices and shapes are integers.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::extend::{Algebra, Branch, InfeasibilityCertificate, QPoly, Witness, WittAction};
use crate::report::Report;
use crate::scalar::field::{fmt_rational, parse_rational};
use crate::scalar::{Matrix, QuadScalar, Rational};
use crate::weightmod::{GradedMap, Kind, WeightModule};

type Q = QuadScalar;

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON: {what}"))
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

pub fn scalar_json(x: &Q) -> Value {
    json!({"a": fmt_rational(x.a()), "b": fmt_rational(x.b()), "d": x.d().to_string()})
}

pub fn scalar_from_json(v: &Value) -> Result<Q> {
    if let Some(s) = v.as_str() {
        return Q::parse(s);
    }
    let field = |k: &str| v.get(k).and_then(Value::as_str).ok_or_else(|| bad(k));
    let a = parse_rational(field("a")?).ok_or_else(|| bad("a"))?;
    let b = parse_rational(field("b")?).ok_or_else(|| bad("b"))?;
    let d: i64 = field("d")?.parse().map_err(|_| bad("d"))?;
    Q::new(a, b, d)
}

pub fn matrix_json(m: &Matrix<Q>) -> Value {
    json!({"rows": m.rows(), "cols": m.cols(), "entries": m.entries().iter().map(scalar_json).collect::<Vec<_>>()})
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix<Q>> {
    let n = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| bad(k)).map(|x| x as usize);
    let (r, c) = (n("rows")?, n("cols")?);
    let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("entries"))?;
    if entries.len() != r * c {
        return Err(Error::ShapeMismatch(format!("{} entries for a {r}x{c} matrix", entries.len())));
    }
    Ok(Matrix::from_vec(r, c, entries.iter().map(scalar_from_json).collect::<Result<_>>()?))
}

fn blocks_json(b: &BTreeMap<i64, Matrix<Q>>) -> Value {
    Value::Object(b.iter().map(|(k, m)| (k.to_string(), matrix_json(m))).collect())
}

fn blocks_from_json(v: &Value) -> Result<BTreeMap<i64, Matrix<Q>>> {
    let obj = v.as_object().ok_or_else(|| bad("block map"))?;
    obj.iter().map(|(k, m)| Ok((k.parse().map_err(|_| bad("index"))?, matrix_from_json(m)?))).collect()
}

pub fn graded_json(g: &GradedMap<Q>) -> Value {
    json!({"degree": g.degree, "blocks": blocks_json(&g.blocks)})
}

pub fn graded_from_json(v: &Value) -> Result<GradedMap<Q>> {
    let degree = v.get("degree").and_then(Value::as_i64).ok_or_else(|| bad("degree"))?;
    Ok(GradedMap::with_blocks(degree, blocks_from_json(v.get("blocks").ok_or_else(|| bad("blocks"))?)?))
}

fn params_json(kind: &Kind<Q>) -> Value {
    match kind {
        Kind::Dense { tau } => json!({"tau": scalar_json(tau)}),
        Kind::Verma { lambda } | Kind::Lowest { lambda } => json!({"lambda": scalar_json(lambda)}),
        Kind::Finite { n } => json!({"n": n}),
        Kind::Generalized { tau, n } => json!({"tau": scalar_json(tau), "nil": matrix_json(n)}),
        Kind::Counterexample { lambda, printed } => json!({"lambda": scalar_json(lambda), "printed": printed}),
        Kind::Intermediate { a, b } => json!({"a": scalar_json(a), "b": scalar_json(b)}),
        Kind::Custom => json!({}),
    }
}

fn kind_from_json(name: &str, p: &Value) -> Result<Kind<Q>> {
    let s = |k: &str| p.get(k).ok_or_else(|| bad(k)).and_then(scalar_from_json);
    Ok(match name {
        "dense" => Kind::Dense { tau: s("tau")? },
        "verma" => Kind::Verma { lambda: s("lambda")? },
        "lowest" => Kind::Lowest { lambda: s("lambda")? },
        "finite" => Kind::Finite { n: p.get("n").and_then(Value::as_u64).ok_or_else(|| bad("n"))? as u32 },
        "generalized" => Kind::Generalized { tau: s("tau")?, n: matrix_from_json(p.get("nil").ok_or_else(|| bad("nil"))?)? },
        "counterexample" => Kind::Counterexample {
            lambda: s("lambda")?,
            printed: p.get("printed").and_then(Value::as_bool).ok_or_else(|| bad("printed"))?,
        },
        "intermediate" => Kind::Intermediate { a: s("a")?, b: s("b")? },
        "custom" => Kind::Custom,
        other => return Err(bad(&format!("kind {other}"))),
    })
}

pub fn module_json(m: &WeightModule<Q>) -> Value {
    let dims: Map<String, Value> = (m.k_min..=m.k_max).map(|k| (k.to_string(), json!(m.dim(k)))).collect();
    let e: BTreeMap<i64, Matrix<Q>> = (m.k_min..m.k_max).map(|k| (k, m.e_block(k).unwrap().clone())).collect();
    let f: BTreeMap<i64, Matrix<Q>> = (m.k_min + 1..=m.k_max).map(|k| (k, m.f_block(k).unwrap().clone())).collect();
    json!({
        "anchor": scalar_json(&m.anchor),
        "k_min": m.k_min,
        "k_max": m.k_max,
        "dims": dims,
        "e": blocks_json(&e),
        "f": blocks_json(&f),
        "kind": m.kind.name(),
        "params": params_json(&m.kind),
    })
}

pub fn module_from_json(v: &Value) -> Result<WeightModule<Q>> {
    let anchor = scalar_from_json(v.get("anchor").ok_or_else(|| bad("anchor"))?)?;
    let int = |k: &str| v.get(k).and_then(Value::as_i64).ok_or_else(|| bad(k));
    let (k_min, k_max) = (int("k_min")?, int("k_max")?);
    if k_min > k_max {
        return Err(Error::WindowMismatch(format!("empty window [{k_min}, {k_max}]")));
    }
    let dims_obj = v.get("dims").and_then(Value::as_object).ok_or_else(|| bad("dims"))?;
    let dims = (k_min..=k_max)
        .map(|k| dims_obj.get(&k.to_string()).and_then(Value::as_u64).map(|d| d as usize).ok_or_else(|| bad("dims")))
        .collect::<Result<Vec<_>>>()?;
    let e = blocks_from_json(v.get("e").ok_or_else(|| bad("e"))?)?;
    let f = blocks_from_json(v.get("f").ok_or_else(|| bad("f"))?)?;
    let kind = kind_from_json(
        v.get("kind").and_then(Value::as_str).ok_or_else(|| bad("kind"))?,
        v.get("params").unwrap_or(&Value::Null),
    )?;
    WeightModule::from_parts(anchor, k_min, dims, e, f, kind)
}

pub fn action_json(a: &WittAction<Q>) -> Value {
    let (lo, hi) = a.range();
    let ops: Map<String, Value> = a.ops.iter().map(|(i, g)| (i.to_string(), graded_json(g))).collect();
    let mut v = json!({
        "module": module_json(&a.module),
        "algebra": a.algebra.name(),
        "range": [lo, hi],
        "ops": ops,
        "branch": a.branch.symbol(),
    });
    if let Some(k) = &a.central {
        v["central"] = graded_json(k);
    }
    v
}

pub fn action_from_json(v: &Value) -> Result<WittAction<Q>> {
    let module = module_from_json(v.get("module").ok_or_else(|| bad("module"))?)?;
    let algebra = Algebra::parse(v.get("algebra").and_then(Value::as_str).ok_or_else(|| bad("algebra"))?)?;
    let branch = Branch::parse(v.get("branch").and_then(Value::as_str).unwrap_or("n/a"))?;
    let mut a = WittAction::new(module, algebra, branch);
    for (i, g) in v.get("ops").and_then(Value::as_object).ok_or_else(|| bad("ops"))? {
        a.ops.insert(i.parse().map_err(|_| bad("op index"))?, graded_from_json(g)?);
    }
    if let Some(k) = v.get("central") {
        a.central = Some(graded_from_json(k)?);
    }
    Ok(a)
}

fn vec_json(v: &[Q]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

fn qpoly_json(p: &QPoly<Q>) -> Value {
    json!({
        "constant": scalar_json(&p.constant),
        "linear": vec_json(&p.linear),
        "quadratic": p.quad.iter().map(|r| vec_json(r)).collect::<Vec<_>>(),
    })
}

pub fn certificate_json(c: &InfeasibilityCertificate<Q>) -> Value {
    let witness = match &c.witness {
        Witness::Linear { matrix, rhs, combination, value } => json!({
            "type": "linear", "matrix": matrix_json(matrix), "rhs": vec_json(rhs),
            "combination": vec_json(combination), "value": scalar_json(value),
        }),
        Witness::Polynomial { equations, combination, value } => json!({
            "type": "polynomial", "equations": equations.iter().map(qpoly_json).collect::<Vec<_>>(),
            "combination": vec_json(combination), "value": scalar_json(value),
        }),
        Witness::Boundary { families } => json!({
            "type": "boundary",
            "families": families.iter().map(|f| json!({
                "branch": f.branch.symbol(), "k": f.k, "matrix": matrix_json(&f.matrix), "rhs": vec_json(&f.rhs),
                "combination": vec_json(&f.combination), "value": scalar_json(&f.value),
                "pairs": f.pairs.iter().map(|(l, r)| json!([scalar_json(l), scalar_json(r)])).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }),
    };
    json!({"stage": c.stage.name(), "witness": witness, "note": c.note, "replays": c.replay()})
}

/// {"status", "checked": [[label, k_range], ...], "residuals", "certificate"?}
pub fn report_json(status: &str, r: &Report, cert: Option<&InfeasibilityCertificate<Q>>) -> Value {
    let checked: Vec<Value> = r.checked.iter().map(|c| json!([c.label, c.k_range.map(|(a, b)| vec![a, b])])).collect();
    let residuals: Vec<Value> =
        r.residuals.iter().map(|x| json!({"label": x.label, "k": x.k, "value": x.value})).collect();
    let mut v = json!({"status": status, "pass": r.pass, "checked": checked, "residuals": residuals});
    if !r.notes.is_empty() {
        v["notes"] = json!(r.notes);
    }
    if let Some(c) = cert {
        v["certificate"] = certificate_json(c);
    }
    v
}
