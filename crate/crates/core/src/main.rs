use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use wittext::driver::{self, exit_code, Method, ModuleSpec};
use wittext::extend::{glue_vir, glue_witt, Algebra, Branch};
use wittext::freelie::{self, FreeLie};
use wittext::json::{action_from_json, action_json, module_from_json, module_json, rational_json, report_json};
use wittext::reproduce;
use wittext::scalar::QuadScalar;

const USAGE: u8 = 1;
const IO: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "wittext", version, about = "Exact Witt and Virasoro extensions of sl(2) weight modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a catalog module and write it as JSON.
    Module(ModuleArgs),
    /// Extend a module to gt, lt, full or vir.
    Extend(ExtendArgs),
    /// Check the bracket relations of a stored action.
    Verify(VerifyArgs),
    /// Glue an lt action and a gt action.
    Glue(GlueArgs),
    /// Free Lie algebra checks.
    Freelie {
        #[command(subcommand)]
        cmd: FreeCmd,
    },
    /// Run acceptance suites.
    Reproduce {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Args, Debug)]
struct ModuleArgs {
    #[arg(long)]
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    anchor: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    /// Strictly upper triangular N as "r0c0,r0c1;r1c0,r1c1".
    #[arg(long, allow_hyphen_values = true)]
    nil: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    kmin: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    kmax: Option<i64>,
    /// Number of basis vectors for verma and lowest.
    #[arg(long)]
    depth: Option<i64>,
    /// Counterexample with the typeset (non-module) layout.
    #[arg(long)]
    printed: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExtendArgs {
    #[arg(long)]
    module: PathBuf,
    #[arg(long, default_value = "gt")]
    side: String,
    #[arg(long, default_value = "auto")]
    branch: String,
    #[arg(long)]
    depth: Option<i64>,
    #[arg(long, default_value = "closed")]
    method: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    action: PathBuf,
    #[arg(long)]
    depth: Option<i64>,
}

#[derive(Args, Debug)]
struct GlueArgs {
    #[arg(long)]
    lt: PathBuf,
    #[arg(long)]
    gt: PathBuf,
    /// Virasoro gluing with a central operator.
    #[arg(long)]
    vir: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum FreeCmd {
    /// dim R_n with bases.
    Dims {
        #[arg(long, default_value_t = 13)]
        max: usize,
    },
    /// Matrices of e and f on the relation spaces.
    Maps {
        #[arg(long, default_value_t = 12)]
        max: usize,
    },
    /// Ideal membership.
    Member {
        #[arg(long)]
        target: String,
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
        #[arg(long, default_value_t = 9)]
        max: usize,
    },
}

enum Fail {
    Usage(String),
    Io(String),
}

impl From<wittext::Error> for Fail {
    fn from(e: wittext::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

fn default_depth(flag: Option<i64>) -> i64 {
    flag.or_else(|| std::env::var("WITTEXT_DEPTH").ok()?.parse().ok()).unwrap_or(6)
}

fn scalar(s: &Option<String>) -> Result<Option<QuadScalar>, Fail> {
    s.as_deref().map(QuadScalar::parse).transpose().map_err(Fail::from)
}

fn read_json(p: &Path) -> Result<Value, Fail> {
    let s = std::fs::read_to_string(p).map_err(|e| Fail::Io(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&s).map_err(|e| Fail::Io(format!("{}: {e}", p.display())))
}

fn write_json(p: &Path, v: &Value) -> Result<(), Fail> {
    let s = serde_json::to_string_pretty(v).expect("serializable");
    std::fs::write(p, s + "\n").map_err(|e| Fail::Io(format!("{}: {e}", p.display())))
}

fn branch_flag(s: &str) -> Result<Option<Branch>, Fail> {
    if s == "auto" {
        Ok(None)
    } else {
        Ok(Some(Branch::parse(s)?))
    }
}

fn module_cmd(a: &ModuleArgs) -> Result<(Value, i32), Fail> {
    let spec = ModuleSpec {
        kind: a.kind.clone(),
        anchor: scalar(&a.anchor)?,
        tau: scalar(&a.tau)?,
        lambda: scalar(&a.lambda)?,
        a: scalar(&a.a)?,
        b: scalar(&a.b)?,
        n: a.n,
        nil: a.nil.as_deref().map(driver::parse_matrix).transpose()?,
        k_min: a.kmin,
        k_max: a.kmax,
        depth: a.depth,
        printed: a.printed,
    };
    let m = driver::build_module(&spec)?;
    let mj = module_json(&m);
    let Some(out) = &a.output else { return Ok((mj, 0)) };
    write_json(out, &mj)?;
    let sl2 = m.verify_sl2();
    let summary = json!({
        "written": out.display().to_string(),
        "kind": m.kind.name(),
        "window": [m.k_min, m.k_max],
        "support": (m.k_min..=m.k_max).filter(|&k| m.dim(k) > 0).collect::<Vec<_>>(),
        "total_dim": m.total_dim(),
        "sl2": report_json(if sl2.pass { "Pass" } else { "Failed" }, &sl2, None),
    });
    Ok((summary, 0))
}

fn extend_cmd(a: &ExtendArgs) -> Result<(Value, i32), Fail> {
    let m = module_from_json(&read_json(&a.module)?)?;
    let alg = Algebra::parse(&a.side)?;
    let depth = default_depth(a.depth);
    let r = driver::run_extend(&m, alg, branch_flag(&a.branch)?, depth, Method::parse(&a.method)?)?;
    if let (Some(p), Some(act)) = (&a.output, r.first_action_json()) {
        write_json(p, &act)?;
    }
    let mut v = r.to_json();
    v["depth"] = json!(depth);
    Ok((v, exit_code(r.status)))
}

fn verify_cmd(a: &VerifyArgs) -> Result<(Value, i32), Fail> {
    let act = action_from_json(&read_json(&a.action)?)?;
    let depth = a.depth.unwrap_or_else(|| act.depth());
    let r = act.verify_bracket(depth);
    let status = if r.pass { "Verified" } else { "Failed" };
    Ok((report_json(status, &r, None), exit_code(status)))
}

fn glue_cmd(a: &GlueArgs) -> Result<(Value, i32), Fail> {
    let lt = action_from_json(&read_json(&a.lt)?)?;
    let gt = action_from_json(&read_json(&a.gt)?)?;
    let res = if a.vir { glue_vir(&lt, &gt) } else { glue_witt(&lt, &gt) };
    match res {
        Ok(g) => {
            let status = if g.report.pass { "Glued" } else { "Failed" };
            if let Some(p) = &a.output {
                write_json(p, &action_json(&g.action))?;
            }
            let mut v = report_json(status, &g.report, None);
            if let Some(k) = &g.action.central {
                v["central_zero"] = json!(k.is_zero());
            }
            Ok((v, exit_code(status)))
        }
        Err(e) => Ok((json!({"status": "GlueFailure", "kind": e.kind(), "message": e.to_string()}), exit_code("GlueFailure"))),
    }
}

fn rational_rows(m: &[Vec<wittext::scalar::Rational>]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(rational_json).collect())).collect())
}

fn subspace_json(s: &freelie::Subspace) -> Value {
    let words = freelie::lyndon_words(s.degree);
    let basis: Vec<Value> = s
        .basis
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .zip(&words)
                    .filter(|(c, _)| !num::Zero::is_zero(*c))
                    .map(|(c, w)| json!([rational_json(c), w.bracketed()]))
                    .collect(),
            )
        })
        .collect();
    json!({"degree": s.degree, "dim": s.dim(), "basis": basis})
}

fn freelie_cmd(c: &FreeCmd) -> Result<(Value, i32), Fail> {
    let fl = FreeLie::new();
    match c {
        FreeCmd::Dims { max } => {
            let rows: Vec<Value> = (5..=*max)
                .map(|n| {
                    let mut v = subspace_json(&freelie::relation_space(&fl, n));
                    v["expected"] = json!((n - 1) / 2 - 1);
                    v
                })
                .collect();
            Ok((json!({"relation_spaces": rows}), 0))
        }
        FreeCmd::Maps { max } => {
            let mut rows = Vec::new();
            let mut ok = true;
            for n in 5..=*max {
                let e = freelie::sl2_matrix(&fl, n, true)?;
                let f = if n > 5 { freelie::sl2_matrix(&fl, n, false)? } else { Some(vec![]) };
                let (pe, pf) = (freelie::predicted_matrix(n, true), if n > 5 { freelie::predicted_matrix(n, false) } else { vec![] });
                let matches = e.as_ref() == Some(&pe) && f.as_ref() == Some(&pf);
                ok &= matches;
                rows.push(json!({
                    "n": n,
                    "e_columns": e.as_deref().map(rational_rows),
                    "f_columns": f.as_deref().map(rational_rows),
                    "matches_formula": matches,
                }));
            }
            let status = if ok { "Pass" } else { "Failed" };
            Ok((json!({"status": status, "maps": rows}), exit_code(status)))
        }
        FreeCmd::Member { target, gens, max } => {
            let parse = |s: &str| freelie::parse_relation(&fl, s).ok_or_else(|| Fail::Usage(format!("unknown relation {s}")));
            let t = parse(target)?;
            let g = gens.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
            let degree = t.degree().ok_or_else(|| Fail::Usage("target is zero".into()))?;
            match freelie::ideal_component(&fl, &g, degree, *max) {
                Ok(c) => {
                    let member = freelie::membership(&t, &c.sub)?;
                    Ok((
                        json!({"element": target, "ideal": gens, "degree": degree, "member": member, "stable": c.stable, "ideal_dim": c.sub.dim()}),
                        0,
                    ))
                }
                Err(e @ wittext::Error::WindowTooSmall(_)) => {
                    Ok((json!({"status": "Undecided", "message": e.to_string(), "suggested_max": degree.max(*max) + 2}), 4))
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn reproduce_cmd(suite: &str) -> Result<(Value, i32), Fail> {
    let ids = reproduce::suite(suite).ok_or_else(|| Fail::Usage(format!("unknown suite {suite}")))?;
    let results: Vec<_> = ids.into_iter().map(reproduce::run).collect();
    for r in &results {
        eprintln!("criterion {:>2} {:<24} {}", r.id, r.name, if r.pass { "PASS" } else { "FAIL" });
    }
    let all = results.iter().all(|r| r.pass);
    let v = json!({"suite": suite, "pass": all, "criteria": serde_json::to_value(&results).expect("serializable")});
    Ok((v, if all { 0 } else { 3 }))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let job: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let out = match &cli.cmd {
        Cmd::Module(a) => module_cmd(a),
        Cmd::Extend(a) => extend_cmd(a),
        Cmd::Verify(a) => verify_cmd(a),
        Cmd::Glue(a) => glue_cmd(a),
        Cmd::Freelie { cmd } => freelie_cmd(cmd),
        Cmd::Reproduce { suite } => reproduce_cmd(suite),
    };
    match out {
        Ok((result, code)) => {
            let run = json!({
                "job": job,
                "version": env!("CARGO_PKG_VERSION"),
                "result": result,
                "timing_ms": start.elapsed().as_millis() as u64,
            });
            let text = serde_json::to_string_pretty(&run).expect("serializable");
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(code as u8)
        }
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(USAGE)
        }
        Err(Fail::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(IO)
        }
    }
}
