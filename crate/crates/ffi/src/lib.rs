//! C interface to `wittext`.
//!
//! Modules and actions cross the boundary as opaque handles. Every call
//! returns a [`WxStatus`]; on failure the message is kept per thread and can
//! be read with [`wx_last_error`]. Strings handed out by the library must be
//! released with [`wx_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use serde_json::Value;
use wittext::driver::{exit_code, run_extend, Method};
use wittext::extend::{glue_vir, glue_witt, Algebra, Branch, WittAction};
use wittext::freelie::{ideal_component, membership, parse_relation, FreeLie};
use wittext::json::{action_from_json, action_json, module_from_json, module_json};
use wittext::scalar::QuadScalar;
use wittext::weightmod::{make_dense, WeightModule};
use wittext::Error;

/// Error codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WxStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Degenerate = 4,
    Window = 5,
    Mismatch = 6,
    Glue = 7,
    Internal = 8,
}

/// Opaque handle to a truncated weight module.
pub struct WxModule(WeightModule<QuadScalar>);

/// Opaque handle to a Witt or Virasoro action.
pub struct WxAction(WittAction<QuadScalar>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(code: WxStatus, msg: impl Into<String>) -> WxStatus {
    set_error(msg);
    code
}

fn status_of(e: &Error) -> WxStatus {
    match e {
        Error::Parse(_) => WxStatus::Parse,
        Error::WindowMismatch(_) | Error::EmptyInterior | Error::DepthExceedsWindow(_) | Error::WindowTooSmall(_) => WxStatus::Window,
        Error::ModuleMismatch
        | Error::OverlapDisagreement { .. }
        | Error::ShapeMismatch(_)
        | Error::WrongKind(_)
        | Error::DegreeMismatch { .. }
        | Error::RadicandMismatch(..) => WxStatus::Mismatch,
        _ => WxStatus::Degenerate,
    }
}

fn lib_err(e: Error) -> WxStatus {
    fail(status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, WxStatus> {
    if p.is_null() {
        return Err(fail(WxStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(WxStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn read_json(p: *const c_char) -> Result<Value, WxStatus> {
    serde_json::from_str(read_str(p)?).map_err(|e| fail(WxStatus::Parse, e.to_string()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> WxStatus {
    if out.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            WxStatus::Ok
        }
        Err(_) => fail(WxStatus::Internal, "output contains a NUL byte"),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! handle {
    ($p:expr) => {{
        if $p.is_null() {
            return fail(WxStatus::NullArgument, "null handle");
        }
        &(*$p).0
    }};
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn wx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a pointer obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the dense module with the given anchor and Casimir on the index
/// window `[k_min, k_max]`. Scalars use the text form `a+b*sqrt(d)`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_module_dense(
    anchor: *const c_char,
    tau: *const c_char,
    k_min: i64,
    k_max: i64,
    out: *mut *mut WxModule,
) -> WxStatus {
    if out.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    let anchor = tri!(QuadScalar::parse(tri!(read_str(anchor))).map_err(lib_err));
    let tau = tri!(QuadScalar::parse(tri!(read_str(tau))).map_err(lib_err));
    let m = tri!(make_dense(&anchor, &tau, k_min, k_max).map_err(lib_err));
    *out = Box::into_raw(Box::new(WxModule(m)));
    WxStatus::Ok
}

/// Reads a module from its JSON document.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_module_from_json(json: *const c_char, out: *mut *mut WxModule) -> WxStatus {
    if out.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    let v = tri!(read_json(json));
    let m = tri!(module_from_json(&v).map_err(lib_err));
    *out = Box::into_raw(Box::new(WxModule(m)));
    WxStatus::Ok
}

/// Writes the JSON document of a module to `*out`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_module_to_json(m: *const WxModule, out: *mut *mut c_char) -> WxStatus {
    let m = handle!(m);
    write_string(out, module_json(m).to_string())
}

/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wx_module_free(m: *mut WxModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Extends a module to `algebra` ("gt", "lt", "full" or "vir").
///
/// `branch` may be NULL for automatic choice, otherwise "+" or "-".
/// `generic` selects the solver path instead of the closed forms. On
/// return `*exit` holds the CLI exit code of the outcome (0 extended,
/// 3 infeasible, 4 undecided), `*report` (if not NULL) the JSON report and
/// `*out` the first surviving action or NULL.
///
/// # Safety
/// `m` must be a live handle; pointers must be valid or NULL where allowed.
#[no_mangle]
pub unsafe extern "C" fn wx_extend(
    m: *const WxModule,
    algebra: *const c_char,
    branch: *const c_char,
    depth: i64,
    generic: bool,
    exit: *mut i32,
    report: *mut *mut c_char,
    out: *mut *mut WxAction,
) -> WxStatus {
    let m = handle!(m);
    if out.is_null() || exit.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    let alg = tri!(Algebra::parse(tri!(read_str(algebra))).map_err(lib_err));
    let branch = if branch.is_null() { None } else { Some(tri!(Branch::parse(tri!(read_str(branch))).map_err(lib_err))) };
    let method = if generic { Method::Generic } else { Method::Closed };
    let r = tri!(run_extend(m, alg, branch, depth, method).map_err(lib_err));
    *exit = exit_code(r.status);
    if !report.is_null() {
        tri!(match write_string(report, r.to_json().to_string()) {
            WxStatus::Ok => Ok(()),
            s => Err(s),
        });
    }
    *out = match r.actions.into_iter().next() {
        Some((_, a)) => Box::into_raw(Box::new(WxAction(a))),
        None => ptr::null_mut(),
    };
    WxStatus::Ok
}

/// Checks every bracket of the action up to `depth` (the stored depth when
/// `depth` is 0). `*pass` receives the verdict.
///
/// # Safety
/// `a` must be a live handle; `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_action_verify(a: *const WxAction, depth: i64, pass: *mut bool) -> WxStatus {
    let a = handle!(a);
    if pass.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    let d = if depth == 0 { a.depth() } else { depth };
    *pass = a.verify_bracket(d).pass;
    WxStatus::Ok
}

/// Glues an lt half and a gt half into a Witt action, or a Virasoro action
/// when `vir` is set. A gluing obstruction returns `WX_STATUS_GLUE`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_glue(lt: *const WxAction, gt: *const WxAction, vir: bool, out: *mut *mut WxAction) -> WxStatus {
    let (lt, gt) = (handle!(lt), handle!(gt));
    if out.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    let res = if vir { glue_vir(lt, gt) } else { glue_witt(lt, gt) };
    match res {
        Ok(g) if g.report.pass => {
            *out = Box::into_raw(Box::new(WxAction(g.action)));
            WxStatus::Ok
        }
        Ok(_) => fail(WxStatus::Glue, "glued action fails the bracket check"),
        Err(e) => fail(WxStatus::Glue, format!("{}: {e}", e.kind())),
    }
}

/// Central operator of a Virasoro action: `*zero` is set when it vanishes
/// and `*present` when the action carries one at all.
///
/// # Safety
/// `a` must be a live handle; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_action_central_zero(a: *const WxAction, present: *mut bool, zero: *mut bool) -> WxStatus {
    let a = handle!(a);
    if present.is_null() || zero.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    *present = a.central.is_some();
    *zero = a.central.as_ref().is_some_and(|k| k.is_zero());
    WxStatus::Ok
}

/// Reads an action from its JSON document.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_action_from_json(json: *const c_char, out: *mut *mut WxAction) -> WxStatus {
    if out.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    let v = tri!(read_json(json));
    let a = tri!(action_from_json(&v).map_err(lib_err));
    *out = Box::into_raw(Box::new(WxAction(a)));
    WxStatus::Ok
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_action_to_json(a: *const WxAction, out: *mut *mut c_char) -> WxStatus {
    let a = handle!(a);
    write_string(out, action_json(a).to_string())
}

/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wx_action_free(a: *mut WxAction) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Decides whether relation `target` lies in the ideal generated by the
/// comma separated relations `gens`, computing up to degree `max_degree`.
/// Relations are named like "r2" or "r_{2,5}".
///
/// # Safety
/// Strings must be NUL-terminated; `member` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wx_freelie_member(
    target: *const c_char,
    gens: *const c_char,
    max_degree: u32,
    member: *mut bool,
) -> WxStatus {
    if member.is_null() {
        return fail(WxStatus::NullArgument, "null output pointer");
    }
    let fl = FreeLie::new();
    let parse = |s: &str| parse_relation(&fl, s.trim()).ok_or_else(|| fail(WxStatus::Parse, format!("unknown relation {s}")));
    let t = tri!(parse(tri!(read_str(target))));
    let g = tri!(tri!(read_str(gens)).split(',').map(parse).collect::<Result<Vec<_>, _>>());
    let Some(degree) = t.degree() else {
        return fail(WxStatus::Parse, "target is zero");
    };
    let c = tri!(ideal_component(&fl, &g, degree, max_degree as usize).map_err(lib_err));
    *member = tri!(membership(&t, &c.sub).map_err(lib_err));
    WxStatus::Ok
}
