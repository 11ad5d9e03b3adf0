use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use wittext_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { wx_string_free(s) };
    out
}

fn dense() -> *mut WxModule {
    let mut m = ptr::null_mut();
    let st = unsafe { wx_module_dense(c("1/2").as_ptr(), c("9").as_ptr(), -12, 12, &mut m) };
    assert_eq!(st, WxStatus::Ok);
    m
}

fn extend(m: *const WxModule, alg: &str, branch: &str) -> (i32, *mut WxAction) {
    let (mut code, mut a) = (-1, ptr::null_mut());
    let b = c(branch);
    let st = unsafe { wx_extend(m, c(alg).as_ptr(), b.as_ptr(), 6, false, &mut code, ptr::null_mut(), &mut a) };
    assert_eq!(st, WxStatus::Ok);
    (code, a)
}

#[test]
fn extend_verify_and_free() {
    let m = dense();
    let (code, a) = extend(m, "gt", "+");
    assert_eq!(code, 0);
    assert!(!a.is_null());
    let mut pass = false;
    assert_eq!(unsafe { wx_action_verify(a, 0, &mut pass) }, WxStatus::Ok);
    assert!(pass);
    unsafe {
        wx_action_free(a);
        wx_module_free(m);
    }
}

#[test]
fn json_round_trip_through_handles() {
    let m = dense();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { wx_module_to_json(m, &mut s) }, WxStatus::Ok);
    let text = take(s);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { wx_module_from_json(c(&text).as_ptr(), &mut back) }, WxStatus::Ok);
    let mut s2 = ptr::null_mut();
    unsafe { wx_module_to_json(back, &mut s2) };
    assert_eq!(take(s2), text);
    unsafe {
        wx_module_free(back);
        wx_module_free(m);
    }
}

#[test]
fn glue_same_branch_has_zero_central_charge() {
    let m = dense();
    let (_, lt) = extend(m, "lt", "-");
    let (_, gt) = extend(m, "gt", "-");
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { wx_glue(lt, gt, true, &mut v) }, WxStatus::Ok);
    let (mut present, mut zero) = (false, false);
    unsafe { wx_action_central_zero(v, &mut present, &mut zero) };
    assert!(present && zero);
    let (_, gt_plus) = extend(m, "gt", "+");
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { wx_glue(lt, gt_plus, true, &mut w) }, WxStatus::Glue);
    assert!(w.is_null());
    let msg = unsafe { CStr::from_ptr(wx_last_error()) }.to_str().unwrap();
    assert!(msg.starts_with("CentralityFailure"), "{msg}");
    unsafe {
        for a in [lt, gt, gt_plus, v] {
            wx_action_free(a);
        }
        wx_module_free(m);
    }
}

#[test]
fn error_codes() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { wx_module_dense(ptr::null(), c("9").as_ptr(), 0, 4, &mut m) }, WxStatus::NullArgument);
    assert_eq!(unsafe { wx_module_dense(c("x").as_ptr(), c("9").as_ptr(), 0, 4, &mut m) }, WxStatus::Parse);
    assert_eq!(unsafe { wx_module_dense(c("1/2").as_ptr(), c("9").as_ptr(), 4, 0, &mut m) }, WxStatus::Window);
    assert_eq!(unsafe { wx_module_from_json(c("{").as_ptr(), &mut m) }, WxStatus::Parse);
    assert!(m.is_null());
    assert!(!wx_last_error().is_null());
    let mut pass = false;
    assert_eq!(unsafe { wx_action_verify(ptr::null(), 0, &mut pass) }, WxStatus::NullArgument);
}

#[test]
fn printed_counterexample_reports_infeasible() {
    let doc = {
        let mut s = wittext::driver::ModuleSpec { kind: "counterexample".into(), printed: true, ..Default::default() };
        s.lambda = Some(wittext::scalar::QuadScalar::frac(1, 2));
        s.k_min = Some(-12);
        s.k_max = Some(6);
        wittext::json::module_json(&wittext::driver::build_module(&s).unwrap()).to_string()
    };
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { wx_module_from_json(c(&doc).as_ptr(), &mut m) }, WxStatus::Ok);
    let (mut code, mut a, mut rep) = (0, ptr::null_mut(), ptr::null_mut());
    let st = unsafe { wx_extend(m, c("gt").as_ptr(), ptr::null(), 6, true, &mut code, &mut rep, &mut a) };
    assert_eq!(st, WxStatus::Ok);
    assert_eq!(code, 3);
    assert!(a.is_null());
    let report: serde_json::Value = serde_json::from_str(&take(rep)).unwrap();
    assert_eq!(report["status"], "Infeasible");
    unsafe { wx_module_free(m) };
}

#[test]
fn freelie_membership() {
    let mut member = true;
    let st = unsafe { wx_freelie_member(c("r2").as_ptr(), c("r1").as_ptr(), 9, &mut member) };
    assert_eq!(st, WxStatus::Ok);
    assert!(!member);
    let st = unsafe { wx_freelie_member(c("r1").as_ptr(), c("r2").as_ptr(), 9, &mut member) };
    assert_eq!(st, WxStatus::Ok);
    assert!(member);
    assert_eq!(unsafe { wx_freelie_member(c("q7").as_ptr(), c("r1").as_ptr(), 9, &mut member) }, WxStatus::Parse);
}

#[test]
fn header_drives_a_c_program() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/wittext.h");
    assert!(header.exists(), "build script did not write the header");
    let lib = Path::new(env!("CARGO_TARGET_TMPDIR")).parent().unwrap().join(if cfg!(debug_assertions) { "debug" } else { "release" });
    if !lib.join("libwittext_ffi.a").exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping C link: no static library or C compiler");
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("probe.c");
    std::fs::write(
        &src,
        r#"#include "wittext.h"
#include <stdio.h>
int main(void) {
    WxModule *m = NULL; WxAction *a = NULL; int code = -1; bool pass = false;
    if (wx_module_dense("1/2", "9", -12, 12, &m) != WX_STATUS_OK) return 10;
    if (wx_extend(m, "vir", "+", 4, false, &code, NULL, &a) != WX_STATUS_OK) return 11;
    if (code != 0 || wx_action_verify(a, 0, &pass) != WX_STATUS_OK || !pass) return 12;
    if (wx_module_dense("1/2", "9", 4, 0, &m) != WX_STATUS_WINDOW) return 13;
    printf("%s\n", wx_last_error());
    wx_action_free(a);
    wx_module_free(m);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = tmp.path().join("probe");
    let st = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(dir.join("include"))
        .arg(lib.join("libwittext_ffi.a"))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(st.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("empty window"));
}
