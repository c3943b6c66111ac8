use std::ffi::{c_char, c_int, CStr, CString};
use std::process::Command;
use std::ptr;

use subres::calculi::proof_corpus;
use subres::fixtures::algebra_fixture;
use subres::io::{algebra_to_json, ProofScript};
use subres_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(subres_last_error()) }.to_str().unwrap().to_owned()
}

fn take(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { subres_string_free(p) };
    s
}

fn fixture(name: &str) -> *mut SubresAlgebra {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { subres_algebra_fixture(cs(name).as_ptr(), &mut h) }, SubresStatus::Ok);
    h
}

#[test]
fn json_round_trip_preserves_tables() {
    let a = algebra_fixture("N").unwrap();
    let text = cs(&algebra_to_json(&a));
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { subres_algebra_from_json(text.as_ptr(), &mut h) }, SubresStatus::Ok);
    let mut n = 0usize;
    assert_eq!(unsafe { subres_algebra_size(h, &mut n) }, SubresStatus::Ok);
    assert_eq!(n, a.size());
    for x in 0..n {
        for y in 0..n {
            let mut v = usize::MAX;
            assert_eq!(unsafe { subres_algebra_imp(h, x, y, &mut v) }, SubresStatus::Ok);
            assert_eq!(v, a.imp(x, y));
        }
    }
    let mut v = 0usize;
    assert_eq!(unsafe { subres_algebra_imp(h, n, 0, &mut v) }, SubresStatus::OutOfRange);
    unsafe { subres_algebra_free(h) };
}

#[test]
fn class_membership_and_reasons() {
    let m = fixture("M");
    let b2 = fixture("B2");
    let mut member: c_int = -1;
    assert_eq!(unsafe { subres_check_class(m, cs("srlbs").as_ptr(), &mut member) }, SubresStatus::Ok);
    assert_eq!(member, 1);
    assert_eq!(last_error(), "");
    assert_eq!(unsafe { subres_check_class(b2, cs("srs").as_ptr(), &mut member) }, SubresStatus::Ok);
    assert_eq!(member, 0);
    assert!(last_error().contains("SR4"), "{}", last_error());
    assert_eq!(unsafe { subres_check_class(m, cs("nope").as_ptr(), &mut member) }, SubresStatus::UnknownClass);
    unsafe {
        subres_algebra_free(m);
        subres_algebra_free(b2);
    }
}

#[test]
fn bad_inputs_map_to_status_codes() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { subres_algebra_fixture(cs("no-such").as_ptr(), &mut h) }, SubresStatus::NotFound);
    assert_eq!(unsafe { subres_algebra_from_json(cs("{").as_ptr(), &mut h) }, SubresStatus::ParseError);
    let ragged = cs(r#"{"size": 2, "imp": [[1, 1], [0]]}"#);
    assert_eq!(unsafe { subres_algebra_from_json(ragged.as_ptr(), &mut h) }, SubresStatus::InvalidAlgebra);
    assert!(h.is_null());
    assert!(!last_error().is_empty());
    let bad_utf8 = [0xffu8, 0];
    assert_eq!(
        unsafe { subres_algebra_fixture(bad_utf8.as_ptr().cast(), &mut h) },
        SubresStatus::InvalidUtf8
    );
    unsafe {
        subres_algebra_free(ptr::null_mut());
        subres_string_free(ptr::null_mut());
    }
}

#[test]
fn countermodel_search() {
    let mut out = ptr::null_mut();
    let st = unsafe { subres_countermodel_json(cs("p -> (q -> p)").as_ptr(), cs("srl").as_ptr(), 4, &mut out) };
    assert_eq!(st, SubresStatus::Ok, "{}", last_error());
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["verdict"], "refuted");
    assert_eq!(v["countermodel"]["class"], "srl");

    let st = unsafe { subres_countermodel_json(cs("p -> p").as_ptr(), cs("srl").as_ptr(), 4, &mut out) };
    assert_eq!(st, SubresStatus::Ok, "{}", last_error());
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["verdict"], "no-countermodel-up-to");

    let st = unsafe { subres_countermodel_json(cs("p ->").as_ptr(), cs("srl").as_ptr(), 3, &mut out) };
    assert_eq!(st, SubresStatus::ParseError);
    let st = unsafe { subres_countermodel_json(cs("p").as_ptr(), cs("srl").as_ptr(), 50, &mut out) };
    assert_eq!(st, SubresStatus::CapExceeded);
}

#[test]
fn proof_checking() {
    let fx = &proof_corpus()[0];
    let text = cs(&serde_json::to_string(&ProofScript::from_proof(&fx.proof)).unwrap());
    let mut valid: c_int = -1;
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { subres_check_proof_json(text.as_ptr(), &mut valid, &mut out) }, SubresStatus::Ok);
    assert_eq!(valid, 1);
    assert!(!take(out).is_empty());
    let mut valid: c_int = -1;
    assert_eq!(unsafe { subres_check_proof_json(cs("[]").as_ptr(), &mut valid, ptr::null_mut()) }, SubresStatus::ParseError);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/subres.h")).unwrap();
    for f in [
        "subres_algebra_from_json",
        "subres_algebra_fixture",
        "subres_algebra_free",
        "subres_algebra_size",
        "subres_algebra_imp",
        "subres_check_class",
        "subres_countermodel_json",
        "subres_check_proof_json",
        "subres_string_free",
        "subres_last_error",
        "subres_version",
        "SUBRES_STATUS_OK = 0",
        "typedef struct SubresAlgebra SubresAlgebra",
    ] {
        assert!(header.contains(f), "header lacks {f}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include/subres.h"))
        .output()
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
