//! C ABI for `subres`.
//!
//! Every function returns a [`SubresStatus`]; results go through out
//! pointers. On failure, [`subres_last_error`] describes the problem until the
//! next call on the same thread. Strings handed out by the library are freed
//! with [`subres_string_free`], algebras with [`subres_algebra_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use subres::classes::{check, ClassTag};
use subres::enumerate::EnumError;
use subres::fixtures::algebra_fixture;
use subres::io::{algebra_from_json, proof_from_json, CountermodelDoc, IoError};
use subres::semantics::{find_countermodel, SemanticsError};
use subres::{FiniteAlgebra, Formula, Limits};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubresStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidAlgebra = 4,
    UnknownClass = 5,
    CapExceeded = 6,
    NotFound = 7,
    OutOfRange = 8,
    Internal = 99,
}

/// Opaque handle to a finite algebra.
pub struct SubresAlgebra {
    inner: FiniteAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

struct Fail(SubresStatus, String);

impl Fail {
    fn new(status: SubresStatus, msg: impl ToString) -> Self {
        Fail(status, msg.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> SubresStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SubresStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error (panic)");
            SubresStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::new(SubresStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail::new(SubresStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail::new(SubresStatus::NullPointer, format!("{what} is null")))
}

fn algebra<'a>(a: *const SubresAlgebra) -> Result<&'a FiniteAlgebra, Fail> {
    // SAFETY: non-null handles come from this library and are live until freed.
    unsafe { a.as_ref() }
        .map(|h| &h.inner)
        .ok_or_else(|| Fail::new(SubresStatus::NullPointer, "algebra handle is null"))
}

fn class(name: &str) -> Result<ClassTag, Fail> {
    name.parse::<ClassTag>().map_err(|e| Fail::new(SubresStatus::UnknownClass, e))
}

fn hand_out(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

fn io_status(e: &IoError) -> SubresStatus {
    match e {
        IoError::Json(_) | IoError::Formula { .. } | IoError::Hypothesis { .. } | IoError::Rule { .. } | IoError::Calculus(_) => {
            SubresStatus::ParseError
        }
        _ => SubresStatus::InvalidAlgebra,
    }
}

/// Parses an algebra document. On success `*out_algebra` owns a new handle.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `out_algebra` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn subres_algebra_from_json(json: *const c_char, out_algebra: *mut *mut SubresAlgebra) -> SubresStatus {
    guard(|| {
        let slot = out(out_algebra, "out_algebra")?;
        let t = text(json, "json")?;
        let a = algebra_from_json(t).map_err(|e| Fail::new(io_status(&e), e))?;
        *slot = Box::into_raw(Box::new(SubresAlgebra { inner: a }));
        Ok(())
    })
}

/// Loads a built-in algebra such as `"M"`, `"N"` or `"B2"`.
///
/// # Safety
/// As for [`subres_algebra_from_json`].
#[no_mangle]
pub unsafe extern "C" fn subres_algebra_fixture(name: *const c_char, out_algebra: *mut *mut SubresAlgebra) -> SubresStatus {
    guard(|| {
        let slot = out(out_algebra, "out_algebra")?;
        let n = text(name, "name")?;
        let a = algebra_fixture(n).ok_or_else(|| Fail::new(SubresStatus::NotFound, format!("no fixture `{n}`")))?;
        *slot = Box::into_raw(Box::new(SubresAlgebra { inner: a }));
        Ok(())
    })
}

/// Frees a handle. Null is ignored.
///
/// # Safety
/// `a` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn subres_algebra_free(a: *mut SubresAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle or null; `out_size` writable or null.
#[no_mangle]
pub unsafe extern "C" fn subres_algebra_size(a: *const SubresAlgebra, out_size: *mut usize) -> SubresStatus {
    guard(|| {
        let slot = out(out_size, "out_size")?;
        *slot = algebra(a)?.size();
        Ok(())
    })
}

/// `*out_value = x → y`.
///
/// # Safety
/// `a` must be a live handle or null; `out_value` writable or null.
#[no_mangle]
pub unsafe extern "C" fn subres_algebra_imp(a: *const SubresAlgebra, x: usize, y: usize, out_value: *mut usize) -> SubresStatus {
    guard(|| {
        let slot = out(out_value, "out_value")?;
        let alg = algebra(a)?;
        if x >= alg.size() || y >= alg.size() {
            return Err(Fail::new(SubresStatus::OutOfRange, format!("element outside a carrier of size {}", alg.size())));
        }
        *slot = alg.imp(x, y);
        Ok(())
    })
}

/// Sets `*out_member` to 1 or 0. On non-membership the failing axioms are
/// available from [`subres_last_error`] even though the status is `Ok`.
///
/// # Safety
/// `a` must be a live handle or null; `class_name` a C string or null.
#[no_mangle]
pub unsafe extern "C" fn subres_check_class(a: *const SubresAlgebra, class_name: *const c_char, out_member: *mut c_int) -> SubresStatus {
    let mut note = String::new();
    let status = guard(|| {
        let slot = out(out_member, "out_member")?;
        let c = class(text(class_name, "class_name")?)?;
        let v = check(c, algebra(a)?).map_err(|e| Fail::new(SubresStatus::InvalidAlgebra, e))?;
        *slot = c_int::from(v.member);
        if !v.member {
            note = format!("fails {}", v.labels().join(", "));
        }
        Ok(())
    });
    if !note.is_empty() {
        set_error(note);
    }
    status
}

/// Searches `class` up to `max_size` for a countermodel to `formula`.
/// `*out_json` receives `{"verdict": "refuted", "countermodel": ...}` or
/// `{"verdict": "no-countermodel-up-to", "max_size": N}`.
///
/// # Safety
/// String arguments must be C strings or null; `out_json` writable or null.
#[no_mangle]
pub unsafe extern "C" fn subres_countermodel_json(
    formula: *const c_char,
    class_name: *const c_char,
    max_size: usize,
    out_json: *mut *mut c_char,
) -> SubresStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        let f = Formula::parse(text(formula, "formula")?).map_err(|e| Fail::new(SubresStatus::ParseError, e))?;
        let c = class(text(class_name, "class_name")?)?;
        let found = find_countermodel(&f, c, max_size, &Limits::default()).map_err(|e| match e {
            SemanticsError::Enum(EnumError::CapExceeded { .. }) => Fail::new(SubresStatus::CapExceeded, e),
            SemanticsError::Eval(_) => Fail::new(SubresStatus::InvalidAlgebra, e),
            _ => Fail::new(SubresStatus::Internal, e),
        })?;
        let doc = match found {
            Some(cm) => serde_json::json!({"verdict": "refuted", "countermodel": CountermodelDoc::new(&cm)}),
            None => serde_json::json!({"verdict": "no-countermodel-up-to", "max_size": max_size}),
        };
        *slot = hand_out(doc.to_string());
        Ok(())
    })
}

/// Checks a proof script. `*out_valid` is 1 or 0; `*out_json` (if not null)
/// receives the per-line diagnostics.
///
/// # Safety
/// `script` must be a C string or null; out pointers writable or null.
#[no_mangle]
pub unsafe extern "C" fn subres_check_proof_json(script: *const c_char, out_valid: *mut c_int, out_json: *mut *mut c_char) -> SubresStatus {
    guard(|| {
        let slot = out(out_valid, "out_valid")?;
        let p = proof_from_json(text(script, "script")?).map_err(|e| Fail::new(io_status(&e), e))?;
        let v = p.check();
        *slot = c_int::from(v.valid);
        if !out_json.is_null() {
            *out_json = hand_out(serde_json::to_string(&v).map_err(|e| Fail::new(SubresStatus::Internal, e))?);
        }
        Ok(())
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn subres_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread; empty after success.
/// Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn subres_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn subres_version() -> *const c_char {
    static V: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}
