//! C ABI over the dcrystal library.
//!
//! Every object crosses the boundary as an opaque handle; every fallible
//! call returns a [`DcrStatus`] and reports detail through
//! [`dcr_last_error`].  Strings returned through out-parameters are owned by
//! the caller and released with [`dcr_string_free`].

use dcrystal::burge;
use dcrystal::kr::{self, GraphSide};
use dcrystal::paths;
use dcrystal::pbw::LusztigDatum;
use dcrystal::tableaux::Tableau;
use dcrystal::verify::{run_suite, RunConfig};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DcrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    InternalError = 5,
}

/// Insertion direction selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DcrDirection {
    Southeast = 0,
    Northwest = 1,
}

/// Which realization of the level-`s` crystal graph to export.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DcrGraphSide {
    Lusztig = 0,
    Tableau = 1,
}

/// Opaque handle to a triangle datum.
pub struct DcrDatum {
    inner: LusztigDatum,
}

/// Opaque handle to a semistandard tableau.
pub struct DcrTableau {
    inner: Tableau,
    rank: u8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(msg).ok();
    });
}

fn guard<F: FnOnce() -> DcrStatus>(f: F) -> DcrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic across the boundary".to_string());
            set_error(msg);
            DcrStatus::InternalError
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, DcrStatus> {
    if ptr.is_null() {
        set_error("null string pointer");
        return Err(DcrStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        DcrStatus::InvalidUtf8
    })
}

fn give_string(s: String, out: *mut *mut c_char) -> DcrStatus {
    match CString::new(s) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            DcrStatus::Ok
        }
        Err(_) => {
            set_error("string contains an interior NUL");
            DcrStatus::InternalError
        }
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dcr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message of the most recent error on this thread; caller frees it.
/// Returns null when no error has been recorded.
#[no_mangle]
pub extern "C" fn dcr_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        Some(cs) => cs.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `ptr` must have been produced by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn dcr_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}

/// Parses triangle rows like `[[2],[1,0],[1,2,1],[2,1,0,1]]`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcr_datum_parse_triangle(
    text: *const c_char,
    out: *mut *mut DcrDatum,
) -> DcrStatus {
    guard(|| {
        if out.is_null() {
            set_error("null out pointer");
            return DcrStatus::NullPointer;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match LusztigDatum::from_triangle_string(text.trim()) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(DcrDatum { inner }));
                DcrStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                DcrStatus::ParseError
            }
        }
    })
}

/// # Safety
/// `d` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dcr_datum_free(d: *mut DcrDatum) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Rank of the datum, or 0 for a null handle.
///
/// # Safety
/// `d` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn dcr_datum_rank(d: *const DcrDatum) -> u32 {
    d.as_ref().map(|d| d.inner.rank() as u32).unwrap_or(0)
}

/// Renders the triangle rows back to text.
///
/// # Safety
/// `d` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dcr_datum_to_triangle(
    d: *const DcrDatum,
    out: *mut *mut c_char,
) -> DcrStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            set_error("null datum");
            return DcrStatus::NullPointer;
        };
        give_string(d.inner.to_triangle_string(), out)
    })
}

/// The maximal double-path sum of the datum.
///
/// # Safety
/// `d` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dcr_datum_epsilon_star(d: *const DcrDatum, out: *mut u64) -> DcrStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            set_error("null datum");
            return DcrStatus::NullPointer;
        };
        if out.is_null() {
            set_error("null out pointer");
            return DcrStatus::NullPointer;
        }
        *out = paths::epsilon_star(&d.inner);
        DcrStatus::Ok
    })
}

/// Writes the tableau shape of the datum into `buf` (capacity `cap`); the
/// true length lands in `len_out` even when it exceeds the capacity.
///
/// # Safety
/// `buf` must point to at least `cap` slots; `d` and `len_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn dcr_datum_shape(
    d: *const DcrDatum,
    buf: *mut u64,
    cap: usize,
    len_out: *mut usize,
) -> DcrStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            set_error("null datum");
            return DcrStatus::NullPointer;
        };
        if len_out.is_null() || (cap > 0 && buf.is_null()) {
            set_error("null out pointer");
            return DcrStatus::NullPointer;
        }
        let shape = burge::lambda_of(&d.inner);
        *len_out = shape.len();
        if shape.len() > cap {
            set_error(format!(
                "shape has {} parts but capacity is {cap}",
                shape.len()
            ));
            return DcrStatus::InvalidArgument;
        }
        for (k, part) in shape.iter().enumerate() {
            *buf.add(k) = *part as u64;
        }
        DcrStatus::Ok
    })
}

/// Inserts the datum into a tableau in the requested direction.
///
/// # Safety
/// `d` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dcr_datum_insert(
    d: *const DcrDatum,
    direction: DcrDirection,
    out: *mut *mut DcrTableau,
) -> DcrStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            set_error("null datum");
            return DcrStatus::NullPointer;
        };
        if out.is_null() {
            set_error("null out pointer");
            return DcrStatus::NullPointer;
        }
        let inner = match direction {
            DcrDirection::Southeast => burge::kappa_se(&d.inner),
            DcrDirection::Northwest => burge::kappa_nw(&d.inner),
        };
        *out = Box::into_raw(Box::new(DcrTableau {
            inner,
            rank: d.inner.rank(),
        }));
        DcrStatus::Ok
    })
}

/// # Safety
/// `t` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dcr_tableau_free(t: *mut DcrTableau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// JSON rendering of the tableau (rows padded with null for the offsets).
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dcr_tableau_to_json(
    t: *const DcrTableau,
    out: *mut *mut c_char,
) -> DcrStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            set_error("null tableau");
            return DcrStatus::NullPointer;
        };
        give_string(t.inner.to_json().to_string(), out)
    })
}

/// Parses tableau JSON; `rank` bounds the letters (pass 0 to infer).
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn dcr_tableau_parse_json(
    text: *const c_char,
    rank: u32,
    out: *mut *mut DcrTableau,
) -> DcrStatus {
    guard(|| {
        if out.is_null() {
            set_error("null out pointer");
            return DcrStatus::NullPointer;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let v: serde_json::Value = match serde_json::from_str(text.trim()) {
            Ok(v) => v,
            Err(e) => {
                set_error(e.to_string());
                return DcrStatus::ParseError;
            }
        };
        let v = if v.get("rows").is_some() {
            v
        } else {
            serde_json::json!({ "rows": v })
        };
        match Tableau::from_json(&v) {
            Ok(inner) => {
                let inferred = inner
                    .rows()
                    .iter()
                    .flatten()
                    .map(|x| x.value())
                    .max()
                    .unwrap_or(4)
                    .max(4);
                let rank = if rank == 0 { inferred } else { rank as u8 };
                *out = Box::into_raw(Box::new(DcrTableau { inner, rank }));
                DcrStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                DcrStatus::ParseError
            }
        }
    })
}

/// Recovers the datum from a tableau (inverse of the insertion).
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dcr_tableau_invert(
    t: *const DcrTableau,
    direction: DcrDirection,
    out: *mut *mut DcrDatum,
) -> DcrStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            set_error("null tableau");
            return DcrStatus::NullPointer;
        };
        if out.is_null() {
            set_error("null out pointer");
            return DcrStatus::NullPointer;
        }
        let result = match direction {
            DcrDirection::Southeast => burge::kappa_se_inv(&t.inner, t.rank),
            DcrDirection::Northwest => burge::kappa_nw_inv(&t.inner, t.rank),
        };
        match result {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(DcrDatum { inner }));
                DcrStatus::Ok
            }
            Err(e) => {
                set_error(e);
                DcrStatus::InvalidArgument
            }
        }
    })
}

/// DOT export of the level-`s` crystal graph.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcr_graph_dot(
    n: u32,
    s: u64,
    side: DcrGraphSide,
    out: *mut *mut c_char,
) -> DcrStatus {
    guard(|| {
        if out.is_null() {
            set_error("null out pointer");
            return DcrStatus::NullPointer;
        }
        if !(4..=16).contains(&n) {
            set_error("rank out of the supported range 4..=16");
            return DcrStatus::InvalidArgument;
        }
        let side = match side {
            DcrGraphSide::Lusztig => GraphSide::Lusztig,
            DcrGraphSide::Tableau => GraphSide::Tableau,
        };
        let graph = kr::crystal_graph(n as u8, s, side);
        give_string(graph.to_dot(), out)
    })
}

/// Runs a verification suite; `passed_out` reports the verdict and the JSON
/// report lands in `report_out`.
///
/// # Safety
/// `suite` must be NUL-terminated; the out pointers must be valid.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn dcr_verify(
    suite: *const c_char,
    n: u32,
    s: u64,
    bound: u32,
    seed: u64,
    jobs: u32,
    passed_out: *mut bool,
    report_out: *mut *mut c_char,
) -> DcrStatus {
    guard(|| {
        if passed_out.is_null() || report_out.is_null() {
            set_error("null out pointer");
            return DcrStatus::NullPointer;
        }
        let suite = match read_str(suite) {
            Ok(t) => t,
            Err(status) => return status,
        };
        if !(4..=16).contains(&n) {
            set_error("rank out of the supported range 4..=16");
            return DcrStatus::InvalidArgument;
        }
        let cfg = RunConfig {
            n: n as u8,
            s,
            bound,
            seed,
            jobs: jobs.max(1) as usize,
        };
        match run_suite(suite, &cfg) {
            Ok(report) => {
                *passed_out = report.passed;
                give_string(report.to_json().to_string(), report_out)
            }
            Err(e) => {
                set_error(e);
                DcrStatus::InvalidArgument
            }
        }
    })
}
