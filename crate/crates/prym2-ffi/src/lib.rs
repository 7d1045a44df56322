//! C ABI over the verification pipeline.
//!
//! Reports are returned as opaque handles; strings cross the boundary as
//! NUL-terminated, heap-allocated C strings that the caller must release
//! with [`prym2_string_free`]. Every entry point catches panics and maps
//! them to [`Prym2Status::InternalError`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use prym2::checks::{run_all, run_single, CHECK_IDS};
use prym2::report::VerificationReport;

/// Result codes shared by all entry points.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prym2Status {
    /// The call succeeded; for verification runs, everything passed.
    Ok = 0,
    /// The call succeeded but at least one mathematical check failed.
    CheckFailed = 1,
    /// A pointer was null or an identifier was not recognized.
    InvalidArgument = 2,
    /// An unexpected internal failure.
    InternalError = 3,
}

/// Opaque verification report handle.
pub struct Prym2Report {
    report: VerificationReport,
}

fn guarded<F: FnOnce() -> Prym2Status + UnwindSafe>(f: F) -> Prym2Status {
    catch_unwind(f).unwrap_or(Prym2Status::InternalError)
}

fn report_out(report: VerificationReport, out: *mut *mut Prym2Report) -> Prym2Status {
    let pass = report.all_pass();
    let boxed = Box::new(Prym2Report { report });
    unsafe { *out = Box::into_raw(boxed) };
    if pass {
        Prym2Status::Ok
    } else {
        Prym2Status::CheckFailed
    }
}

fn to_c_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn prym2_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Run the full verification (all checks plus the final theorem).
///
/// On success `*out` owns the report; release it with
/// [`prym2_report_free`].
#[no_mangle]
pub extern "C" fn prym2_verify(out: *mut *mut Prym2Report) -> Prym2Status {
    if out.is_null() {
        return Prym2Status::InvalidArgument;
    }
    guarded(move || report_out(run_all(), out))
}

/// Run one check by id (see [`prym2_check_ids`]).
///
/// # Safety
/// `id` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn prym2_check(id: *const c_char, out: *mut *mut Prym2Report) -> Prym2Status {
    if id.is_null() || out.is_null() {
        return Prym2Status::InvalidArgument;
    }
    let Ok(id_str) = unsafe { CStr::from_ptr(id) }.to_str() else {
        return Prym2Status::InvalidArgument;
    };
    let id_owned = id_str.to_owned();
    guarded(move || match run_single(&id_owned) {
        Ok(report) => report_out(report, out),
        Err(_) => Prym2Status::InvalidArgument,
    })
}

/// Newline-separated list of valid check ids. Free with
/// [`prym2_string_free`].
#[no_mangle]
pub extern "C" fn prym2_check_ids() -> *mut c_char {
    to_c_string(CHECK_IDS.join("\n"))
}

/// Whether every check in the report passed.
///
/// # Safety
/// `report` must be a live handle from [`prym2_verify`] or
/// [`prym2_check`].
#[no_mangle]
pub unsafe extern "C" fn prym2_report_passed(report: *const Prym2Report) -> bool {
    if report.is_null() {
        return false;
    }
    unsafe { &*report }.report.all_pass()
}

/// Number of checks contained in the report.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn prym2_report_check_count(report: *const Prym2Report) -> usize {
    if report.is_null() {
        return 0;
    }
    unsafe { &*report }.report.checks.len()
}

/// The full report as pretty-printed JSON. Free with
/// [`prym2_string_free`].
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn prym2_report_json(report: *const Prym2Report) -> *mut c_char {
    if report.is_null() {
        return ptr::null_mut();
    }
    to_c_string(unsafe { &*report }.report.to_json())
}

/// The presentation of the answer ring, when the report contains the
/// theorem and it verified; null otherwise. Free with
/// [`prym2_string_free`].
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn prym2_report_presentation(report: *const Prym2Report) -> *mut c_char {
    if report.is_null() {
        return ptr::null_mut();
    }
    match &unsafe { &*report }.report.theorem {
        Some(t) if t.verified => to_c_string(t.presentation.clone()),
        _ => ptr::null_mut(),
    }
}

/// Release a report handle.
///
/// # Safety
/// `report` must be a handle from this library, not yet freed; null is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn prym2_report_free(report: *mut Prym2Report) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Release a string allocated by this library.
///
/// # Safety
/// `s` must come from this library, not yet freed; null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn prym2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
