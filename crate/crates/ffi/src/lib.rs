//! C interface to the regularity engine: opaque handles over the core
//! types, integer status codes, and a thread-local last-error message.
//! The build script writes include/cmreg.h with cbindgen.
//!
//! Ownership rules: every `*_parse`/`*_example`/`*_ideal` constructor
//! hands the caller a pointer that must go back through the matching
//! `*_free`; strings returned through `char**` outputs must go back
//! through `cmreg_string_free`. All functions are safe to call from any
//! thread; the error message is per-thread.

use cmreg::{
    arrangement_to_string, minimal_resolution, parse_arrangement, regularity, sharp_example,
    Arrangement, Error, HomogeneousIdeal, Strategy,
};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status of one call. Anything other than OK leaves a message in
/// `cmreg_last_error`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmregStatus {
    Ok = 0,
    /// Input text or an argument value failed to parse.
    ParseError = 1,
    /// The computation itself failed (degree cap, genericity budget, ...).
    ComputationError = 2,
    /// A required pointer was null or an enum value was out of range.
    InvalidArgument = 3,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 4,
    /// An internal invariant failed; the handle is still valid.
    InternalPanic = 5,
}

/// A parsed subspace arrangement. Opaque; create with
/// `cmreg_arrangement_parse` or `cmreg_sharp_example`, release with
/// `cmreg_arrangement_free`.
pub struct CmregArrangement {
    inner: Arrangement,
}

/// A homogeneous ideal. Opaque; create with `cmreg_intersection_ideal`,
/// release with `cmreg_ideal_free`.
pub struct CmregIdeal {
    inner: HomogeneousIdeal,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn status_of(e: &Error) -> CmregStatus {
    match e {
        Error::Parse { .. } => CmregStatus::ParseError,
        _ => CmregStatus::ComputationError,
    }
}

fn fail(e: &Error) -> CmregStatus {
    set_error(e.to_string());
    status_of(e)
}

fn guard<F: FnOnce() -> CmregStatus>(body: F) -> CmregStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".to_string());
            CmregStatus::InternalPanic
        }
    }
}

fn invalid(what: &str) -> CmregStatus {
    set_error(format!("invalid argument: {what}"));
    CmregStatus::InvalidArgument
}

/// Message for the most recent failure on this thread, or null when no
/// call has failed yet. The pointer stays valid until the next failing
/// call on the same thread.
#[no_mangle]
pub extern "C" fn cmreg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Parses arrangement text (header `ring n=<n> field=<p|Q>`, then one
/// `subspace: <form>; ...` line per subspace) into a new handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` must be a
/// valid location to store the handle.
#[no_mangle]
pub unsafe extern "C" fn cmreg_arrangement_parse(
    text: *const c_char,
    out: *mut *mut CmregArrangement,
) -> CmregStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return invalid("null pointer");
        }
        let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
            set_error("input text is not valid UTF-8".to_string());
            return CmregStatus::InvalidUtf8;
        };
        match parse_arrangement(text) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(CmregArrangement { inner })) };
                CmregStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Builds the d-regular sharp configuration: d lines through d points of
/// a fixed line in P^3. Requires d >= 2.
///
/// # Safety
/// `out` must be a valid location to store the handle.
#[no_mangle]
pub unsafe extern "C" fn cmreg_sharp_example(
    d: usize,
    seed: u64,
    out: *mut *mut CmregArrangement,
) -> CmregStatus {
    guard(|| {
        if out.is_null() {
            return invalid("null pointer");
        }
        if d < 2 {
            return invalid("d must be at least 2");
        }
        match sharp_example(d, seed) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(CmregArrangement { inner })) };
                CmregStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Renders an arrangement in the same text format the parser reads.
/// The string must be released with `cmreg_string_free`.
///
/// # Safety
/// `x` must be a live arrangement handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn cmreg_arrangement_to_text(
    x: *const CmregArrangement,
    out: *mut *mut c_char,
) -> CmregStatus {
    guard(|| {
        if x.is_null() || out.is_null() {
            return invalid("null pointer");
        }
        let text = arrangement_to_string(&unsafe { &*x }.inner);
        match CString::new(text) {
            Ok(s) => {
                unsafe { *out = s.into_raw() };
                CmregStatus::Ok
            }
            Err(_) => {
                set_error("rendered text contained a NUL byte".to_string());
                CmregStatus::InternalPanic
            }
        }
    })
}

/// Number of subspaces in the arrangement.
///
/// # Safety
/// `x` must be a live arrangement handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn cmreg_arrangement_d(
    x: *const CmregArrangement,
    out: *mut usize,
) -> CmregStatus {
    guard(|| {
        if x.is_null() || out.is_null() {
            return invalid("null pointer");
        }
        unsafe { *out = (*x).inner.d() };
        CmregStatus::Ok
    })
}

/// Releases an arrangement handle. Null is a no-op.
///
/// # Safety
/// `x` must be null or a handle not previously freed.
#[no_mangle]
pub unsafe extern "C" fn cmreg_arrangement_free(x: *mut CmregArrangement) {
    if !x.is_null() {
        drop(unsafe { Box::from_raw(x) });
    }
}

/// Computes the intersection ideal of the arrangement as a new handle.
///
/// # Safety
/// `x` must be a live arrangement handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn cmreg_intersection_ideal(
    x: *const CmregArrangement,
    out: *mut *mut CmregIdeal,
) -> CmregStatus {
    guard(|| {
        if x.is_null() || out.is_null() {
            return invalid("null pointer");
        }
        match unsafe { &*x }.inner.intersection_ideal() {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(CmregIdeal { inner })) };
                CmregStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Number of generators the ideal currently carries.
///
/// # Safety
/// `ideal` must be a live ideal handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn cmreg_ideal_generator_count(
    ideal: *const CmregIdeal,
    out: *mut usize,
) -> CmregStatus {
    guard(|| {
        if ideal.is_null() || out.is_null() {
            return invalid("null pointer");
        }
        unsafe { *out = (*ideal).inner.generators().len() };
        CmregStatus::Ok
    })
}

/// Releases an ideal handle. Null is a no-op.
///
/// # Safety
/// `ideal` must be null or a handle not previously freed.
#[no_mangle]
pub unsafe extern "C" fn cmreg_ideal_free(ideal: *mut CmregIdeal) {
    if !ideal.is_null() {
        drop(unsafe { Box::from_raw(ideal) });
    }
}

/// Castelnuovo-Mumford regularity of the ideal. `strategy` selects the
/// route: 0 minimal free resolution, 1 generic hyperplane sections,
/// 2 both with a cross-check. `seed` feeds the generic draws.
///
/// # Safety
/// `ideal` must be a live ideal handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn cmreg_regularity(
    ideal: *const CmregIdeal,
    strategy: i32,
    seed: u64,
    out: *mut i64,
) -> CmregStatus {
    guard(|| {
        if ideal.is_null() || out.is_null() {
            return invalid("null pointer");
        }
        let strategy = match strategy {
            0 => Strategy::Betti,
            1 => Strategy::Hyperplane,
            2 => Strategy::Both,
            _ => return invalid("strategy must be 0, 1, or 2"),
        };
        match regularity(&unsafe { &*ideal }.inner, strategy, seed) {
            Ok(outcome) => {
                unsafe { *out = outcome.regularity };
                CmregStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Renders the minimal graded Betti table of the ideal (rows j - i,
/// columns i, `.` for zero). The string must be released with
/// `cmreg_string_free`.
///
/// # Safety
/// `ideal` must be a live ideal handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn cmreg_betti_table(
    ideal: *const CmregIdeal,
    out: *mut *mut c_char,
) -> CmregStatus {
    guard(|| {
        if ideal.is_null() || out.is_null() {
            return invalid("null pointer");
        }
        match minimal_resolution(&unsafe { &*ideal }.inner) {
            Ok(res) => {
                let text = res.betti_table().render();
                match CString::new(text) {
                    Ok(s) => {
                        unsafe { *out = s.into_raw() };
                        CmregStatus::Ok
                    }
                    Err(_) => {
                        set_error("rendered text contained a NUL byte".to_string());
                        CmregStatus::InternalPanic
                    }
                }
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library and not
/// previously freed.
#[no_mangle]
pub unsafe extern "C" fn cmreg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn c(text: &str) -> CString {
        CString::new(text).unwrap()
    }

    unsafe fn parse(text: &str) -> *mut CmregArrangement {
        let mut handle = ptr::null_mut();
        let status = cmreg_arrangement_parse(c(text).as_ptr(), &mut handle);
        assert_eq!(status, CmregStatus::Ok);
        assert!(!handle.is_null());
        handle
    }

    #[test]
    fn skew_lines_through_the_c_interface() {
        unsafe {
            let x = parse("ring n=3 field=32003\nsubspace: x0; x1\nsubspace: x2; x3\n");
            let mut d = 0usize;
            assert_eq!(cmreg_arrangement_d(x, &mut d), CmregStatus::Ok);
            assert_eq!(d, 2);

            let mut ideal = ptr::null_mut();
            assert_eq!(cmreg_intersection_ideal(x, &mut ideal), CmregStatus::Ok);
            let mut count = 0usize;
            assert_eq!(
                cmreg_ideal_generator_count(ideal, &mut count),
                CmregStatus::Ok
            );
            assert_eq!(count, 4);

            for strategy in 0..=2 {
                let mut reg = 0i64;
                assert_eq!(
                    cmreg_regularity(ideal, strategy, 5, &mut reg),
                    CmregStatus::Ok
                );
                assert_eq!(reg, 2, "strategy {strategy}");
            }

            let mut table = ptr::null_mut();
            assert_eq!(cmreg_betti_table(ideal, &mut table), CmregStatus::Ok);
            let rendered = CStr::from_ptr(table).to_str().unwrap().to_string();
            assert_eq!(rendered, "    0  1  2\n2:  4  4  1\n");
            cmreg_string_free(table);

            cmreg_ideal_free(ideal);
            cmreg_arrangement_free(x);
        }
    }

    #[test]
    fn sharp_examples_round_trip_as_text() {
        unsafe {
            let mut x = ptr::null_mut();
            assert_eq!(cmreg_sharp_example(3, 9, &mut x), CmregStatus::Ok);
            let mut text = ptr::null_mut();
            assert_eq!(cmreg_arrangement_to_text(x, &mut text), CmregStatus::Ok);
            let rendered = CStr::from_ptr(text).to_str().unwrap().to_string();
            cmreg_string_free(text);

            let y = parse(&rendered);
            let mut ideal = ptr::null_mut();
            assert_eq!(cmreg_intersection_ideal(y, &mut ideal), CmregStatus::Ok);
            let mut reg = 0i64;
            assert_eq!(cmreg_regularity(ideal, 0, 0, &mut reg), CmregStatus::Ok);
            assert_eq!(reg, 3);

            cmreg_ideal_free(ideal);
            cmreg_arrangement_free(y);
            cmreg_arrangement_free(x);
        }
    }

    #[test]
    fn error_paths_set_codes_and_messages() {
        unsafe {
            // Null pointers.
            assert_eq!(
                cmreg_arrangement_parse(ptr::null(), ptr::null_mut()),
                CmregStatus::InvalidArgument
            );

            // Parse failure carries the line number in the message.
            let mut handle = ptr::null_mut();
            let status = cmreg_arrangement_parse(
                c("ring n=3 field=32003\nsubspace: x9\n").as_ptr(),
                &mut handle,
            );
            assert_eq!(status, CmregStatus::ParseError);
            assert!(handle.is_null());
            let message = CStr::from_ptr(cmreg_last_error()).to_str().unwrap();
            assert!(message.contains("line 2"), "{message}");

            // Sharp configuration needs d >= 2.
            assert_eq!(
                cmreg_sharp_example(1, 0, &mut handle),
                CmregStatus::InvalidArgument
            );

            // Bad strategy value.
            let x = parse("ring n=3 field=32003\nsubspace: x0; x1\nsubspace: x2; x3\n");
            let mut ideal = ptr::null_mut();
            assert_eq!(cmreg_intersection_ideal(x, &mut ideal), CmregStatus::Ok);
            let mut reg = 0i64;
            assert_eq!(
                cmreg_regularity(ideal, 7, 0, &mut reg),
                CmregStatus::InvalidArgument
            );
            let message = CStr::from_ptr(cmreg_last_error()).to_str().unwrap();
            assert!(message.contains("strategy"));

            cmreg_ideal_free(ideal);
            cmreg_arrangement_free(x);

            // Frees tolerate null.
            cmreg_arrangement_free(ptr::null_mut());
            cmreg_ideal_free(ptr::null_mut());
            cmreg_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn generated_header_declares_the_surface() {
        let header =
            std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cmreg.h"))
                .expect("build script wrote the header");
        for symbol in [
            "CMREG_H",
            "typedef struct CmregArrangement CmregArrangement;",
            "typedef struct CmregIdeal CmregIdeal;",
            "CMREG_STATUS_OK",
            "cmreg_arrangement_parse",
            "cmreg_sharp_example",
            "cmreg_intersection_ideal",
            "cmreg_regularity",
            "cmreg_betti_table",
            "cmreg_string_free",
            "cmreg_last_error",
        ] {
            assert!(header.contains(symbol), "header is missing {symbol}");
        }
    }
}
