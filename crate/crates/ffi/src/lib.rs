//! C interface to `cyclic-hyper`.
//!
//! Sequences and witnesses are opaque handles owned by the caller and
//! released with their `_free` function. Strings returned through `out`
//! parameters are NUL-terminated, heap-allocated and released with
//! [`chd_string_free`]. Every call returns a [`ChdStatus`]; on anything but
//! `OK` or `REJECTED`, [`chd_last_error`] describes the failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclic_hyper::analysis::lower_bound;
use cyclic_hyper::cli::DecisionDocument;
use cyclic_hyper::{build_witness, range_of, recognize, verify_witness, DegreeSequence, Error, Witness};
use num_bigint::BigUint;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChdStatus {
    Ok = 0,
    /// The sequence is not a cyclic hyper degree, or a witness failed verification.
    Rejected = 1,
    Invalid = 2,
    Capacity = 3,
    NullPointer = 4,
    Inconsistent = 5,
    Panic = 6,
}

/// A parsed degree sequence.
pub struct ChdDegrees(DegreeSequence);

/// A certificate together with the sequence it realizes.
pub struct ChdWitness {
    degrees: DegreeSequence,
    witness: Witness,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    let text = CString::new(bytes).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> ChdStatus {
    match e {
        Error::Domain(_) | Error::Validation(_) => ChdStatus::Invalid,
        Error::Capacity { .. } => ChdStatus::Capacity,
        Error::Inconsistent(_) => ChdStatus::Inconsistent,
    }
}

fn fail(status: ChdStatus, msg: impl Into<Vec<u8>>) -> ChdStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> ChdStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning panics into [`ChdStatus::Panic`].
fn guard(f: impl FnOnce() -> ChdStatus) -> ChdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(ChdStatus::Panic, "panic inside cyclic-hyper"))
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, ChdStatus> {
    if text.is_null() {
        return Err(fail(ChdStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(ChdStatus::Invalid, "argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> ChdStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            ChdStatus::Ok
        }
        Err(_) => fail(ChdStatus::Inconsistent, "string contains NUL"),
    }
}

fn parse_big(text: &str) -> Result<BigUint, ChdStatus> {
    text.trim()
        .parse()
        .map_err(|_| fail(ChdStatus::Invalid, format!("malformed integer {text:?}")))
}

/// Message for the most recent failure on this thread. Valid until the next
/// call into this library on the same thread; never null.
#[no_mangle]
pub extern "C" fn chd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses comma-separated decimal degrees such as `"4,1,1,1"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn chd_degrees_parse(text: *const c_char, out: *mut *mut ChdDegrees) -> ChdStatus {
    guard(|| {
        if out.is_null() {
            return fail(ChdStatus::NullPointer, "null out pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match text.parse::<DegreeSequence>() {
            Ok(w) => {
                *out = Box::into_raw(Box::new(ChdDegrees(w)));
                ChdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of entries, or 0 for a null handle.
///
/// # Safety
/// `degrees` must be null or a live handle from [`chd_degrees_parse`].
#[no_mangle]
pub unsafe extern "C" fn chd_degrees_order(degrees: *const ChdDegrees) -> u32 {
    degrees.as_ref().map_or(0, |d| d.0.order())
}

/// # Safety
/// `degrees` must be null or a handle from [`chd_degrees_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chd_degrees_free(degrees: *mut ChdDegrees) {
    if !degrees.is_null() {
        drop(Box::from_raw(degrees));
    }
}

/// Decides the sequence. Returns `OK` and a witness in `out`, or `REJECTED`
/// with `out` set to null.
///
/// # Safety
/// `degrees` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn chd_recognize(degrees: *const ChdDegrees, out: *mut *mut ChdWitness) -> ChdStatus {
    guard(|| {
        if out.is_null() {
            return fail(ChdStatus::NullPointer, "null out pointer");
        }
        *out = ptr::null_mut();
        let Some(ChdDegrees(w)) = degrees.as_ref() else {
            return fail(ChdStatus::NullPointer, "null degrees handle");
        };
        let Some(a) = recognize(w) else {
            return ChdStatus::Rejected;
        };
        match build_witness(w, &a) {
            Ok(witness) => {
                *out = Box::into_raw(Box::new(ChdWitness {
                    degrees: w.clone(),
                    witness,
                }));
                ChdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `witness` must be null or a handle from [`chd_recognize`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chd_witness_free(witness: *mut ChdWitness) {
    if !witness.is_null() {
        drop(Box::from_raw(witness));
    }
}

/// Window length `N` as a decimal string.
///
/// # Safety
/// `witness` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn chd_witness_window(witness: *const ChdWitness, out: *mut *mut c_char) -> ChdStatus {
    guard(|| match (witness.as_ref(), out.is_null()) {
        (Some(h), false) => write_string(out, h.witness.window().to_string()),
        _ => fail(ChdStatus::NullPointer, "null argument"),
    })
}

/// Writes the 1-based vertex carried by each column into `buf[0..n]`.
///
/// # Safety
/// `witness` must be a live handle and `buf` must hold `len` elements.
#[no_mangle]
pub unsafe extern "C" fn chd_witness_permutation(
    witness: *const ChdWitness,
    buf: *mut usize,
    len: usize,
) -> ChdStatus {
    guard(|| {
        let (Some(h), false) = (witness.as_ref(), buf.is_null()) else {
            return fail(ChdStatus::NullPointer, "null argument");
        };
        let perm = h.witness.perm();
        if len < perm.len() {
            return fail(ChdStatus::Capacity, format!("buffer holds {len}, need {}", perm.len()));
        }
        for (k, &j) in perm.iter().enumerate() {
            *buf.add(k) = j + 1;
        }
        ChdStatus::Ok
    })
}

/// Start offset of 1-based column `index` as a decimal string.
///
/// # Safety
/// `witness` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn chd_witness_start(
    witness: *const ChdWitness,
    index: u32,
    out: *mut *mut c_char,
) -> ChdStatus {
    guard(|| {
        let (Some(h), false) = (witness.as_ref(), out.is_null()) else {
            return fail(ChdStatus::NullPointer, "null argument");
        };
        match (index as usize).checked_sub(1).and_then(|k| h.witness.starts().get(k)) {
            Some(s) => write_string(out, s.to_string()),
            None => fail(ChdStatus::Invalid, format!("column {index} out of range")),
        }
    })
}

/// The decision document used by `chd witness --json`, without edges.
///
/// # Safety
/// `witness` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn chd_witness_to_json(witness: *const ChdWitness, out: *mut *mut c_char) -> ChdStatus {
    guard(|| {
        let (Some(h), false) = (witness.as_ref(), out.is_null()) else {
            return fail(ChdStatus::NullPointer, "null argument");
        };
        let doc = DecisionDocument::from_witness(&h.degrees, &h.witness, true);
        match serde_json::to_string(&doc) {
            Ok(s) => write_string(out, s),
            Err(e) => fail(ChdStatus::Inconsistent, e.to_string()),
        }
    })
}

/// Checks `witness` against `degrees`: `OK` if it realizes them, else `REJECTED`.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn chd_witness_verify(degrees: *const ChdDegrees, witness: *const ChdWitness) -> ChdStatus {
    guard(|| {
        let (Some(ChdDegrees(w)), Some(h)) = (degrees.as_ref(), witness.as_ref()) else {
            return fail(ChdStatus::NullPointer, "null handle");
        };
        if verify_witness(w, &h.witness) {
            ChdStatus::Ok
        } else {
            ChdStatus::Rejected
        }
    })
}

/// Range `[lo, hi]` of window sums of column `index` for window length
/// `window` (decimal) at `order`.
///
/// # Safety
/// `window` must be a NUL-terminated string; `lo` and `hi` writable pointers.
#[no_mangle]
pub unsafe extern "C" fn chd_range(
    order: u32,
    index: u32,
    window: *const c_char,
    lo: *mut *mut c_char,
    hi: *mut *mut c_char,
) -> ChdStatus {
    guard(|| {
        if lo.is_null() || hi.is_null() {
            return fail(ChdStatus::NullPointer, "null out pointer");
        }
        let len = match read_str(window).and_then(parse_big) {
            Ok(len) => len,
            Err(s) => return s,
        };
        match range_of(index, &len, order) {
            Ok(r) => {
                let status = write_string(lo, r.lo.to_string());
                if status != ChdStatus::Ok {
                    return status;
                }
                write_string(hi, r.hi.to_string())
            }
            Err(e) => from_error(e),
        }
    })
}

/// `2^((n-1)(n-2)/2)` as a decimal string.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn chd_lower_bound(order: u32, out: *mut *mut c_char) -> ChdStatus {
    guard(|| {
        if out.is_null() {
            return fail(ChdStatus::NullPointer, "null out pointer");
        }
        write_string(out, lower_bound(order).to_string())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
