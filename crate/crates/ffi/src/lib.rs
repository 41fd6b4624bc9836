//! C ABI for `tetrahn`.
//!
//! # Conventions
//!
//! - Every fallible function returns a [`TetrahnStatus`]; `TETRAHN_STATUS_OK` is 0.
//!   Results are written through out-pointers only on success.
//! - On failure a thread-local message is stored; read it with
//!   [`tetrahn_last_error`]. The pointer stays valid until the next failing call
//!   on the same thread.
//! - Handles (`TetrahnScroll`, `TetrahnClass`, `TetrahnVerdict`) are opaque and
//!   must be released with their `_free` function. Strings returned through
//!   `char **` out-pointers must be released with [`tetrahn_string_free`].
//! - Rationals cross the boundary as an `int64_t` numerator and a positive
//!   `int64_t` denominator in lowest terms.
//!
//! The header `include/tetrahn.h` is generated by cbindgen from this file.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tetrahn::report::{self, ReportRequest};
use tetrahn::tetragonal::{self, VerdictStatus};
use tetrahn::{degeneration, ChowClass, Error, Rational, ScrollModel, TheoremVerdict};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TetrahnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    MismatchedScroll = 3,
    WrongCodimension = 4,
    Overflow = 5,
    Panic = 6,
}

/// Outcome of a filtration verdict.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TetrahnVerdictStatus {
    Pass = 0,
    Conditional = 1,
    Fail = 2,
}

/// Opaque scroll `P(O(a_1) ⊕ … ⊕ O(a_r))`.
pub struct TetrahnScroll(ScrollModel);

/// Opaque Chow class in normal form.
pub struct TetrahnClass(ChowClass);

/// Opaque filtration verdict.
pub struct TetrahnVerdict(TheoremVerdict);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: TetrahnStatus, msg: impl Into<String>) -> TetrahnStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> TetrahnStatus {
    let status = match e {
        Error::MismatchedScroll { .. } => TetrahnStatus::MismatchedScroll,
        Error::Codimension { .. } => TetrahnStatus::WrongCodimension,
        Error::Overflow => TetrahnStatus::Overflow,
        _ => TetrahnStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

/// Runs `f`, converting panics into `TETRAHN_STATUS_PANIC`.
fn guard(f: impl FnOnce() -> TetrahnStatus) -> TetrahnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(TetrahnStatus::Panic, "internal panic"),
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> TetrahnStatus {
    if out.is_null() {
        return fail(TetrahnStatus::NullPointer, "null out-pointer");
    }
    out.write(value);
    TetrahnStatus::Ok
}

unsafe fn write_rational(q: Rational, num: *mut i64, den: *mut i64) -> TetrahnStatus {
    if num.is_null() || den.is_null() {
        return fail(TetrahnStatus::NullPointer, "null out-pointer");
    }
    match (i64::try_from(*q.numer()), i64::try_from(*q.denom())) {
        (Ok(n), Ok(d)) => {
            num.write(n);
            den.write(d);
            TetrahnStatus::Ok
        }
        _ => from_error(Error::Overflow),
    }
}

unsafe fn write_string(s: String, out: *mut *mut c_char) -> TetrahnStatus {
    match CString::new(s) {
        Ok(c) => write_out(out, c.into_raw()),
        Err(_) => fail(TetrahnStatus::InvalidArgument, "string contains a nul byte"),
    }
}

macro_rules! deref {
    ($p:expr) => {
        match $p.as_ref() {
            Some(v) => v,
            None => return fail(TetrahnStatus::NullPointer, concat!("null handle: ", stringify!($p))),
        }
    };
}

/// Message of the last failed call on this thread, or NULL.
#[no_mangle]
pub extern "C" fn tetrahn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a scroll from `len` twists (any order, `len >= 2`).
#[no_mangle]
pub unsafe extern "C" fn tetrahn_scroll_new(
    twists: *const i64,
    len: usize,
    out: *mut *mut TetrahnScroll,
) -> TetrahnStatus {
    guard(|| {
        if twists.is_null() && len > 0 {
            return fail(TetrahnStatus::NullPointer, "null twists");
        }
        let slice = if len == 0 { &[][..] } else { std::slice::from_raw_parts(twists, len) };
        match ScrollModel::new(slice) {
            Ok(s) => write_out(out, Box::into_raw(Box::new(TetrahnScroll(s)))),
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_scroll_free(s: *mut TetrahnScroll) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Rank (dimension) and first Chern class of the scroll.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_scroll_info(
    s: *const TetrahnScroll,
    rank: *mut usize,
    c1: *mut i64,
) -> TetrahnStatus {
    let s = deref!(s);
    if rank.is_null() || c1.is_null() {
        return fail(TetrahnStatus::NullPointer, "null out-pointer");
    }
    rank.write(s.0.rank());
    c1.write(s.0.c1());
    TetrahnStatus::Ok
}

fn boxed(c: ChowClass) -> *mut TetrahnClass {
    Box::into_raw(Box::new(TetrahnClass(c)))
}

/// `coeff · H^h_pow R^r_pow` on `s`, reduced to normal form.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_monomial(
    s: *const TetrahnScroll,
    h_pow: u32,
    r_pow: u32,
    coeff: i64,
    out: *mut *mut TetrahnClass,
) -> TetrahnStatus {
    let s = deref!(s);
    guard(|| write_out(out, boxed(s.0.monomial(h_pow, r_pow, coeff))))
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_free(c: *mut TetrahnClass) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_add(
    a: *const TetrahnClass,
    b: *const TetrahnClass,
    out: *mut *mut TetrahnClass,
) -> TetrahnStatus {
    let (a, b) = (deref!(a), deref!(b));
    guard(|| match a.0.add(&b.0) {
        Ok(c) => write_out(out, boxed(c)),
        Err(e) => from_error(e),
    })
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_mul(
    a: *const TetrahnClass,
    b: *const TetrahnClass,
    out: *mut *mut TetrahnClass,
) -> TetrahnStatus {
    let (a, b) = (deref!(a), deref!(b));
    guard(|| match a.0.mul(&b.0) {
        Ok(c) => write_out(out, boxed(c)),
        Err(e) => from_error(e),
    })
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_scale(
    a: *const TetrahnClass,
    k: i64,
    out: *mut *mut TetrahnClass,
) -> TetrahnStatus {
    let a = deref!(a);
    guard(|| write_out(out, boxed(a.0.scale(k))))
}

/// The class on the scroll with every twist shifted by `m`.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_retwist(
    a: *const TetrahnClass,
    m: i64,
    out: *mut *mut TetrahnClass,
) -> TetrahnStatus {
    let a = deref!(a);
    guard(|| write_out(out, boxed(a.0.retwist(m))))
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_coeff(
    a: *const TetrahnClass,
    h_pow: usize,
    r_pow: usize,
    out: *mut i64,
) -> TetrahnStatus {
    let a = deref!(a);
    write_out(out, a.0.coeff(h_pow, r_pow))
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_degree(a: *const TetrahnClass, out: *mut i64) -> TetrahnStatus {
    let a = deref!(a);
    write_out(out, a.0.degree())
}

/// JSON form `{"scroll": {"twists": [...]}, "coeffs": {...}}`.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_class_to_json(
    a: *const TetrahnClass,
    out: *mut *mut c_char,
) -> TetrahnStatus {
    let a = deref!(a);
    guard(|| write_string(serde_json::to_string(&a.0).expect("serializable"), out))
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_intersect_number(
    curve: *const TetrahnClass,
    divisor: *const TetrahnClass,
    out: *mut i64,
) -> TetrahnStatus {
    let (c, d) = (deref!(curve), deref!(divisor));
    guard(|| match tetrahn::chow::intersect_number(&c.0, &d.0) {
        Ok(n) => write_out(out, n),
        Err(e) => from_error(e),
    })
}

/// `[C]` of the general tetragonal curve of genus `g` on its scroll.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_curve_class(g: i64, out: *mut *mut TetrahnClass) -> TetrahnStatus {
    guard(|| match tetragonal::general_curve(g) {
        Ok(c) => write_out(out, boxed(tetragonal::curve_class(&c))),
        Err(e) => from_error(e),
    })
}

/// `degree / rank` in lowest terms.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_slope(
    rank: u64,
    degree: i64,
    num: *mut i64,
    den: *mut i64,
) -> TetrahnStatus {
    guard(|| match tetrahn::BundleData::new(rank, degree) {
        Ok(b) => write_rational(b.slope(), num, den),
        Err(e) => from_error(e),
    })
}

/// The subbundle bound `2g + 2 + 4/(g-2)` assembled from the degeneration.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_combined_bound(g: i64, num: *mut i64, den: *mut i64) -> TetrahnStatus {
    guard(|| match degeneration::combined_bound(g) {
        Ok(c) => write_rational(c.bound, num, den),
        Err(e) => from_error(e),
    })
}

/// Verdict for the general tetragonal curve of genus `g`.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_verify_theorem(g: i64, out: *mut *mut TetrahnVerdict) -> TetrahnStatus {
    guard(|| match tetragonal::verify_theorem(g) {
        Ok(v) => write_out(out, Box::into_raw(Box::new(TetrahnVerdict(v)))),
        Err(e) => from_error(e),
    })
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_verdict_free(v: *mut TetrahnVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_verdict_status(
    v: *const TetrahnVerdict,
    out: *mut TetrahnVerdictStatus,
) -> TetrahnStatus {
    let v = deref!(v);
    let status = match v.0.status {
        VerdictStatus::Pass => TetrahnVerdictStatus::Pass,
        VerdictStatus::Conditional => TetrahnVerdictStatus::Conditional,
        VerdictStatus::Fail => TetrahnVerdictStatus::Fail,
    };
    write_out(out, status)
}

#[no_mangle]
pub unsafe extern "C" fn tetrahn_verdict_to_json(
    v: *const TetrahnVerdict,
    out: *mut *mut c_char,
) -> TetrahnStatus {
    let v = deref!(v);
    guard(|| write_string(serde_json::to_string(&v.0).expect("serializable"), out))
}

/// Verdicts for every genus in `lo..=hi` as a JSON report document. The number
/// of failed genera is written to `failed`.
#[no_mangle]
pub unsafe extern "C" fn tetrahn_sweep_json(
    lo: i64,
    hi: i64,
    out: *mut *mut c_char,
    failed: *mut u64,
) -> TetrahnStatus {
    guard(|| {
        if failed.is_null() {
            return fail(TetrahnStatus::NullPointer, "null out-pointer");
        }
        match report::run(&ReportRequest::sweep(lo, hi)) {
            Ok(doc) => {
                failed.write(doc.summary.failed);
                write_string(serde_json::to_string(&doc).expect("serializable"), out)
            }
            Err(e) => from_error(e),
        }
    })
}
