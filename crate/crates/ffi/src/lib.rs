//! C ABI for qwhittaker.
//!
//! Results come back through opaque handles that the caller releases with
//! the matching `*_free` function. Every entry point returns a [`QwStatus`];
//! on failure, [`qw_last_error`] describes what went wrong on this thread.
//! Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qwhittaker::cli::serial::serialize;
use qwhittaker::cli::{run, Command, Job};
use qwhittaker::corealg::{rat, LaurentPoly, Partition, QLaurent, QRatio, Rational};
use qwhittaker::error::Error;
use qwhittaker::{macdonald, qtoda, qtorus};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QwStatus {
    Ok = 0,
    VerificationFailed = 1,
    InvalidInput = 2,
    Pole = 3,
    DivisionByZero = 4,
    BudgetExhausted = 5,
    Internal = 6,
    NullPointer = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

impl From<&Error> for QwStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::NonReducedWord(_) => QwStatus::InvalidInput,
            Error::Pole(_) | Error::SingularGram(_) => QwStatus::Pole,
            Error::DivisionByZero(_) | Error::InexactDivision(_) => QwStatus::DivisionByZero,
            Error::BudgetExhausted(_) | Error::PrecisionExhausted(_) => QwStatus::BudgetExhausted,
            Error::MissingEntry(_) | Error::Internal(_) => QwStatus::Internal,
        }
    }
}

enum Poly {
    Rational(LaurentPoly<Rational>),
    Laurent(LaurentPoly<QLaurent>),
    Ratio(LaurentPoly<QRatio>),
}

/// A Laurent polynomial in `z_1, …, z_n` with exact coefficients.
pub struct QwPoly(Poly);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

/// Runs `f`, mapping errors and panics to a status and recording the message.
fn guard(f: impl FnOnce() -> Result<QwStatus, (QwStatus, String)>) -> QwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            set_error("");
            s
        }
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside qwhittaker");
            QwStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (QwStatus, String) {
    (QwStatus::from(&e), e.to_string())
}

fn null(what: &str) -> (QwStatus, String) {
    (QwStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `ptr` must point to `len` readable values, or be null with `len == 0`.
unsafe fn slice<'a>(ptr: *const i64, len: usize, what: &str) -> Result<&'a [i64], (QwStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// # Safety
/// `out` must be valid for a pointer write.
unsafe fn emit(out: *mut *mut QwPoly, p: Poly) -> Result<QwStatus, (QwStatus, String)> {
    *out = Box::into_raw(Box::new(QwPoly(p)));
    Ok(QwStatus::Ok)
}

fn fraction(num: i64, den: i64, what: &str) -> Result<Rational, (QwStatus, String)> {
    if den == 0 {
        return Err((QwStatus::InvalidInput, format!("{what} has zero denominator")));
    }
    Ok(rat(num, den))
}

/// Message for the last failing call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn qw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// `Ψ(p)` from the Gelfand–Zetlin sum, or the normalized `Ψ̃(p)` when
/// `normalized` is true. `p` has `len = ℓ + 1` entries.
///
/// # Safety
/// `point` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_whittaker(
    point: *const i64,
    len: usize,
    normalized: bool,
    out: *mut *mut QwPoly,
) -> QwStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = slice(point, len, "point")?;
        if normalized {
            emit(out, Poly::Laurent(qtoda::whittaker_normalized(p).map_err(lib_err)?))
        } else {
            emit(out, Poly::Ratio(qtoda::whittaker_gz(p).map_err(lib_err)?))
        }
    })
}

/// The quantum-torus matrix element for a dominant `p`.
///
/// # Safety
/// `point` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_torus_matrix_element(point: *const i64, len: usize, out: *mut *mut QwPoly) -> QwStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = slice(point, len, "point")?;
        emit(out, Poly::Laurent(qtorus::whittaker_matrix_element(p).map_err(lib_err)?))
    })
}

/// `P_λ(z; q, t)` in `nvars` variables at rational `q = q_num/q_den`,
/// `t = t_num/t_den`.
///
/// # Safety
/// `lambda` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_macdonald(
    lambda: *const i64,
    len: usize,
    nvars: usize,
    q_num: i64,
    q_den: i64,
    t_num: i64,
    t_den: i64,
    out: *mut *mut QwPoly,
) -> QwStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let lam = partition(slice(lambda, len, "lambda")?, nvars)?;
        let (q, t) = (fraction(q_num, q_den, "q")?, fraction(t_num, t_den, "t")?);
        emit(out, Poly::Rational(macdonald::macdonald_numeric(&lam, nvars, &q, &t).map_err(lib_err)?.poly))
    })
}

/// `P_λ(z; q, 0)` with symbolic `q`.
///
/// # Safety
/// `lambda` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_macdonald_t0(
    lambda: *const i64,
    len: usize,
    nvars: usize,
    out: *mut *mut QwPoly,
) -> QwStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let lam = partition(slice(lambda, len, "lambda")?, nvars)?;
        emit(out, Poly::Ratio(macdonald::macdonald_t0(&lam, nvars).map_err(lib_err)?.poly))
    })
}

fn partition(parts: &[i64], nvars: usize) -> Result<Partition, (QwStatus, String)> {
    Partition::new(parts.to_vec())
        .map_err(lib_err)?
        .padded(nvars)
        .ok_or_else(|| (QwStatus::InvalidInput, format!("{parts:?} does not fit {nvars} variables")))
}

/// Number of variables, or 0 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qw_poly_nvars(poly: *const QwPoly) -> usize {
    match poly.as_ref().map(|p| &p.0) {
        None => 0,
        Some(Poly::Rational(p)) => p.nvars(),
        Some(Poly::Laurent(p)) => p.nvars(),
        Some(Poly::Ratio(p)) => p.nvars(),
    }
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qw_poly_nterms(poly: *const QwPoly) -> usize {
    match poly.as_ref().map(|p| &p.0) {
        None => 0,
        Some(Poly::Rational(p)) => p.len(),
        Some(Poly::Laurent(p)) => p.len(),
        Some(Poly::Ratio(p)) => p.len(),
    }
}

fn to_c_string(s: String, out: *mut *mut c_char) -> Result<QwStatus, (QwStatus, String)> {
    let c = CString::new(s).map_err(|_| (QwStatus::Internal, "output contains a nul byte".to_string()))?;
    // SAFETY: the caller checked `out`.
    unsafe { *out = c.into_raw() };
    Ok(QwStatus::Ok)
}

/// Canonical JSON for `poly`; release the string with [`qw_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_poly_to_json(poly: *const QwPoly, out: *mut *mut c_char) -> QwStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let json = match &p.0 {
            Poly::Rational(p) => serialize(p),
            Poly::Laurent(p) => serialize(p),
            Poly::Ratio(p) => serialize(p),
        };
        to_c_string(json, out)
    })
}

/// Runs verification suites (`suite` may be `"all"`) and writes the JSON
/// report. Returns `Ok` when every suite passes, `VerificationFailed` when
/// some check fails.
///
/// # Safety
/// `suite` must be a nul-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_verify(
    suite: *const c_char,
    rank: usize,
    lo: i64,
    hi: i64,
    trunc: usize,
    out: *mut *mut c_char,
) -> QwStatus {
    guard(|| {
        if suite.is_null() {
            return Err(null("suite"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let name =
            CStr::from_ptr(suite).to_str().map_err(|_| (QwStatus::InvalidUtf8, "suite is not UTF-8".to_string()))?;
        let mut job = Job::new(Command::Verify, rank);
        job.suites = vec![name.to_string()];
        job.range = (lo, hi);
        job.trunc = trunc;
        let res = run(&job).map_err(lib_err)?;
        to_c_string(res.text, out)?;
        Ok(if res.exit == 0 { QwStatus::Ok } else { QwStatus::VerificationFailed })
    })
}

/// Releases a polynomial handle; null is ignored.
///
/// # Safety
/// `poly` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qw_poly_free(poly: *mut QwPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn qw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
