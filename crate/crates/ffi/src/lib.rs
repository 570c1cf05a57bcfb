//! C interface to `tropconv`.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json` or by
//! an operation, and released with the matching `*_free`. Every fallible call
//! returns a [`TcStatus`]; on failure `tc_last_error` describes the problem.
//! Strings returned through `out` parameters are owned by the caller and must
//! be released with `tc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tropconv::classify::is_tconvex_polyhedron;
use tropconv::curve::{check_degree_bound, degree, FanCurve};
use tropconv::hull::{conv_of_complex, tconv_complex_with, tconv_finite, tconv_polyhedron, HullOptions, PolyhedralComplex};
use tropconv::matrix::{trop_det, trop_rank, TropMatrix};
use tropconv::polyhedron::{dim, poly_equal};
use tropconv::rational::format_rational;
use tropconv::{Error, Polyhedron, RatVector};

/// Result of every fallible call. Domain errors mirror the library's error kinds.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    EmptyInput = 10,
    DimensionMismatch = 11,
    CoefficientNormalization = 12,
    IndexOutOfRange = 13,
    ZeroVector = 14,
    ZeroNormal = 15,
    NotLinear = 16,
    NotSquare = 17,
    TooLarge = 18,
    LinealityDirection = 19,
    NotBalanced = 20,
    NotTwoDimensional = 21,
    Panic = 99,
}

impl From<&Error> for TcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::EmptyInput => TcStatus::EmptyInput,
            Error::DimensionMismatch { .. } => TcStatus::DimensionMismatch,
            Error::CoefficientNormalization { .. } => TcStatus::CoefficientNormalization,
            Error::IndexOutOfRange { .. } => TcStatus::IndexOutOfRange,
            Error::ZeroVector => TcStatus::ZeroVector,
            Error::ZeroNormal => TcStatus::ZeroNormal,
            Error::NotLinear(_) => TcStatus::NotLinear,
            Error::NotSquare { .. } => TcStatus::NotSquare,
            Error::TooLarge { .. } => TcStatus::TooLarge,
            Error::LinealityDirection(_) => TcStatus::LinealityDirection,
            Error::NotBalanced(_) => TcStatus::NotBalanced,
            Error::NotTwoDimensional(_) => TcStatus::NotTwoDimensional,
            Error::Parse(_) => TcStatus::Parse,
        }
    }
}

/// A polyhedron in R^n.
pub struct TcPolyhedron(Polyhedron);

/// A finite union of polyhedra.
pub struct TcComplex(PolyhedralComplex);

/// A matrix over the rationals, read tropically.
pub struct TcMatrix(TropMatrix);

/// A fan tropical curve.
pub struct TcCurve(FanCurve);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(TcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(TcStatus::from(&e), e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `f`, recording any error or panic for `tc_last_error`.
fn guard(f: impl FnOnce() -> Outcome<()>) -> TcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TcStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            TcStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T) -> Outcome<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(TcStatus::NullPointer, "null handle".to_string()))
}

unsafe fn out<'a, T>(p: *mut T) -> Outcome<&'a mut T> {
    p.as_mut()
        .ok_or_else(|| Failure(TcStatus::NullPointer, "null output pointer".to_string()))
}

unsafe fn read_json<T: serde::de::DeserializeOwned>(s: *const c_char) -> Outcome<T> {
    if s.is_null() {
        return Err(Failure(TcStatus::NullPointer, "null string".to_string()));
    }
    let text = CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(TcStatus::InvalidUtf8, e.to_string()))?;
    serde_json::from_str(text).map_err(|e| Failure(TcStatus::Parse, e.to_string()))
}

fn to_c_string<T: serde::Serialize>(x: &T) -> *mut c_char {
    let s = serde_json::to_string(x).expect("serializable");
    CString::new(s).expect("json has no interior nul").into_raw()
}

fn boxed<T>(x: T) -> *mut T {
    Box::into_raw(Box::new(x))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn tc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn tc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

// ---- polyhedra ----

/// Reads a polyhedron from its JSON form (H- or V-representation).
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_polyhedron_from_json(json: *const c_char, out_p: *mut *mut TcPolyhedron) -> TcStatus {
    guard(|| {
        let p: Polyhedron = read_json(json)?;
        *out(out_p)? = boxed(TcPolyhedron(p));
        Ok(())
    })
}

/// Convex hull of a JSON list of points.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_polyhedron_from_points_json(json: *const c_char, out_p: *mut *mut TcPolyhedron) -> TcStatus {
    guard(|| {
        let pts: Vec<RatVector> = read_json(json)?;
        *out(out_p)? = boxed(TcPolyhedron(Polyhedron::from_points(&pts)?));
        Ok(())
    })
}

/// Canonical JSON form of a polyhedron.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_polyhedron_to_json(p: *const TcPolyhedron, out_s: *mut *mut c_char) -> TcStatus {
    guard(|| {
        let p = borrow(p)?;
        *out(out_s)? = to_c_string(&p.0.canonical());
        Ok(())
    })
}

/// Dimension of a polyhedron; -1 when empty.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_polyhedron_dim(p: *const TcPolyhedron, out_d: *mut i64) -> TcStatus {
    guard(|| {
        *out(out_d)? = dim(&borrow(p)?.0);
        Ok(())
    })
}

/// Whether two polyhedra are the same set.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_polyhedron_equal(a: *const TcPolyhedron, b: *const TcPolyhedron, out_eq: *mut bool) -> TcStatus {
    guard(|| {
        *out(out_eq)? = poly_equal(&borrow(a)?.0, &borrow(b)?.0)?;
        Ok(())
    })
}

/// Tropical convex hull of a polyhedron.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_polyhedron_tconv(p: *const TcPolyhedron, out_p: *mut *mut TcPolyhedron) -> TcStatus {
    guard(|| {
        let h = tconv_polyhedron(&borrow(p)?.0)?;
        *out(out_p)? = boxed(TcPolyhedron(h));
        Ok(())
    })
}

/// Whether a polyhedron is tropically convex.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_polyhedron_is_tconvex(p: *const TcPolyhedron, out_b: *mut bool) -> TcStatus {
    guard(|| {
        *out(out_b)? = is_tconvex_polyhedron(&borrow(p)?.0)?.is_yes();
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_polyhedron_free(p: *mut TcPolyhedron) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

// ---- complexes ----

/// Reads a complex `{"dim": n, "cells": [...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_from_json(json: *const c_char, out_c: *mut *mut TcComplex) -> TcStatus {
    guard(|| {
        let c: PolyhedralComplex = read_json(json)?;
        *out(out_c)? = boxed(TcComplex(c));
        Ok(())
    })
}

/// Tropical convex hull of a JSON list of points, as a complex.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_tconv_points_json(json: *const c_char, out_c: *mut *mut TcComplex) -> TcStatus {
    guard(|| {
        let pts: Vec<RatVector> = read_json(json)?;
        *out(out_c)? = boxed(TcComplex(tconv_finite(&pts)?));
        Ok(())
    })
}

/// Tropical convex hull of the union of the cells; `refine` splits
/// overlapping output cells.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_tconv(c: *const TcComplex, refine: bool, out_c: *mut *mut TcComplex) -> TcStatus {
    guard(|| {
        let c = borrow(c)?;
        if c.0.is_empty() {
            return Err(Error::EmptyInput.into());
        }
        let h = tconv_complex_with(&c.0, &HullOptions { refine })?;
        *out(out_c)? = boxed(TcComplex(h));
        Ok(())
    })
}

/// Ordinary convex hull of the union of the cells.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_conv(c: *const TcComplex, out_p: *mut *mut TcPolyhedron) -> TcStatus {
    guard(|| {
        let p = conv_of_complex(&borrow(c)?.0)?;
        *out(out_p)? = boxed(TcPolyhedron(p));
        Ok(())
    })
}

/// Largest cell dimension; -1 when there are no cells.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_dim(c: *const TcComplex, out_d: *mut i64) -> TcStatus {
    guard(|| {
        *out(out_d)? = borrow(c)?.0.dim();
        Ok(())
    })
}

/// Number of cells.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_cell_count(c: *const TcComplex, out_n: *mut usize) -> TcStatus {
    guard(|| {
        *out(out_n)? = borrow(c)?.0.cells().len();
        Ok(())
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_to_json(c: *const TcComplex, out_s: *mut *mut c_char) -> TcStatus {
    guard(|| {
        *out(out_s)? = to_c_string(&borrow(c)?.0);
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_free(c: *mut TcComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

// ---- matrices ----

/// Reads a matrix given as a JSON list of rows.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_matrix_from_json(json: *const c_char, out_m: *mut *mut TcMatrix) -> TcStatus {
    guard(|| {
        let m: TropMatrix = read_json(json)?;
        *out(out_m)? = boxed(TcMatrix(m));
        Ok(())
    })
}

/// Tropical determinant. `value` receives the minimum as a rational string
/// such as "-3/2"; `unique` whether exactly one permutation attains it.
///
/// # Safety
/// `m` must be a live handle; `value` and `unique` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_matrix_det(m: *const TcMatrix, value: *mut *mut c_char, unique: *mut bool) -> TcStatus {
    guard(|| {
        let d = trop_det(&borrow(m)?.0)?;
        let value = out(value)?;
        let unique = out(unique)?;
        *value = CString::new(format_rational(&d.value)).expect("no nul").into_raw();
        *unique = d.unique_min;
        Ok(())
    })
}

/// Tropical rank: size of the largest tropically nonsingular minor.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_matrix_rank(m: *const TcMatrix, out_r: *mut usize) -> TcStatus {
    guard(|| {
        *out(out_r)? = trop_rank(&borrow(m)?.0)?;
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_matrix_free(m: *mut TcMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

// ---- curves ----

/// Reads a fan curve `{"ambient": n, "rays": [{"v": [...], "m": k}, ...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_curve_from_json(json: *const c_char, out_c: *mut *mut TcCurve) -> TcStatus {
    guard(|| {
        let c: FanCurve = read_json(json)?;
        *out(out_c)? = boxed(TcCurve(c));
        Ok(())
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_curve_degree(c: *const TcCurve, out_d: *mut u64) -> TcStatus {
    guard(|| {
        *out(out_d)? = degree(&borrow(c)?.0)?;
        Ok(())
    })
}

/// Degree bound report as JSON: dim, deg, holds, ray_max, prop_applicable.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_curve_check_json(c: *const TcCurve, out_s: *mut *mut c_char) -> TcStatus {
    guard(|| {
        let r = check_degree_bound(&borrow(c)?.0)?;
        *out(out_s)? = to_c_string(&r);
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_curve_free(c: *mut TcCurve) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
