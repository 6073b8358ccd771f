//! C ABI for `affine-demazure`.
//!
//! Elements cross the boundary as opaque `AdElement` handles owned by the
//! caller and released with [`ad_element_free`]. Every fallible call returns
//! an [`AdStatus`]; on failure [`ad_last_error_message`] describes the error.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use affine_demazure::{
    dem_product, lp_set, parse_element, qbg, wt_length, wt_mul, Coweight, Error, FinitePart, LpSet,
    Side, WeylElt, WtElement,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    OutsideTitsCone = 5,
    Violation = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Opaque handle to an element `w * eps^mu` of the semigroup.
pub struct AdElement(WtElement);

/// `v0 * tau^t` with `v0 = 0` for the identity and `v0 = 1` for `s1`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdWeyl {
    pub v0: i32,
    pub t: i64,
}

/// `k*av + m*d + l*L`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdCoweight {
    pub k: i64,
    pub m: i64,
    pub l: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdLpKind {
    Finite = 0,
    /// The identity and every element whose reduced word starts with `s0`.
    Left = 1,
    /// The identity and every element whose reduced word starts with `s1`.
    Right = 2,
    All = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

type Failure = (AdStatus, String);

fn fail(status: AdStatus, msg: impl Into<String>) -> Failure {
    (status, msg.into())
}

fn from_error(e: Error) -> Failure {
    let status = match e {
        Error::Parse { .. } => AdStatus::Parse,
        Error::OutsideTitsCone(_) => AdStatus::OutsideTitsCone,
        _ => AdStatus::Violation,
    };
    (status, e.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> AdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            AdStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AdStatus::Panic
        }
    }
}

fn weyl_from(w: AdWeyl) -> Result<WeylElt, Failure> {
    let v0 = match w.v0 {
        0 => FinitePart::Identity,
        1 => FinitePart::S1,
        other => {
            return Err(fail(
                AdStatus::InvalidArgument,
                format!("v0 must be 0 or 1, got {other}"),
            ))
        }
    };
    Ok(WeylElt::new(v0, w.t))
}

fn weyl_to(w: WeylElt) -> AdWeyl {
    AdWeyl {
        v0: i32::from(w.v0 == FinitePart::S1),
        t: w.t,
    }
}

fn coweight_to(mu: Coweight) -> AdCoweight {
    AdCoweight {
        k: mu.k,
        m: mu.m,
        l: mu.l,
    }
}

/// # Safety
/// `p` is null or points to a live handle from this library.
unsafe fn element<'a>(p: *const AdElement) -> Result<&'a WtElement, Failure> {
    // SAFETY: the caller guarantees `p` is null or a live handle.
    unsafe { p.as_ref() }
        .map(|h| &h.0)
        .ok_or_else(|| fail(AdStatus::NullPointer, "null element"))
}

/// # Safety
/// `out` is null or valid for one write.
unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(AdStatus::NullPointer, "null output pointer"));
    }
    // SAFETY: checked non-null; the caller guarantees validity.
    unsafe { out.write(value) };
    Ok(())
}

/// # Safety
/// `out` is null or valid for one write.
unsafe fn write_element(out: *mut *mut AdElement, x: WtElement) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(AdStatus::NullPointer, "null output pointer"));
    }
    unsafe { write(out, Box::into_raw(Box::new(AdElement(x)))) }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn ad_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse `<word> e[<coweight>]`, e.g. `"s0 s1 e[-1a+0d+1L]"`.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ad_element_parse(
    text: *const c_char,
    out: *mut *mut AdElement,
) -> AdStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(AdStatus::NullPointer, "null text"));
        }
        // SAFETY: non-null and NUL-terminated per the contract.
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| fail(AdStatus::InvalidUtf8, e.to_string()))?;
        let x = parse_element(s).map_err(from_error)?;
        unsafe { write_element(out, x) }
    })
}

/// # Safety
/// `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ad_element_new(
    w: AdWeyl,
    mu: AdCoweight,
    out: *mut *mut AdElement,
) -> AdStatus {
    guard(|| {
        let w = weyl_from(w)?;
        let x = WtElement::new(w, Coweight::new(mu.k, mu.m, mu.l)).map_err(from_error)?;
        unsafe { write_element(out, x) }
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `x` is null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ad_element_free(x: *mut AdElement) {
    if !x.is_null() {
        // SAFETY: the handle came from Box::into_raw and is freed once.
        drop(unsafe { Box::from_raw(x) });
    }
}

/// # Safety
/// `x` is a live handle; `w` and `mu` are valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn ad_element_components(
    x: *const AdElement,
    w: *mut AdWeyl,
    mu: *mut AdCoweight,
) -> AdStatus {
    guard(|| {
        let x = unsafe { element(x) }?;
        unsafe { write(w, weyl_to(x.w())) }?;
        unsafe { write(mu, coweight_to(x.mu())) }
    })
}

/// # Safety
/// `x` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ad_element_length(x: *const AdElement, out: *mut i64) -> AdStatus {
    guard(|| {
        let x = unsafe { element(x) }?;
        unsafe { write(out, wt_length(*x)) }
    })
}

/// Canonical text form; release it with [`ad_string_free`].
///
/// # Safety
/// `x` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ad_element_to_string(
    x: *const AdElement,
    out: *mut *mut c_char,
) -> AdStatus {
    guard(|| {
        let x = unsafe { element(x) }?;
        let s =
            CString::new(x.to_string()).map_err(|e| fail(AdStatus::Violation, e.to_string()))?;
        unsafe { write(out, s.into_raw()) }
    })
}

/// # Safety
/// `s` is null or a string from [`ad_element_to_string`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ad_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by CString::into_raw in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Semigroup product `xy`.
///
/// # Safety
/// `x`, `y` are live handles; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ad_wt_mul(
    x: *const AdElement,
    y: *const AdElement,
    out: *mut *mut AdElement,
) -> AdStatus {
    guard(|| {
        let (x, y) = unsafe { (element(x)?, element(y)?) };
        unsafe { write_element(out, wt_mul(*x, *y)) }
    })
}

/// Demazure product `x * y` and its length defect. `dist` may be null.
///
/// # Safety
/// `x`, `y` are live handles; `out` is valid for one write; `dist` is null
/// or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ad_dem_product(
    x: *const AdElement,
    y: *const AdElement,
    out: *mut *mut AdElement,
    dist: *mut u64,
) -> AdStatus {
    guard(|| {
        let (x, y) = unsafe { (element(x)?, element(y)?) };
        let res = dem_product(*x, *y).map_err(from_error)?;
        if !dist.is_null() {
            unsafe { write(dist, res.defect) }?;
        }
        unsafe { write_element(out, res.product) }
    })
}

/// Length positive set. For a finite set, up to `cap` elements are written to
/// `buf` and `len` receives the size; if `cap` is too small the call returns
/// `BufferTooSmall` with `len` set. Finite sets have at most three elements.
///
/// # Safety
/// `x` is a live handle; `kind` and `len` are valid for one write; `buf` is
/// valid for `cap` writes (or null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn ad_lp_set(
    x: *const AdElement,
    kind: *mut AdLpKind,
    buf: *mut AdWeyl,
    cap: usize,
    len: *mut usize,
) -> AdStatus {
    guard(|| {
        let x = unsafe { element(x) }?;
        let (k, list) = match lp_set(*x) {
            LpSet::Finite(list) => (AdLpKind::Finite, list),
            LpSet::HalfSide(Side::Left) => (AdLpKind::Left, Vec::new()),
            LpSet::HalfSide(_) => (AdLpKind::Right, Vec::new()),
            LpSet::All => (AdLpKind::All, Vec::new()),
        };
        unsafe { write(kind, k) }?;
        unsafe { write(len, list.len()) }?;
        if list.len() > cap {
            return Err(fail(
                AdStatus::BufferTooSmall,
                format!("need {} slots", list.len()),
            ));
        }
        if !list.is_empty() && buf.is_null() {
            return Err(fail(AdStatus::NullPointer, "null buffer"));
        }
        for (i, v) in list.into_iter().enumerate() {
            // SAFETY: i < len <= cap and buf is valid for cap writes.
            unsafe { buf.add(i).write(weyl_to(v)) };
        }
        Ok(())
    })
}

/// Distance `u => v` in the quantum Bruhat graph.
///
/// # Safety
/// `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ad_qbg_distance(u: AdWeyl, v: AdWeyl, out: *mut u64) -> AdStatus {
    guard(|| {
        let (u, v) = (weyl_from(u)?, weyl_from(v)?);
        unsafe { write(out, qbg::distance(u, v)) }
    })
}

/// Weight of any shortest path `u => v`.
///
/// # Safety
/// `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ad_qbg_weight(u: AdWeyl, v: AdWeyl, out: *mut AdCoweight) -> AdStatus {
    guard(|| {
        let (u, v) = (weyl_from(u)?, weyl_from(v)?);
        unsafe { write(out, coweight_to(qbg::weight(u, v))) }
    })
}
