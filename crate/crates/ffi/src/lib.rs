//! C ABI over the `softsim` library.
//!
//! Soft sets cross the boundary as opaque [`SoftsimSoftSet`] handles built
//! from the JSON soft-set format. Every function returns a [`SoftsimStatus`];
//! on failure a message is available from [`softsim_last_error`] until the
//! next call on the same thread. Strings returned by the library must be
//! released with [`softsim_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use softsim::io::{parse_soft_set, to_json};
use softsim::similarity::{is_significantly_similar, SimilarityConfig};
use softsim::softset::{is_soft_subset, soft_equal};
use softsim::{MeasureId, SoftSet, SoftSetError};

/// Opaque soft-set handle.
pub struct SoftsimSoftSet {
    inner: SoftSet,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoftsimStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    SpaceMismatch = 4,
    Precondition = 5,
    UnknownMeasure = 6,
    Undefined = 7,
    InvalidArgument = 8,
    Panic = 9,
}

/// A measure result. `value` is meaningful only when `defined` is true.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SoftsimValue {
    pub defined: bool,
    pub value: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(SoftsimStatus, String);

impl From<SoftSetError> for Failure {
    fn from(e: SoftSetError) -> Self {
        let status = match &e {
            SoftSetError::SpaceMismatch => SoftsimStatus::SpaceMismatch,
            SoftSetError::UnknownMeasure(_) | SoftSetError::WrongMeasureKind { .. } => {
                SoftsimStatus::UnknownMeasure
            }
            SoftSetError::Undefined(_) => SoftsimStatus::Undefined,
            SoftSetError::EmptyIntersection | SoftSetError::EmptyDomain { .. } => {
                SoftsimStatus::Precondition
            }
            SoftSetError::InvalidSteepness(_)
            | SoftSetError::InvalidThreshold(_)
            | SoftSetError::NoTrials => SoftsimStatus::InvalidArgument,
            _ => SoftsimStatus::Parse,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(message: Option<String>) {
    let message = message.map(|m| CString::new(m.replace('\0', " ")).expect("nul bytes removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SoftsimStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error(None);
            SoftsimStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(Some(message));
            status
        }
        Err(_) => {
            set_last_error(Some("internal panic".to_owned()));
            SoftsimStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SoftsimStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SoftsimStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

unsafe fn set_arg<'a>(p: *const SoftsimSoftSet, what: &str) -> Result<&'a SoftSet, Failure> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn measure_arg(p: *const c_char) -> Result<MeasureId, Failure> {
    Ok(str_arg(p, "measure")?.parse::<MeasureId>()?)
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library strings contain no nul")
        .into_raw()
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn softsim_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a soft set from its JSON form into a new handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn softsim_softset_from_json(
    json: *const c_char,
    out: *mut *mut SoftsimSoftSet,
) -> SoftsimStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let parsed = parse_soft_set(str_arg(json, "json")?)?;
        *out = Box::into_raw(Box::new(SoftsimSoftSet {
            inner: parsed.softset,
        }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `set` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn softsim_softset_free(set: *mut SoftsimSoftSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Serializes a soft set to compact JSON.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn softsim_softset_to_json(
    set: *const SoftsimSoftSet,
    out: *mut *mut c_char,
) -> SoftsimStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        *out = c_string(to_json(set_arg(set, "set")?));
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn softsim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates any measure by identifier (`"d"`, `"koczy-e"`, `"ms-prime"`, ...).
/// An undefined result is reported through `out->defined`, not as an error.
///
/// # Safety
/// Pointer arguments must be valid; `measure` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn softsim_measure(
    measure: *const c_char,
    a: *const SoftsimSoftSet,
    b: *const SoftsimSoftSet,
    steepness: f64,
    out: *mut SoftsimValue,
) -> SoftsimStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let v = measure_arg(measure)?.evaluate(set_arg(a, "a")?, set_arg(b, "b")?, steepness)?;
        *out = SoftsimValue {
            defined: v.is_defined(),
            value: v.value().unwrap_or(f64::NAN),
        };
        Ok(())
    })
}

/// Like [`softsim_measure`] but writes the exact rendering (`"5/4"`,
/// `"1/(2+sqrt(3))"`, `"undefined"`) as a new string.
///
/// # Safety
/// Pointer arguments must be valid; `measure` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn softsim_measure_exact(
    measure: *const c_char,
    a: *const SoftsimSoftSet,
    b: *const SoftsimSoftSet,
    steepness: f64,
    out: *mut *mut c_char,
) -> SoftsimStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let v = measure_arg(measure)?.evaluate(set_arg(a, "a")?, set_arg(b, "b")?, steepness)?;
        *out = c_string(v.render_exact());
        Ok(())
    })
}

/// `a ⊆̃ b`.
///
/// # Safety
/// Pointer arguments must be valid.
#[no_mangle]
pub unsafe extern "C" fn softsim_is_soft_subset(
    a: *const SoftsimSoftSet,
    b: *const SoftsimSoftSet,
    out: *mut bool,
) -> SoftsimStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = is_soft_subset(set_arg(a, "a")?, set_arg(b, "b")?)?;
        Ok(())
    })
}

/// Soft equality.
///
/// # Safety
/// Pointer arguments must be valid.
#[no_mangle]
pub unsafe extern "C" fn softsim_soft_equal(
    a: *const SoftsimSoftSet,
    b: *const SoftsimSoftSet,
    out: *mut bool,
) -> SoftsimStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = soft_equal(set_arg(a, "a")?, set_arg(b, "b")?)?;
        Ok(())
    })
}

/// Whether the similarity `measure` reaches one half.
///
/// # Safety
/// Pointer arguments must be valid; `measure` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn softsim_is_significantly_similar(
    measure: *const c_char,
    a: *const SoftsimSoftSet,
    b: *const SoftsimSoftSet,
    steepness: f64,
    out: *mut bool,
) -> SoftsimStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let config = SimilarityConfig::with_steepness(steepness)?;
        *out = is_significantly_similar(
            set_arg(a, "a")?,
            set_arg(b, "b")?,
            measure_arg(measure)?,
            &config,
        )?;
        Ok(())
    })
}
