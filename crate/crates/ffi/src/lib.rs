//! C ABI for `intdiff`.
//!
//! Operators and modules cross the boundary as opaque handles owned by the
//! caller and released with the matching `*_free` function. Every fallible
//! call returns an [`IntdiffStatus`]; on failure a message is kept per thread
//! and can be read with [`intdiff_last_error`]. Strings returned through
//! `char **` out-parameters must be released with [`intdiff_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use intdiff::expr::{parse_operator, pretty_print};
use intdiff::module::{decompose, ext_dim, hom_window, is_uniserial, ClassifiedModule, WeightWindowModule};
use intdiff::oracle::check_product;
use intdiff::{CanonicalOperator, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntdiffStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    WindowTooSmall = 4,
    InvalidModule = 5,
    Mismatch = 6,
    Infeasible = 7,
    Panic = 8,
}

/// Opaque operator in canonical form.
pub struct IntdiffOperator(CanonicalOperator);

/// Opaque weight window module.
pub struct IntdiffModule(WeightWindowModule);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> IntdiffStatus {
    match e {
        Error::Syntax { .. } | Error::BadRational(_) | Error::Format(_) => IntdiffStatus::Syntax,
        Error::WindowTooSmall(_) => IntdiffStatus::WindowTooSmall,
        Error::InvalidModule(_) | Error::NotNilpotent | Error::Shape(_) => IntdiffStatus::InvalidModule,
        Error::Mismatch(_) => IntdiffStatus::Mismatch,
        Error::InfeasibleSystem(_) => IntdiffStatus::Infeasible,
    }
}

struct Fail(IntdiffStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> IntdiffStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            IntdiffStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            IntdiffStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(IntdiffStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(IntdiffStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(IntdiffStatus::NullPointer, format!("{name} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail(IntdiffStatus::NullPointer, format!("{name} is null")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn intdiff_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn intdiff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an expression such as `"H*(1 - i*d)"` into canonical form.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_operator_parse(
    text: *const c_char,
    out: *mut *mut IntdiffOperator,
) -> IntdiffStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let op = parse_operator(str_arg(text, "text")?)?;
        *out = Box::into_raw(Box::new(IntdiffOperator(op)));
        Ok(())
    })
}

/// # Safety
/// `op` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn intdiff_operator_free(op: *mut IntdiffOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_operator_mul(
    a: *const IntdiffOperator,
    b: *const IntdiffOperator,
    out: *mut *mut IntdiffOperator,
) -> IntdiffStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        let out = out_arg(out, "out")?;
        *out = Box::into_raw(Box::new(IntdiffOperator(&a.0 * &b.0)));
        Ok(())
    })
}

/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_operator_add(
    a: *const IntdiffOperator,
    b: *const IntdiffOperator,
    out: *mut *mut IntdiffOperator,
) -> IntdiffStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        let out = out_arg(out, "out")?;
        *out = Box::into_raw(Box::new(IntdiffOperator(&a.0 + &b.0)));
        Ok(())
    })
}

/// Canonical text of an operator.
///
/// # Safety
/// `op` must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_operator_to_string(
    op: *const IntdiffOperator,
    out: *mut *mut c_char,
) -> IntdiffStatus {
    guard(|| {
        let op = ref_arg(op, "op")?;
        *out_arg(out, "out")? = to_c_string(pretty_print(&op.0));
        Ok(())
    })
}

/// Writes 1 to `out` when the two operators are equal, else 0.
///
/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_operator_equal(
    a: *const IntdiffOperator,
    b: *const IntdiffOperator,
    out: *mut i32,
) -> IntdiffStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        *out_arg(out, "out")? = i32::from(a.0 == b.0);
        Ok(())
    })
}

/// Checks `a * b` against the action on polynomials of degree at most `n`.
/// Writes 1 to `out` on agreement, else 0.
///
/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_operator_check_product(
    a: *const IntdiffOperator,
    b: *const IntdiffOperator,
    n: usize,
    out: *mut i32,
) -> IntdiffStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        *out_arg(out, "out")? = i32::from(check_product(&a.0, &b.0, n));
        Ok(())
    })
}

/// Builds the windowed model of `"M(n,λ)"` or `"Kx"`. With `use_window`
/// zero the default window is used and `lo`, `hi` are ignored.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_module_make(
    spec: *const c_char,
    use_window: i32,
    lo: i64,
    hi: i64,
    out: *mut *mut IntdiffModule,
) -> IntdiffStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let spec: ClassifiedModule = str_arg(spec, "spec")?.parse()?;
        let window = (use_window != 0).then_some((lo, hi));
        *out = Box::into_raw(Box::new(IntdiffModule(spec.to_module(window)?)));
        Ok(())
    })
}

/// Reads a module from its JSON file format.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_module_from_json(
    json: *const c_char,
    out: *mut *mut IntdiffModule,
) -> IntdiffStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let m = WeightWindowModule::from_json(str_arg(json, "json")?)?;
        *out = Box::into_raw(Box::new(IntdiffModule(m)));
        Ok(())
    })
}

/// # Safety
/// `m` must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_module_to_json(
    m: *const IntdiffModule,
    out: *mut *mut c_char,
) -> IntdiffStatus {
    guard(|| {
        let m = ref_arg(m, "module")?;
        *out_arg(out, "out")? = to_c_string(m.0.to_json());
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn intdiff_module_free(m: *mut IntdiffModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Decomposition summary such as `"Kx + M(2,0)"`.
///
/// # Safety
/// `m` must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_module_decompose(
    m: *const IntdiffModule,
    out: *mut *mut c_char,
) -> IntdiffStatus {
    guard(|| {
        let m = ref_arg(m, "module")?;
        *out_arg(out, "out")? = to_c_string(decompose(&m.0)?.to_string());
        Ok(())
    })
}

/// Dimension of the space of module maps `a → b` on a common window.
///
/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_module_hom_dim(
    a: *const IntdiffModule,
    b: *const IntdiffModule,
    out: *mut usize,
) -> IntdiffStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        *out_arg(out, "out")? = hom_window(&a.0, &b.0)?.dim();
        Ok(())
    })
}

/// Writes 1 to `out` when the submodules of `m` form a chain, else 0.
///
/// # Safety
/// `m` must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn intdiff_module_is_uniserial(
    m: *const IntdiffModule,
    out: *mut i32,
) -> IntdiffStatus {
    guard(|| {
        let m = ref_arg(m, "module")?;
        *out_arg(out, "out")? = i32::from(is_uniserial(&m.0)?.uniserial);
        Ok(())
    })
}

/// First extension group between two indecomposables given as spec
/// strings. `computed` is this library's value, `claimed` the value from
/// the classification literature.
///
/// # Safety
/// Strings must be NUL-terminated; out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn intdiff_ext_dim(
    a: *const c_char,
    b: *const c_char,
    computed: *mut usize,
    claimed: *mut usize,
) -> IntdiffStatus {
    guard(|| {
        let a: ClassifiedModule = str_arg(a, "a")?.parse()?;
        let b: ClassifiedModule = str_arg(b, "b")?.parse()?;
        let r = ext_dim(&a, &b)?;
        *out_arg(computed, "computed")? = r.computed;
        *out_arg(claimed, "claimed")? = r.paper_claim;
        Ok(())
    })
}
