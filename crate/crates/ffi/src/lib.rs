//! C interface to `nahopf`.
//!
//! Contexts and elements are opaque handles owned by the caller and released
//! with their `_free` functions. Every fallible call returns a
//! [`NahopfStatus`]; on failure [`nahopf_last_error`] describes the error.
//! Strings returned by the library are released with [`nahopf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nahopf::free_algebra::{parse_element, render, render_tensor};
use nahopf::{Braiding, Error, FreeElement, HopfContext, MultilinearOp, SabininContext};

/// Result codes of all fallible calls.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NahopfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    YangBaxter = 4,
    InvalidBraiding = 5,
    NotInvolutive = 6,
    Arity = 7,
    Invalid = 8,
    Io = 9,
    Panic = 10,
}

/// Which division to compute.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NahopfSide {
    /// `a \ b`
    Left = 0,
    /// `a / b`
    Right = 1,
}

enum Structure {
    Involutive(SabininContext),
    General(HopfContext),
}

/// A loaded braiding with its memo tables.
pub struct NahopfContext {
    structure: Structure,
}

impl NahopfContext {
    fn hopf(&self) -> &HopfContext {
        match &self.structure {
            Structure::Involutive(s) => s.hopf(),
            Structure::General(h) => h,
        }
    }
}

/// An element of the free algebra.
pub struct NahopfElement {
    value: FreeElement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> NahopfStatus {
    match e {
        Error::Parse(_) | Error::UnknownGenerator { .. } | Error::Json(_) => NahopfStatus::Parse,
        Error::YangBaxter { .. } => NahopfStatus::YangBaxter,
        Error::InvalidBraiding(_) => NahopfStatus::InvalidBraiding,
        Error::NotInvolutive => NahopfStatus::NotInvolutive,
        Error::Arity { .. } => NahopfStatus::Arity,
        Error::Shape(_) | Error::Braid(_) => NahopfStatus::Invalid,
        Error::Io(_) => NahopfStatus::Io,
    }
}

struct Failure(NahopfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> NahopfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NahopfStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            NahopfStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(NahopfStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(NahopfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("rendered text has no nul bytes")
        .into_raw()
}

fn boxed(value: FreeElement) -> *mut NahopfElement {
    Box::into_raw(Box::new(NahopfElement { value }))
}

/// Loads a braiding from its JSON definition.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nahopf_context_from_json(
    json: *const c_char,
    out: *mut *mut NahopfContext,
) -> NahopfStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let braiding = Braiding::from_json(text(json, "json")?)?;
        let structure = if braiding.is_involutive() {
            Structure::Involutive(SabininContext::new(braiding)?)
        } else {
            Structure::General(HopfContext::new(braiding))
        };
        *out = Box::into_raw(Box::new(NahopfContext { structure }));
        Ok(())
    })
}

/// Releases a context. Null is ignored.
///
/// # Safety
/// `ctx` must come from [`nahopf_context_from_json`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn nahopf_context_free(ctx: *mut NahopfContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Number of generators, zero for a null context.
///
/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn nahopf_context_dim(ctx: *const NahopfContext) -> usize {
    ctx.as_ref().map_or(0, |c| c.hopf().dim())
}

/// Whether the braiding squares to the identity.
///
/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn nahopf_context_is_involutive(ctx: *const NahopfContext) -> bool {
    ctx.as_ref()
        .is_some_and(|c| matches!(c.structure, Structure::Involutive(_)))
}

/// Parses an element such as `"2*(x1 x2) - 1/3*x1"`.
///
/// # Safety
/// `ctx` must be a live context, `expr` a nul-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nahopf_element_parse(
    ctx: *const NahopfContext,
    expr: *const c_char,
    out: *mut *mut NahopfElement,
) -> NahopfStatus {
    guard(|| {
        let ctx = handle(ctx, "ctx")?;
        let out = out_ptr(out, "out")?;
        let value = parse_element(text(expr, "expr")?, ctx.hopf().dim())?;
        *out = boxed(value);
        Ok(())
    })
}

/// Canonical text of an element; release with [`nahopf_string_free`].
/// Returns null for a null element.
///
/// # Safety
/// `element` must be null or a live element.
#[no_mangle]
pub unsafe extern "C" fn nahopf_element_to_string(element: *const NahopfElement) -> *mut c_char {
    match element.as_ref() {
        Some(e) => to_c_string(render(&e.value)),
        None => ptr::null_mut(),
    }
}

/// Releases an element. Null is ignored.
///
/// # Safety
/// `element` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn nahopf_element_free(element: *mut NahopfElement) {
    if !element.is_null() {
        drop(Box::from_raw(element));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn nahopf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failed call on this thread, or null. Release with
/// [`nahopf_string_free`].
#[no_mangle]
pub extern "C" fn nahopf_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// The coproduct as canonical tensor text, e.g. `1*[1 | x1] + 1*[x1 | 1]`.
///
/// # Safety
/// Pointers must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nahopf_coproduct(
    ctx: *const NahopfContext,
    element: *const NahopfElement,
    out: *mut *mut c_char,
) -> NahopfStatus {
    guard(|| {
        let ctx = handle(ctx, "ctx")?;
        let element = handle(element, "element")?;
        let out = out_ptr(out, "out")?;
        *out = to_c_string(render_tensor(&ctx.hopf().coproduct(&element.value)));
        Ok(())
    })
}

/// Whether `Δ(a) = a⊗1 + 1⊗a`.
///
/// # Safety
/// Pointers must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nahopf_is_primitive(
    ctx: *const NahopfContext,
    element: *const NahopfElement,
    out: *mut bool,
) -> NahopfStatus {
    guard(|| {
        let ctx = handle(ctx, "ctx")?;
        let element = handle(element, "element")?;
        let out = out_ptr(out, "out")?;
        *out = ctx.hopf().is_primitive(&element.value);
        Ok(())
    })
}

/// `a \ b` or `a / b`.
///
/// # Safety
/// Pointers must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nahopf_divide(
    ctx: *const NahopfContext,
    side: NahopfSide,
    a: *const NahopfElement,
    b: *const NahopfElement,
    out: *mut *mut NahopfElement,
) -> NahopfStatus {
    guard(|| {
        let ctx = handle(ctx, "ctx")?;
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        let out = out_ptr(out, "out")?;
        let value = match side {
            NahopfSide::Left => ctx.hopf().left_divide(&a.value, &b.value),
            NahopfSide::Right => ctx.hopf().right_divide(&a.value, &b.value),
        };
        *out = boxed(value);
        Ok(())
    })
}

/// `P_{m,n}` on `count = m + n + 1` elements. Needs an involutive braiding.
///
/// # Safety
/// `args` must point to `count` live element handles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn nahopf_op_p(
    ctx: *const NahopfContext,
    m: usize,
    n: usize,
    args: *const *const NahopfElement,
    count: usize,
    out: *mut *mut NahopfElement,
) -> NahopfStatus {
    guard(|| {
        let ctx = handle(ctx, "ctx")?;
        let out = out_ptr(out, "out")?;
        let Structure::Involutive(sabinin) = &ctx.structure else {
            return Err(Error::NotInvolutive.into());
        };
        if args.is_null() && count > 0 {
            return Err(null("args"));
        }
        let values = (0..count)
            .map(|i| handle(*args.add(i), "argument").map(|e| e.value.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let op = MultilinearOp::P(m, n).checked()?;
        *out = boxed(sabinin.evaluate(&op, &values)?);
        Ok(())
    })
}
