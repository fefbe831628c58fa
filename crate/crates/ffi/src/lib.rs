//! C ABI over the `f4g` library.
//!
//! Graphs are opaque `F4gGraph` handles created from fcd text and released
//! with `f4g_graph_free`. Every fallible call returns an `F4gStatus`; on
//! failure the message is available from `f4g_last_error` until the next
//! call on the same thread. Strings returned by the library are owned by the
//! caller and released with `f4g_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use f4g::certificate::{
    certify_minor, certify_planarity, certify_rp2, certify_s_minor, validate_with_pattern, CertificateDocument,
};
use f4g::obstructions::ComponentPolicy;
use f4g::{parse_diagram_file, Error, FramedFourGraph, NamedGraph};

/// Result of a library call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F4gStatus {
    /// The property holds or the pattern was found.
    Yes = 0,
    /// The property fails or the pattern was not found.
    No = 1,
    /// A required pointer was null.
    NullPointer = 2,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 3,
    /// Input text is not a valid fcd file.
    ParseError = 4,
    /// Unknown named pattern or otherwise invalid argument.
    InvalidArgument = 5,
    /// A produced certificate failed validation.
    InvalidCertificate = 6,
    /// Unexpected internal failure.
    Internal = 7,
}

/// Which question a certificate answers.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F4gQuestion {
    Planar = 0,
    Rp2 = 1,
    Rp2Multi = 2,
}

/// Opaque framed 4-valent graph.
pub struct F4gGraph(FramedFourGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let s = CString::new(message.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: F4gStatus, message: impl Into<String>) -> F4gStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> F4gStatus {
    match e {
        Error::Parse { .. } => F4gStatus::ParseError,
        Error::InvalidCertificate(_) | Error::BadWitness(_) => F4gStatus::InvalidCertificate,
        _ => F4gStatus::InvalidArgument,
    }
}

fn verdict(v: bool) -> F4gStatus {
    if v {
        F4gStatus::Yes
    } else {
        F4gStatus::No
    }
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> F4gStatus) -> F4gStatus {
    clear_error();
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(F4gStatus::Internal, "internal panic"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, F4gStatus> {
    if s.is_null() {
        return Err(fail(F4gStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(F4gStatus::InvalidUtf8, e.to_string()))
}

unsafe fn graph<'a>(g: *const F4gGraph) -> Result<&'a FramedFourGraph, F4gStatus> {
    g.as_ref()
        .map(|g| &g.0)
        .ok_or_else(|| fail(F4gStatus::NullPointer, "null graph"))
}

fn parse(text: &str) -> Result<FramedFourGraph, F4gStatus> {
    parse_diagram_file(text)
        .map(|f| f.graph())
        .map_err(|e| fail(status_of(&e), e.to_string()))
}

fn emit(doc: &CertificateDocument, out: *mut *mut c_char) -> F4gStatus {
    if !out.is_null() {
        let s = CString::new(doc.to_json()).expect("json has no nul");
        unsafe { *out = s.into_raw() };
    }
    verdict(doc.verdict)
}

/// Parses fcd text into a new graph stored in `*out`.
///
/// # Safety
/// `fcd` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f4g_graph_from_fcd(fcd: *const c_char, out: *mut *mut F4gGraph) -> F4gStatus {
    guard(|| {
        if out.is_null() {
            return fail(F4gStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        match text(fcd).and_then(parse) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(F4gGraph(g)));
                F4gStatus::Yes
            }
            Err(s) => s,
        }
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from `f4g_graph_from_fcd` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn f4g_graph_free(g: *mut F4gGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn f4g_graph_vertex_count(g: *const F4gGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Number of connected components, free circles included, or 0 for null.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn f4g_graph_component_count(g: *const F4gGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.components().len())
}

/// Answers `question` for `g`. When `certificate` is non-null it receives
/// the validated JSON certificate, to be released with `f4g_string_free`.
///
/// # Safety
/// `g` must be a live graph handle; `certificate` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f4g_check(
    g: *const F4gGraph,
    question: F4gQuestion,
    certificate: *mut *mut c_char,
) -> F4gStatus {
    guard(|| {
        if !certificate.is_null() {
            *certificate = ptr::null_mut();
        }
        let g = match graph(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        let doc = match question {
            F4gQuestion::Planar => certify_planarity(g),
            F4gQuestion::Rp2 => certify_rp2(g, ComponentPolicy::PerComponent),
            F4gQuestion::Rp2Multi => certify_rp2(g, ComponentPolicy::SingleCrossCap),
        };
        if let Err(e) = validate_with_pattern(&doc, g, None) {
            return fail(F4gStatus::InvalidCertificate, e.to_string());
        }
        emit(&doc, certificate)
    })
}

/// Whether `g` is planar.
///
/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn f4g_is_planar(g: *const F4gGraph) -> F4gStatus {
    f4g_check(g, F4gQuestion::Planar, ptr::null_mut())
}

/// Whether `g` is checkerboard embeddable in the projective plane. With
/// `multi` set, at most one component may be non-planar.
///
/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn f4g_rp2_embeddable(g: *const F4gGraph, multi: bool) -> F4gStatus {
    let q = if multi { F4gQuestion::Rp2Multi } else { F4gQuestion::Rp2 };
    f4g_check(g, q, ptr::null_mut())
}

/// Searches `g` for `pattern` (a name such as `gamma` or `odd_gon(2)`, or fcd
/// text) as a minor, or as an s-minor when `s_minor` is set.
///
/// # Safety
/// `g` must be a live graph handle, `pattern` a nul-terminated string, and
/// `certificate` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f4g_contains(
    g: *const F4gGraph,
    pattern: *const c_char,
    s_minor: bool,
    certificate: *mut *mut c_char,
) -> F4gStatus {
    guard(|| {
        if !certificate.is_null() {
            *certificate = ptr::null_mut();
        }
        let (g, spec) = match (graph(g), text(pattern)) {
            (Ok(g), Ok(p)) => (g, p),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let p = match spec.trim().parse::<NamedGraph>() {
            Ok(named) => match named.graph() {
                Ok(p) => p,
                Err(e) => return fail(F4gStatus::InvalidArgument, e.to_string()),
            },
            Err(_) if spec.starts_with("fcd") => match parse(spec) {
                Ok(p) => p,
                Err(s) => return s,
            },
            Err(e) => return fail(F4gStatus::InvalidArgument, e.to_string()),
        };
        let doc = if s_minor {
            certify_s_minor(g, &p)
        } else {
            certify_minor(g, &p)
        };
        if let Err(e) = validate_with_pattern(&doc, g, Some(&p)) {
            return fail(F4gStatus::InvalidCertificate, e.to_string());
        }
        emit(&doc, certificate)
    })
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn f4g_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn f4g_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
