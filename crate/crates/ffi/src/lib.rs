//! C ABI over `planegraph`.
//!
//! Embeddings are opaque handles released with `pg_embedding_free`. Every
//! fallible call returns a `PgStatus`; on failure `pg_last_error` gives the
//! message for the calling thread. Strings handed out are owned by the
//! caller and released with `pg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use planegraph::cycles::{ag_cycle, pg_cycle};
use planegraph::gf::certificate_record;
use planegraph::graphs::{Embedding, PlaneModel};
use planegraph::plane::{ag_from_field, pg_from_field};
use planegraph::wheelgear::{gear, wheel};
use planegraph::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ImpossibleDegree = 3,
    ConstructionFailed = 4,
    Parse = 5,
    VerificationFailed = 6,
    Internal = 7,
}

/// Opaque embedding of a graph in a plane.
pub struct PgEmbedding {
    inner: Embedding,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn status_of(e: &Error) -> PgStatus {
    match e {
        Error::ImpossibleDegree { .. } => PgStatus::ImpossibleDegree,
        Error::ConstructionFailed(_) | Error::NoCertificate(_) | Error::HypothesisJNotFound(_) => PgStatus::ConstructionFailed,
        Error::Json(_) | Error::Schema(_) | Error::MalformedPlane(_) | Error::PointNotInPlane(_) => PgStatus::Parse,
        _ => PgStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (PgStatus, String)>) -> PgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PgStatus::Internal
        }
    }
}

fn lift(e: Error) -> (PgStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (PgStatus, String) {
    (PgStatus::NullPointer, format!("{what} is null"))
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<(), (PgStatus, String)> {
    let c = CString::new(s).map_err(|e| (PgStatus::Internal, e.to_string()))?;
    // SAFETY: callers check `out` for null before calling.
    unsafe { *out = c.into_raw() };
    Ok(())
}

unsafe fn give_embedding(e: Embedding, out: *mut *mut PgEmbedding) {
    *out = Box::into_raw(Box::new(PgEmbedding { inner: e }));
}

/// Message of the last failed call on this thread, or null. The caller
/// owns the returned string.
#[no_mangle]
pub extern "C" fn pg_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A k-cycle in PG(2,q), or in AG(2,q) when `affine` is nonzero.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn pg_cycle_new(q: u64, k: u64, affine: i32, out: *mut *mut PgEmbedding) -> PgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = if affine != 0 { ag_cycle(q, k) } else { pg_cycle(q, k) }.map_err(lift)?;
        give_embedding(c.to_embedding(), out);
        Ok(())
    })
}

/// The wheel W_n in PG(2,q).
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn pg_wheel_new(q: u64, n: u64, out: *mut *mut PgEmbedding) -> PgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        give_embedding(wheel(q, n).map_err(lift)?.embedding, out);
        Ok(())
    })
}

/// The gear G_n in PG(2,q).
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn pg_gear_new(q: u64, n: u64, out: *mut *mut PgEmbedding) -> PgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        give_embedding(gear(q, n).map_err(lift)?.embedding, out);
        Ok(())
    })
}

/// Parses an embedding file's contents.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pg_embedding_from_json(json: *const c_char, out: *mut *mut PgEmbedding) -> PgStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| (PgStatus::Parse, e.to_string()))?;
        give_embedding(Embedding::from_json(text).map_err(lift)?, out);
        Ok(())
    })
}

/// Serializes an embedding; the caller frees `*out` with `pg_string_free`.
///
/// # Safety
/// `e` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pg_embedding_to_json(e: *const PgEmbedding, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        let (Some(e), false) = (e.as_ref(), out.is_null()) else { return Err(null("argument")) };
        give_string(e.inner.to_json().map_err(lift)?, out)
    })
}

/// Number of graph vertices, 0 for a null handle.
///
/// # Safety
/// `e` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_embedding_vertex_count(e: *const PgEmbedding) -> usize {
    e.as_ref().map_or(0, |e| e.inner.vertex_map.len())
}

/// Point id of vertex `v`.
///
/// # Safety
/// `e` must be a live handle and `point` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pg_embedding_vertex_point(e: *const PgEmbedding, v: usize, point: *mut u32) -> PgStatus {
    guard(|| {
        let (Some(e), false) = (e.as_ref(), point.is_null()) else { return Err(null("argument")) };
        let p = e.inner.vertex_map.get(v).ok_or((PgStatus::InvalidArgument, format!("no vertex {v}")))?;
        *point = *p;
        Ok(())
    })
}

/// Runs the verifier against the coordinatized plane. Returns
/// `VerificationFailed` with the violations as the error message when the
/// embedding does not pass.
///
/// # Safety
/// `e` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_embedding_verify(e: *const PgEmbedding) -> PgStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("embedding"))?;
        if e.inner.plane.model == PlaneModel::Generic {
            return Err((PgStatus::InvalidArgument, "generic embeddings need their plane file".into()));
        }
        let pg = e.inner.plane.coordinatized().map_err(lift)?;
        let report = e.inner.verify(&pg).map_err(lift)?;
        if report.passed() {
            Ok(())
        } else {
            Err((PgStatus::VerificationFailed, report.violations.join("; ")))
        }
    })
}

/// Releases an embedding. Null is ignored.
///
/// # Safety
/// `e` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pg_embedding_free(e: *mut PgEmbedding) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Plane file JSON for PG(2,q), or AG(2,q) when `affine` is nonzero.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pg_plane_export(q: u64, affine: i32, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let plane = if affine != 0 { ag_from_field(q).map(|a| a.to_generic()) } else { pg_from_field(q) }.map_err(lift)?;
        give_string(plane.to_json(), out)
    })
}

/// One Hypothesis J certificate line for q.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pg_hypj_certificate(q: u64, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        give_string(certificate_record(q).map_err(lift)?.to_json_line(), out)
    })
}
