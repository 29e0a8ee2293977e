//! C ABI over the cone and finite ortholattice toolkit.
//!
//! Objects are opaque handles owned by the caller and released with the
//! matching `_free` function. Every fallible call returns a
//! [`ConelabStatus`]; the message of the last failure on the calling thread
//! is available from [`conelab_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use conelab::error::{ConeError, Error, LatticeError, LawError, ParseError};
use conelab::fixtures::verify_fixture;
use conelab::lattice::{catalogue, FiniteOrtholattice};
use conelab::laws::{law_check_finite, Law, Outcome};
use conelab::PolyCone;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConelabStatus {
    Ok = 0,
    /// The checked property fails; a witness is available.
    Violation = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    DimensionMismatch = 5,
    InvalidArgument = 6,
    NotALattice = 7,
    Panic = 8,
}

/// Opaque polyhedral cone.
pub struct ConelabCone(PolyCone);

/// Opaque finite ortholattice.
pub struct ConelabLattice(FiniteOrtholattice);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: ConelabStatus, msg: impl Into<String>) -> ConelabStatus {
    set_error(msg.into());
    status
}

fn status_of(e: &Error) -> ConelabStatus {
    match e {
        Error::Parse(_) => ConelabStatus::Parse,
        Error::Cone(ConeError::DimensionMismatch { .. })
        | Error::Law(LawError::Cone(ConeError::DimensionMismatch { .. })) => ConelabStatus::DimensionMismatch,
        Error::Lattice(
            LatticeError::NotALattice(..)
            | LatticeError::NotAntisymmetric(..)
            | LatticeError::BadBound(..)
            | LatticeError::ComplementAxiom { .. },
        ) => ConelabStatus::NotALattice,
        _ => ConelabStatus::InvalidArgument,
    }
}

fn from_error(e: Error) -> ConelabStatus {
    fail(status_of(&e), e.to_string())
}

/// Run `f`, turning a panic into [`ConelabStatus::Panic`].
fn guard(f: impl FnOnce() -> ConelabStatus) -> ConelabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ConelabStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, ConelabStatus> {
    if p.is_null() {
        return Err(fail(ConelabStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(ConelabStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> ConelabStatus {
    *out = Box::into_raw(Box::new(value));
    ConelabStatus::Ok
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn conelab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn conelab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a cone from JSON (`dim` plus `generators`, `halfspaces` or `al`).
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_from_json(json: *const c_char, out: *mut *mut ConelabCone) -> ConelabStatus {
    guard(|| {
        if out.is_null() {
            return fail(ConelabStatus::NullPointer, "null output pointer");
        }
        let text = match str_arg(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match PolyCone::from_json_str(text) {
            Ok(c) => put(out, ConelabCone(c)),
            Err(e) => from_error(e),
        }
    })
}

/// Cone generated by `count` integer vectors stored row by row in `coords`.
///
/// # Safety
/// `coords` must point to `dim * count` readable values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_from_generators(
    dim: usize,
    coords: *const i64,
    count: usize,
    out: *mut *mut ConelabCone,
) -> ConelabStatus {
    guard(|| {
        if out.is_null() || (coords.is_null() && count > 0) {
            return fail(ConelabStatus::NullPointer, "null argument");
        }
        if dim == 0 {
            return fail(ConelabStatus::InvalidArgument, ConeError::EmptyDim.to_string());
        }
        let flat = if count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(coords, dim * count)
        };
        let gens: Vec<_> = flat.chunks(dim).map(conelab::rational::int_vec).collect();
        put(out, ConelabCone(PolyCone::from_generators(dim, &gens)))
    })
}

/// # Safety
/// `c` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_free(c: *mut ConelabCone) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live cone handle.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_dim(c: *const ConelabCone) -> usize {
    c.as_ref().map_or(0, |c| c.0.dim())
}

/// # Safety
/// `c` must be a live cone handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_polar(c: *const ConelabCone, out: *mut *mut ConelabCone) -> ConelabStatus {
    guard(|| match (c.as_ref(), out.is_null()) {
        (Some(c), false) => put(out, ConelabCone(c.0.polar())),
        _ => fail(ConelabStatus::NullPointer, "null argument"),
    })
}

unsafe fn binary(
    a: *const ConelabCone,
    b: *const ConelabCone,
    out: *mut *mut ConelabCone,
    op: fn(&PolyCone, &PolyCone) -> Result<PolyCone, ConeError>,
) -> ConelabStatus {
    guard(|| match (a.as_ref(), b.as_ref(), out.is_null()) {
        (Some(a), Some(b), false) => match op(&a.0, &b.0) {
            Ok(c) => put(out, ConelabCone(c)),
            Err(e) => from_error(e.into()),
        },
        _ => fail(ConelabStatus::NullPointer, "null argument"),
    })
}

/// # Safety
/// `a` and `b` must be live cone handles and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_meet(
    a: *const ConelabCone,
    b: *const ConelabCone,
    out: *mut *mut ConelabCone,
) -> ConelabStatus {
    binary(a, b, out, PolyCone::meet)
}

/// # Safety
/// `a` and `b` must be live cone handles and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_join(
    a: *const ConelabCone,
    b: *const ConelabCone,
    out: *mut *mut ConelabCone,
) -> ConelabStatus {
    binary(a, b, out, PolyCone::join)
}

/// Writes whether `a` is contained in `b`.
///
/// # Safety
/// `a` and `b` must be live cone handles and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_leq(
    a: *const ConelabCone,
    b: *const ConelabCone,
    out: *mut bool,
) -> ConelabStatus {
    guard(|| match (a.as_ref(), b.as_ref(), out.is_null()) {
        (Some(a), Some(b), false) => match a.0.leq(&b.0) {
            Ok(v) => {
                *out = v;
                ConelabStatus::Ok
            }
            Err(e) => from_error(e.into()),
        },
        _ => fail(ConelabStatus::NullPointer, "null argument"),
    })
}

/// Canonical JSON of a cone; free with [`conelab_string_free`].
///
/// # Safety
/// `c` must be a live cone handle.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_to_json(c: *const ConelabCone) -> *mut c_char {
    match c.as_ref() {
        Some(c) => into_c_string(c.0.to_json().to_string()),
        None => {
            set_error("null cone".into());
            ptr::null_mut()
        }
    }
}

/// Load a catalogue lattice such as `O6`, `MC8` or `boolean(3)`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn conelab_lattice_catalogue(
    name: *const c_char,
    out: *mut *mut ConelabLattice,
) -> ConelabStatus {
    guard(|| {
        if out.is_null() {
            return fail(ConelabStatus::NullPointer, "null output pointer");
        }
        match str_arg(name) {
            Ok(n) => match catalogue(n) {
                Ok(l) => put(out, ConelabLattice(l)),
                Err(e) => from_error(e.into()),
            },
            Err(s) => s,
        }
    })
}

/// Parse and validate a lattice from JSON.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn conelab_lattice_from_json(
    json: *const c_char,
    out: *mut *mut ConelabLattice,
) -> ConelabStatus {
    guard(|| {
        if out.is_null() {
            return fail(ConelabStatus::NullPointer, "null output pointer");
        }
        match str_arg(json) {
            Ok(t) => match FiniteOrtholattice::from_json_str(t) {
                Ok(l) => put(out, ConelabLattice(l)),
                Err(e) => from_error(e),
            },
            Err(s) => s,
        }
    })
}

/// # Safety
/// `l` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn conelab_lattice_free(l: *mut ConelabLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// # Safety
/// `l` must be a live lattice handle.
#[no_mangle]
pub unsafe extern "C" fn conelab_lattice_size(l: *const ConelabLattice) -> usize {
    l.as_ref().map_or(0, |l| l.0.len())
}

/// Check a law over every tuple of the lattice. Returns
/// [`ConelabStatus::Violation`] when it fails; if `witness` is non-null it
/// then receives the witness as JSON (free with [`conelab_string_free`]).
///
/// # Safety
/// `l` must be a live lattice handle, `law` a nul-terminated string and
/// `witness` null or valid.
#[no_mangle]
pub unsafe extern "C" fn conelab_lattice_check_law(
    l: *const ConelabLattice,
    law: *const c_char,
    witness: *mut *mut c_char,
) -> ConelabStatus {
    guard(|| {
        let Some(l) = l.as_ref() else {
            return fail(ConelabStatus::NullPointer, "null lattice");
        };
        let name = match str_arg(law) {
            Ok(n) => n,
            Err(s) => return s,
        };
        let Ok(law) = name.parse::<Law>() else {
            return from_error(ParseError::UnknownName(name.to_string()).into());
        };
        match law_check_finite(&l.0, law) {
            Ok(v) if v.outcome == Outcome::Holds => ConelabStatus::Ok,
            Ok(v) => {
                if !witness.is_null() {
                    *witness = into_c_string(serde_json::to_string(&v.witness).expect("witness json"));
                }
                ConelabStatus::Violation
            }
            Err(e) => from_error(e.into()),
        }
    })
}

/// Verify a named fixture: `Ok` when every claim holds, `Violation` otherwise.
///
/// # Safety
/// `name` must be a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn conelab_fixture_verify(name: *const c_char) -> ConelabStatus {
    guard(|| match str_arg(name) {
        Ok(n) => match verify_fixture(n) {
            Ok(r) if r.pass => ConelabStatus::Ok,
            Ok(r) => fail(ConelabStatus::Violation, r.to_string()),
            Err(e) => from_error(e),
        },
        Err(s) => s,
    })
}
