//! C interface to `homlie`.
//!
//! Every function returns an [`HlStatus`]; results come back through out-pointers.
//! Objects are opaque handles released with their `_free` function, and strings
//! handed out by the library are released with [`hl_string_free`]. After a
//! non-`Ok` status, [`hl_last_error_message`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use homlie::algebra::json::{algebra_from_json_str, algebra_to_json};
use homlie::algebra::{parse_algebra_name, AlgebraSpec, LinearMap};
use homlie::cli::scenarios;
use homlie::exactlin::scalar::parse_scalar;
use homlie::homsolver::{solve_structures, HomSolution, StructureKind};
use homlie::Error;

/// Outcome of a library call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownAlgebra = 3,
    LawViolation = 4,
    Parse = 5,
    Internal = 6,
}

/// An algebra given by structure constants.
pub struct HlAlgebra(AlgebraSpec);

/// A solved space of structure maps.
pub struct HlSolution(HomSolution);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> HlStatus {
    match e {
        Error::UnknownAlgebra(_) => HlStatus::UnknownAlgebra,
        Error::LawViolation { .. } => HlStatus::LawViolation,
        Error::Parse(_) | Error::Json(_) => HlStatus::Parse,
        Error::Io(_) => HlStatus::Internal,
        _ => HlStatus::InvalidArgument,
    }
}

struct Fail(HlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(HlStatus::NullPointer, format!("`{what}` is null"))
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HlStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            HlStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HlStatus::InvalidArgument, format!("`{what}` is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(HlStatus::Internal, "string contains NUL".into()))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn hl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Looks up a builtin algebra such as `"sl3"` or `"trunc_poly2"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_builtin(
    name: *const c_char,
    out: *mut *mut HlAlgebra,
) -> HlStatus {
    guard(|| {
        let alg = parse_algebra_name(str_arg(name, "name")?)?;
        put(out, Box::into_raw(Box::new(HlAlgebra(alg))), "out")
    })
}

/// Reads an algebra from its JSON description.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_from_json(
    json: *const c_char,
    out: *mut *mut HlAlgebra,
) -> HlStatus {
    guard(|| {
        let alg = algebra_from_json_str(str_arg(json, "json")?)?;
        put(out, Box::into_raw(Box::new(HlAlgebra(alg))), "out")
    })
}

/// Dimension of the algebra, or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_dim(alg: *const HlAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.0.dim())
}

/// JSON description of the algebra; free with [`hl_string_free`].
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_to_json(
    alg: *const HlAlgebra,
    out: *mut *mut c_char,
) -> HlStatus {
    guard(|| {
        let alg = alg.as_ref().ok_or_else(|| null("alg"))?;
        put(out, c_string(algebra_to_json(&alg.0).to_string())?, "out")
    })
}

/// # Safety
/// `alg` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_free(alg: *mut HlAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Solves for structure maps of the given kind: `"hom-lie"`, `"hom-cyclic"`,
/// `"hom-2nilp"`, `"multiplicative"` or `"delta:p/q"`.
///
/// # Safety
/// `alg` must be a live handle, `kind` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hl_solve(
    alg: *const HlAlgebra,
    kind: *const c_char,
    out: *mut *mut HlSolution,
) -> HlStatus {
    guard(|| {
        let alg = alg.as_ref().ok_or_else(|| null("alg"))?;
        let kind = StructureKind::parse(str_arg(kind, "kind")?)?;
        let sol = solve_structures(&alg.0, kind)?;
        put(out, Box::into_raw(Box::new(HlSolution(sol))), "out")
    })
}

/// Dimension of the solution space, or 0 for a null handle.
///
/// # Safety
/// `sol` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hl_solution_dim(sol: *const HlSolution) -> usize {
    sol.as_ref().map_or(0, |s| s.0.dim())
}

/// JSON description of the solution; free with [`hl_string_free`].
///
/// # Safety
/// `sol` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hl_solution_to_json(
    sol: *const HlSolution,
    out: *mut *mut c_char,
) -> HlStatus {
    guard(|| {
        let sol = sol.as_ref().ok_or_else(|| null("sol"))?;
        put(out, c_string(sol.0.to_json().to_string())?, "out")
    })
}

/// # Safety
/// `sol` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn hl_solution_free(sol: *mut HlSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}

/// Tests whether the map with row-major entries `entries[0..len]` (each a
/// rational such as `"3"` or `"-1/2"`) lies in the solution space.
///
/// # Safety
/// `sol` must be a live handle, `entries` must point to `len` NUL-terminated
/// strings, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hl_solution_contains(
    sol: *const HlSolution,
    entries: *const *const c_char,
    len: usize,
    out: *mut bool,
) -> HlStatus {
    guard(|| {
        let sol = sol.as_ref().ok_or_else(|| null("sol"))?;
        if entries.is_null() {
            return Err(null("entries"));
        }
        let v = std::slice::from_raw_parts(entries, len)
            .iter()
            .map(|&p| Ok(parse_scalar(str_arg(p, "entry")?)?))
            .collect::<Result<Vec<_>, Fail>>()?;
        let phi = LinearMap::from_vector(sol.0.algebra.dim(), &v)?;
        put(out, sol.0.contains(&phi)?, "out")
    })
}

/// Runs a registered scenario. `passed` receives whether every check held and
/// `report` (if non-null) its JSON result, to be freed with [`hl_string_free`].
///
/// # Safety
/// `id` must be a NUL-terminated string; `passed` must be writable; `report`
/// must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn hl_reproduce(
    id: *const c_char,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> HlStatus {
    guard(|| {
        let result = scenarios::find(str_arg(id, "id")?)?.run()?;
        put(passed, result.status != scenarios::Status::Fail, "passed")?;
        if !report.is_null() {
            let json = serde_json::to_string(&result).map_err(Error::from)?;
            report.write(c_string(json)?);
        }
        Ok(())
    })
}
