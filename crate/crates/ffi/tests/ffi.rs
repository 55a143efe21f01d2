use std::ffi::{CStr, CString};
use std::ptr;

use homlie_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hl_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    hl_string_free(p);
    s
}

#[test]
fn solve_and_contains() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            hl_algebra_builtin(c("sl2").as_ptr(), &mut alg),
            HlStatus::Ok
        );
        assert_eq!(hl_algebra_dim(alg), 3);
        let mut sol = ptr::null_mut();
        assert_eq!(hl_solve(alg, c("hom-lie").as_ptr(), &mut sol), HlStatus::Ok);
        assert_eq!(hl_solution_dim(sol), 6);

        let id: Vec<CString> = ["1", "0", "0", "0", "1", "0", "0", "0", "1"]
            .iter()
            .map(|s| c(s))
            .collect();
        let ptrs: Vec<_> = id.iter().map(|s| s.as_ptr()).collect();
        let mut inside = false;
        assert_eq!(
            hl_solution_contains(sol, ptrs.as_ptr(), ptrs.len(), &mut inside),
            HlStatus::Ok
        );
        assert!(inside);
        // Too few entries for a 3×3 map.
        assert_eq!(
            hl_solution_contains(sol, ptrs.as_ptr(), 4, &mut inside),
            HlStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());

        let mut json = ptr::null_mut();
        assert_eq!(hl_solution_to_json(sol, &mut json), HlStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["dim"], 6);

        hl_solution_free(sol);
        hl_algebra_free(alg);
    }
}

#[test]
fn json_round_trip() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            hl_algebra_builtin(c("heisenberg").as_ptr(), &mut alg),
            HlStatus::Ok
        );
        let mut json = ptr::null_mut();
        assert_eq!(hl_algebra_to_json(alg, &mut json), HlStatus::Ok);
        let text = c(&take_string(json));
        let mut back = ptr::null_mut();
        assert_eq!(hl_algebra_from_json(text.as_ptr(), &mut back), HlStatus::Ok);
        assert_eq!(hl_algebra_dim(back), 3);
        hl_algebra_free(back);
        hl_algebra_free(alg);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            hl_algebra_builtin(c("e8").as_ptr(), &mut alg),
            HlStatus::UnknownAlgebra
        );
        assert!(last_error().contains("e8"));
        assert!(alg.is_null());
        assert_eq!(
            hl_algebra_builtin(ptr::null(), &mut alg),
            HlStatus::NullPointer
        );
        assert_eq!(
            hl_algebra_from_json(c("{").as_ptr(), &mut alg),
            HlStatus::Parse
        );
        assert_eq!(
            hl_algebra_builtin(c("sl2").as_ptr(), ptr::null_mut()),
            HlStatus::NullPointer
        );

        assert_eq!(
            hl_algebra_builtin(c("sl2").as_ptr(), &mut alg),
            HlStatus::Ok
        );
        assert!(last_error().is_empty());
        let mut sol = ptr::null_mut();
        assert_eq!(
            hl_solve(alg, c("hom-everything").as_ptr(), &mut sol),
            HlStatus::Parse
        );
        assert_eq!(
            hl_solve(ptr::null(), c("hom-lie").as_ptr(), &mut sol),
            HlStatus::NullPointer
        );
        hl_algebra_free(alg);
        hl_algebra_free(ptr::null_mut());
        hl_solution_free(ptr::null_mut());
        hl_string_free(ptr::null_mut());
        assert_eq!(hl_algebra_dim(ptr::null()), 0);
    }
}

#[test]
fn reproduce() {
    unsafe {
        let mut passed = false;
        let mut report = ptr::null_mut();
        assert_eq!(
            hl_reproduce(c("prop-2.1").as_ptr(), &mut passed, &mut report),
            HlStatus::Ok
        );
        assert!(passed);
        let v: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
        assert_eq!(v["id"], "prop-2.1");
        assert_eq!(
            hl_reproduce(c("lemma-2.5-sl2").as_ptr(), &mut passed, ptr::null_mut()),
            HlStatus::Ok
        );
        assert!(!passed);
        assert_eq!(
            hl_reproduce(c("nope").as_ptr(), &mut passed, ptr::null_mut()),
            HlStatus::InvalidArgument
        );
    }
}

#[test]
fn header_declares_every_function() {
    let header = include_str!("../include/homlie.h");
    for f in [
        "hl_last_error_message",
        "hl_string_free",
        "hl_algebra_builtin",
        "hl_algebra_from_json",
        "hl_algebra_dim",
        "hl_algebra_to_json",
        "hl_algebra_free",
        "hl_solve",
        "hl_solution_dim",
        "hl_solution_to_json",
        "hl_solution_contains",
        "hl_solution_free",
        "hl_reproduce",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
}
