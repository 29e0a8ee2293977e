use std::ffi::{CStr, CString};
use std::ptr;

use conelab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn cone(json: &str) -> *mut ConelabCone {
    let mut out = ptr::null_mut();
    assert_eq!(conelab_cone_from_json(c(json).as_ptr(), &mut out), ConelabStatus::Ok);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(conelab_last_error()).to_string_lossy().into_owned()
}

#[test]
fn polar_of_quadrant() {
    unsafe {
        let a = cone(r#"{"dim": 2, "generators": [[1, 0], [0, 1]]}"#);
        let mut p = ptr::null_mut();
        assert_eq!(conelab_cone_polar(a, &mut p), ConelabStatus::Ok);
        let js = conelab_cone_to_json(p);
        let text = CStr::from_ptr(js).to_str().unwrap().to_owned();
        conelab_string_free(js);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["generators"], serde_json::json!([["-1", "0"], ["0", "-1"]]));
        let mut below = true;
        assert_eq!(conelab_cone_leq(a, p, &mut below), ConelabStatus::Ok);
        assert!(!below);
        conelab_cone_free(a);
        conelab_cone_free(p);
    }
}

#[test]
fn meet_join_and_generators() {
    unsafe {
        let coords = [1i64, 0, 0, 1];
        let mut a = ptr::null_mut();
        assert_eq!(conelab_cone_from_generators(2, coords.as_ptr(), 2, &mut a), ConelabStatus::Ok);
        let b = cone(r#"{"dim": 2, "generators": [[-1, 1]]}"#);
        let (mut m, mut j) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(conelab_cone_meet(a, b, &mut m), ConelabStatus::Ok);
        assert_eq!(conelab_cone_join(a, b, &mut j), ConelabStatus::Ok);
        let mut leq = false;
        assert_eq!(conelab_cone_leq(m, j, &mut leq), ConelabStatus::Ok);
        assert!(leq);
        assert_eq!(conelab_cone_dim(j), 2);
        for h in [a, b, m, j] {
            conelab_cone_free(h);
        }
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(conelab_cone_from_json(c("{").as_ptr(), &mut out), ConelabStatus::Parse);
        assert!(out.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(conelab_cone_from_json(ptr::null(), &mut out), ConelabStatus::NullPointer);
        let a = cone(r#"{"dim": 2, "generators": [[1, 0]]}"#);
        let b = cone(r#"{"dim": 3, "generators": [[1, 0, 0]]}"#);
        assert_eq!(conelab_cone_meet(a, b, &mut out), ConelabStatus::DimensionMismatch);
        assert!(last_error().contains("dimension"));
        conelab_cone_free(a);
        conelab_cone_free(b);
        let mut l = ptr::null_mut();
        assert_eq!(conelab_lattice_catalogue(c("nope").as_ptr(), &mut l), ConelabStatus::InvalidArgument);
    }
}

#[test]
fn lattice_laws() {
    unsafe {
        let mut l = ptr::null_mut();
        assert_eq!(conelab_lattice_catalogue(c("MC8").as_ptr(), &mut l), ConelabStatus::Ok);
        assert_eq!(conelab_lattice_size(l), 10);
        let mut w = ptr::null_mut();
        assert_eq!(conelab_lattice_check_law(l, c("pOM").as_ptr(), &mut w), ConelabStatus::Violation);
        let text = CStr::from_ptr(w).to_str().unwrap().to_owned();
        conelab_string_free(w);
        assert!(text.contains("\"a & (~a | b)\""));
        assert_eq!(conelab_lattice_check_law(l, c("OMr").as_ptr(), ptr::null_mut()), ConelabStatus::Violation);
        assert_eq!(conelab_lattice_check_law(l, c("zzz").as_ptr(), ptr::null_mut()), ConelabStatus::Parse);
        conelab_lattice_free(l);

        assert_eq!(conelab_lattice_catalogue(c("O6").as_ptr(), &mut l), ConelabStatus::Ok);
        assert_eq!(conelab_lattice_check_law(l, c("pOM").as_ptr(), ptr::null_mut()), ConelabStatus::Ok);
        conelab_lattice_free(l);
    }
}

#[test]
fn lattice_json_validation() {
    unsafe {
        let bad = r#"{"elements": ["0", "a", "1"], "hasse": [["0", "a"], ["a", "1"]],
                      "comp": {"0": "1", "a": "a", "1": "0"}, "bottom": "0", "top": "1"}"#;
        let mut l = ptr::null_mut();
        assert_eq!(conelab_lattice_from_json(c(bad).as_ptr(), &mut l), ConelabStatus::NotALattice);
        assert!(l.is_null());
    }
}

#[test]
fn fixtures_through_the_abi() {
    unsafe {
        assert_eq!(conelab_fixture_verify(c("mc8-pom").as_ptr()), ConelabStatus::Ok);
        assert_eq!(conelab_fixture_verify(c("missing").as_ptr()), ConelabStatus::InvalidArgument);
    }
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        conelab_cone_free(ptr::null_mut());
        conelab_lattice_free(ptr::null_mut());
        conelab_string_free(ptr::null_mut());
        assert_eq!(conelab_cone_dim(ptr::null()), 0);
        assert!(conelab_cone_to_json(ptr::null()).is_null());
    }
}
