use std::ffi::{c_char, CStr};
use std::ptr;

use tetrahn_ffi::*;

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    tetrahn_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = tetrahn_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

unsafe fn scroll(twists: &[i64]) -> *mut TetrahnScroll {
    let mut s = ptr::null_mut();
    assert_eq!(tetrahn_scroll_new(twists.as_ptr(), twists.len(), &mut s), TetrahnStatus::Ok);
    s
}

#[test]
fn curve_meets_divisor_in_expected_degree() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(tetrahn_curve_class(7, &mut c), TetrahnStatus::Ok);
        let s = scroll(&[2, 1, 1]);
        let mut h = ptr::null_mut();
        let mut rr = ptr::null_mut();
        let mut h4 = ptr::null_mut();
        let mut d = ptr::null_mut();
        assert_eq!(tetrahn_class_monomial(s, 1, 0, 1, &mut h), TetrahnStatus::Ok);
        assert_eq!(tetrahn_class_monomial(s, 0, 1, -2, &mut rr), TetrahnStatus::Ok);
        assert_eq!(tetrahn_class_scale(h, 4, &mut h4), TetrahnStatus::Ok);
        assert_eq!(tetrahn_class_add(h4, rr, &mut d), TetrahnStatus::Ok);
        let mut n = 0;
        assert_eq!(tetrahn_intersect_number(c, d, &mut n), TetrahnStatus::Ok);
        assert_eq!(n, 40);
        for p in [c, h, rr, h4, d] {
            tetrahn_class_free(p);
        }
        tetrahn_scroll_free(s);
    }
}

#[test]
fn scroll_info_and_relations() {
    unsafe {
        let s = scroll(&[1, 3, 2]);
        let (mut rank, mut c1) = (0usize, 0i64);
        assert_eq!(tetrahn_scroll_info(s, &mut rank, &mut c1), TetrahnStatus::Ok);
        assert_eq!((rank, c1), (3, 6));
        let mut h3 = ptr::null_mut();
        assert_eq!(tetrahn_class_monomial(s, 3, 0, 1, &mut h3), TetrahnStatus::Ok);
        let mut deg = 0;
        assert_eq!(tetrahn_class_degree(h3, &mut deg), TetrahnStatus::Ok);
        assert_eq!(deg, 6);
        let mut coeff = 0;
        assert_eq!(tetrahn_class_coeff(h3, 2, 1, &mut coeff), TetrahnStatus::Ok);
        assert_eq!(coeff, 6);
        let mut json = ptr::null_mut();
        assert_eq!(tetrahn_class_to_json(h3, &mut json), TetrahnStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["scroll"]["twists"], serde_json::json!([3, 2, 1]));
        assert_eq!(v["coeffs"]["H^2 R"], 6);
        tetrahn_class_free(h3);
        tetrahn_scroll_free(s);
    }
}

#[test]
fn retwist_preserves_degree() {
    unsafe {
        let s = scroll(&[3, 2, 2]);
        let mut h3 = ptr::null_mut();
        let mut t = ptr::null_mut();
        tetrahn_class_monomial(s, 3, 0, 1, &mut h3);
        assert_eq!(tetrahn_class_retwist(h3, -1, &mut t), TetrahnStatus::Ok);
        let (mut a, mut b) = (0, 0);
        tetrahn_class_degree(h3, &mut a);
        tetrahn_class_degree(t, &mut b);
        assert_eq!(a, b);
        tetrahn_class_free(h3);
        tetrahn_class_free(t);
        tetrahn_scroll_free(s);
    }
}

#[test]
fn mismatched_scrolls_report_status_and_message() {
    unsafe {
        let s1 = scroll(&[1, 1]);
        let s2 = scroll(&[2, 1]);
        let (mut a, mut b, mut out) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        tetrahn_class_monomial(s1, 1, 0, 1, &mut a);
        tetrahn_class_monomial(s2, 1, 0, 1, &mut b);
        assert_eq!(tetrahn_class_mul(a, b, &mut out), TetrahnStatus::MismatchedScroll);
        assert!(out.is_null());
        assert!(!last_error().is_empty());
        tetrahn_class_free(a);
        tetrahn_class_free(b);
        tetrahn_scroll_free(s1);
        tetrahn_scroll_free(s2);
    }
}

#[test]
fn wrong_codimension_is_reported() {
    unsafe {
        let s = scroll(&[2, 1, 1]);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        tetrahn_class_monomial(s, 1, 0, 1, &mut a);
        tetrahn_class_monomial(s, 1, 0, 1, &mut b);
        let mut n = 0;
        assert_eq!(tetrahn_intersect_number(a, b, &mut n), TetrahnStatus::WrongCodimension);
        tetrahn_class_free(a);
        tetrahn_class_free(b);
        tetrahn_scroll_free(s);
    }
}

#[test]
fn invalid_arguments_and_null_pointers() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(tetrahn_scroll_new([1i64].as_ptr(), 1, &mut s), TetrahnStatus::InvalidArgument);
        assert_eq!(tetrahn_scroll_new(ptr::null(), 3, &mut s), TetrahnStatus::NullPointer);
        let mut v = ptr::null_mut();
        assert_eq!(tetrahn_verify_theorem(5, &mut v), TetrahnStatus::InvalidArgument);
        assert!(last_error().contains("g ≥ 6"));
        let mut deg = 0;
        assert_eq!(tetrahn_class_degree(ptr::null(), &mut deg), TetrahnStatus::NullPointer);
        let (mut n, mut d) = (0, 0);
        assert_eq!(tetrahn_slope(0, 5, &mut n, &mut d), TetrahnStatus::InvalidArgument);
        tetrahn_scroll_free(ptr::null_mut());
        tetrahn_string_free(ptr::null_mut());
    }
}

#[test]
fn slopes_and_bounds_as_fractions() {
    unsafe {
        let (mut n, mut d) = (0, 0);
        assert_eq!(tetrahn_slope(5, 82, &mut n, &mut d), TetrahnStatus::Ok);
        assert_eq!((n, d), (82, 5));
        assert_eq!(tetrahn_slope(4, -6, &mut n, &mut d), TetrahnStatus::Ok);
        assert_eq!((n, d), (-3, 2));
        assert_eq!(tetrahn_combined_bound(7, &mut n, &mut d), TetrahnStatus::Ok);
        assert_eq!((n, d), (84, 5));
    }
}

#[test]
fn verdicts_cross_the_boundary() {
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(tetrahn_verify_theorem(8, &mut v), TetrahnStatus::Ok);
        let mut status = TetrahnVerdictStatus::Fail;
        assert_eq!(tetrahn_verdict_status(v, &mut status), TetrahnStatus::Ok);
        assert_eq!(status, TetrahnVerdictStatus::Pass);
        let mut json = ptr::null_mut();
        assert_eq!(tetrahn_verdict_to_json(v, &mut json), TetrahnStatus::Ok);
        let parsed: tetrahn::TheoremVerdict = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(parsed, tetrahn::tetragonal::verify_theorem(8).unwrap());
        tetrahn_verdict_free(v);
    }
}

#[test]
fn sweep_counts_failures() {
    unsafe {
        let mut json = ptr::null_mut();
        let mut failed = u64::MAX;
        assert_eq!(tetrahn_sweep_json(6, 30, &mut json, &mut failed), TetrahnStatus::Ok);
        assert_eq!(failed, 0);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["entries"].as_array().unwrap().len(), 25);
        assert_eq!(tetrahn_sweep_json(9, 6, &mut json, &mut failed), TetrahnStatus::InvalidArgument);
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/tetrahn.h");
    let src = include_str!("../src/lib.rs");
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 15);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for ty in ["typedef struct TetrahnScroll", "typedef struct TetrahnClass", "typedef struct TetrahnVerdict"] {
        assert!(header.contains(ty), "{ty}");
    }
    assert!(header.contains("TETRAHN_STATUS_OK = 0"));
}
