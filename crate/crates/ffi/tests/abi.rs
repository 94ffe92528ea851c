use std::ffi::{CStr, CString};
use std::ptr;

use srgint_ffi::*;

fn last_error() -> String {
    let p = srgint_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { srgint_string_free(s) };
    out
}

fn graph(name: &str) -> *mut SrgintGraph {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { srgint_graph_build(name.as_ptr(), &mut g) },
        SrgintStatus::Ok
    );
    g
}

#[test]
fn build_and_params() {
    let g = graph("hoffman-singleton");
    unsafe {
        assert_eq!(srgint_graph_order(g), 50);
        let mut is = false;
        let mut p = SrgintParams::default();
        assert_eq!(
            srgint_graph_srg_params(g, &mut is, &mut p),
            SrgintStatus::Ok
        );
        assert!(is);
        assert_eq!((p.v, p.k, p.lambda, p.mu), (50, 7, 0, 1));
        let report = take(srgint_graph_report_json(g));
        assert!(report.contains("\"identity_holds\":true"));
        srgint_graph_free(g);
    }
}

#[test]
fn graph6_round_trip_through_abi() {
    let g = graph("petersen");
    unsafe {
        let g6 = CString::new(take(srgint_graph_to_graph6(g))).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(srgint_graph_parse(g6.as_ptr(), &mut h), SrgintStatus::Ok);
        assert_eq!(srgint_graph_order(h), 10);
        srgint_graph_free(h);
        srgint_graph_free(g);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut g = ptr::null_mut();
    let bad = CString::new("no-such-graph").unwrap();
    unsafe {
        assert_eq!(
            srgint_graph_build(bad.as_ptr(), &mut g),
            SrgintStatus::UnknownName
        );
        assert!(g.is_null());
        assert!(last_error().contains("no-such-graph"));
        assert_eq!(
            srgint_graph_build(ptr::null(), &mut g),
            SrgintStatus::NullPointer
        );
        let junk = CString::new("2 2 1\n1").unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(
            srgint_certificate_parse(junk.as_ptr(), &mut c),
            SrgintStatus::Parse
        );
        let mut is = false;
        let mut p = SrgintParams::default();
        assert_eq!(
            srgint_graph_srg_params(ptr::null(), &mut is, &mut p),
            SrgintStatus::NullPointer
        );
        assert_eq!(srgint_graph_order(ptr::null()), 0);
        // freeing null is allowed
        srgint_graph_free(ptr::null_mut());
        srgint_certificate_free(ptr::null_mut());
        srgint_string_free(ptr::null_mut());
    }
}

#[test]
fn search_then_verify() {
    let g = graph("petersen");
    unsafe {
        let mut outcome = SrgintOutcome::Unknown;
        let mut c = ptr::null_mut();
        assert_eq!(
            srgint_search(g, 1, 2, 1_000_000, &mut outcome, &mut c),
            SrgintStatus::Ok
        );
        assert_eq!(outcome, SrgintOutcome::Unsat);
        assert!(c.is_null());

        assert_eq!(
            srgint_search(g, 2, 2, 1_000_000, &mut outcome, &mut c),
            SrgintStatus::Ok
        );
        assert_eq!(outcome, SrgintOutcome::Found);
        let text = CString::new(take(srgint_certificate_to_text(c))).unwrap();
        srgint_certificate_free(c);

        let mut parsed = ptr::null_mut();
        assert_eq!(
            srgint_certificate_parse(text.as_ptr(), &mut parsed),
            SrgintStatus::Ok
        );
        let mut ok = false;
        assert_eq!(
            srgint_certificate_verify(g, parsed, &mut ok),
            SrgintStatus::Ok
        );
        assert!(ok);

        // wrong graph size is a precondition error
        let small = graph("cycle:5");
        assert_eq!(
            srgint_certificate_verify(small, parsed, &mut ok),
            SrgintStatus::Precondition
        );
        assert_eq!(
            srgint_search(small, 0, 2, 10, &mut outcome, ptr::null_mut()),
            SrgintStatus::Precondition
        );
        srgint_graph_free(small);
        srgint_certificate_free(parsed);
        srgint_graph_free(g);
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/srgint.h");
    let src = include_str!("../src/lib.rs");
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .filter_map(|rest| rest.split('(').next())
        .collect();
    assert!(exports.len() >= 12);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
}
