use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use cppt_ffi::*;

fn last_error() -> String {
    let p = cppt_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn handles_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(cppt_graph_canonical(5, &mut g), CpptStatus::Ok);
        assert_eq!(cppt_graph_vertex_count(g), 5);
        assert_eq!(cppt_graph_edge_count(g), 7);
        assert_eq!(cppt_graph_is_valid(g), CpptStatus::Ok);

        let s = cppt_graph_to_json(g);
        let mut back = ptr::null_mut();
        assert_eq!(cppt_graph_from_json(s, &mut back), CpptStatus::Ok);
        let s2 = cppt_graph_to_json(back);
        assert_eq!(CStr::from_ptr(s), CStr::from_ptr(s2));
        cppt_string_free(s);
        cppt_string_free(s2);
        cppt_graph_free(back);
        cppt_graph_free(g);
        cppt_graph_free(ptr::null_mut());
        cppt_string_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("{\"n\": 3").unwrap();
        assert_eq!(cppt_graph_from_json(bad.as_ptr(), &mut g), CpptStatus::Parse);
        assert!(g.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(cppt_graph_from_json(ptr::null(), &mut g), CpptStatus::NullPointer);
        assert_eq!(cppt_graph_canonical(2, &mut g), CpptStatus::Argument);
        assert_eq!(cppt_graph_is_valid(ptr::null()), CpptStatus::NullPointer);
        assert_eq!(cppt_graph_vertex_count(ptr::null()), 0);

        assert_eq!(cppt_graph_canonical(4, &mut g), CpptStatus::Ok);
        let mut h = ptr::null_mut();
        // outer edges never flip
        assert_eq!(cppt_graph_flip(g, 0, 1, 2, 3, &mut h), CpptStatus::Flip);
        assert!(!last_error().is_empty());
        cppt_graph_free(g);
    }
}

#[test]
fn sequences_cross_the_boundary() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(cppt_graph_canonical(6, &mut a), CpptStatus::Ok);
        let mut b = ptr::null_mut();
        assert_eq!(cppt_graph_flip(a, 0, 3, 3, 4, &mut b), CpptStatus::Ok);

        let mut doc = ptr::null_mut();
        let mut len = 0usize;
        assert_eq!(cppt_flip_sequence(a, b, true, &mut doc, &mut len), CpptStatus::Ok);
        assert!(len >= 1);
        let mut end = ptr::null_mut();
        assert_eq!(cppt_sequence_verify(doc, &mut end), CpptStatus::Ok);
        let (x, y) = (cppt_graph_to_json(end), cppt_graph_to_json(b));
        assert_eq!(CStr::from_ptr(x), CStr::from_ptr(y));
        for s in [doc, x, y] {
            cppt_string_free(s);
        }
        for g in [a, b, end] {
            cppt_graph_free(g);
        }
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/cppt.h");
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header])
        .output()
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
