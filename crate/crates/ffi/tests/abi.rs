use std::ffi::{c_char, CStr, CString};
use std::ptr;

use markoff_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mk_string_free(s);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(mk_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn figure_word_through_handles() {
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(mk_word_christoffel(7, 3, &mut w), MkStatus::Ok);
        assert_eq!(mk_word_len(w), 10);
        let mut s = ptr::null_mut();
        assert_eq!(mk_word_to_string(w, &mut s), MkStatus::Ok);
        assert_eq!(take(s), "xxxyxxyxxy");

        let (mut p, mut q) = (0, 0);
        assert!(mk_word_is_christoffel(w, &mut p, &mut q));
        assert_eq!((p, q), (7, 3));

        let (mut w1, mut w2) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(mk_word_factor(w, &mut w1, &mut w2), MkStatus::Ok);
        for (h, want) in [(w1, "xxxyxxy"), (w2, "xxy")] {
            let mut s = ptr::null_mut();
            assert_eq!(mk_word_to_string(h, &mut s), MkStatus::Ok);
            assert_eq!(take(s), want);
            mk_word_free(h);
        }

        let mut n = ptr::null_mut();
        assert_eq!(mk_word_markoff_number(w, &mut n), MkStatus::Ok);
        assert_eq!(take(n), "51641");

        let mut m = ptr::null_mut();
        assert_eq!(mk_word_render(w, MkRenderFormat::Svg, &mut m), MkStatus::Ok);
        assert_eq!(take(m).matches(r#"class="step""#).count(), 10);

        let mut t = ptr::null_mut();
        assert_eq!(mk_triple_of_word(w, &mut t), MkStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(mk_triple_to_string(t, &mut s), MkStatus::Ok);
        assert_eq!(take(s), "(13, 1325, 51641)");
        mk_triple_free(t);
        mk_word_free(w);
    }
}

#[test]
fn mu_of_xy() {
    unsafe {
        let text = CString::new("xy").unwrap();
        let mut w = ptr::null_mut();
        assert_eq!(mk_word_parse(text.as_ptr(), &mut w), MkStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(mk_word_mu(w, &mut s), MkStatus::Ok);
        assert_eq!(take(s), "[[12,5],[7,3]]");
        mk_word_free(w);
    }
}

#[test]
fn triples_round_trip() {
    unsafe {
        let [a, b, c] = ["1325", "13", "51641"].map(|s| CString::new(s).unwrap());
        let mut t = ptr::null_mut();
        assert_eq!(mk_triple_new(a.as_ptr(), b.as_ptr(), c.as_ptr(), &mut t), MkStatus::Ok);
        assert!(mk_triple_is_proper(t));
        let mut s = ptr::null_mut();
        assert_eq!(mk_triple_component(t, 0, &mut s), MkStatus::Ok);
        assert_eq!(take(s), "13");
        assert_eq!(mk_triple_component(t, 3, &mut s), MkStatus::InvalidArgument);

        let mut w = ptr::null_mut();
        assert_eq!(mk_triple_word(t, &mut w), MkStatus::Ok);
        assert_eq!(mk_word_to_string(w, &mut s), MkStatus::Ok);
        assert_eq!(take(s), "xxxyxxyxxy");
        mk_word_free(w);

        let mut f = ptr::null_mut();
        assert_eq!(mk_triple_flip_max(t, &mut f), MkStatus::Ok);
        assert_eq!(mk_triple_to_string(f, &mut s), MkStatus::Ok);
        assert_eq!(take(s), "(13, 34, 1325)");
        mk_triple_free(f);
        mk_triple_free(t);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut w = ptr::null_mut();
        let bad = CString::new("xyz").unwrap();
        assert_eq!(mk_word_parse(bad.as_ptr(), &mut w), MkStatus::InvalidArgument);
        assert!(w.is_null());
        assert_eq!(mk_word_parse(ptr::null(), &mut w), MkStatus::NullPointer);

        let yx = CString::new("yx").unwrap();
        assert_eq!(mk_word_parse(yx.as_ptr(), &mut w), MkStatus::Ok);
        assert!(!mk_word_is_christoffel(w, ptr::null_mut(), ptr::null_mut()));
        let mut t = ptr::null_mut();
        assert_eq!(mk_triple_of_word(w, &mut t), MkStatus::DomainError);
        assert!(!last_error().is_empty());
        mk_word_free(w);

        let [a, b, c] = ["2", "3", "7"].map(|s| CString::new(s).unwrap());
        assert_eq!(mk_triple_new(a.as_ptr(), b.as_ptr(), c.as_ptr(), &mut t), MkStatus::DomainError);
        assert!(last_error().contains("not a Markoff triple"));
        let neg = CString::new("-1").unwrap();
        assert_eq!(mk_triple_new(neg.as_ptr(), b.as_ptr(), c.as_ptr(), &mut t), MkStatus::InvalidArgument);

        let [a, b, c] = ["1", "1", "2"].map(|s| CString::new(s).unwrap());
        assert_eq!(mk_triple_new(a.as_ptr(), b.as_ptr(), c.as_ptr(), &mut t), MkStatus::Ok);
        assert!(!mk_triple_is_proper(t));
        let mut w = ptr::null_mut();
        assert_eq!(mk_triple_word(t, &mut w), MkStatus::DomainError);
        mk_triple_free(t);

        // freeing NULL is a no-op
        mk_word_free(ptr::null_mut());
        mk_triple_free(ptr::null_mut());
        mk_string_free(ptr::null_mut());
    }
}

#[test]
fn bulk_queries() {
    unsafe {
        let bound = CString::new("29").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(mk_markoff_tree_json(bound.as_ptr(), &mut s), MkStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v[4], serde_json::json!(["2", "5", "29"]));

        assert_eq!(mk_injectivity_scan_json(4, &mut s), MkStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["words_checked"], 31 + 2);
        assert!(v["collisions"].as_array().unwrap().is_empty());

        let mut ok = false;
        let bound = CString::new("200").unwrap();
        assert_eq!(mk_cross_check(bound.as_ptr(), &mut ok), MkStatus::Ok);
        assert!(ok);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/markoff.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for ty in ["typedef struct MkWord MkWord;", "typedef struct MkTriple MkTriple;", "MK_STATUS_DOMAIN_ERROR = 3"] {
        assert!(header.contains(ty), "{ty}");
    }
}

/// Compiles and runs a C program against the generated header and the
/// static library cargo built alongside this test.
#[test]
fn c_program_links_and_runs() {
    let target = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).parent().unwrap();
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let lib = target.join(profile).join("libmarkoff_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let manifest = env!("CARGO_MANIFEST_DIR");
    let exe = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("markoff_smoke");
    let status = std::process::Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(format!("{manifest}/include"))
        .arg(format!("{manifest}/tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = std::process::Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "xxxyxxyxxy = xxxyxxy | xxy\n(13, 1325, 51641)\n3\n");
}
