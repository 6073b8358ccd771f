use std::ffi::{c_char, CStr, CString};
use std::ptr;

use affine_demazure_ffi::*;

fn parse(s: &str) -> *mut AdElement {
    let c = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { ad_element_parse(c.as_ptr(), &mut out) };
    assert_eq!(st, AdStatus::Ok, "{s}: {}", last_error());
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ad_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn text(x: *const AdElement) -> String {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { ad_element_to_string(x, &mut s) }, AdStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ad_string_free(s) };
    out
}

#[test]
fn demazure_product_with_defect() {
    let x = parse("s0 s1 s0 e[2a-4d+1L]");
    let y = parse("s1 t[-1] e[1a-1d+1L]");
    let mut p = ptr::null_mut();
    let mut dist = u64::MAX;
    assert_eq!(
        unsafe { ad_dem_product(x, y, &mut p, &mut dist) },
        AdStatus::Ok
    );
    assert_eq!(dist, 1);
    assert_eq!(text(p), "s0 e[1a-2d+2L]");

    let (mut lx, mut ly, mut lp) = (0, 0, 0);
    unsafe {
        assert_eq!(ad_element_length(x, &mut lx), AdStatus::Ok);
        assert_eq!(ad_element_length(y, &mut ly), AdStatus::Ok);
        assert_eq!(ad_element_length(p, &mut lp), AdStatus::Ok);
    }
    assert_eq!(lp, lx + ly - 1);

    let mut q = ptr::null_mut();
    assert_eq!(
        unsafe { ad_dem_product(x, y, &mut q, ptr::null_mut()) },
        AdStatus::Ok
    );
    assert_eq!(text(q), text(p));

    let mut m = ptr::null_mut();
    assert_eq!(unsafe { ad_wt_mul(x, y, &mut m) }, AdStatus::Ok);
    let (mut w, mut mu) = (AdWeyl { v0: -1, t: 0 }, AdCoweight { k: 0, m: 0, l: 0 });
    assert_eq!(
        unsafe { ad_element_components(m, &mut w, &mut mu) },
        AdStatus::Ok
    );
    assert_eq!(mu, AdCoweight { k: 0, m: -2, l: 2 });

    for h in [x, y, p, q, m] {
        unsafe { ad_element_free(h) };
    }
}

#[test]
fn construct_from_components() {
    let mut x = ptr::null_mut();
    let w = AdWeyl { v0: 1, t: -1 };
    let mu = AdCoweight { k: 1, m: -1, l: 1 };
    assert_eq!(unsafe { ad_element_new(w, mu, &mut x) }, AdStatus::Ok);
    assert_eq!(text(x), text(parse("s1 t[-1] e[1a-1d+1L]")));
    let (mut w2, mut mu2) = (AdWeyl { v0: 0, t: 0 }, AdCoweight { k: 0, m: 0, l: 0 });
    assert_eq!(
        unsafe { ad_element_components(x, &mut w2, &mut mu2) },
        AdStatus::Ok
    );
    assert_eq!((w2, mu2), (w, mu));
    unsafe { ad_element_free(x) };
}

#[test]
fn lp_sets() {
    let x = parse("s1 t[-1] e[1a-1d+1L]");
    let mut kind = AdLpKind::All;
    let mut len = 0;
    let st = unsafe { ad_lp_set(x, &mut kind, ptr::null_mut(), 0, &mut len) };
    assert_eq!(st, AdStatus::BufferTooSmall);
    assert_eq!((kind, len), (AdLpKind::Finite, 3));

    let mut buf = [AdWeyl { v0: 0, t: 0 }; 3];
    let st = unsafe { ad_lp_set(x, &mut kind, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(st, AdStatus::Ok);
    // e, s0 = s1 tau^-1, s0 s1 = tau
    assert_eq!(
        buf,
        [
            AdWeyl { v0: 0, t: 0 },
            AdWeyl { v0: 1, t: -1 },
            AdWeyl { v0: 0, t: 1 },
        ]
    );

    let right = parse("s1 s0 e[0a+2d+0L]");
    let st = unsafe { ad_lp_set(right, &mut kind, ptr::null_mut(), 0, &mut len) };
    assert_eq!(st, AdStatus::Ok);
    assert_eq!((kind, len), (AdLpKind::Right, 0));

    let all = parse("e[3d]");
    assert_eq!(
        unsafe { ad_lp_set(all, &mut kind, ptr::null_mut(), 0, &mut len) },
        AdStatus::Ok
    );
    assert_eq!(kind, AdLpKind::All);
    for h in [x, right, all] {
        unsafe { ad_element_free(h) };
    }
}

#[test]
fn graph_queries() {
    let s0 = AdWeyl { v0: 1, t: -1 };
    let s1 = AdWeyl { v0: 1, t: 0 };
    let mut d = 0;
    assert_eq!(unsafe { ad_qbg_distance(s0, s1, &mut d) }, AdStatus::Ok);
    assert_eq!(d, 2);
    // s0 s1 = tau, quantum edge down to s0 with weight av
    let mut wt = AdCoweight { k: 9, m: 9, l: 9 };
    assert_eq!(
        unsafe { ad_qbg_weight(AdWeyl { v0: 0, t: 1 }, s0, &mut wt) },
        AdStatus::Ok
    );
    assert_eq!(wt, AdCoweight { k: 1, m: 0, l: 0 });
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            ad_element_parse(ptr::null(), &mut out),
            AdStatus::NullPointer
        );
        assert!(!last_error().is_empty());

        let bad = CString::new("s2 e[0a+0d+1L]").unwrap();
        assert_eq!(ad_element_parse(bad.as_ptr(), &mut out), AdStatus::Parse);
        assert!(last_error().contains("byte 0"), "{}", last_error());

        let cone = CString::new("e[1a+0d+0L]").unwrap();
        assert_eq!(ad_element_parse(cone.as_ptr(), &mut out), AdStatus::Parse);

        let utf8 = [0xffu8, 0xfe, 0];
        assert_eq!(
            ad_element_parse(utf8.as_ptr().cast(), &mut out),
            AdStatus::InvalidUtf8
        );

        let ok = CString::new("e[0a+0d+1L]").unwrap();
        assert_eq!(
            ad_element_parse(ok.as_ptr(), ptr::null_mut()),
            AdStatus::NullPointer
        );

        let w = AdWeyl { v0: 2, t: 0 };
        let mu = AdCoweight { k: 0, m: 0, l: 1 };
        assert_eq!(ad_element_new(w, mu, &mut out), AdStatus::InvalidArgument);
        assert!(last_error().contains("v0"));

        let e = AdWeyl { v0: 0, t: 0 };
        let outside = AdCoweight { k: 1, m: 0, l: 0 };
        assert_eq!(
            ad_element_new(e, outside, &mut out),
            AdStatus::OutsideTitsCone
        );

        let mut len = 0;
        assert_eq!(
            ad_element_length(ptr::null(), &mut len),
            AdStatus::NullPointer
        );
        assert_eq!(
            ad_wt_mul(ptr::null(), ptr::null(), &mut out),
            AdStatus::NullPointer
        );

        let mut d = 0;
        assert_eq!(ad_qbg_distance(w, e, &mut d), AdStatus::InvalidArgument);
        assert_eq!(ad_qbg_distance(e, e, &mut d), AdStatus::Ok);
        assert!(last_error().is_empty());

        ad_element_free(ptr::null_mut());
        ad_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/affine_demazure.h"
    ))
    .expect("header generated by the build script");
    for name in [
        "ad_last_error_message",
        "ad_element_parse",
        "ad_element_new",
        "ad_element_free",
        "ad_element_components",
        "ad_element_length",
        "ad_element_to_string",
        "ad_string_free",
        "ad_wt_mul",
        "ad_dem_product",
        "ad_lp_set",
        "ad_qbg_distance",
        "ad_qbg_weight",
        "typedef struct AdElement AdElement",
        "AD_STATUS_BUFFER_TOO_SMALL = 7",
        "AD_LP_KIND_ALL = 3",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}
