use std::ffi::{CStr, CString};
use std::ptr;

use intdiff_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn parse(s: &str) -> *mut IntdiffOperator {
    let mut op = ptr::null_mut();
    assert_eq!(intdiff_operator_parse(cstr(s).as_ptr(), &mut op), IntdiffStatus::Ok);
    op
}

unsafe fn text(op: *const IntdiffOperator) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(intdiff_operator_to_string(op, &mut s), IntdiffStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    intdiff_string_free(s);
    out
}

#[test]
fn operator_round_trip() {
    unsafe {
        let d = parse("d");
        let i = parse("i");
        let mut p = ptr::null_mut();
        assert_eq!(intdiff_operator_mul(i, d, &mut p), IntdiffStatus::Ok);
        assert_eq!(text(p), "1 - e(0,0)");
        let mut q = ptr::null_mut();
        assert_eq!(intdiff_operator_mul(d, i, &mut q), IntdiffStatus::Ok);
        assert_eq!(text(q), "1");

        let mut ok = -1;
        assert_eq!(intdiff_operator_check_product(i, d, 20, &mut ok), IntdiffStatus::Ok);
        assert_eq!(ok, 1);

        let reparsed = parse(&text(p));
        let mut eq = -1;
        assert_eq!(intdiff_operator_equal(p, reparsed, &mut eq), IntdiffStatus::Ok);
        assert_eq!(eq, 1);

        for h in [d, i, p, q, reparsed] {
            intdiff_operator_free(h);
        }
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut op = ptr::null_mut();
        assert_eq!(intdiff_operator_parse(cstr("d*").as_ptr(), &mut op), IntdiffStatus::Syntax);
        assert!(op.is_null());
        let msg = CStr::from_ptr(intdiff_last_error()).to_str().unwrap();
        assert!(msg.contains("syntax error"), "{msg}");

        assert_eq!(intdiff_operator_parse(ptr::null(), &mut op), IntdiffStatus::NullPointer);
        let mut s = ptr::null_mut();
        assert_eq!(intdiff_operator_to_string(ptr::null(), &mut s), IntdiffStatus::NullPointer);

        let one = parse("1");
        assert!(intdiff_last_error().is_null());
        intdiff_operator_free(one);
        intdiff_operator_free(ptr::null_mut());
        intdiff_string_free(ptr::null_mut());
    }
}

#[test]
fn module_calls() {
    unsafe {
        let mut a = ptr::null_mut();
        let mut b = ptr::null_mut();
        assert_eq!(intdiff_module_make(cstr("M(2,1/2)").as_ptr(), 0, 0, 0, &mut a), IntdiffStatus::Ok);
        assert_eq!(intdiff_module_make(cstr("M(3,1/2)").as_ptr(), 0, 0, 0, &mut b), IntdiffStatus::Ok);
        let mut dim = 0;
        assert_eq!(intdiff_module_hom_dim(a, b, &mut dim), IntdiffStatus::Ok);
        assert_eq!(dim, 2);

        let mut s = ptr::null_mut();
        assert_eq!(intdiff_module_decompose(b, &mut s), IntdiffStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "M(3,1/2)");
        intdiff_string_free(s);

        let mut uni = -1;
        assert_eq!(intdiff_module_is_uniserial(b, &mut uni), IntdiffStatus::Ok);
        assert_eq!(uni, 1);

        let mut json = ptr::null_mut();
        assert_eq!(intdiff_module_to_json(a, &mut json), IntdiffStatus::Ok);
        let mut c = ptr::null_mut();
        assert_eq!(intdiff_module_from_json(json, &mut c), IntdiffStatus::Ok);
        intdiff_string_free(json);
        assert_eq!(intdiff_module_hom_dim(c, a, &mut dim), IntdiffStatus::Ok);
        assert_eq!(dim, 2);

        let (mut computed, mut claimed) = (0, 0);
        assert_eq!(
            intdiff_ext_dim(cstr("M(2,0)").as_ptr(), cstr("M(3,0)").as_ptr(), &mut computed, &mut claimed),
            IntdiffStatus::Ok
        );
        assert_eq!((computed, claimed), (2, 1));

        let mut small = ptr::null_mut();
        assert_eq!(intdiff_module_make(cstr("M(1,0)").as_ptr(), 1, 2, 6, &mut small), IntdiffStatus::Ok);
        assert_eq!(intdiff_module_hom_dim(small, small, &mut dim), IntdiffStatus::WindowTooSmall);

        assert_eq!(intdiff_module_make(cstr("M(0,x)").as_ptr(), 0, 0, 0, &mut small), IntdiffStatus::Syntax);

        for m in [a, b, c, small] {
            intdiff_module_free(m);
        }
    }
}
