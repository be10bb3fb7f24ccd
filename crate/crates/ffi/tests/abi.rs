use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use fp5_ffi::*;

fn last_error() -> String {
    let msg = fp5_last_error_message();
    assert!(!msg.is_null());
    unsafe { CStr::from_ptr(msg) }.to_string_lossy().into_owned()
}

fn ids(names: &[&str]) -> (Vec<CString>, Vec<*const c_char>) {
    let owned: Vec<CString> = names.iter().map(|n| CString::new(*n).unwrap()).collect();
    let ptrs = owned.iter().map(|c| c.as_ptr()).collect();
    (owned, ptrs)
}

fn coords() -> Fp5PentaCoords {
    Fp5PentaCoords {
        tau: 0.0,
        phi: 0.0,
        kappa: 0.0,
        pi: 0.0,
        iota: 0.0,
    }
}

fn grade(tau: f64, phi: f64, kappa: f64, pi: f64) -> Fp5Grade4 {
    Fp5Grade4 { tau, phi, kappa, pi }
}

unsafe fn make_set(names: &[&str], grades: &[Fp5Grade4]) -> *mut Fp5Set {
    let (_owned, ptrs) = ids(names);
    let mut set = ptr::null_mut();
    assert_eq!(
        fp5_set_new(ptrs.as_ptr(), grades.as_ptr(), grades.len(), &mut set),
        Fp5Status::Ok
    );
    set
}

#[test]
fn scalar_functions() {
    let mut out = 0.0;
    unsafe {
        assert_eq!(fp5_tnorm(2.0, 0.5, 0.5, &mut out), Fp5Status::Ok);
        assert!((out - 0.228_446_696_836_388_03).abs() < 1e-12);
        assert_eq!(fp5_tconorm(f64::INFINITY, 0.5, 0.7, &mut out), Fp5Status::Ok);
        assert_eq!(out, 1.0);
        assert_eq!(fp5_conjugate_tnorm(2.0, 0.3, 0.8, &mut out), Fp5Status::Ok);
        assert!((out - 0.251_246_554_369_205_93).abs() < 1e-12);

        assert_eq!(fp5_tnorm(2.0, 1.5, 0.5, &mut out), Fp5Status::OutOfRange);
        assert!(last_error().contains("1.5"));
        assert_eq!(fp5_tnorm(-1.0, 0.5, 0.5, &mut out), Fp5Status::InvalidParameter);
        assert_eq!(fp5_tnorm(f64::NAN, 0.5, 0.5, &mut out), Fp5Status::InvalidParameter);
        assert_eq!(fp5_tnorm(2.0, 0.5, 0.5, ptr::null_mut()), Fp5Status::NullPointer);
    }
}

#[test]
fn decompose_and_compose() {
    let mut c = coords();
    unsafe {
        assert_eq!(fp5_decompose_lg(0.7, 0.2, &mut c), Fp5Status::Ok);
        let expected = [0.5, 0.0, 0.0, 0.1, 0.4];
        for (got, want) in [c.tau, c.phi, c.kappa, c.pi, c.iota].iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
        let (mut x, mut y) = (0.0, 0.0);
        assert_eq!(fp5_compose(&c, &mut x, &mut y), Fp5Status::Ok);
        assert!((x - 0.7).abs() < 1e-12 && (y - 0.2).abs() < 1e-12);

        assert_eq!(fp5_decompose(10.0, 0.3, 0.6, &mut c), Fp5Status::Ok);
        assert!((c.tau + c.phi + c.kappa + c.pi + c.iota - 1.0).abs() < 1e-9);

        let bad = Fp5PentaCoords {
            tau: 0.5,
            phi: 0.5,
            kappa: 0.5,
            pi: 0.0,
            iota: 0.0,
        };
        assert_eq!(fp5_compose(&bad, &mut x, &mut y), Fp5Status::PartitionViolation);
        assert_eq!(fp5_compose(ptr::null(), &mut x, &mut y), Fp5Status::NullPointer);
        assert_eq!(fp5_decompose_lg(0.5, -0.1, &mut c), Fp5Status::OutOfRange);
    }
}

#[test]
fn truth_connectives() {
    assert_eq!(
        fp5_or(Fp5Truth::Undefined, Fp5Truth::Contradictory),
        Fp5Truth::Indeterminate
    );
    assert_eq!(fp5_and(Fp5Truth::True, Fp5Truth::False), Fp5Truth::False);
    assert_eq!(fp5_not(Fp5Truth::True), Fp5Truth::False);
    assert_eq!(fp5_not(Fp5Truth::Contradictory), Fp5Truth::Contradictory);
}

#[test]
fn expressions() {
    let text = CString::new("!(a & b) | c").unwrap();
    let mut expr = ptr::null_mut();
    let mut offset = 0usize;
    unsafe {
        assert_eq!(fp5_expr_parse(text.as_ptr(), &mut expr, &mut offset), Fp5Status::Ok);
        let assignment = CString::new("a=T,b=C,c=F").unwrap();
        let mut value = Fp5Truth::True;
        assert_eq!(fp5_expr_eval(expr, assignment.as_ptr(), &mut value), Fp5Status::Ok);
        assert_eq!(value, Fp5Truth::Indeterminate);

        let partial = CString::new("a=T").unwrap();
        assert_eq!(
            fp5_expr_eval(expr, partial.as_ptr(), &mut value),
            Fp5Status::UnboundVariable
        );
        assert!(last_error().contains('b'));

        let printed = fp5_expr_to_string(expr);
        assert_eq!(CStr::from_ptr(printed).to_str().unwrap(), "!(a & b) | c");
        fp5_string_free(printed);
        fp5_expr_free(expr);

        let broken = CString::new("a &").unwrap();
        let mut none = ptr::null_mut();
        assert_eq!(
            fp5_expr_parse(broken.as_ptr(), &mut none, &mut offset),
            Fp5Status::ParseError
        );
        assert!(none.is_null());
        assert_eq!(offset, 3);

        assert_eq!(
            fp5_expr_parse(ptr::null(), &mut none, &mut offset),
            Fp5Status::NullPointer
        );
        let invalid = [0xffu8 as c_char, 0];
        assert_eq!(
            fp5_expr_parse(invalid.as_ptr(), &mut none, &mut offset),
            Fp5Status::InvalidUtf8
        );

        fp5_expr_free(ptr::null_mut());
        fp5_string_free(ptr::null_mut());
    }
}

#[test]
fn set_operations() {
    unsafe {
        let a = make_set(&["e1", "e2"], &[grade(0.0, 0.0, 0.0, 1.0), grade(1.0, 0.0, 0.0, 0.0)]);
        let b = make_set(&["e1", "e2"], &[grade(0.0, 0.0, 1.0, 0.0), grade(0.0, 1.0, 0.0, 0.0)]);
        let couple = CString::new("minmax").unwrap();

        let mut joined = ptr::null_mut();
        assert_eq!(fp5_set_union(a, b, couple.as_ptr(), &mut joined), Fp5Status::Ok);
        assert_eq!(fp5_set_len(joined), 2);
        assert_eq!(CStr::from_ptr(fp5_set_element_id(joined, 0)).to_str().unwrap(), "e1");
        let mut c = coords();
        assert_eq!(fp5_set_get(joined, 0, &mut c), Fp5Status::Ok);
        assert_eq!((c.tau, c.phi, c.kappa, c.pi, c.iota), (0.0, 0.0, 0.0, 0.0, 1.0));
        assert_eq!(fp5_set_get(joined, 1, &mut c), Fp5Status::Ok);
        assert_eq!(c.tau, 1.0);
        assert_eq!(fp5_set_get(joined, 2, &mut c), Fp5Status::OutOfRange);
        assert!(fp5_set_element_id(joined, 2).is_null());

        let mut met = ptr::null_mut();
        assert_eq!(fp5_set_intersection(a, b, couple.as_ptr(), &mut met), Fp5Status::Ok);
        assert_eq!(fp5_set_get(met, 1, &mut c), Fp5Status::Ok);
        assert_eq!(c.phi, 1.0);

        let mut flipped = ptr::null_mut();
        assert_eq!(fp5_set_complement(a, &mut flipped), Fp5Status::Ok);
        assert_eq!(fp5_set_get(flipped, 1, &mut c), Fp5Status::Ok);
        assert_eq!((c.tau, c.phi), (0.0, 1.0));

        let bogus = CString::new("nope").unwrap();
        let mut none = ptr::null_mut();
        assert_eq!(
            fp5_set_union(a, b, bogus.as_ptr(), &mut none),
            Fp5Status::InvalidParameter
        );

        let other = make_set(&["e1", "e3"], &[grade(1.0, 0.0, 0.0, 0.0), grade(1.0, 0.0, 0.0, 0.0)]);
        assert_eq!(
            fp5_set_union(a, other, couple.as_ptr(), &mut none),
            Fp5Status::UniverseMismatch
        );
        assert!(last_error().contains("e3"));
        assert!(none.is_null());

        for set in [a, b, joined, met, flipped, other] {
            fp5_set_free(set);
        }
        fp5_set_free(ptr::null_mut());
        assert_eq!(fp5_set_len(ptr::null()), 0);
    }
}

#[test]
fn set_construction_errors() {
    unsafe {
        let (_owned, ptrs) = ids(&["x", "x"]);
        let grades = [grade(1.0, 0.0, 0.0, 0.0), grade(0.0, 1.0, 0.0, 0.0)];
        let mut set = ptr::null_mut();
        assert_eq!(
            fp5_set_new(ptrs.as_ptr(), grades.as_ptr(), 2, &mut set),
            Fp5Status::DuplicateElement
        );

        let (_owned, ptrs) = ids(&["x"]);
        let over = [grade(0.6, 0.6, 0.0, 0.0)];
        assert_eq!(
            fp5_set_new(ptrs.as_ptr(), over.as_ptr(), 1, &mut set),
            Fp5Status::ConstraintViolation
        );
        assert_eq!(
            fp5_set_new(ptr::null(), over.as_ptr(), 1, &mut set),
            Fp5Status::NullPointer
        );
    }
}

#[test]
fn translation_round_trip() {
    unsafe {
        let (_owned, ptrs) = ids(&["a", "b", "c"]);
        let mu = [0.2, 0.5, 0.9];
        let nu = [0.7, 0.1, 0.05];
        let mut set = ptr::null_mut();
        let status = fp5_set_translate(
            Fp5InputKind::Intuitionistic,
            ptrs.as_ptr(),
            mu.as_ptr(),
            nu.as_ptr(),
            3,
            &mut set,
        );
        assert_eq!(status, Fp5Status::Ok);
        let (mut back_mu, mut back_nu) = ([0.0; 3], [0.0; 3]);
        assert_eq!(
            fp5_set_to_bipolar(set, back_mu.as_mut_ptr(), back_nu.as_mut_ptr(), 3),
            Fp5Status::Ok
        );
        for i in 0..3 {
            assert!((back_mu[i] - mu[i]).abs() < 1e-9 && (back_nu[i] - nu[i]).abs() < 1e-9);
        }
        assert_eq!(
            fp5_set_to_bipolar(set, back_mu.as_mut_ptr(), back_nu.as_mut_ptr(), 2),
            Fp5Status::OutOfRange
        );
        assert_eq!(
            fp5_set_to_bipolar(set, ptr::null_mut(), back_nu.as_mut_ptr(), 3),
            Fp5Status::NullPointer
        );
        fp5_set_free(set);

        let mut fuzzy = ptr::null_mut();
        let status = fp5_set_translate(
            Fp5InputKind::Fuzzy,
            ptrs.as_ptr(),
            mu.as_ptr(),
            ptr::null(),
            3,
            &mut fuzzy,
        );
        assert_eq!(status, Fp5Status::Ok);
        let mut c = coords();
        assert_eq!(fp5_set_get(fuzzy, 2, &mut c), Fp5Status::Ok);
        assert!((c.tau - 0.8).abs() < 1e-12);
        fp5_set_free(fuzzy);

        let mut none = ptr::null_mut();
        let status = fp5_set_translate(
            Fp5InputKind::Paraconsistent,
            ptrs.as_ptr(),
            mu.as_ptr(),
            nu.as_ptr(),
            3,
            &mut none,
        );
        assert_eq!(status, Fp5Status::ConstraintViolation);
        assert!(last_error().contains("'a'"));
    }
}
