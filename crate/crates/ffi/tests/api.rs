use std::ffi::CStr;
use std::ptr;

use tangential_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(tp_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-10 * b.abs().max(1.0)
}

#[test]
fn right_triangle() {
    let sides = [3.0, 4.0, 5.0];
    let mut area = 0.0;
    assert_eq!(
        unsafe { tp_heron_area(sides.as_ptr(), 0.0, &mut area) },
        TpStatus::Ok
    );
    assert!(close(area, 6.0));

    let mut handle = ptr::null_mut();
    let status = unsafe { tp_solve(sides.as_ptr(), 3, f64::NAN, 0.0, &mut handle) };
    assert_eq!(status, TpStatus::Ok);
    assert!(!handle.is_null());
    unsafe {
        assert_eq!(tp_solution_side_count(handle), 3);
        assert_eq!(tp_solution_root_count(handle), 1);
        assert!(tp_solution_t1(handle).is_nan());

        let mut t = [0.0; 3];
        assert_eq!(
            tp_solution_tangents(handle, t.as_mut_ptr(), 3),
            TpStatus::Ok
        );
        for (got, want) in t.iter().zip([2.0, 1.0, 3.0]) {
            assert!(close(*got, want), "{t:?}");
        }

        let mut root = TpRoot::default();
        assert_eq!(tp_solution_root(handle, 0, &mut root), TpStatus::Ok);
        assert_eq!(root.winding, 1);
        assert!(close(root.radius, 1.0));
        assert!(close(root.area, 6.0));
        assert!(close(root.shoelace_area, 6.0));
        assert!(root.closure_defect < 1e-12);

        let mut xy = [0.0; 6];
        assert_eq!(
            tp_solution_vertices(handle, 0, xy.as_mut_ptr(), 6),
            TpStatus::Ok
        );
        let edge =
            |i: usize, j: usize| (xy[2 * i] - xy[2 * j]).hypot(xy[2 * i + 1] - xy[2 * j + 1]);
        let mut lengths = [edge(0, 1), edge(1, 2), edge(2, 0)];
        lengths.sort_by(f64::total_cmp);
        for (got, want) in lengths.iter().zip([3.0, 4.0, 5.0]) {
            assert!(close(*got, want), "{lengths:?}");
        }

        assert_eq!(tp_solution_root(handle, 1, &mut root), TpStatus::OutOfRange);
        assert_eq!(
            tp_solution_vertices(handle, 0, xy.as_mut_ptr(), 5),
            TpStatus::BufferTooSmall
        );
        tp_solution_free(handle);
    }
}

#[test]
fn regular_pentagon_has_two_windings() {
    let sides = [1.0; 5];
    let mut handle = ptr::null_mut();
    assert_eq!(
        unsafe { tp_solve(sides.as_ptr(), 5, f64::NAN, 0.0, &mut handle) },
        TpStatus::Ok
    );
    unsafe {
        assert_eq!(tp_solution_root_count(handle), 2);
        for m in 1..=2usize {
            let mut root = TpRoot::default();
            assert_eq!(tp_solution_root(handle, m - 1, &mut root), TpStatus::Ok);
            assert_eq!(root.winding, m);
            let expected = 0.5 / (m as f64 * std::f64::consts::PI / 5.0).tan();
            assert!(close(root.radius, expected));
        }
        tp_solution_free(handle);
    }
}

#[test]
fn even_sides_use_given_t1() {
    let sides = [2.0, 3.0, 4.0, 3.0];
    let (mut feasible, mut lo, mut hi) = (false, 0.0, 0.0);
    let status =
        unsafe { tp_check_feasible(sides.as_ptr(), 4, 0.0, &mut feasible, &mut lo, &mut hi) };
    assert_eq!(status, TpStatus::Ok);
    assert!(feasible);
    assert!(close(lo, 0.0) && close(hi, 2.0), "({lo}, {hi})");

    let mut handle = ptr::null_mut();
    assert_eq!(
        unsafe { tp_solve(sides.as_ptr(), 4, 0.5, 0.0, &mut handle) },
        TpStatus::Ok
    );
    unsafe {
        assert_eq!(tp_solution_t1(handle), 0.5);
        tp_solution_free(handle);
    }

    let status = unsafe { tp_solve(sides.as_ptr(), 4, 2.5, 0.0, &mut handle) };
    assert_eq!(status, TpStatus::Precondition);
    assert!(handle.is_null());
    assert!(!last_error().is_empty());
}

#[test]
fn odd_interval_is_nan() {
    let sides = [1.0, 1.0, 1.0];
    let (mut feasible, mut lo) = (false, 0.0);
    let status = unsafe {
        tp_check_feasible(
            sides.as_ptr(),
            3,
            0.0,
            &mut feasible,
            &mut lo,
            ptr::null_mut(),
        )
    };
    assert_eq!(status, TpStatus::Ok);
    assert!(feasible);
    assert!(lo.is_nan());
}

#[test]
fn error_codes() {
    let mut area = 0.0;
    let flat = [1.0, 1.0, 5.0];
    assert_eq!(
        unsafe { tp_heron_area(flat.as_ptr(), 0.0, &mut area) },
        TpStatus::Infeasible
    );

    let negative = [1.0, -1.0, 1.0];
    assert_eq!(
        unsafe { tp_heron_area(negative.as_ptr(), 0.0, &mut area) },
        TpStatus::InvalidInput
    );
    assert!(last_error().contains('2'), "{}", last_error());

    let mut handle = ptr::null_mut();
    let two = [1.0, 1.0];
    assert_eq!(
        unsafe { tp_solve(two.as_ptr(), 2, f64::NAN, 0.0, &mut handle) },
        TpStatus::InvalidInput
    );
    assert_eq!(
        unsafe { tp_solve(ptr::null(), 3, f64::NAN, 0.0, &mut handle) },
        TpStatus::NullPointer
    );
    let ok = [1.0; 3];
    assert_eq!(
        unsafe { tp_solve(ok.as_ptr(), 3, f64::NAN, 0.0, ptr::null_mut()) },
        TpStatus::NullPointer
    );

    let mut info = TpBicentricInfo::default();
    assert_eq!(
        unsafe { tp_bicentric_info(ptr::null(), &mut info) },
        TpStatus::NullPointer
    );
    unsafe {
        tp_solution_free(ptr::null_mut());
        tp_bicentric_free(ptr::null_mut());
        assert_eq!(tp_solution_root_count(ptr::null()), 0);
    }

    for status in [TpStatus::Ok, TpStatus::Infeasible, TpStatus::Panic] {
        let text = unsafe { CStr::from_ptr(tp_status_message(status)) };
        assert!(!text.to_bytes().is_empty());
    }
}

#[test]
fn symmetric_functions() {
    let t = [1.0, 2.0, 3.0];
    let mut sigma = [0.0; 4];
    assert_eq!(
        unsafe { tp_elementary_symmetric(t.as_ptr(), 3, sigma.as_mut_ptr()) },
        TpStatus::Ok
    );
    assert_eq!(sigma, [1.0, 6.0, 11.0, 6.0]);
}

#[test]
fn square_is_bicentric() {
    let sides = [1.0; 4];
    let mut area = 0.0;
    assert_eq!(
        unsafe { tp_brahmagupta_area(sides.as_ptr(), 0.0, &mut area) },
        TpStatus::Ok
    );
    assert!(close(area, 1.0));

    let mut handle = ptr::null_mut();
    assert_eq!(
        unsafe { tp_bicentric_build(sides.as_ptr(), 0.0, &mut handle) },
        TpStatus::Ok
    );
    unsafe {
        let mut info = TpBicentricInfo::default();
        assert_eq!(tp_bicentric_info(handle, &mut info), TpStatus::Ok);
        assert!(close(info.inradius, 0.5));
        assert!(close(info.circumradius, 0.5f64.sqrt()));
        assert!(close(info.area, 1.0));

        let (cx, cy, big_r) = (info.circumcenter_x, info.circumcenter_y, info.circumradius);
        let mut xy = [0.0; 8];
        assert_eq!(
            tp_bicentric_vertices(handle, xy.as_mut_ptr(), 8),
            TpStatus::Ok
        );
        for p in xy.chunks(2) {
            assert!(close((p[0] - cx).hypot(p[1] - cy), big_r));
        }
        for theta in [0.0, 0.3, 1.7, 4.0] {
            assert_eq!(
                tp_bicentric_poncelet(handle, theta, 0.0, xy.as_mut_ptr(), 8),
                TpStatus::Ok
            );
            for p in xy.chunks(2) {
                assert!(close((p[0] - cx).hypot(p[1] - cy), big_r));
            }
        }
        tp_bicentric_free(handle);
    }

    let kite = [1.0, 2.0, 3.0, 2.0];
    let mut handle = ptr::null_mut();
    let not_tangential = [1.0, 2.0, 3.0, 1.0];
    assert_eq!(
        unsafe { tp_bicentric_build(not_tangential.as_ptr(), 0.0, &mut handle) },
        TpStatus::Infeasible
    );
    assert!(handle.is_null());
    assert_eq!(
        unsafe { tp_bicentric_build(kite.as_ptr(), 0.0, &mut handle) },
        TpStatus::Ok
    );
    unsafe { tp_bicentric_free(handle) };
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/tangential.h");
    for decl in [
        "typedef struct TpSolution TpSolution;",
        "typedef struct TpBicentric TpBicentric;",
        "TP_STATUS_INFEASIBLE = 3",
        "enum TpStatus tp_solve(",
        "void tp_solution_free(struct TpSolution *handle);",
        "enum TpStatus tp_bicentric_poncelet(",
        "const char *tp_last_error_message(void);",
    ] {
        assert!(header.contains(decl), "missing {decl}");
    }
}
