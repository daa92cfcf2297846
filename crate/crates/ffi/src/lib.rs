//! C ABI over `tangential-core`.
//!
//! Results that carry more than a number live behind opaque handles
//! (`TpSolution`, `TpBicentric`) created by `tp_solve` / `tp_bicentric_build`
//! and released with the matching `*_free`. Every call returns a
//! [`TpStatus`]; on failure `tp_last_error_message` holds a description for
//! the calling thread. Tolerance arguments that are not positive and finite
//! select the library default.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use tangential_core::bicentric::{
    brahmagupta_area, build_bicentric, poncelet_family, BicentricQuad,
};
use tangential_core::geometry::PlanePoint;
use tangential_core::pipeline::{solve, RootSelection, Solved, SolvedRoot, T1Choice};
use tangential_core::radius::heron_area;
use tangential_core::tangents::check_feasible;
use tangential_core::{elementary_symmetric, Error, SideLengths, TangentLengths, Tolerance};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TpStatus {
    Ok = 0,
    NullPointer = 1,
    /// Too few sides, or a nonpositive or non-finite length.
    InvalidInput = 2,
    /// No tangential polygon has these sides.
    Infeasible = 3,
    /// Wrong polygon size for the call, `t1` outside its interval, or a
    /// winding that does not exist.
    Precondition = 4,
    OutOfRange = 5,
    BufferTooSmall = 6,
    /// An internal consistency check failed.
    NumericalFailure = 7,
    Panic = 8,
}

/// One incircle radius of a solved polygon.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct TpRoot {
    pub winding: usize,
    pub radius: f64,
    pub area: f64,
    pub shoelace_area: f64,
    pub residual: f64,
    pub angle_defect: f64,
    pub closure_defect: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct TpBicentricInfo {
    pub inradius: f64,
    pub circumradius: f64,
    pub circumcenter_x: f64,
    pub circumcenter_y: f64,
    pub area: f64,
}

/// Opaque solved polygon.
pub struct TpSolution {
    inner: Solved,
}

/// Opaque bicentric quadrilateral.
pub struct TpBicentric {
    inner: BicentricQuad,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn status_of(e: &Error) -> TpStatus {
    match e {
        Error::TooFewSides(_)
        | Error::NonpositiveSide { .. }
        | Error::NonpositiveTangent { .. }
        | Error::NonpositiveRadius(_) => TpStatus::InvalidInput,
        Error::Infeasible(_)
        | Error::AlternatingSumNonzero(_)
        | Error::EmptyInterval { .. }
        | Error::EqualityViolated { .. } => TpStatus::Infeasible,
        Error::NotOdd(_)
        | Error::NotEven(_)
        | Error::NotTriangle(_)
        | Error::NotQuad(_)
        | Error::OutOfInterval { .. }
        | Error::NoSuchWinding { .. }
        | Error::PointNotOnCircle { .. }
        | Error::NoTangent => TpStatus::Precondition,
        Error::IndexOutOfRange { .. } => TpStatus::OutOfRange,
        Error::ConcyclicityFailure { .. } | Error::PonceletClosureFailure(_) => {
            TpStatus::NumericalFailure
        }
    }
}

fn fail(status: TpStatus, message: impl Into<String>) -> TpStatus {
    set_last_error(message.into());
    status
}

fn fail_with(e: Error) -> TpStatus {
    fail(status_of(&e), e.to_string())
}

/// Run `body`, turning panics into `TpStatus::Panic`.
fn guarded(body: impl FnOnce() -> TpStatus) -> TpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(TpStatus::Panic, "internal panic"),
    }
}

fn tolerance(epsilon: f64) -> Tolerance {
    if epsilon.is_finite() && epsilon > 0.0 {
        Tolerance::new(epsilon)
    } else {
        Tolerance::default()
    }
}

unsafe fn read_lengths<'a>(data: *const f64, n: usize) -> Result<&'a [f64], TpStatus> {
    if data.is_null() {
        return Err(fail(TpStatus::NullPointer, "null length array"));
    }
    Ok(slice::from_raw_parts(data, n))
}

unsafe fn read_sides(data: *const f64, n: usize) -> Result<SideLengths, TpStatus> {
    let values = read_lengths(data, n)?;
    SideLengths::new(values.to_vec()).map_err(fail_with)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> TpStatus {
    if out.is_null() {
        return fail(TpStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    TpStatus::Ok
}

unsafe fn write_points(points: &[PlanePoint], out: *mut f64, len: usize) -> TpStatus {
    if out.is_null() {
        return fail(TpStatus::NullPointer, "null output buffer");
    }
    if len < 2 * points.len() {
        return fail(
            TpStatus::BufferTooSmall,
            format!("need {} doubles, got {len}", 2 * points.len()),
        );
    }
    let buf = slice::from_raw_parts_mut(out, 2 * points.len());
    for (chunk, p) in buf.chunks_exact_mut(2).zip(points) {
        chunk[0] = p.x;
        chunk[1] = p.y;
    }
    TpStatus::Ok
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn tp_status_message(status: TpStatus) -> *const c_char {
    let text: &'static CStr = match status {
        TpStatus::Ok => c"ok",
        TpStatus::NullPointer => c"null pointer argument",
        TpStatus::InvalidInput => c"invalid lengths",
        TpStatus::Infeasible => c"no tangential polygon with these sides",
        TpStatus::Precondition => c"precondition not met",
        TpStatus::OutOfRange => c"index out of range",
        TpStatus::BufferTooSmall => c"output buffer too small",
        TpStatus::NumericalFailure => c"numerical consistency check failed",
        TpStatus::Panic => c"internal panic",
    };
    text.as_ptr()
}

/// Message of the last failed call on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn tp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Elementary symmetric functions of `t[0..n]` into `sigma_out[0..=n]`.
///
/// # Safety
/// `t` must point to `n` doubles and `sigma_out` to `n + 1` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn tp_elementary_symmetric(
    t: *const f64,
    n: usize,
    sigma_out: *mut f64,
) -> TpStatus {
    guarded(|| {
        let values = match read_lengths(t, n) {
            Ok(v) => v,
            Err(s) => return s,
        };
        if sigma_out.is_null() {
            return fail(TpStatus::NullPointer, "null output buffer");
        }
        let tangents = match TangentLengths::new(values.to_vec()) {
            Ok(t) => t,
            Err(e) => return fail_with(e),
        };
        let sf = elementary_symmetric(&tangents);
        slice::from_raw_parts_mut(sigma_out, n + 1).copy_from_slice(sf.sigma());
        TpStatus::Ok
    })
}

/// Feasibility of `sides[0..n]`. For even `n`, `lo`/`hi` receive the open
/// interval of admissible `t1` (they may be null); for odd `n` they are set
/// to NaN.
///
/// # Safety
/// `sides` must point to `n` doubles; `feasible` must be writable; `lo` and
/// `hi` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn tp_check_feasible(
    sides: *const f64,
    n: usize,
    tolerance_eps: f64,
    feasible: *mut bool,
    lo: *mut f64,
    hi: *mut f64,
) -> TpStatus {
    guarded(|| {
        let sides = match read_sides(sides, n) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let report = check_feasible(&sides, tolerance(tolerance_eps));
        let (l, h) = report
            .interval
            .map_or((f64::NAN, f64::NAN), |i| (i.lo, i.hi));
        if !lo.is_null() {
            lo.write(l);
        }
        if !hi.is_null() {
            hi.write(h);
        }
        write_out(feasible, report.feasible)
    })
}

/// Heron's area of a triangle.
///
/// # Safety
/// `sides` must point to 3 doubles and `area` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_heron_area(
    sides: *const f64,
    tolerance_eps: f64,
    area: *mut f64,
) -> TpStatus {
    guarded(|| match read_sides(sides, 3) {
        Ok(s) => match heron_area(&s, tolerance(tolerance_eps)) {
            Ok(k) => write_out(area, k),
            Err(e) => fail_with(e),
        },
        Err(s) => s,
    })
}

/// Brahmagupta's area of the cyclic quadrilateral with these sides.
///
/// # Safety
/// `sides` must point to 4 doubles and `area` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_brahmagupta_area(
    sides: *const f64,
    tolerance_eps: f64,
    area: *mut f64,
) -> TpStatus {
    guarded(|| match read_sides(sides, 4) {
        Ok(s) => match brahmagupta_area(&s, tolerance(tolerance_eps)) {
            Ok(k) => write_out(area, k),
            Err(e) => fail_with(e),
        },
        Err(s) => s,
    })
}

/// Solve the polygon with sides `sides[0..n]`: tangent lengths and every
/// incircle radius with its embedding. `t1` is used for even `n`; pass NaN
/// for the default choice. On success `*out` owns a handle to release with
/// `tp_solution_free`.
///
/// # Safety
/// `sides` must point to `n` doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_solve(
    sides: *const f64,
    n: usize,
    t1: f64,
    tolerance_eps: f64,
    out: *mut *mut TpSolution,
) -> TpStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TpStatus::NullPointer, "null output pointer");
        }
        out.write(ptr::null_mut());
        let sides = match read_sides(sides, n) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let t1 = (!t1.is_nan()).then_some(t1);
        match solve(&sides, t1, RootSelection::All, tolerance(tolerance_eps)) {
            Ok(inner) => {
                out.write(Box::into_raw(Box::new(TpSolution { inner })));
                TpStatus::Ok
            }
            Err(e) => fail_with(e),
        }
    })
}

/// # Safety
/// `handle` must be null or a pointer returned by `tp_solve` that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn tp_solution_free(handle: *mut TpSolution) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of sides (and tangent lengths).
///
/// # Safety
/// `handle` must be null or a live `TpSolution`.
#[no_mangle]
pub unsafe extern "C" fn tp_solution_side_count(handle: *const TpSolution) -> usize {
    handle.as_ref().map_or(0, |h| h.inner.sides.len())
}

/// Number of radii (windings 1..k).
///
/// # Safety
/// `handle` must be null or a live `TpSolution`.
#[no_mangle]
pub unsafe extern "C" fn tp_solution_root_count(handle: *const TpSolution) -> usize {
    handle.as_ref().map_or(0, |h| h.inner.roots.len())
}

/// The `t1` actually used; NaN for odd `n`.
///
/// # Safety
/// `handle` must be null or a live `TpSolution`.
#[no_mangle]
pub unsafe extern "C" fn tp_solution_t1(handle: *const TpSolution) -> f64 {
    match handle.as_ref().map(|h| h.inner.t1) {
        Some(T1Choice::Given(t) | T1Choice::Midpoint(t) | T1Choice::Bicentric(t)) => t,
        _ => f64::NAN,
    }
}

/// Copy the tangent lengths into `out[0..n]`.
///
/// # Safety
/// `handle` must be a live `TpSolution`; `out` must point to `len` writable
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn tp_solution_tangents(
    handle: *const TpSolution,
    out: *mut f64,
    len: usize,
) -> TpStatus {
    guarded(|| {
        let Some(h) = handle.as_ref() else {
            return fail(TpStatus::NullPointer, "null handle");
        };
        if out.is_null() {
            return fail(TpStatus::NullPointer, "null output buffer");
        }
        let t = h.inner.tangents.values();
        if len < t.len() {
            return fail(
                TpStatus::BufferTooSmall,
                format!("need {} doubles, got {len}", t.len()),
            );
        }
        slice::from_raw_parts_mut(out, t.len()).copy_from_slice(t);
        TpStatus::Ok
    })
}

unsafe fn root_at<'a>(handle: *const TpSolution, index: usize) -> Result<&'a SolvedRoot, TpStatus> {
    let Some(h) = handle.as_ref() else {
        return Err(fail(TpStatus::NullPointer, "null handle"));
    };
    h.inner.roots.get(index).ok_or_else(|| {
        fail(
            TpStatus::OutOfRange,
            format!(
                "root index {index} out of range for {} roots",
                h.inner.roots.len()
            ),
        )
    })
}

/// Details of root `index` (0-based; winding `index + 1`).
///
/// # Safety
/// `handle` must be a live `TpSolution`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_solution_root(
    handle: *const TpSolution,
    index: usize,
    out: *mut TpRoot,
) -> TpStatus {
    guarded(|| match root_at(handle, index) {
        Ok(root) => write_out(
            out,
            TpRoot {
                winding: root.solution.winding,
                radius: root.solution.radius,
                area: root.solution.area,
                shoelace_area: root.shoelace_area,
                residual: root.solution.residual,
                angle_defect: root.solution.angle_defect,
                closure_defect: root.embedding.closure_defect,
            },
        ),
        Err(s) => s,
    })
}

/// Vertices of root `index` as interleaved `x, y` pairs (`2 n` doubles).
///
/// # Safety
/// `handle` must be a live `TpSolution`; `xy` must point to `len` writable
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn tp_solution_vertices(
    handle: *const TpSolution,
    index: usize,
    xy: *mut f64,
    len: usize,
) -> TpStatus {
    guarded(|| match root_at(handle, index) {
        Ok(root) => write_points(&root.embedding.vertices, xy, len),
        Err(s) => s,
    })
}

/// Build the bicentric quadrilateral for `sides[0..4]`
/// (`a1 + a3 = a2 + a4` required).
///
/// # Safety
/// `sides` must point to 4 doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_bicentric_build(
    sides: *const f64,
    tolerance_eps: f64,
    out: *mut *mut TpBicentric,
) -> TpStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TpStatus::NullPointer, "null output pointer");
        }
        out.write(ptr::null_mut());
        let sides = match read_sides(sides, 4) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match build_bicentric(&sides, tolerance(tolerance_eps)) {
            Ok(inner) => {
                out.write(Box::into_raw(Box::new(TpBicentric { inner })));
                TpStatus::Ok
            }
            Err(e) => fail_with(e),
        }
    })
}

/// # Safety
/// `handle` must be null or a pointer returned by `tp_bicentric_build` that
/// has not been freed.
#[no_mangle]
pub unsafe extern "C" fn tp_bicentric_free(handle: *mut TpBicentric) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// `handle` must be a live `TpBicentric`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_bicentric_info(
    handle: *const TpBicentric,
    out: *mut TpBicentricInfo,
) -> TpStatus {
    guarded(|| {
        let Some(h) = handle.as_ref() else {
            return fail(TpStatus::NullPointer, "null handle");
        };
        let q = &h.inner;
        write_out(
            out,
            TpBicentricInfo {
                inradius: q.inradius,
                circumradius: q.circumradius,
                circumcenter_x: q.circumcenter.x,
                circumcenter_y: q.circumcenter.y,
                area: q.area,
            },
        )
    })
}

/// Vertices of the quadrilateral as 8 interleaved doubles.
///
/// # Safety
/// `handle` must be a live `TpBicentric`; `xy` must point to `len` writable
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn tp_bicentric_vertices(
    handle: *const TpBicentric,
    xy: *mut f64,
    len: usize,
) -> TpStatus {
    guarded(|| match handle.as_ref() {
        Some(h) => write_points(&h.inner.embedding.vertices, xy, len),
        None => fail(TpStatus::NullPointer, "null handle"),
    })
}

/// Vertices of the quadrilateral whose tangent chain starts on the
/// circumcircle at `start_angle`, as 8 interleaved doubles.
///
/// # Safety
/// `handle` must be a live `TpBicentric`; `xy` must point to `len` writable
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn tp_bicentric_poncelet(
    handle: *const TpBicentric,
    start_angle: f64,
    tolerance_eps: f64,
    xy: *mut f64,
    len: usize,
) -> TpStatus {
    guarded(|| {
        let Some(h) = handle.as_ref() else {
            return fail(TpStatus::NullPointer, "null handle");
        };
        match poncelet_family(&h.inner, start_angle, tolerance(tolerance_eps)) {
            Ok(e) => write_points(&e.vertices, xy, len),
            Err(e) => fail_with(e),
        }
    })
}
