//! C interface to `phicover`.
//!
//! Instances and covers are opaque handles owned by the caller and released
//! with their `_free` function. Fallible calls return a `PcStatus`; on
//! failure `pc_last_error` describes the problem. Strings returned through
//! out-parameters are released with `pc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use phicover::boxcover::box_cover_fast;
use phicover::hullcover::hull_cover_fast;
use phicover::model::{
    generate, parse_instance, serialize_instance, validate_instance, Cover, GenKind, GenParams, Instance,
};
use phicover::phicover::{naive_phi_cover, MergePolicy, Phi};

pub const PC_PHI_HULL: u32 = 0;
pub const PC_PHI_BOX: u32 = 1;
pub const PC_PHI_MINCIRCLE: u32 = 2;

pub const PC_ALGO_FAST: u32 = 0;
pub const PC_ALGO_NAIVE: u32 = 1;

pub const PC_KIND_STRIPS: u32 = 0;
pub const PC_KIND_COMBS: u32 = 1;
pub const PC_KIND_NESTED: u32 = 2;
pub const PC_KIND_MINCIRCLE_GADGET: u32 = 3;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// The instance breaks a validation rule.
    Invalid = 4,
    /// Unknown constant, or no fast engine for the requested function.
    Unsupported = 5,
    OutOfRange = 6,
    /// A bug inside the library; the message has the panic text.
    Internal = 7,
}

/// A forest of trees.
pub struct PcInstance(Instance);

/// A computed cover.
pub struct PcCover(Cover);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PcHullStats {
    pub rays_shot: usize,
    pub merges: usize,
    pub initial_edges: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

type Failure = (PcStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PcStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|panic| {
        let text = panic
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| panic.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        Err((PcStatus::Internal, text))
    });
    match outcome {
        Ok(()) => {
            set_error("");
            PcStatus::Ok
        }
        Err((status, message)) => {
            set_error(&message);
            status
        }
    }
}

fn null(what: &str) -> Failure {
    (PcStatus::NullArgument, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(text).map_err(|e| (PcStatus::Internal, e.to_string()))?.into_raw();
    Ok(())
}

fn phi_of(code: u32) -> Result<Phi, Failure> {
    match code {
        PC_PHI_HULL => Ok(Phi::Hull),
        PC_PHI_BOX => Ok(Phi::Box),
        PC_PHI_MINCIRCLE => Ok(Phi::MinCircle),
        _ => Err((PcStatus::Unsupported, format!("unknown phi {code}"))),
    }
}

fn check_valid(instance: &Instance) -> Result<(), Failure> {
    let report = validate_instance(instance);
    if report.is_valid() {
        return Ok(());
    }
    let lines: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    Err((PcStatus::Invalid, lines.join("\n")))
}

/// Message of the last failed call on this thread, or an empty string.
/// Valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn pc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses instance JSON. Does not validate.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_instance_from_json(json: *const c_char, out: *mut *mut PcInstance) -> PcStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| (PcStatus::InvalidUtf8, e.to_string()))?;
        let instance = parse_instance(text).map_err(|e| (PcStatus::Parse, e.to_string()))?;
        put(out, PcInstance(instance))
    })
}

/// Generates a family instance; `kind` is one of the `PC_KIND_*` constants.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_instance_generate(
    kind: u32,
    trees: usize,
    size: usize,
    seed: u64,
    out: *mut *mut PcInstance,
) -> PcStatus {
    guard(|| {
        let kind = match kind {
            PC_KIND_STRIPS => GenKind::Strips,
            PC_KIND_COMBS => GenKind::Combs,
            PC_KIND_NESTED => GenKind::Nested,
            PC_KIND_MINCIRCLE_GADGET => GenKind::MincircleGadget,
            _ => return Err((PcStatus::Unsupported, format!("unknown kind {kind}"))),
        };
        let instance =
            generate(kind, GenParams::new(trees, size), seed).map_err(|e| (PcStatus::OutOfRange, e.to_string()))?;
        put(out, PcInstance(instance))
    })
}

/// # Safety
/// `instance` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_instance_to_json(instance: *const PcInstance, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        let instance = borrow(instance, "instance")?;
        put_string(out, serialize_instance(&instance.0))
    })
}

/// # Safety
/// `instance` must come from this library and not have been freed; null
/// is ignored.
#[no_mangle]
pub unsafe extern "C" fn pc_instance_free(instance: *mut PcInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Number of trees; 0 for null.
///
/// # Safety
/// `instance` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_instance_tree_count(instance: *const PcInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.0.m())
}

/// Number of vertices; 0 for null.
///
/// # Safety
/// `instance` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_instance_vertex_count(instance: *const PcInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.0.n())
}

/// `PC_STATUS_OK` for a valid forest, `PC_STATUS_INVALID` with one
/// violation per line of the error message otherwise.
///
/// # Safety
/// `instance` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_instance_validate(instance: *const PcInstance) -> PcStatus {
    guard(|| check_valid(&borrow(instance, "instance")?.0))
}

/// Validates the instance and computes its cover. `algo` is
/// `PC_ALGO_FAST` (hull or box only) or `PC_ALGO_NAIVE`, which merges in
/// a random order drawn from `seed`.
///
/// # Safety
/// `instance` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_compute(
    instance: *const PcInstance,
    phi: u32,
    algo: u32,
    seed: u64,
    out: *mut *mut PcCover,
) -> PcStatus {
    guard(|| {
        let instance = &borrow(instance, "instance")?.0;
        let phi = phi_of(phi)?;
        check_valid(instance)?;
        let cover = match (algo, phi) {
            (PC_ALGO_FAST, Phi::Hull) => hull_cover_fast(instance).cover,
            (PC_ALGO_FAST, Phi::Box) => box_cover_fast(instance).cover,
            (PC_ALGO_FAST, Phi::MinCircle) => {
                return Err((PcStatus::Unsupported, "no fast engine for mincircle".into()))
            }
            (PC_ALGO_NAIVE, _) => {
                naive_phi_cover(instance, phi, &MergePolicy::Random(seed))
                    .map_err(|e| (PcStatus::Internal, e.to_string()))?
                    .cover
            }
            _ => return Err((PcStatus::Unsupported, format!("unknown algorithm {algo}"))),
        };
        put(out, PcCover(cover))
    })
}

/// Counters of the fast hull engine on a valid instance.
///
/// # Safety
/// `instance` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_hull_stats(instance: *const PcInstance, out: *mut PcHullStats) -> PcStatus {
    guard(|| {
        let instance = &borrow(instance, "instance")?.0;
        check_valid(instance)?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        let s = hull_cover_fast(instance).stats;
        *out = PcHullStats { rays_shot: s.rays_shot, merges: s.merges, initial_edges: s.initial_edges };
        Ok(())
    })
}

/// Number of regions; 0 for null.
///
/// # Safety
/// `cover` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_region_count(cover: *const PcCover) -> usize {
    cover.as_ref().map_or(0, |c| c.0.len())
}

/// Index of the region holding tree `tree`.
///
/// # Safety
/// `cover` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_region_of(cover: *const PcCover, tree: usize, out: *mut usize) -> PcStatus {
    guard(|| {
        let cover = &borrow(cover, "cover")?.0;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        *out = cover.region_of(tree).ok_or_else(|| (PcStatus::OutOfRange, format!("no tree {tree} in this cover")))?;
        Ok(())
    })
}

/// # Safety
/// `cover` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_to_json(cover: *const PcCover, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        let cover = borrow(cover, "cover")?;
        put_string(out, cover.0.to_json())
    })
}

/// # Safety
/// `cover` must come from this library and not have been freed; null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_free(cover: *mut PcCover) {
    if !cover.is_null() {
        drop(Box::from_raw(cover));
    }
}
